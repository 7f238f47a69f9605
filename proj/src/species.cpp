#include "chroma/species.hpp"

#include <algorithm>
#include <unordered_map>

namespace chroma {

namespace {

int rank_in(Subset s, int i) {
  return std::popcount(s.bits & ((std::uint64_t{1} << i) - 1));
}

GroundSet rename_ground(const GroundSet& g, const std::map<std::string, std::string>& sigma) {
  std::vector<std::string> labels;
  labels.reserve(g.labels().size());
  for (const auto& l : g.labels()) {
    auto it = sigma.find(l);
    if (it == sigma.end()) throw std::invalid_argument("relabel map missing label " + l);
    labels.push_back(it->second);
  }
  if (sigma.size() != labels.size())
    throw std::invalid_argument("relabel map has extra entries");
  return GroundSet{std::move(labels)};
}

// perm[old index] = new index
std::vector<int> reindex_perm(const GroundSet& old_ground, const GroundSet& new_ground) {
  if (new_ground.size() != old_ground.size())
    throw std::invalid_argument("reindex order has wrong size");
  std::vector<int> perm(static_cast<std::size_t>(old_ground.size()));
  for (int i = 0; i < old_ground.size(); ++i) {
    auto j = new_ground.index_of(old_ground.label(i));
    if (!j) throw std::invalid_argument("reindex order is not a permutation of the labels");
    perm[static_cast<std::size_t>(i)] = *j;
  }
  return perm;
}

Subset remap(Subset s, const std::vector<int>& perm) {
  Subset out;
  for (int i : elements_of(s)) out = out | Subset::single(perm[static_cast<std::size_t>(i)]);
  return out;
}

void check_disjoint(const GroundSet& a, const GroundSet& b) {
  for (const auto& l : b.labels())
    if (a.index_of(l))
      throw std::invalid_argument("non-disjoint ground sets: shared label " + l);
}

GroundSet concat_grounds(const GroundSet& a, const GroundSet& b) {
  check_disjoint(a, b);
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return GroundSet{std::move(labels)};
}

}  // namespace

Graph make_graph(GroundSet ground, std::vector<std::pair<int, int>> edges) {
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("graph edge endpoints must be distinct");
    if (i < 0 || j < 0 || i >= ground.size() || j >= ground.size())
      throw std::invalid_argument("graph edge endpoint out of range");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{std::move(ground), std::move(edges)};
}

Hypergraph make_hypergraph(GroundSet ground, std::vector<Subset> edges,
                           HypergraphOptions opts) {
  for (Subset e : edges) {
    if (!ground.fits(e)) throw std::invalid_argument("hyperedge does not fit the ground set");
    int min_size = opts.allow_singleton_edges ? 1 : 2;
    if (e.count() < min_size)
      throw std::invalid_argument("hyperedge smaller than " + std::to_string(min_size) +
                                  " elements");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph{std::move(ground), std::move(edges)};
}

Poset make_poset(GroundSet ground, const std::vector<std::pair<int, int>>& leq) {
  const int n = ground.size();
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) below[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
  for (auto [lo, hi] : leq) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
      throw std::invalid_argument("poset relation index out of range");
    below[static_cast<std::size_t>(hi)] |= std::uint64_t{1} << lo;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      std::uint64_t acc = below[static_cast<std::size_t>(i)];
      for (int j : elements_of(Subset{acc})) acc |= below[static_cast<std::size_t>(j)];
      if (acc != below[static_cast<std::size_t>(i)]) {
        below[static_cast<std::size_t>(i)] = acc;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j : elements_of(Subset{below[static_cast<std::size_t>(i)]}))
      if (j != i && (below[static_cast<std::size_t>(j)] >> i) & 1)
        throw std::invalid_argument("relation is not antisymmetric: " + ground.label(i) +
                                    " and " + ground.label(j) + " are comparable both ways");
  return Poset{std::move(ground), std::move(below)};
}

Matroid make_matroid(GroundSet ground, std::vector<Subset> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) throw std::invalid_argument("matroid needs at least one basis");
  const int r = bases.front().count();
  for (Subset b : bases) {
    if (!ground.fits(b)) throw std::invalid_argument("basis does not fit the ground set");
    if (b.count() != r) throw std::invalid_argument("bases are not equicardinal");
  }
  auto is_basis = [&](Subset s) {
    return std::binary_search(bases.begin(), bases.end(), s);
  };
  for (Subset b1 : bases)
    for (Subset b2 : bases)
      for (int x : elements_of(b1 - b2)) {
        bool exchanged = false;
        for (int y : elements_of(b2 - b1))
          if (is_basis((b1 - Subset::single(x)) | Subset::single(y))) {
            exchanged = true;
            break;
          }
        if (!exchanged)
          throw std::invalid_argument("basis exchange fails for " + to_string(b1, ground) +
                                      ", " + to_string(b2, ground) + " at " + ground.label(x));
      }
  return Matroid{std::move(ground), std::move(bases)};
}

Antimatroid make_antimatroid(GroundSet ground, SubsetFamily feasible) {
  for (Subset s : feasible.members())
    if (!ground.fits(s))
      throw std::invalid_argument("feasible set does not fit the ground set");
  if (!feasible.contains(Subset{}))
    throw std::invalid_argument("feasible family does not contain the empty set");
  if (!feasible.contains(ground.full()))
    throw std::invalid_argument("feasible family does not contain the full ground set");
  for (Subset a : feasible.members())
    for (Subset b : feasible.members())
      if (!feasible.contains(a | b))
        throw std::invalid_argument("feasible family is not union-closed: " +
                                    to_string(a, ground) + " ∪ " + to_string(b, ground));
  for (Subset s : feasible.members()) {
    if (s.empty()) continue;
    bool accessible = false;
    for (int x : elements_of(s))
      if (feasible.contains(s - Subset::single(x))) {
        accessible = true;
        break;
      }
    if (!accessible)
      throw std::invalid_argument("feasible set is not accessible: " + to_string(s, ground));
  }
  return Antimatroid{std::move(ground), std::move(feasible)};
}

bool is_order_ideal(const Poset& p, Subset s) {
  for (int i : elements_of(s))
    if (!Subset{p.below[static_cast<std::size_t>(i)]}.subset_of(s)) return false;
  return true;
}

bool is_antichain(const Poset& p) {
  for (int i = 0; i < p.ground.size(); ++i)
    if (p.below[static_cast<std::size_t>(i)] != (std::uint64_t{1} << i)) return false;
  return true;
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < p.ground.size(); ++j)
    for (int i : elements_of(Subset{p.below[static_cast<std::size_t>(j)]})) {
      if (i == j) continue;
      bool covered = true;
      for (int k : elements_of(Subset{p.below[static_cast<std::size_t>(j)]}))
        if (k != i && k != j && ((p.below[static_cast<std::size_t>(k)] >> i) & 1)) {
          covered = false;
          break;
        }
      if (covered) out.emplace_back(i, j);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_independent(const Matroid& m, Subset s) {
  for (Subset b : m.bases)
    if (s.subset_of(b)) return true;
  return false;
}

int rank_of(const Matroid& m, Subset s) {
  int r = 0;
  for (Subset b : m.bases) r = std::max(r, (b & s).count());
  return r;
}

bool is_loop(const Matroid& m, int e) {
  for (Subset b : m.bases)
    if (b.contains(e)) return false;
  return true;
}

bool is_coloop(const Matroid& m, int e) {
  for (Subset b : m.bases)
    if (!b.contains(e)) return false;
  return true;
}

bool is_loop_coloop_only(const Matroid& m) {
  for (int e = 0; e < m.ground.size(); ++e)
    if (!is_loop(m, e) && !is_coloop(m, e)) return false;
  return true;
}

Graph product(const Graph& a, const Graph& b) {
  GroundSet ground = concat_grounds(a.ground, b.ground);
  std::vector<std::pair<int, int>> edges = a.edges;
  const int shift = a.ground.size();
  for (auto [i, j] : b.edges) edges.emplace_back(i + shift, j + shift);
  std::sort(edges.begin(), edges.end());
  return Graph{std::move(ground), std::move(edges)};
}

Hypergraph product(const Hypergraph& a, const Hypergraph& b) {
  GroundSet ground = concat_grounds(a.ground, b.ground);
  std::vector<Subset> edges = a.edges;
  const int shift = a.ground.size();
  for (Subset e : b.edges) edges.push_back(Subset{e.bits << shift});
  std::sort(edges.begin(), edges.end());
  return Hypergraph{std::move(ground), std::move(edges)};
}

Poset product(const Poset& a, const Poset& b) {
  GroundSet ground = concat_grounds(a.ground, b.ground);
  std::vector<std::uint64_t> below = a.below;
  const int shift = a.ground.size();
  for (std::uint64_t m : b.below) below.push_back(m << shift);
  return Poset{std::move(ground), std::move(below)};
}

Matroid product(const Matroid& a, const Matroid& b) {
  GroundSet ground = concat_grounds(a.ground, b.ground);
  std::vector<Subset> bases;
  const int shift = a.ground.size();
  for (Subset x : a.bases)
    for (Subset y : b.bases) bases.push_back(Subset{x.bits | (y.bits << shift)});
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid{std::move(ground), std::move(bases)};
}

Antimatroid product(const Antimatroid& a, const Antimatroid& b) {
  GroundSet ground = concat_grounds(a.ground, b.ground);
  std::vector<Subset> feasible;
  const int shift = a.ground.size();
  for (Subset x : a.feasible.members())
    for (Subset y : b.feasible.members())
      feasible.push_back(Subset{x.bits | (y.bits << shift)});
  return Antimatroid{std::move(ground), SubsetFamily{std::move(feasible)}};
}

namespace {

Graph induced_graph(const Graph& g, Subset keep) {
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges)
    if (keep.contains(i) && keep.contains(j))
      edges.emplace_back(rank_in(keep, i), rank_in(keep, j));
  std::sort(edges.begin(), edges.end());
  return Graph{sub_ground(g.ground, keep), std::move(edges)};
}

Hypergraph induced_hypergraph(const Hypergraph& h, Subset keep) {
  std::vector<Subset> edges;
  for (Subset e : h.edges)
    if (e.subset_of(keep)) edges.push_back(compress(e, keep));
  std::sort(edges.begin(), edges.end());
  return Hypergraph{sub_ground(h.ground, keep), std::move(edges)};
}

Poset induced_poset(const Poset& p, Subset keep) {
  std::vector<std::uint64_t> below;
  for (int i : elements_of(keep))
    below.push_back(compress(Subset{p.below[static_cast<std::size_t>(i)]} & keep, keep).bits);
  return Poset{sub_ground(p.ground, keep), std::move(below)};
}

}  // namespace

Graph restrict_to(const Graph& g, Subset s) { return induced_graph(g, s); }
Graph contract_by(const Graph& g, Subset s) {
  return induced_graph(g, g.ground.full() - s);
}

Hypergraph restrict_to(const Hypergraph& h, Subset s) { return induced_hypergraph(h, s); }
Hypergraph contract_by(const Hypergraph& h, Subset s) {
  return induced_hypergraph(h, h.ground.full() - s);
}

Maybe<Poset> restrict_to(const Poset& p, Subset s) {
  if (!is_order_ideal(p, s)) return std::nullopt;
  return induced_poset(p, s);
}

Maybe<Poset> contract_by(const Poset& p, Subset s) {
  if (!is_order_ideal(p, s)) return std::nullopt;
  return induced_poset(p, p.ground.full() - s);
}

Matroid restrict_to(const Matroid& m, Subset s) {
  const int r = rank_of(m, s);
  std::vector<Subset> bases;
  for (Subset b : m.bases)
    if ((b & s).count() == r) bases.push_back(compress(b & s, s));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid{sub_ground(m.ground, s), std::move(bases)};
}

Matroid contract_by(const Matroid& m, Subset s) {
  const Subset rest = m.ground.full() - s;
  const int r = rank_of(m, s);
  std::vector<Subset> bases;
  for (Subset b : m.bases)
    if ((b & s).count() == r) bases.push_back(compress(b - s, rest));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid{sub_ground(m.ground, rest), std::move(bases)};
}

Maybe<Antimatroid> restrict_to(const Antimatroid& a, Subset s) {
  if (!a.feasible.contains(s)) return std::nullopt;
  std::vector<Subset> feasible;
  for (Subset x : a.feasible.members())
    if (x.subset_of(s)) feasible.push_back(compress(x, s));
  return Antimatroid{sub_ground(a.ground, s), SubsetFamily{std::move(feasible)}};
}

Maybe<Antimatroid> contract_by(const Antimatroid& a, Subset s) {
  if (!a.feasible.contains(s)) return std::nullopt;
  const Subset rest = a.ground.full() - s;
  std::vector<Subset> feasible;
  for (Subset x : a.feasible.members())
    if (s.subset_of(x)) feasible.push_back(compress(x - s, rest));
  return Antimatroid{sub_ground(a.ground, rest), SubsetFamily{std::move(feasible)}};
}

bool is_stable(const Graph& g) { return g.edges.empty(); }
bool is_stable(const Hypergraph& h) { return h.edges.empty(); }
bool is_stable(const Poset& p) { return is_antichain(p); }
bool is_stable(const Matroid& m) { return m.bases.size() == 1; }
bool is_stable(const Antimatroid& a) {
  return a.feasible.size() == (std::uint64_t{1} << a.ground.size());
}

SpeciesTag tag_of(const HopfStructure& x) {
  return static_cast<SpeciesTag>(x.index());
}

std::string to_string(SpeciesTag tag) {
  switch (tag) {
    case SpeciesTag::graph: return "graph";
    case SpeciesTag::hypergraph: return "hypergraph";
    case SpeciesTag::poset: return "poset";
    case SpeciesTag::matroid: return "matroid";
    case SpeciesTag::antimatroid: return "antimatroid";
    case SpeciesTag::coloring_problem: return "coloring-problem";
  }
  return "?";
}

std::optional<SpeciesTag> species_tag_from_string(const std::string& name) {
  for (SpeciesTag t : {SpeciesTag::graph, SpeciesTag::hypergraph, SpeciesTag::poset,
                       SpeciesTag::matroid, SpeciesTag::antimatroid,
                       SpeciesTag::coloring_problem})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

const GroundSet& ground_of(const HopfStructure& x) {
  return std::visit([](const auto& v) -> const GroundSet& { return v.ground; }, x);
}

HopfStructure species_empty(SpeciesTag tag) {
  GroundSet g{{}};
  switch (tag) {
    case SpeciesTag::graph: return Graph{g, {}};
    case SpeciesTag::hypergraph: return Hypergraph{g, {}};
    case SpeciesTag::poset: return Poset{g, {}};
    case SpeciesTag::matroid: return Matroid{g, {Subset{}}};
    case SpeciesTag::antimatroid: return Antimatroid{g, SubsetFamily{{Subset{}}}};
    case SpeciesTag::coloring_problem: return unit_problem();
  }
  throw std::invalid_argument("unknown species tag");
}

HopfStructure species_product(const HopfStructure& x, const HopfStructure& y) {
  if (x.index() != y.index())
    throw std::invalid_argument("cannot multiply structures of different species");
  return std::visit(
      [&](const auto& a) -> HopfStructure {
        using T = std::decay_t<decltype(a)>;
        return product(a, std::get<T>(y));
      },
      x);
}

namespace {

template <class T>
Maybe<HopfStructure> lift(T v) {
  return HopfStructure{std::move(v)};
}

template <class T>
Maybe<HopfStructure> lift(Maybe<T> v) {
  if (!v) return std::nullopt;
  return HopfStructure{std::move(*v)};
}

}  // namespace

Maybe<HopfStructure> species_restrict(const HopfStructure& x, Subset s) {
  return std::visit([&](const auto& a) { return lift(restrict_to(a, s)); }, x);
}

Maybe<HopfStructure> species_contract(const HopfStructure& x, Subset s) {
  return std::visit([&](const auto& a) { return lift(contract_by(a, s)); }, x);
}

bool species_is_stable(const HopfStructure& x) {
  return std::visit([](const auto& a) { return is_stable(a); }, x);
}

HopfStructure species_relabel(const HopfStructure& x,
                              const std::map<std::string, std::string>& sigma) {
  return std::visit(
      [&](const auto& a) -> HopfStructure {
        auto out = a;
        out.ground = rename_ground(a.ground, sigma);
        return out;
      },
      x);
}

HopfStructure species_reindex(const HopfStructure& x,
                              const std::vector<std::string>& new_label_order) {
  GroundSet ground{new_label_order};
  const auto perm = reindex_perm(ground_of(x), ground);
  auto remap_idx = [&](int i) { return perm[static_cast<std::size_t>(i)]; };

  if (const auto* g = std::get_if<Graph>(&x)) {
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : g->edges) {
      int a = remap_idx(i), b = remap_idx(j);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    return Graph{std::move(ground), std::move(edges)};
  }
  if (const auto* h = std::get_if<Hypergraph>(&x)) {
    std::vector<Subset> edges;
    for (Subset e : h->edges) edges.push_back(remap(e, perm));
    std::sort(edges.begin(), edges.end());
    return Hypergraph{std::move(ground), std::move(edges)};
  }
  if (const auto* p = std::get_if<Poset>(&x)) {
    std::vector<std::uint64_t> below(p->below.size());
    for (int i = 0; i < p->ground.size(); ++i)
      below[static_cast<std::size_t>(remap_idx(i))] =
          remap(Subset{p->below[static_cast<std::size_t>(i)]}, perm).bits;
    return Poset{std::move(ground), std::move(below)};
  }
  if (const auto* m = std::get_if<Matroid>(&x)) {
    std::vector<Subset> bases;
    for (Subset b : m->bases) bases.push_back(remap(b, perm));
    std::sort(bases.begin(), bases.end());
    return Matroid{std::move(ground), std::move(bases)};
  }
  if (const auto* a = std::get_if<Antimatroid>(&x)) {
    std::vector<Subset> feasible;
    for (Subset f : a->feasible.members()) feasible.push_back(remap(f, perm));
    return Antimatroid{std::move(ground), SubsetFamily{std::move(feasible)}};
  }
  return reindex(std::get<ColoringProblem>(x), new_label_order);
}

ColoringProblem phi(const HopfStructure& x) {
  const GroundSet& g = ground_of(x);
  if (g.size() > 16) throw guard_error("phi ground set larger than 16 elements");
  const std::uint64_t full = g.full().bits;

  std::vector<Maybe<HopfStructure>> restricted(full + 1);
  std::vector<Subset> members;
  for (std::uint64_t m = 0;; ++m) {
    restricted[m] = species_restrict(x, Subset{m});
    if (restricted[m]) members.push_back(Subset{m});
    if (m == full) break;
  }

  std::vector<SubsetPair> pairs;
  for (Subset t : members) {
    const HopfStructure& xt = *restricted[t.bits];
    // submasks of t, including ∅ and t itself
    std::uint64_t s = t.bits;
    while (true) {
      auto minor = species_contract(xt, compress(Subset{s}, t));
      if (minor && species_is_stable(*minor)) pairs.push_back({Subset{s}, t});
      if (s == 0) break;
      s = (s - 1) & t.bits;
    }
  }
  return ColoringProblem{g, SubsetFamily{std::move(members)},
                         IntervalIdeal{std::move(pairs)}};
}

QSymPoly psi(const HopfStructure& x) {
  const GroundSet& g = ground_of(x);
  if (g.size() > 16) throw guard_error("psi ground set larger than 16 elements");
  const std::uint64_t full = g.full().bits;

  std::vector<Maybe<HopfStructure>> restricted(full + 1);
  for (std::uint64_t m = 0;; ++m) {
    restricted[m] = species_restrict(x, Subset{m});
    if (m == full) break;
  }

  QSymPoly::TermMap acc;
  Composition type;
  auto dfs = [&](auto&& self, std::uint64_t cur) -> void {
    if (cur == full) {
      ++acc[type];
      return;
    }
    const std::uint64_t comp = full & ~cur;
    for (std::uint64_t add = comp;; add = (add - 1) & comp) {
      if (add != 0) {
        const std::uint64_t next = cur | add;
        if (restricted[next]) {
          auto minor = species_contract(*restricted[next], compress(Subset{cur}, Subset{next}));
          if (minor && species_is_stable(*minor)) {
            type.push_back(std::popcount(add));
            self(self, next);
            type.pop_back();
          }
        }
      }
      if (add == 0) break;
    }
  };
  dfs(dfs, 0);
  return QSymPoly{std::move(acc)};
}

Antimatroid poset_to_antimatroid(const Poset& p) {
  if (p.ground.size() > 20) throw guard_error("poset too large for ideal enumeration");
  std::vector<Subset> feasible;
  const std::uint64_t full = p.ground.full().bits;
  for (std::uint64_t m = 0;; ++m) {
    if (is_order_ideal(p, Subset{m})) feasible.push_back(Subset{m});
    if (m == full) break;
  }
  return Antimatroid{p.ground, SubsetFamily{std::move(feasible)}};
}

}  // namespace chroma
