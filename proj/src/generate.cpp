#include "chroma/generate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace chroma {

void validate_gen_config(const GenConfig& cfg) {
  if (cfg.ground_size < 1 || cfg.ground_size > 5)
    throw guard_error("generator ground size must be in 1..5");
  for (double p : {cfg.edge_probability, cfg.relation_probability, cfg.family_density,
                   cfg.pair_density})
    if (p < 0.0 || p > 1.0)
      throw std::invalid_argument("probability knob outside [0,1]");
  if (cfg.basis_count < 0) throw std::invalid_argument("negative basis count");
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

bool Rng::chance(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return static_cast<double>(next()) < p * 18446744073709551616.0;
}

GroundSet default_ground(int n, int offset) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    int k = offset + i;
    if (k < 26)
      labels.push_back(std::string(1, static_cast<char>('a' + k)));
    else
      labels.push_back("e" + std::to_string(k));
  }
  return GroundSet{std::move(labels)};
}

ColoringProblem gen_coloring_problem_on(GroundSet g, Rng& rng, const GenConfig& cfg) {
  const std::uint64_t full = g.full().bits;
  std::vector<Subset> members{Subset{}, Subset{full}};
  for (std::uint64_t m = 1; m < full; ++m)
    if (rng.chance(cfg.family_density)) members.push_back(Subset{m});
  SubsetFamily family{std::move(members)};

  std::vector<SubsetPair> generators;
  for (Subset s : family.members())
    for (Subset t : family.members())
      if (s != t && s.subset_of(t) && rng.chance(cfg.pair_density))
        generators.push_back({s, t});
  IntervalIdeal ideal = close_downward(family, generators);
  return ColoringProblem{std::move(g), std::move(family), std::move(ideal)};
}

Graph gen_graph_on(GroundSet g, Rng& rng, const GenConfig& cfg) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (rng.chance(cfg.edge_probability)) edges.emplace_back(i, j);
  return Graph{std::move(g), std::move(edges)};
}

Hypergraph gen_hypergraph_on(GroundSet g, Rng& rng, const GenConfig& cfg) {
  std::vector<Subset> edges;
  const std::uint64_t full = g.full().bits;
  for (std::uint64_t m = 1; m <= full && full != 0; ++m)
    if (std::popcount(m) >= 2 && rng.chance(cfg.edge_probability))
      edges.push_back(Subset{m});
  return Hypergraph{std::move(g), std::move(edges)};
}

Poset gen_poset_on(GroundSet g, Rng& rng, const GenConfig& cfg) {
  // arcs only go up in index order, so antisymmetry holds by construction
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (rng.chance(cfg.relation_probability)) leq.emplace_back(i, j);
  return make_poset(std::move(g), leq);
}

Matroid gen_matroid_on(GroundSet g, Rng& rng, const GenConfig& cfg) {
  const auto& catalog = matroid_basis_catalog(g.size());
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (cfg.basis_count == 0 ||
        catalog[i].size() == static_cast<std::size_t>(cfg.basis_count))
      candidates.push_back(i);
  if (candidates.empty())
    for (std::size_t i = 0; i < catalog.size(); ++i) candidates.push_back(i);
  const auto& bases = catalog[candidates[rng.below(candidates.size())]];
  return Matroid{std::move(g), bases};
}

Antimatroid gen_antimatroid_on(GroundSet g, Rng& rng, const GenConfig& cfg) {
  const std::uint64_t full = g.full().bits;
  std::set<std::uint64_t> feas{0, full};
  for (std::uint64_t m = 1; m < full; ++m)
    if (rng.chance(cfg.family_density)) feas.insert(m);

  bool changed = true;
  while (changed) {
    changed = false;
    bool closing = true;
    while (closing) {
      closing = false;
      std::vector<std::uint64_t> snap(feas.begin(), feas.end());
      for (std::size_t i = 0; i < snap.size(); ++i)
        for (std::size_t j = i + 1; j < snap.size(); ++j)
          if (feas.insert(snap[i] | snap[j]).second) closing = changed = true;
    }
    std::vector<std::uint64_t> snap(feas.begin(), feas.end());
    for (std::uint64_t x : snap) {
      if (x == 0) continue;
      bool accessible = false;
      for (int e : elements_of(Subset{x}))
        if (feas.count(x & ~(std::uint64_t{1} << e))) {
          accessible = true;
          break;
        }
      if (!accessible) {
        auto elems = elements_of(Subset{x});
        int drop = elems[rng.below(elems.size())];
        feas.insert(x & ~(std::uint64_t{1} << drop));
        changed = true;
      }
    }
  }
  std::vector<Subset> members;
  for (std::uint64_t m : feas) members.push_back(Subset{m});
  return Antimatroid{std::move(g), SubsetFamily{std::move(members)}};
}

HopfStructure gen_structure_on(SpeciesTag tag, GroundSet g, Rng& rng,
                               const GenConfig& cfg) {
  switch (tag) {
    case SpeciesTag::graph: return gen_graph_on(std::move(g), rng, cfg);
    case SpeciesTag::hypergraph: return gen_hypergraph_on(std::move(g), rng, cfg);
    case SpeciesTag::poset: return gen_poset_on(std::move(g), rng, cfg);
    case SpeciesTag::matroid: return gen_matroid_on(std::move(g), rng, cfg);
    case SpeciesTag::antimatroid: return gen_antimatroid_on(std::move(g), rng, cfg);
    case SpeciesTag::coloring_problem:
      return gen_coloring_problem_on(std::move(g), rng, cfg);
  }
  throw std::invalid_argument("unknown species tag");
}

namespace {

template <class F>
auto seeded(const GenConfig& cfg, F&& f) {
  validate_gen_config(cfg);
  Rng rng{cfg.seed};
  return f(default_ground(cfg.ground_size), rng);
}

}  // namespace

ColoringProblem gen_coloring_problem(const GenConfig& cfg) {
  return seeded(cfg, [&](GroundSet g, Rng& r) { return gen_coloring_problem_on(std::move(g), r, cfg); });
}
Graph gen_graph(const GenConfig& cfg) {
  return seeded(cfg, [&](GroundSet g, Rng& r) { return gen_graph_on(std::move(g), r, cfg); });
}
Hypergraph gen_hypergraph(const GenConfig& cfg) {
  return seeded(cfg, [&](GroundSet g, Rng& r) { return gen_hypergraph_on(std::move(g), r, cfg); });
}
Poset gen_poset(const GenConfig& cfg) {
  return seeded(cfg, [&](GroundSet g, Rng& r) { return gen_poset_on(std::move(g), r, cfg); });
}
Matroid gen_matroid(const GenConfig& cfg) {
  return seeded(cfg, [&](GroundSet g, Rng& r) { return gen_matroid_on(std::move(g), r, cfg); });
}
Antimatroid gen_antimatroid(const GenConfig& cfg) {
  return seeded(cfg, [&](GroundSet g, Rng& r) { return gen_antimatroid_on(std::move(g), r, cfg); });
}
HopfStructure gen_structure(SpeciesTag tag, const GenConfig& cfg) {
  return seeded(cfg, [&](GroundSet g, Rng& r) { return gen_structure_on(tag, std::move(g), r, cfg); });
}

namespace {

bool exchange_ok(const std::vector<Subset>& bases) {
  auto is_basis = [&](Subset s) {
    return std::binary_search(bases.begin(), bases.end(), s);
  };
  for (Subset b1 : bases)
    for (Subset b2 : bases)
      for (int x : elements_of(b1 - b2)) {
        bool found = false;
        for (int y : elements_of(b2 - b1))
          if (is_basis((b1 - Subset::single(x)) | Subset::single(y))) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  return true;
}

std::vector<std::vector<Subset>> build_catalog(int n) {
  std::vector<std::vector<Subset>> out;
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  for (int r = 0; r <= n; ++r) {
    std::vector<Subset> r_subsets;
    for (std::uint64_t m = 0;; ++m) {
      if (std::popcount(m) == r) r_subsets.push_back(Subset{m});
      if (m == full) break;
    }
    const std::uint64_t selections = std::uint64_t{1} << r_subsets.size();
    for (std::uint64_t sel = 1; sel < selections; ++sel) {
      std::vector<Subset> bases;
      for (std::size_t i = 0; i < r_subsets.size(); ++i)
        if ((sel >> i) & 1) bases.push_back(r_subsets[i]);
      if (exchange_ok(bases)) out.push_back(std::move(bases));
    }
  }
  return out;
}

}  // namespace

const std::vector<std::vector<Subset>>& matroid_basis_catalog(int n) {
  if (n < 0 || n > 5) throw guard_error("matroid catalog covers ground sizes 0..5");
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<Subset>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_catalog(n)).first;
  return it->second;
}

}  // namespace chroma
