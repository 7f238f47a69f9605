#include "chroma/suites.hpp"

#include <array>
#include <chrono>
#include <cstdio>

#include "chroma/geometry.hpp"
#include "chroma/invariants.hpp"
#include "chroma/json_io.hpp"

namespace chroma {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  Rng r{seed ^ (salt * 0x9e3779b97f4a7c15ull)};
  return r.next();
}

struct Sink {
  SuiteReport& report;

  void fail(std::string law, Json cx) {
    if (report.failures.size() < 100)
      report.failures.push_back({std::move(law), cx.dump()});
  }
};

bool maybe_eq(const Maybe<HopfStructure>& a, const Maybe<HopfStructure>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

Json maybe_json(const Maybe<HopfStructure>& a) {
  return a ? to_json(*a) : Json(nullptr);
}

std::map<std::string, std::string> fresh_sigma(const GroundSet& g) {
  std::map<std::string, std::string> sigma;
  for (const auto& l : g.labels()) sigma[l] = l + "~";
  return sigma;
}

std::map<std::string, std::string> restrict_sigma(
    const std::map<std::string, std::string>& sigma, const GroundSet& g) {
  std::map<std::string, std::string> out;
  for (const auto& l : g.labels()) out[l] = sigma.at(l);
  return out;
}

Maybe<HopfStructure> maybe_relabel(const Maybe<HopfStructure>& x,
                                   const std::map<std::string, std::string>& sigma) {
  if (!x) return std::nullopt;
  return species_relabel(*x, restrict_sigma(sigma, ground_of(*x)));
}

std::vector<std::string> shuffled_labels(const GroundSet& g, Rng& rng) {
  std::vector<std::string> out = g.labels();
  for (std::size_t i = out.size(); i > 1; --i)
    std::swap(out[i - 1], out[rng.below(i)]);
  return out;
}

// labels of s, ordered as they appear in ord
std::vector<std::string> induced_order(const std::vector<std::string>& ord,
                                       const GroundSet& g, Subset s) {
  std::vector<std::string> out;
  for (const auto& l : ord) {
    auto i = g.index_of(l);
    if (i && s.contains(*i)) out.push_back(l);
  }
  return out;
}

Subset remap_subset(Subset s, const GroundSet& from, const GroundSet& to) {
  Subset out;
  for (int i : elements_of(s)) out = out | Subset::single(*to.index_of(from.label(i)));
  return out;
}

void check_valid_if_problem(Sink& sink, const HopfStructure& h, const char* law,
                            const Json& cx) {
  if (const auto* cp = std::get_if<ColoringProblem>(&h)) {
    auto violations = validate(*cp);
    if (!violations.empty()) {
      Json j = cx;
      j["violations"] = violations;
      sink.fail(law, j);
    }
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

HopfOps HopfOps::standard() {
  return HopfOps{
      [](const HopfStructure& a, const HopfStructure& b) { return species_product(a, b); },
      [](const HopfStructure& a, Subset s) { return species_restrict(a, s); },
      [](const HopfStructure& a, Subset s) { return species_contract(a, s); },
      [](const HopfStructure& a) { return species_is_stable(a); }};
}

SuiteReport run_axiom_suite(SpeciesTag tag, int trials, const GenConfig& cfg,
                            const HopfOps& ops) {
  validate_gen_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{"axioms[" + to_string(tag) + "]", trials, {}, 0.0};
  Sink sink{report};

  for (int t = 0; t < trials; ++t) {
    Rng rng{mix(cfg.seed, static_cast<std::uint64_t>(t))};
    const int n = t % (cfg.ground_size + 1);
    const HopfStructure x = gen_structure_on(tag, default_ground(n), rng, cfg);
    const Subset full = ground_of(x).full();
    const Json jx = to_json(x);
    auto cx = [&](std::initializer_list<std::pair<const char*, Json>> extra) {
      Json j{{"trial", t}, {"x", jx}};
      for (const auto& [k, v] : extra) j[k] = v;
      return j;
    };

    // counital
    if (!maybe_eq(ops.restrict_op(x, full), Maybe<HopfStructure>{x}))
      sink.fail("counital", cx({{"op", "restrict to N"}}));
    if (!maybe_eq(ops.contract_op(x, Subset{}), Maybe<HopfStructure>{x}))
      sink.fail("counital", cx({{"op", "contract by empty set"}}));

    for (std::uint64_t s = 0; s <= full.bits; ++s) {
      const Subset S{s};
      const auto rx = ops.restrict_op(x, S);
      const auto qx = ops.contract_op(x, S);
      // zero conditions
      if (rx.has_value() != qx.has_value())
        sink.fail("zero-conditions", cx({{"S", subset_to_json(S, ground_of(x))}}));
      if (rx) check_valid_if_problem(sink, *rx, "validity", cx({{"op", "restrict"}}));
      if (qx) check_valid_if_problem(sink, *qx, "validity", cx({{"op", "contract"}}));

      // stability is closed under taking minors
      if (ops.stable(x)) {
        if (rx && !ops.stable(*rx))
          sink.fail("stability-minors", cx({{"S", subset_to_json(S, ground_of(x))},
                                            {"op", "restrict"}}));
        if (qx && !ops.stable(*qx))
          sink.fail("stability-minors", cx({{"S", subset_to_json(S, ground_of(x))},
                                            {"op", "contract"}}));
      }
      if (s == full.bits) break;
    }

    // coassociativity and the combinatorial-comonoid condition, all R ⊆ S ⊆ N
    for (std::uint64_t s = 0;; ++s) {
      const Subset S{s};
      const auto rS = ops.restrict_op(x, S);
      for (std::uint64_t r = s;; r = (r - 1) & s) {
        const Subset R{r};
        const auto jS = subset_to_json(S, ground_of(x));
        const auto jR = subset_to_json(R, ground_of(x));

        const auto lhs =
            rS ? ops.contract_op(*rS, compress(R, S)) : Maybe<HopfStructure>{};
        const auto cR = ops.contract_op(x, R);
        const auto rhs =
            cR ? ops.restrict_op(*cR, compress(S - R, full - R)) : Maybe<HopfStructure>{};
        if (!maybe_eq(lhs, rhs))
          sink.fail("coassociativity",
                    cx({{"S", jS}, {"R", jR}, {"lhs", maybe_json(lhs)},
                        {"rhs", maybe_json(rhs)}, {"form", "x|_S/R = (x/R)|_{S-R}"}}));
        if (lhs) {
          const auto lhs2 = ops.restrict_op(*rS, compress(R, S));
          const auto rhs2 = ops.restrict_op(x, R);
          if (!maybe_eq(lhs2, rhs2))
            sink.fail("coassociativity",
                      cx({{"S", jS}, {"R", jR}, {"form", "(x|_S)|_R = x|_R"}}));
          const auto lhs3 = ops.contract_op(x, S);
          const auto rhs3 =
              cR ? ops.contract_op(*cR, compress(S - R, full - R)) : Maybe<HopfStructure>{};
          if (!maybe_eq(lhs3, rhs3))
            sink.fail("coassociativity",
                      cx({{"S", jS}, {"R", jR}, {"lhs", maybe_json(lhs3)},
                          {"rhs", maybe_json(rhs3)}, {"form", "x/S = (x/R)/(S-R)"}}));
        }
        // combinatorial comonoid: R, S both restrictable forces the minor
        if (ops.restrict_op(x, R) && rS && !lhs)
          sink.fail("combinatorial-comonoid", cx({{"S", jS}, {"R", jR}}));
        if (r == 0) break;
      }
      if (s == full.bits) break;
    }

    // naturality: renaming labels commutes with the comonoid operations
    {
      const auto sigma = fresh_sigma(ground_of(x));
      const HopfStructure xr = species_relabel(x, sigma);
      for (int probe = 0; probe < 3; ++probe) {
        const Subset S{rng.below(full.bits + 1)};
        if (!maybe_eq(ops.restrict_op(xr, S), maybe_relabel(ops.restrict_op(x, S), sigma)))
          sink.fail("naturality", cx({{"op", "relabel/restrict"},
                                      {"S", subset_to_json(S, ground_of(x))}}));
        if (!maybe_eq(ops.contract_op(xr, S), maybe_relabel(ops.contract_op(x, S), sigma)))
          sink.fail("naturality", cx({{"op", "relabel/contract"},
                                      {"S", subset_to_json(S, ground_of(x))}}));
      }
      // permuting positions preserves the structure up to reindexing
      const auto ord = shuffled_labels(ground_of(x), rng);
      const HopfStructure xi = species_reindex(x, ord);
      const GroundSet gi{ord};
      if (ops.stable(xi) != ops.stable(x))
        sink.fail("naturality", cx({{"op", "reindex/stable"}}));
      for (int probe = 0; probe < 3; ++probe) {
        const Subset S{rng.below(full.bits + 1)};
        const auto a = ops.restrict_op(xi, remap_subset(S, ground_of(x), gi));
        const auto b = ops.restrict_op(x, S);
        const bool same =
            a.has_value() == b.has_value() &&
            (!a || *a == species_reindex(*b, induced_order(ord, ground_of(x), S)));
        if (!same)
          sink.fail("naturality", cx({{"op", "reindex/restrict"},
                                      {"S", subset_to_json(S, ground_of(x))}}));
      }
    }

    // product laws against two more structures on disjoint labels
    {
      const int ny = 1 + t % 2;
      const HopfStructure y = gen_structure_on(tag, default_ground(ny, 6), rng, cfg);
      const HopfStructure z = gen_structure_on(tag, default_ground(1, 9), rng, cfg);
      const Json jy = to_json(y);

      const HopfStructure e = species_empty(tag);
      if (!(ops.product(x, e) == x) || !(ops.product(e, x) == x))
        sink.fail("unital", cx({}));

      const HopfStructure xy = ops.product(x, y);
      check_valid_if_problem(sink, xy, "validity", cx({{"y", jy}}));
      if (!(ops.product(xy, z) == ops.product(x, ops.product(y, z))))
        sink.fail("associativity", cx({{"y", jy}, {"z", to_json(z)}}));

      if (ops.stable(xy) != (ops.stable(x) && ops.stable(y)))
        sink.fail("stability-product", cx({{"y", jy}}));

      {  // relabel is multiplicative
        auto sigma = fresh_sigma(ground_of(x));
        for (const auto& [k, v] : fresh_sigma(ground_of(y))) sigma[k] = v;
        if (!(species_relabel(xy, sigma) ==
              ops.product(species_relabel(x, restrict_sigma(sigma, ground_of(x))),
                          species_relabel(y, restrict_sigma(sigma, ground_of(y))))))
          sink.fail("naturality", cx({{"op", "relabel/product"}, {"y", jy}}));
      }

      // bimonoid compatibility over every decomposition of the product ground
      const int nx = ground_of(x).size();
      const Subset fully = ground_of(y).full();
      const Subset fullxy = ground_of(xy).full();
      for (std::uint64_t sp = 0;; ++sp) {
        const Subset Sx{sp & full.bits};
        const Subset Sy{(sp >> nx) & fully.bits};
        const Subset Sxy{sp};
        {
          const auto lhs = ops.restrict_op(xy, Sxy);
          const auto rx = ops.restrict_op(x, Sx);
          const auto ry = ops.restrict_op(y, Sy);
          const auto rhs = rx && ry ? Maybe<HopfStructure>{ops.product(*rx, *ry)}
                                    : Maybe<HopfStructure>{};
          if (!maybe_eq(lhs, rhs))
            sink.fail("compatibility", cx({{"y", jy}, {"op", "restrict"},
                                           {"S", subset_to_json(Sxy, ground_of(xy))}}));
        }
        {
          const auto lhs = ops.contract_op(xy, Sxy);
          const auto qx = ops.contract_op(x, Sx);
          const auto qy = ops.contract_op(y, Sy);
          const auto rhs = qx && qy ? Maybe<HopfStructure>{ops.product(*qx, *qy)}
                                    : Maybe<HopfStructure>{};
          if (!maybe_eq(lhs, rhs))
            sink.fail("compatibility", cx({{"y", jy}, {"op", "contract"},
                                           {"S", subset_to_json(Sxy, ground_of(xy))}}));
        }
        if (sp == fullxy.bits) break;
      }
    }
  }

  report.elapsed_seconds = seconds_since(start);
  return report;
}

SuiteReport run_theorem_suite(int trials, const GenConfig& cfg) {
  validate_gen_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{"theorems", trials, {}, 0.0};
  Sink sink{report};

  constexpr SpeciesTag all_tags[] = {SpeciesTag::graph,      SpeciesTag::hypergraph,
                                     SpeciesTag::poset,      SpeciesTag::matroid,
                                     SpeciesTag::antimatroid, SpeciesTag::coloring_problem};

  for (int t = 0; t < trials; ++t) {
    Rng rng{mix(cfg.seed ^ 0x7e03a9u, static_cast<std::uint64_t>(t))};
    const int n = t % (std::min(cfg.ground_size, 4) + 1);
    const ColoringProblem c = gen_coloring_problem_on(default_ground(n), rng, cfg);
    const Json jc = to_json(c);
    auto cx = [&](std::initializer_list<std::pair<const char*, Json>> extra) {
      Json j{{"trial", t}, {"c", jc}};
      for (const auto& [k, v] : extra) j[k] = v;
      return j;
    };

    std::vector<long long> counts;
    for (int k = 0; k <= 5; ++k) counts.push_back(count_colorings(c, k));

    const UniPoly poly = chromatic_polynomial(c);
    const QSymPoly q = chromatic_qsym(c);
    const auto flags = enumerate_stable_flags(c);

    for (int k = 0; k <= 5; ++k) {
      const auto expected = static_cast<std::size_t>(k);
      if (poly.eval(Rational{k}) != Rational{counts[expected]})
        sink.fail("oracle-agreement", cx({{"k", k}, {"poly", to_string(poly)},
                                          {"count", counts[expected]}}));
      if (principal_specialization(q, k) != Rational{counts[expected]})
        sink.fail("specialization", cx({{"k", k}, {"qsym", to_string(q)}}));
      long long via_flags = 0;
      for (const auto& f : flags)
        via_flags += binomial(k, static_cast<long long>(f.type().size()));
      if (via_flags != counts[expected])
        sink.fail("flag-bijection", cx({{"k", k}}));
    }

    for (int h = 0; h <= 4; ++h)
      if (Rational{hilbert_function(c, h)} != poly.eval(Rational{h + 1}))
        sink.fail("hilbert", cx({{"n", h}, {"poly", to_string(poly)}}));

    if (ehrhart_qsym(c) != q)
      sink.fail("ehrhart", cx({{"qsym", to_string(q)},
                               {"ehrhart", to_string(ehrhart_qsym(c))}}));
    for (int box = 1; box <= 4; ++box)
      if (count_lattice_points(c, box) != counts[static_cast<std::size_t>(box)])
        sink.fail("lattice-points", cx({{"box", box}}));

    // lattice points in the box correspond exactly to proper colorings
    if (n >= 1) {
      const int box = 2;
      std::vector<int> coords(static_cast<std::size_t>(n), 1);
      while (true) {
        const auto flag = flag_of_point(LatticePoint{coords}, c.ground);
        std::vector<Subset> aug{Subset{}};
        for (Subset s : flag)
          if (s != aug.back()) aug.push_back(s);
        if (aug.back() != c.ground.full()) aug.push_back(c.ground.full());
        bool in_cone = true;
        for (std::size_t i = 1; i < aug.size(); ++i)
          if (!c.ideal.contains(aug[i - 1], aug[i])) in_cone = false;
        if (in_cone != is_proper_coloring(c, Coloring{coords}))
          sink.fail("point-flag", cx({{"point", coords}}));
        int pos = 0;
        while (pos < n && coords[static_cast<std::size_t>(pos)] == box) {
          coords[static_cast<std::size_t>(pos)] = 1;
          ++pos;
        }
        if (pos == n) break;
        ++coords[static_cast<std::size_t>(pos)];
      }
    }

    // product identities against a second problem on disjoint labels
    {
      const ColoringProblem c2 =
          gen_coloring_problem_on(default_ground(1 + t % 2, 10), rng, cfg);
      const ColoringProblem d =
          gen_coloring_problem_on(default_ground(1 + (t / 2) % 2, 13), rng, cfg);
      const ColoringProblem cd = product(c2, d);
      if (chromatic_qsym(cd) != qsym_mul(chromatic_qsym(c2), chromatic_qsym(d)))
        sink.fail("multiplicativity", cx({{"c2", to_json(c2)}, {"d", to_json(d)}}));
    }

    // binomial identity over all splits x + y ≤ 5
    {
      std::vector<std::array<long long, 6>> rows, cols;
      for (Subset s : c.family.members()) {
        const auto cs = *restrict_to(c, s);
        const auto cq = *contract_by(c, s);
        std::array<long long, 6> row{}, col{};
        for (int k = 0; k <= 5; ++k) {
          row[static_cast<std::size_t>(k)] = count_colorings(cs, k);
          col[static_cast<std::size_t>(k)] = count_colorings(cq, k);
        }
        rows.push_back(row);
        cols.push_back(col);
      }
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b) {
          long long sum = 0;
          for (std::size_t i = 0; i < rows.size(); ++i)
            sum += rows[i][static_cast<std::size_t>(a)] * cols[i][static_cast<std::size_t>(b)];
          if (sum != counts[static_cast<std::size_t>(a + b)])
            sink.fail("binomial", cx({{"x", a}, {"y", b}, {"sum", sum},
                                      {"count", counts[static_cast<std::size_t>(a + b)]}}));
        }
    }

    // terminal morphism laws, every species variant
    for (SpeciesTag tag : all_tags) {
      const HopfStructure x = gen_structure_on(tag, default_ground(n), rng, cfg);
      const Json jx = to_json(x);
      auto sx = [&](std::initializer_list<std::pair<const char*, Json>> extra) {
        Json j{{"trial", t}, {"species", to_string(tag)}, {"x", jx}};
        for (const auto& [k, v] : extra) j[k] = v;
        return j;
      };

      const ColoringProblem cp = phi(x);
      if (auto violations = validate(cp); !violations.empty())
        sink.fail("phi-validity", sx({{"violations", violations}}));
      if (psi(x) != chromatic_qsym(cp))
        sink.fail("psi-preservation", sx({{"psi", to_string(psi(x))},
                                          {"chromatic", to_string(chromatic_qsym(cp))}}));
      if (species_is_stable(x) != is_stable(cp)) sink.fail("phi-stability", sx({}));
      if (tag == SpeciesTag::coloring_problem && !(cp == std::get<ColoringProblem>(x)))
        sink.fail("phi-idempotence", sx({}));

      const Subset full = ground_of(x).full();
      for (std::uint64_t s = 0;; ++s) {
        const Subset S{s};
        const auto xr = species_restrict(x, S);
        const auto cr = restrict_to(cp, S);
        if (xr.has_value() != cr.has_value())
          sink.fail("phi-restriction", sx({{"S", subset_to_json(S, ground_of(x))},
                                           {"detail", "zero pattern"}}));
        else if (xr && !(phi(*xr) == *cr))
          sink.fail("phi-restriction", sx({{"S", subset_to_json(S, ground_of(x))}}));
        const auto xq = species_contract(x, S);
        const auto cq = contract_by(cp, S);
        if (xq.has_value() != cq.has_value())
          sink.fail("phi-contraction", sx({{"S", subset_to_json(S, ground_of(x))},
                                           {"detail", "zero pattern"}}));
        else if (xq && !(phi(*xq) == *cq))
          sink.fail("phi-contraction", sx({{"S", subset_to_json(S, ground_of(x))}}));
        if (s == full.bits) break;
      }

      const HopfStructure y = gen_structure_on(tag, default_ground(1 + t % 2, 16), rng, cfg);
      if (!(phi(species_product(x, y)) == product(cp, phi(y))))
        sink.fail("phi-product", sx({{"y", to_json(y)}}));
    }

    // J: posets → antimatroids commutes with the Hopf operations
    {
      const Poset p = gen_poset_on(default_ground(std::min(n, 3)), rng, cfg);
      const Poset p2 = gen_poset_on(default_ground(1 + t % 2, 20), rng, cfg);
      const Antimatroid jp = poset_to_antimatroid(p);
      if (!(poset_to_antimatroid(product(p, p2)) == product(jp, poset_to_antimatroid(p2))))
        sink.fail("j-naturality", cx({{"p", to_json(p)}, {"q", to_json(p2)},
                                      {"op", "product"}}));
      if (is_stable(p) != is_stable(jp))
        sink.fail("j-naturality", cx({{"p", to_json(p)}, {"op", "stable"}}));
      const Subset fullp = p.ground.full();
      for (std::uint64_t s = 0;; ++s) {
        const Subset S{s};
        const auto pr = restrict_to(p, S);
        const auto ar = restrict_to(jp, S);
        if (pr.has_value() != ar.has_value() ||
            (pr && !(poset_to_antimatroid(*pr) == *ar)))
          sink.fail("j-naturality", cx({{"p", to_json(p)}, {"op", "restrict"},
                                        {"S", subset_to_json(S, p.ground)}}));
        const auto pq = contract_by(p, S);
        const auto aq = contract_by(jp, S);
        if (pq.has_value() != aq.has_value() ||
            (pq && !(poset_to_antimatroid(*pq) == *aq)))
          sink.fail("j-naturality", cx({{"p", to_json(p)}, {"op", "contract"},
                                        {"S", subset_to_json(S, p.ground)}}));
        if (s == fullp.bits) break;
      }
    }
  }

  report.elapsed_seconds = seconds_since(start);
  return report;
}

std::string to_string(const SuiteReport& r) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.2fs", r.elapsed_seconds);
  std::string out = "suite: " + r.suite + "\ntrials: " + std::to_string(r.trials) +
                    "\nfailures: " + std::to_string(r.failures.size()) + "\n";
  for (const auto& f : r.failures) out += "FAIL " + f.law + ": " + f.counterexample + "\n";
  out += "elapsed: " + std::string{elapsed} + "\n";
  return out;
}

}  // namespace chroma
