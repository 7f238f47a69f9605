#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "chroma/coloring.hpp"
#include "chroma/generate.hpp"
#include "chroma/invariants.hpp"
#include "test_support.hpp"

using namespace chroma;
using namespace chroma::testfix;

namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
  return std::any_of(violations.begin(), violations.end(), [&](const std::string& v) {
    return v.find(needle) != std::string::npos;
  });
}

ColoringProblem trivial_on_a() {
  return ColoringProblem{g({"a"}), SubsetFamily{{Subset{0}, Subset{1}}},
                         IntervalIdeal{{{Subset{0}, Subset{0}},
                                        {Subset{1}, Subset{1}},
                                        {Subset{0}, Subset{1}}}}};
}

}  // namespace

TEST_CASE("subset mask helpers") {
  Subset s{0b1010};
  CHECK(s.count() == 2);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(0));
  CHECK(compress(Subset{0b1000}, Subset{0b1010}) == Subset{0b10});
  CHECK(expand(Subset{0b10}, Subset{0b1010}) == Subset{0b1000});
  for (std::uint64_t within = 0; within < 32; ++within)
    for (std::uint64_t x = within;; x = (x - 1) & within) {
      CHECK(expand(compress(Subset{x}, Subset{within}), Subset{within}) == Subset{x});
      if (x == 0) break;
    }
}

TEST_CASE("ground sets reject duplicates and oversize") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), std::invalid_argument);
  CHECK(g({"a", "b"}).index_of("b") == 1);
  CHECK_FALSE(g({"a"}).index_of("z"));
}

TEST_CASE("validate accepts the smallest nontrivial problem") {
  CHECK(validate(trivial_on_a()).empty());
  CHECK(validate(trivial_on_a(), {.paranoid = true}).empty());
}

TEST_CASE("validate flags a family missing the full set") {
  ColoringProblem cp{g({"a"}), SubsetFamily{{Subset{0}}},
                     IntervalIdeal{{{Subset{0}, Subset{0}}}}};
  auto violations = validate(cp);
  CHECK_FALSE(violations.empty());
  CHECK(mentions(violations, "full ground set"));
}

TEST_CASE("validate flags order-ideal closure violations") {
  // (∅,{a,b}) present but ({a},{a,b}) missing while {a} is in the family
  ColoringProblem cp{g({"a", "b"}),
                     SubsetFamily{{Subset{0}, Subset{1}, Subset{3}}},
                     IntervalIdeal{{{Subset{0}, Subset{0}},
                                    {Subset{1}, Subset{1}},
                                    {Subset{3}, Subset{3}},
                                    {Subset{0}, Subset{3}}}}};
  // independent check: enumerate every sub-interval with endpoints in the family
  bool closed = true;
  for (auto [s, t] : cp.ideal.pairs())
    for (Subset mid : cp.family.members())
      for (Subset top : cp.family.members())
        if (s.subset_of(mid) && mid.subset_of(top) && top.subset_of(t) &&
            !cp.ideal.contains(mid, top))
          closed = false;
  CHECK_FALSE(closed);

  auto fast = validate(cp);
  auto full = validate(cp, {.paranoid = true});
  CHECK(mentions(fast, "order-ideal closure"));
  CHECK(mentions(full, "order-ideal closure"));
}

TEST_CASE("make_coloring_problem throws on violations") {
  CHECK_THROWS_AS(make_coloring_problem(g({"a"}), SubsetFamily{{Subset{0}}},
                                        IntervalIdeal{{{Subset{0}, Subset{0}}}}),
                  std::invalid_argument);
}

TEST_CASE("product of trivial problems is the stable square") {
  ColoringProblem c = trivial_on_a();
  ColoringProblem d = relabel(c, {{"a", "b"}});
  ColoringProblem cd = product(c, d);
  CHECK(cd.ground.labels() == std::vector<std::string>{"a", "b"});
  CHECK(cd.family == boolean_family(2));

  // the displayed pair formula, enumerated by hand: 3 x 3 nested pairs
  std::vector<SubsetPair> expected;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t t = 0; t < 4; ++t)
      if (Subset{s}.subset_of(Subset{t})) expected.push_back({Subset{s}, Subset{t}});
  CHECK(cd.ideal == IntervalIdeal{expected});
  CHECK(cd.ideal.size() == 9);
  CHECK(validate(cd).empty());
}

TEST_CASE("product unit law") {
  ColoringProblem c = figure1_problem();
  CHECK(product(c, unit_problem()) == c);
  CHECK(product(unit_problem(), c) == c);
}

TEST_CASE("product rejects shared labels") {
  CHECK_THROWS_AS(product(trivial_on_a(), trivial_on_a()), std::invalid_argument);
  CHECK_THROWS_WITH_AS(product(trivial_on_a(), trivial_on_a()),
                       doctest::Contains("non-disjoint ground sets"),
                       std::invalid_argument);
}

TEST_CASE("restriction") {
  ColoringProblem k2 = edge_problem();

  SUBCASE("to the full ground set is the identity") {
    auto r = restrict_to(k2, k2.ground.full());
    REQUIRE(r);
    CHECK(*r == k2);
  }
  SUBCASE("to a singleton gives the trivial problem") {
    auto r = restrict_to(k2, Subset{1});
    REQUIRE(r);
    CHECK(*r == trivial_on_a());
  }
  SUBCASE("is Zero off the family") {
    ColoringProblem fig = figure1_problem();
    CHECK_FALSE(restrict_to(fig, fig.ground.subset_of({"b", "c"})));
    CHECK(restrict_to(fig, fig.ground.subset_of({"a", "d"})));
  }
}

TEST_CASE("contraction") {
  SUBCASE("by the empty set is the identity") {
    ColoringProblem fig = figure1_problem();
    auto q = contract_by(fig, Subset{});
    REQUIRE(q);
    CHECK(*q == fig);
  }
  SUBCASE("path graph contracted by an endpoint keeps the far edge") {
    ColoringProblem path =
        independence_problem(g({"a", "b", "c"}), {{0, 1}, {1, 2}});
    auto q = contract_by(path, path.ground.subset_of({"a"}));
    REQUIRE(q);
    // {b,c} minus {a} still spans the edge bc, so (∅,{b,c}) stays excluded
    CHECK(*q == edge_problem("b", "c"));
  }
  SUBCASE("restrict-then-contract matches contract-then-restrict") {
    ColoringProblem fig = figure1_problem();
    const Subset full = fig.ground.full();
    for (Subset t : fig.family.members())
      for (Subset s : fig.family.members()) {
        if (!s.subset_of(t)) continue;
        auto via_restrict = contract_by(*restrict_to(fig, t), compress(s, t));
        auto via_contract = restrict_to(*contract_by(fig, s), compress(t - s, full - s));
        REQUIRE(via_restrict);
        REQUIRE(via_contract);
        CHECK(*via_restrict == *via_contract);
      }
  }
}

TEST_CASE("stability") {
  CHECK(is_stable(boolean_problem(g({"a", "b"}))));
  CHECK_FALSE(is_stable(edge_problem()));
  CHECK_FALSE(is_stable(figure1_problem()));
  CHECK(is_stable(unit_problem()));
}

TEST_CASE("full interval set") {
  SUBCASE("one-element family pair list") {
    SubsetFamily fam{{Subset{0}, Subset{1}}};
    IntervalIdeal expected{{{Subset{0}, Subset{0}},
                            {Subset{0}, Subset{1}},
                            {Subset{1}, Subset{1}}}};
    CHECK(full_interval_set(fam) == expected);
  }
  SUBCASE("boolean family on two elements has nine pairs") {
    CHECK(full_interval_set(boolean_family(2)).size() == 9);
  }
  SUBCASE("pair count matches submask enumeration") {
    ColoringProblem fig = figure1_problem();
    std::size_t count = 0;
    for (Subset t : fig.family.members()) {
      for (std::uint64_t s = t.bits;; s = (s - 1) & t.bits) {
        if (fig.family.contains(Subset{s})) ++count;
        if (s == 0) break;
      }
    }
    CHECK(count == 46);
    CHECK(full_interval_set(fig.family).size() == count);
  }
}

TEST_CASE("relabel and reindex") {
  ColoringProblem k2 = edge_problem();

  SUBCASE("identity map changes nothing") {
    CHECK(relabel(k2, {{"a", "a"}, {"b", "b"}}) == k2);
  }
  SUBCASE("round trip") {
    auto renamed = relabel(k2, {{"a", "x"}, {"b", "y"}});
    CHECK(relabel(renamed, {{"x", "a"}, {"y", "b"}}) == k2);
  }
  SUBCASE("swapping the two ends of an edge is an automorphism") {
    auto swapped = relabel(k2, {{"a", "b"}, {"b", "a"}});
    CHECK(reindex(swapped, {"a", "b"}) == k2);
  }
  SUBCASE("chromatic polynomial is invariant under reindexing") {
    ColoringProblem fig = figure1_problem();
    auto shuffled = reindex(fig, {"c", "a", "d", "b"});
    CHECK(validate(shuffled).empty());
    CHECK(chromatic_polynomial(shuffled) == chromatic_polynomial(fig));
  }
  SUBCASE("non-bijective maps are rejected") {
    CHECK_THROWS_AS(relabel(k2, {{"a", "x"}, {"b", "x"}}), std::invalid_argument);
    CHECK_THROWS_AS(relabel(k2, {{"a", "x"}}), std::invalid_argument);
  }
}

TEST_CASE("generated problems satisfy the comonoid identities") {
  for (int t = 0; t < 40; ++t) {
    GenConfig cfg;
    cfg.seed = 900 + static_cast<std::uint64_t>(t);
    cfg.ground_size = 1 + t % 4;
    ColoringProblem c = gen_coloring_problem(cfg);
    REQUIRE(validate(c).empty());
    const Subset full = c.ground.full();

    for (std::uint64_t s = 0;; ++s) {
      const Subset S{s};
      auto r = restrict_to(c, S);
      auto q = contract_by(c, S);
      CHECK(r.has_value() == q.has_value());
      if (r) {
        CHECK(validate(*r).empty());
        CHECK(validate(*q).empty());
      }
      if (s == full.bits) break;
    }
    CHECK(restrict_to(c, full) == c);
    CHECK(contract_by(c, Subset{}) == c);
  }
}
