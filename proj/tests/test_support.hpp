#pragma once

// Hand-built fixtures shared by the unit tests.

#include <string>
#include <utility>
#include <vector>

#include "chroma/coloring.hpp"

namespace chroma::testfix {

inline GroundSet g(std::vector<std::string> labels) { return GroundSet{std::move(labels)}; }

/// All subsets of an n-element ground set.
inline SubsetFamily boolean_family(int n) {
  std::vector<Subset> members;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) members.push_back(Subset{m});
  return SubsetFamily{std::move(members)};
}

/// The coloring problem whose colorings are proper colorings of the graph
/// with the given edges: family 2^N, pair (S,T) present iff T∖S spans no
/// edge. This mirrors the independent-set description directly and serves as
/// an oracle for the terminal morphism on graphs.
inline ColoringProblem independence_problem(GroundSet ground,
                                            std::vector<std::pair<int, int>> edges) {
  const int n = ground.size();
  SubsetFamily family = boolean_family(n);
  auto independent = [&](Subset s) {
    for (auto [i, j] : edges)
      if (s.contains(i) && s.contains(j)) return false;
    return true;
  };
  std::vector<SubsetPair> pairs;
  for (Subset s : family.members())
    for (Subset t : family.members())
      if (s.subset_of(t) && independent(t - s)) pairs.push_back({s, t});
  return ColoringProblem{std::move(ground), std::move(family), IntervalIdeal{std::move(pairs)}};
}

/// K2 as a coloring problem: every nested pair except (∅, {a,b}).
inline ColoringProblem edge_problem(std::string l0 = "a", std::string l1 = "b") {
  return independence_problem(g({std::move(l0), std::move(l1)}), {{0, 1}});
}

/// The 2-chain a<b: family {∅,{a},{a,b}}, every pair except (∅,{a,b}).
inline ColoringProblem chain_problem() {
  GroundSet ground = g({"a", "b"});
  SubsetFamily family{{Subset{0}, Subset{1}, Subset{3}}};
  std::vector<SubsetPair> pairs{{Subset{0}, Subset{0}}, {Subset{1}, Subset{1}},
                                {Subset{3}, Subset{3}}, {Subset{0}, Subset{1}},
                                {Subset{1}, Subset{3}}};
  return ColoringProblem{std::move(ground), std::move(family), IntervalIdeal{std::move(pairs)}};
}

/// The 11-member-family fixture with four maximal stable intervals
/// [∅,{a,d}], [{a},{a,b,d}], [{d},{a,c,d}], [{a,d},{a,b,c,d}].
inline ColoringProblem figure1_problem() {
  GroundSet ground = g({"a", "b", "c", "d"});
  auto S = [&](std::vector<std::string> names) { return ground.subset_of(names); };
  std::vector<Subset> members{
      S({}),          S({"a"}),           S({"d"}),           S({"a", "b"}),
      S({"a", "d"}),  S({"c", "d"}),      S({"a", "b", "c"}), S({"a", "b", "d"}),
      S({"a", "c", "d"}), S({"b", "c", "d"}), S({"a", "b", "c", "d"})};
  SubsetFamily family{std::move(members)};
  std::vector<SubsetPair> generators{
      {S({}), S({"a", "d"})},
      {S({"a"}), S({"a", "b", "d"})},
      {S({"d"}), S({"a", "c", "d"})},
      {S({"a", "d"}), S({"a", "b", "c", "d"})}};
  IntervalIdeal ideal = close_downward(family, generators);
  return ColoringProblem{std::move(ground), std::move(family), std::move(ideal)};
}

}  // namespace chroma::testfix
