#pragma once

#include <map>
#include <string>
#include <vector>

#include "chroma/sets.hpp"

namespace chroma {

/// A coloring problem: a family p of subsets of the ground set containing
/// ∅ and N, together with a downward-closed set I of nested pairs of family
/// members that includes every reflexive pair (S,S), S ∈ p.
struct ColoringProblem {
  GroundSet ground;
  SubsetFamily family;
  IntervalIdeal ideal;

  friend bool operator==(const ColoringProblem&, const ColoringProblem&) = default;
};

struct ValidateOptions {
  /// Full order-ideal closure enumeration instead of the cover-based check.
  bool paranoid = false;
};

/// Every violated invariant, with the witnessing subset or pair rendered in.
/// Empty result = valid.
std::vector<std::string> validate(const ColoringProblem& cp, ValidateOptions opts = {});

/// Validating constructor; throws std::invalid_argument listing all violations.
ColoringProblem make_coloring_problem(GroundSet ground, SubsetFamily family,
                                      IntervalIdeal ideal, ValidateOptions opts = {});

/// All nested pairs (S,T), S ⊆ T, with both endpoints in the family.
IntervalIdeal full_interval_set(const SubsetFamily& family);

/// Downward closure of the generator pairs within the family, plus all
/// reflexive pairs. Generators with endpoints outside the family are rejected.
IntervalIdeal close_downward(const SubsetFamily& family,
                             const std::vector<SubsetPair>& generators);

/// Disjoint union: ground = labels of c then labels of d.
ColoringProblem product(const ColoringProblem& c, const ColoringProblem& d);

/// Zero iff S is not in the family; otherwise the part of c below S,
/// re-expressed on ground set S.
Maybe<ColoringProblem> restrict_to(const ColoringProblem& c, Subset s);

/// Zero iff S is not in the family; otherwise the part of c above S,
/// re-expressed on ground set N∖S.
Maybe<ColoringProblem> contract_by(const ColoringProblem& c, Subset s);

/// True iff the ideal is the full interval set of the family.
bool is_stable(const ColoringProblem& c);

/// Rename labels elementwise via a bijection onto fresh labels. Positions and
/// masks are untouched; relabel(relabel(c, σ), σ⁻¹) == c.
ColoringProblem relabel(const ColoringProblem& c,
                        const std::map<std::string, std::string>& sigma);

/// Re-express c with its labels in the given order (a permutation of the
/// current label set); masks are remapped accordingly.
ColoringProblem reindex(const ColoringProblem& c,
                        const std::vector<std::string>& new_label_order);

/// The unit: the problem ({∅}, {(∅,∅)}) on the empty ground set.
ColoringProblem unit_problem();

/// The stable problem (2^N, Int(2^N)) on the given ground set.
ColoringProblem boolean_problem(GroundSet ground);

}  // namespace chroma
