#pragma once

#include <functional>

#include "chroma/coloring.hpp"
#include "chroma/qsym.hpp"

namespace chroma {

/// Total assignment of positive colors, indexed by element position.
struct Coloring {
  std::vector<int> colors;
};

/// Strict chain ∅ = S₀ ⊂ … ⊂ S_k = N through the family with every
/// consecutive pair in the ideal; type = composition of step sizes.
struct StableFlag {
  std::vector<Subset> chain;

  Composition type() const;

  friend bool operator==(const StableFlag&, const StableFlag&) = default;
};

/// True iff every consecutive pair of cumulative color-class preimages
/// f⁻¹({1..i}) lies in the ideal.
bool is_proper_coloring(const ColoringProblem& c, const Coloring& f);

/// Brute-force oracle: number of proper colorings N → {1..k}.
/// Guarded at k^|N| ≤ 10^8.
long long count_colorings(const ColoringProblem& c, int k);

/// Fast path: walk counts ∅ → N of length k in the ideal's adjacency
/// digraph over the family, interpolated at k = 0..|N|.
UniPoly chromatic_polynomial(const ColoringProblem& c);

/// Σ_α (#stable flags of type α)·M_α.
QSymPoly chromatic_qsym(const ColoringProblem& c);

/// Depth-first enumeration from ∅ following ideal edges, family members
/// visited in ascending mask order.
void for_each_stable_flag(const ColoringProblem& c,
                          const std::function<void(const StableFlag&)>& fn);

std::vector<StableFlag> enumerate_stable_flags(const ColoringProblem& c);

}  // namespace chroma
