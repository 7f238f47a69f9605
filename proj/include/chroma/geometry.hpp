#pragma once

#include <functional>

#include "chroma/coloring.hpp"
#include "chroma/qsym.hpp"

namespace chroma {

/// A surviving face of the relative order complex: a strictly increasing
/// chain of family members (possibly empty, possibly containing ∅ or N)
/// whose augmented chain — ∅ prepended, N appended, duplicates collapsed —
/// has every consecutive pair in the ideal.
struct RelativeFace {
  std::vector<Subset> chain;
  std::vector<Subset> augmented;

  friend bool operator==(const RelativeFace&, const RelativeFace&) = default;
};

/// A point of the positive orthant: one positive coordinate per element.
struct LatticePoint {
  std::vector<int> coords;
};

void for_each_relative_face(const ColoringProblem& c,
                            const std::function<void(const RelativeFace&)>& fn);

std::vector<RelativeFace> relative_faces(const ColoringProblem& c);

/// Number of degree-n monomials supported on surviving chains. Guarded at
/// n ≤ 12. Equals chromatic_polynomial(c)(n+1).
long long hilbert_function(const ColoringProblem& c, int n);

/// Σ M_{type} over the surviving faces whose chain runs from ∅ to N (one per
/// distinct augmented flag). Equals chromatic_qsym(c).
QSymPoly ehrhart_qsym(const ColoringProblem& c);

/// Distinct nonempty cumulative level sets of the point, ending at N.
std::vector<Subset> flag_of_point(const LatticePoint& pt, const GroundSet& ground);

/// Number of points with coordinates in [1..box] whose flag augments into the
/// ideal. Guarded at box^|N| ≤ 10^8. Equals count_colorings(c, box).
long long count_lattice_points(const ColoringProblem& c, int box);

}  // namespace chroma
