#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chroma/generate.hpp"

namespace chroma {

struct LawFailure {
  std::string law;
  std::string counterexample;  // JSON
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  std::vector<LawFailure> failures;  // recording capped at 100 entries
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

std::string to_string(const SuiteReport& r);

/// The Hopf operation surface the axiom suite exercises. Swappable so the
/// harness itself can be checked against deliberately broken operations.
struct HopfOps {
  std::function<HopfStructure(const HopfStructure&, const HopfStructure&)> product;
  std::function<Maybe<HopfStructure>(const HopfStructure&, Subset)> restrict_op;
  std::function<Maybe<HopfStructure>(const HopfStructure&, Subset)> contract_op;
  std::function<bool(const HopfStructure&)> stable;

  static HopfOps standard();
};

/// Runs the bimonoid/comonoid/stability laws on seeded random instances of
/// one species variant: naturality, associativity, unitality,
/// counitality, zero conditions, coassociativity, bimonoid compatibility,
/// the combinatorial-comonoid condition, and stability closure.
SuiteReport run_axiom_suite(SpeciesTag tag, int trials, const GenConfig& cfg,
                            const HopfOps& ops = HopfOps::standard());

/// Runs the cross-module identities: oracle agreement, specialization,
/// flag bijection, multiplicativity, the binomial identity, the Hilbert and
/// Ehrhart identities, the terminal-morphism laws, Ψ-preservation, and
/// φ-idempotence on coloring problems.
SuiteReport run_theorem_suite(int trials, const GenConfig& cfg);

}  // namespace chroma
