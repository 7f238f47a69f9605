#pragma once

#include <cstdint>

#include "chroma/species.hpp"

namespace chroma {

/// Deterministic instance-generation knobs. Same (seed, knobs) → same output.
struct GenConfig {
  std::uint64_t seed = 1;
  int ground_size = 3;             // 1..5
  double edge_probability = 0.5;   // graphs, hypergraphs
  double relation_probability = 0.4;
  double family_density = 0.5;     // coloring problems, antimatroid seeds
  double pair_density = 0.4;       // ideal generator sampling
  int basis_count = 0;             // matroids; 0 = any catalog entry
};

/// Throws std::invalid_argument on out-of-range knobs.
void validate_gen_config(const GenConfig& cfg);

/// splitmix64; fully deterministic across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  bool chance(double p);

 private:
  std::uint64_t state_;
};

/// Ground set labeled a, b, c, ... (offset shifts the starting letter).
GroundSet default_ground(int n, int offset = 0);

ColoringProblem gen_coloring_problem_on(GroundSet g, Rng& rng, const GenConfig& cfg);
Graph gen_graph_on(GroundSet g, Rng& rng, const GenConfig& cfg);
Hypergraph gen_hypergraph_on(GroundSet g, Rng& rng, const GenConfig& cfg);
Poset gen_poset_on(GroundSet g, Rng& rng, const GenConfig& cfg);
Matroid gen_matroid_on(GroundSet g, Rng& rng, const GenConfig& cfg);
Antimatroid gen_antimatroid_on(GroundSet g, Rng& rng, const GenConfig& cfg);
HopfStructure gen_structure_on(SpeciesTag tag, GroundSet g, Rng& rng,
                               const GenConfig& cfg);

ColoringProblem gen_coloring_problem(const GenConfig& cfg);
Graph gen_graph(const GenConfig& cfg);
Hypergraph gen_hypergraph(const GenConfig& cfg);
Poset gen_poset(const GenConfig& cfg);
Matroid gen_matroid(const GenConfig& cfg);
Antimatroid gen_antimatroid(const GenConfig& cfg);
HopfStructure gen_structure(SpeciesTag tag, const GenConfig& cfg);

/// Every basis family on n ≤ 5 elements satisfying the exchange axiom,
/// computed once by brute-force filtering and cached.
const std::vector<std::vector<Subset>>& matroid_basis_catalog(int n);

}  // namespace chroma
