#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/qsym.hpp"

namespace chroma {

struct Graph {
  GroundSet ground;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, deduplicated

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct HypergraphOptions {
  bool allow_singleton_edges = false;
};

struct Hypergraph {
  GroundSet ground;
  std::vector<Subset> edges;  // sorted by mask, deduplicated

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Partial order stored as its full reflexive closure: below[i] is the mask
/// of elements j with j ≤ i (including i).
struct Poset {
  GroundSet ground;
  std::vector<std::uint64_t> below;

  friend bool operator==(const Poset&, const Poset&) = default;
};

struct Matroid {
  GroundSet ground;
  std::vector<Subset> bases;  // sorted, deduplicated, equicardinal

  friend bool operator==(const Matroid&, const Matroid&) = default;
};

/// Accessible, union-closed feasible family containing ∅ and N.
struct Antimatroid {
  GroundSet ground;
  SubsetFamily feasible;

  friend bool operator==(const Antimatroid&, const Antimatroid&) = default;
};

// Validating constructors; throw std::invalid_argument on axiom violations.
Graph make_graph(GroundSet ground, std::vector<std::pair<int, int>> edges);
Hypergraph make_hypergraph(GroundSet ground, std::vector<Subset> edges,
                           HypergraphOptions opts = {});
/// Builds the reflexive-transitive closure of the given ≤ statements and
/// verifies antisymmetry.
Poset make_poset(GroundSet ground, const std::vector<std::pair<int, int>>& leq);
Matroid make_matroid(GroundSet ground, std::vector<Subset> bases);
Antimatroid make_antimatroid(GroundSet ground, SubsetFamily feasible);

// Poset predicates.
bool is_order_ideal(const Poset& p, Subset s);
bool is_antichain(const Poset& p);
/// Covering pairs (transitive reduction) in index form.
std::vector<std::pair<int, int>> cover_pairs(const Poset& p);

// Matroid predicates.
bool is_independent(const Matroid& m, Subset s);
int rank_of(const Matroid& m, Subset s);
bool is_loop(const Matroid& m, int e);
bool is_coloop(const Matroid& m, int e);
/// The stable matroids: every element a loop or a coloop (equivalently,
/// exactly one basis).
bool is_loop_coloop_only(const Matroid& m);

// Per-variant Hopf operations. Graph/Hypergraph/Matroid minors are total;
// Poset/Antimatroid restriction and contraction are Zero off ideals/feasibles.
Graph product(const Graph& a, const Graph& b);
Hypergraph product(const Hypergraph& a, const Hypergraph& b);
Poset product(const Poset& a, const Poset& b);
Matroid product(const Matroid& a, const Matroid& b);
Antimatroid product(const Antimatroid& a, const Antimatroid& b);

Graph restrict_to(const Graph& g, Subset s);
Graph contract_by(const Graph& g, Subset s);
Hypergraph restrict_to(const Hypergraph& h, Subset s);
Hypergraph contract_by(const Hypergraph& h, Subset s);
Maybe<Poset> restrict_to(const Poset& p, Subset s);
Maybe<Poset> contract_by(const Poset& p, Subset s);
Matroid restrict_to(const Matroid& m, Subset s);
Matroid contract_by(const Matroid& m, Subset s);
Maybe<Antimatroid> restrict_to(const Antimatroid& a, Subset s);
Maybe<Antimatroid> contract_by(const Antimatroid& a, Subset s);

bool is_stable(const Graph& g);
bool is_stable(const Hypergraph& h);
bool is_stable(const Poset& p);
bool is_stable(const Matroid& m);
bool is_stable(const Antimatroid& a);

/// Tagged union with the uniform operation surface.
using HopfStructure =
    std::variant<Graph, Hypergraph, Poset, Matroid, Antimatroid, ColoringProblem>;

enum class SpeciesTag { graph, hypergraph, poset, matroid, antimatroid, coloring_problem };

SpeciesTag tag_of(const HopfStructure& x);
std::string to_string(SpeciesTag tag);
std::optional<SpeciesTag> species_tag_from_string(const std::string& name);

const GroundSet& ground_of(const HopfStructure& x);
/// The unit structure (empty ground set) of the given variant.
HopfStructure species_empty(SpeciesTag tag);

/// Throws std::invalid_argument on mixed variants or shared labels.
HopfStructure species_product(const HopfStructure& x, const HopfStructure& y);
Maybe<HopfStructure> species_restrict(const HopfStructure& x, Subset s);
Maybe<HopfStructure> species_contract(const HopfStructure& x, Subset s);
bool species_is_stable(const HopfStructure& x);

/// Rename labels elementwise (positions untouched).
HopfStructure species_relabel(const HopfStructure& x,
                              const std::map<std::string, std::string>& sigma);
/// Permute label positions to the given order, remapping indices and masks.
HopfStructure species_reindex(const HopfStructure& x,
                              const std::vector<std::string>& new_label_order);

/// The terminal morphism: family = subsets with non-Zero restriction,
/// ideal = nested pairs whose minor is stable.
ColoringProblem phi(const HopfStructure& x);

/// The coloring enumerator Σ_α c_α M_α, c_α = number of stable flags of
/// type α; agrees with chromatic_qsym(phi(x)).
QSymPoly psi(const HopfStructure& x);

/// The antimatroid of all order ideals of p.
Antimatroid poset_to_antimatroid(const Poset& p);

}  // namespace chroma
