#pragma once

#include <string>

#include "json.hpp"

#include "chroma/species.hpp"

namespace chroma {

using Json = nlohmann::json;

/// Malformed document or schema mismatch, as opposed to an axiom violation.
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json subset_to_json(Subset s, const GroundSet& g);
Subset subset_from_json(const Json& j, const GroundSet& g);

Json to_json(const ColoringProblem& c);
Json to_json(const Graph& g);
Json to_json(const Hypergraph& h);
Json to_json(const Poset& p);
Json to_json(const Matroid& m);
Json to_json(const Antimatroid& a);
Json to_json(const HopfStructure& x);

/// Parses a coloring problem without checking its invariants (the `check`
/// subcommand validates separately to report every violation).
ColoringProblem coloring_problem_from_json_raw(const Json& j);

/// Parses and validates any structure; throws schema_error on malformed
/// documents and std::invalid_argument on axiom violations.
HopfStructure structure_from_json(const Json& j, ValidateOptions opts = {});

std::string render(const HopfStructure& x);
HopfStructure parse_structure(const std::string& text, ValidateOptions opts = {});

}  // namespace chroma
