#include "chroma/json_io.hpp"

namespace chroma {

namespace {

const Json& expect_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw schema_error(what + " must be an array");
  return j;
}

std::string expect_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw schema_error(what + " must be a string");
  return j.get<std::string>();
}

const Json& field(const Json& j, const std::string& key) {
  if (!j.is_object()) throw schema_error("expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw schema_error("missing field \"" + key + "\"");
  return *it;
}

GroundSet ground_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& e : expect_array(field(j, "elements"), "elements"))
    labels.push_back(expect_string(e, "element label"));
  return GroundSet{std::move(labels)};
}

std::vector<Subset> subsets_from_json(const Json& j, const GroundSet& g,
                                      const std::string& what) {
  std::vector<Subset> out;
  for (const auto& e : expect_array(j, what)) out.push_back(subset_from_json(e, g));
  return out;
}

}  // namespace

Json subset_to_json(Subset s, const GroundSet& g) {
  Json out = Json::array();
  for (int i : elements_of(s)) out.push_back(g.label(i));
  return out;
}

Subset subset_from_json(const Json& j, const GroundSet& g) {
  Subset s;
  for (const auto& e : expect_array(j, "subset")) {
    auto idx = g.index_of(expect_string(e, "element name"));
    if (!idx) throw schema_error("unknown element \"" + e.get<std::string>() + "\"");
    s = s | Subset::single(*idx);
  }
  return s;
}

Json to_json(const ColoringProblem& c) {
  Json family = Json::array();
  for (Subset s : c.family.members()) family.push_back(subset_to_json(s, c.ground));
  Json ideal = Json::array();
  for (auto [s, t] : c.ideal.pairs())
    ideal.push_back(Json::array({subset_to_json(s, c.ground), subset_to_json(t, c.ground)}));
  return Json{{"type", "coloring-problem"},
              {"elements", c.ground.labels()},
              {"family", std::move(family)},
              {"ideal", std::move(ideal)}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges)
    edges.push_back(Json::array({g.ground.label(i), g.ground.label(j)}));
  return Json{{"type", "graph"}, {"elements", g.ground.labels()}, {"edges", std::move(edges)}};
}

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (Subset e : h.edges) edges.push_back(subset_to_json(e, h.ground));
  return Json{{"type", "hypergraph"},
              {"elements", h.ground.labels()},
              {"edges", std::move(edges)}};
}

Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [i, j] : cover_pairs(p))
    covers.push_back(Json::array({p.ground.label(i), p.ground.label(j)}));
  return Json{
      {"type", "poset"}, {"elements", p.ground.labels()}, {"covers", std::move(covers)}};
}

Json to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Subset b : m.bases) bases.push_back(subset_to_json(b, m.ground));
  return Json{{"type", "matroid"}, {"elements", m.ground.labels()}, {"bases", std::move(bases)}};
}

Json to_json(const Antimatroid& a) {
  Json feasible = Json::array();
  for (Subset f : a.feasible.members()) feasible.push_back(subset_to_json(f, a.ground));
  return Json{{"type", "antimatroid"},
              {"elements", a.ground.labels()},
              {"feasible", std::move(feasible)}};
}

Json to_json(const HopfStructure& x) {
  return std::visit([](const auto& v) { return to_json(v); }, x);
}

ColoringProblem coloring_problem_from_json_raw(const Json& j) {
  GroundSet ground = ground_from_json(j);
  SubsetFamily family{subsets_from_json(field(j, "family"), ground, "family")};

  const Json& ideal_json = field(j, "ideal");
  IntervalIdeal ideal;
  if (ideal_json.is_object()) {
    std::vector<SubsetPair> generators;
    for (const auto& e : expect_array(field(ideal_json, "generators"), "generators")) {
      expect_array(e, "ideal generator");
      if (e.size() != 2) throw schema_error("ideal generator must be a [S, T] pair");
      generators.push_back(
          {subset_from_json(e[0], ground), subset_from_json(e[1], ground)});
    }
    ideal = close_downward(family, generators);
  } else {
    std::vector<SubsetPair> pairs;
    for (const auto& e : expect_array(ideal_json, "ideal")) {
      expect_array(e, "ideal pair");
      if (e.size() != 2) throw schema_error("ideal pair must be a [S, T] pair");
      pairs.push_back({subset_from_json(e[0], ground), subset_from_json(e[1], ground)});
    }
    ideal = IntervalIdeal{std::move(pairs)};
  }
  return ColoringProblem{std::move(ground), std::move(family), std::move(ideal)};
}

HopfStructure structure_from_json(const Json& j, ValidateOptions opts) {
  const std::string type = expect_string(field(j, "type"), "type");
  auto tag = species_tag_from_string(type);
  if (!tag) throw schema_error("unknown structure type \"" + type + "\"");

  GroundSet ground = ground_from_json(j);
  switch (*tag) {
    case SpeciesTag::coloring_problem: {
      ColoringProblem raw = coloring_problem_from_json_raw(j);
      return make_coloring_problem(std::move(raw.ground), std::move(raw.family),
                                   std::move(raw.ideal), opts);
    }
    case SpeciesTag::graph: {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : expect_array(field(j, "edges"), "edges")) {
        expect_array(e, "edge");
        if (e.size() != 2) throw schema_error("graph edge must have two endpoints");
        Subset s = subset_from_json(e, ground);
        auto elems = elements_of(s);
        if (elems.size() != 2)
          throw std::invalid_argument("graph edge endpoints must be distinct");
        edges.emplace_back(elems[0], elems[1]);
      }
      return make_graph(std::move(ground), std::move(edges));
    }
    case SpeciesTag::hypergraph:
      return make_hypergraph(ground, subsets_from_json(field(j, "edges"), ground, "edges"));
    case SpeciesTag::poset: {
      std::vector<std::pair<int, int>> covers;
      for (const auto& e : expect_array(field(j, "covers"), "covers")) {
        expect_array(e, "cover");
        if (e.size() != 2) throw schema_error("poset cover must be a [lower, upper] pair");
        auto lo = ground.index_of(expect_string(e[0], "element name"));
        auto hi = ground.index_of(expect_string(e[1], "element name"));
        if (!lo || !hi) throw schema_error("unknown element in cover relation");
        covers.emplace_back(*lo, *hi);
      }
      return make_poset(std::move(ground), covers);
    }
    case SpeciesTag::matroid:
      return make_matroid(ground, subsets_from_json(field(j, "bases"), ground, "bases"));
    case SpeciesTag::antimatroid:
      return make_antimatroid(
          ground, SubsetFamily{subsets_from_json(field(j, "feasible"), ground, "feasible")});
  }
  throw schema_error("unknown structure type");
}

std::string render(const HopfStructure& x) { return to_json(x).dump(2) + "\n"; }

HopfStructure parse_structure(const std::string& text, ValidateOptions opts) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw schema_error(std::string{"malformed JSON: "} + e.what());
  }
  return structure_from_json(j, opts);
}

}  // namespace chroma
