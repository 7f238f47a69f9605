#include "chroma/coloring.hpp"

#include <algorithm>

namespace chroma {

namespace {

std::string pair_str(SubsetPair p, const GroundSet& g) {
  return "[" + to_string(p.lower, g) + "," + to_string(p.upper, g) + "]";
}

void check_closure_covers(const ColoringProblem& cp, std::vector<std::string>& out) {
  for (auto [s, t] : cp.ideal.pairs()) {
    for (int x : elements_of(t - s)) {
      Subset grown = s | Subset::single(x);
      if (cp.family.contains(grown) && !cp.ideal.contains(grown, t))
        out.push_back("order-ideal closure: " + pair_str({s, t}, cp.ground) +
                      " present but " + pair_str({grown, t}, cp.ground) + " missing");
      Subset shrunk = t - Subset::single(x);
      if (shrunk.subset_of(s)) continue;
      if (cp.family.contains(shrunk) && !cp.ideal.contains(s, shrunk))
        out.push_back("order-ideal closure: " + pair_str({s, t}, cp.ground) +
                      " present but " + pair_str({s, shrunk}, cp.ground) + " missing");
    }
  }
}

void check_closure_full(const ColoringProblem& cp, std::vector<std::string>& out) {
  for (auto [s, t] : cp.ideal.pairs()) {
    for (Subset mid : cp.family.members()) {
      if (!s.subset_of(mid) || !mid.subset_of(t)) continue;
      for (Subset top : cp.family.members()) {
        if (!mid.subset_of(top) || !top.subset_of(t)) continue;
        if (!cp.ideal.contains(mid, top))
          out.push_back("order-ideal closure: " + pair_str({s, t}, cp.ground) +
                        " present but " + pair_str({mid, top}, cp.ground) + " missing");
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate(const ColoringProblem& cp, ValidateOptions opts) {
  std::vector<std::string> out;
  const Subset full = cp.ground.full();

  for (Subset s : cp.family.members())
    if (!cp.ground.fits(s))
      out.push_back("family member does not fit the ground set (mask " +
                    std::to_string(s.bits) + ")");
  if (!cp.family.contains(Subset{}))
    out.push_back("family does not contain the empty set");
  if (!cp.family.contains(full))
    out.push_back("family does not contain the full ground set " + to_string(full, cp.ground));

  for (auto [s, t] : cp.ideal.pairs()) {
    if (!s.subset_of(t))
      out.push_back("ideal pair not nested: " + pair_str({s, t}, cp.ground));
    if (!cp.family.contains(s))
      out.push_back("ideal pair endpoint outside family: " + to_string(s, cp.ground) +
                    " in " + pair_str({s, t}, cp.ground));
    if (!cp.family.contains(t))
      out.push_back("ideal pair endpoint outside family: " + to_string(t, cp.ground) +
                    " in " + pair_str({s, t}, cp.ground));
  }

  for (Subset s : cp.family.members())
    if (!cp.ideal.contains(s, s))
      out.push_back("missing reflexive pair " + pair_str({s, s}, cp.ground));

  if (out.empty()) {
    if (opts.paranoid)
      check_closure_full(cp, out);
    else
      check_closure_covers(cp, out);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColoringProblem make_coloring_problem(GroundSet ground, SubsetFamily family,
                                      IntervalIdeal ideal, ValidateOptions opts) {
  ColoringProblem cp{std::move(ground), std::move(family), std::move(ideal)};
  auto violations = validate(cp, opts);
  if (!violations.empty()) {
    std::string msg = "invalid coloring problem:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
  return cp;
}

IntervalIdeal full_interval_set(const SubsetFamily& family) {
  std::vector<SubsetPair> pairs;
  for (Subset s : family.members())
    for (Subset t : family.members())
      if (s.subset_of(t)) pairs.push_back({s, t});
  return IntervalIdeal{std::move(pairs)};
}

IntervalIdeal close_downward(const SubsetFamily& family,
                             const std::vector<SubsetPair>& generators) {
  std::vector<SubsetPair> pairs;
  for (Subset s : family.members()) pairs.push_back({s, s});
  for (auto [lo, hi] : generators) {
    if (!lo.subset_of(hi)) throw std::invalid_argument("generator pair not nested");
    if (!family.contains(lo) || !family.contains(hi))
      throw std::invalid_argument("generator pair endpoint outside family");
    for (Subset s : family.members()) {
      if (!lo.subset_of(s) || !s.subset_of(hi)) continue;
      for (Subset t : family.members())
        if (s.subset_of(t) && t.subset_of(hi)) pairs.push_back({s, t});
    }
  }
  return IntervalIdeal{std::move(pairs)};
}

ColoringProblem product(const ColoringProblem& c, const ColoringProblem& d) {
  std::vector<std::string> labels = c.ground.labels();
  for (const auto& l : d.ground.labels()) {
    if (c.ground.index_of(l))
      throw std::invalid_argument("non-disjoint ground sets: shared label " + l);
    labels.push_back(l);
  }
  GroundSet ground{std::move(labels)};
  const int shift = c.ground.size();

  std::vector<Subset> members;
  for (Subset x : c.family.members())
    for (Subset y : d.family.members())
      members.push_back(Subset{x.bits | (y.bits << shift)});

  std::vector<SubsetPair> pairs;
  for (auto [x, x2] : c.ideal.pairs())
    for (auto [y, y2] : d.ideal.pairs())
      pairs.push_back({Subset{x.bits | (y.bits << shift)},
                       Subset{x2.bits | (y2.bits << shift)}});

  return ColoringProblem{std::move(ground), SubsetFamily{std::move(members)},
                         IntervalIdeal{std::move(pairs)}};
}

Maybe<ColoringProblem> restrict_to(const ColoringProblem& c, Subset s) {
  if (!c.family.contains(s)) return std::nullopt;

  std::vector<Subset> members;
  for (Subset t : c.family.members())
    if (t.subset_of(s)) members.push_back(compress(t, s));

  std::vector<SubsetPair> pairs;
  for (auto [x, y] : c.ideal.pairs())
    if (y.subset_of(s)) pairs.push_back({compress(x, s), compress(y, s)});

  return ColoringProblem{sub_ground(c.ground, s), SubsetFamily{std::move(members)},
                         IntervalIdeal{std::move(pairs)}};
}

Maybe<ColoringProblem> contract_by(const ColoringProblem& c, Subset s) {
  if (!c.family.contains(s)) return std::nullopt;
  const Subset rest = c.ground.full() - s;

  std::vector<Subset> members;
  for (Subset t : c.family.members())
    if (s.subset_of(t)) members.push_back(compress(t - s, rest));

  std::vector<SubsetPair> pairs;
  for (auto [x, y] : c.ideal.pairs())
    if (s.subset_of(x) && s.subset_of(y))
      pairs.push_back({compress(x - s, rest), compress(y - s, rest)});

  return ColoringProblem{sub_ground(c.ground, rest), SubsetFamily{std::move(members)},
                         IntervalIdeal{std::move(pairs)}};
}

bool is_stable(const ColoringProblem& c) {
  std::size_t nested = 0;
  for (Subset s : c.family.members())
    for (Subset t : c.family.members())
      if (s.subset_of(t)) ++nested;
  return c.ideal.size() == nested;
}

ColoringProblem relabel(const ColoringProblem& c,
                        const std::map<std::string, std::string>& sigma) {
  std::vector<std::string> labels;
  labels.reserve(c.ground.labels().size());
  for (const auto& l : c.ground.labels()) {
    auto it = sigma.find(l);
    if (it == sigma.end()) throw std::invalid_argument("relabel map missing label " + l);
    labels.push_back(it->second);
  }
  if (sigma.size() != labels.size())
    throw std::invalid_argument("relabel map has extra entries");
  return ColoringProblem{GroundSet{std::move(labels)}, c.family, c.ideal};
}

ColoringProblem reindex(const ColoringProblem& c,
                        const std::vector<std::string>& new_label_order) {
  GroundSet ground{new_label_order};
  if (ground.size() != c.ground.size())
    throw std::invalid_argument("reindex order has wrong size");
  // perm[old index] = new index
  std::vector<int> perm(static_cast<std::size_t>(c.ground.size()));
  for (int i = 0; i < c.ground.size(); ++i) {
    auto j = ground.index_of(c.ground.label(i));
    if (!j) throw std::invalid_argument("reindex order is not a permutation of the labels");
    perm[static_cast<std::size_t>(i)] = *j;
  }
  auto remap = [&](Subset s) {
    Subset out;
    for (int i : elements_of(s)) out = out | Subset::single(perm[static_cast<std::size_t>(i)]);
    return out;
  };
  std::vector<Subset> members;
  for (Subset s : c.family.members()) members.push_back(remap(s));
  std::vector<SubsetPair> pairs;
  for (auto [s, t] : c.ideal.pairs()) pairs.push_back({remap(s), remap(t)});
  return ColoringProblem{std::move(ground), SubsetFamily{std::move(members)},
                         IntervalIdeal{std::move(pairs)}};
}

ColoringProblem unit_problem() {
  return ColoringProblem{GroundSet{{}}, SubsetFamily{{Subset{}}},
                         IntervalIdeal{{SubsetPair{Subset{}, Subset{}}}}};
}

ColoringProblem boolean_problem(GroundSet ground) {
  if (ground.size() > 20) throw guard_error("boolean problem ground too large");
  std::vector<Subset> members;
  for (std::uint64_t m = 0; m <= ground.full().bits; ++m) members.push_back(Subset{m});
  SubsetFamily family{std::move(members)};
  IntervalIdeal ideal = full_interval_set(family);
  return ColoringProblem{std::move(ground), std::move(family), std::move(ideal)};
}

}  // namespace chroma
