#include "chroma/sets.hpp"

#include <algorithm>
#include <unordered_map>

namespace chroma {

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  std::uint64_t b = s.bits;
  while (b) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

Subset compress(Subset x, Subset within) {
  std::uint64_t out = 0;
  int rank = 0;
  std::uint64_t w = within.bits;
  while (w) {
    int i = std::countr_zero(w);
    if (x.contains(i)) out |= std::uint64_t{1} << rank;
    ++rank;
    w &= w - 1;
  }
  return Subset{out};
}

Subset expand(Subset x, Subset within) {
  std::uint64_t out = 0;
  int rank = 0;
  std::uint64_t w = within.bits;
  while (w) {
    int i = std::countr_zero(w);
    if (x.contains(rank)) out |= std::uint64_t{1} << i;
    ++rank;
    w &= w - 1;
  }
  return Subset{out};
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 64) throw std::invalid_argument("ground set larger than 64 elements");
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!seen.emplace(labels_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate element label: " + labels_[i]);
  }
}

std::optional<int> GroundSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Subset GroundSet::subset_of(const std::vector<std::string>& names) const {
  Subset s;
  for (const auto& n : names) {
    auto i = index_of(n);
    if (!i) throw std::invalid_argument("unknown element label: " + n);
    s = s | Subset::single(*i);
  }
  return s;
}

GroundSet sub_ground(const GroundSet& g, Subset s) {
  std::vector<std::string> labels;
  for (int i : elements_of(s)) labels.push_back(g.label(i));
  return GroundSet{std::move(labels)};
}

std::string to_string(Subset s, const GroundSet& g) {
  std::string out = "{";
  bool first = true;
  for (int i : elements_of(s)) {
    if (!first) out += ",";
    out += g.label(i);
    first = false;
  }
  out += "}";
  return out;
}

SubsetFamily::SubsetFamily(std::vector<Subset> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubsetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

IntervalIdeal::IntervalIdeal(std::vector<SubsetPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  index_.reserve(pairs_.size() * 2);
  for (auto p : pairs_) index_.insert(p);
}

}  // namespace chroma
