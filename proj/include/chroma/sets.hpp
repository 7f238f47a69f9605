#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace chroma {

/// Thrown when an instance exceeds the desk-scale enumeration guards.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pointed-set values: nullopt plays the role of the base point 0.
template <class X>
using Maybe = std::optional<X>;

/// Subset of a ground set, one bit per element index.
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t b) : bits(b) {}

  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }

  static constexpr Subset single(int i) { return Subset{std::uint64_t{1} << i}; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits != b.bits; }
  friend constexpr bool operator<(Subset a, Subset b) { return a.bits < b.bits; }
};

std::vector<int> elements_of(Subset s);

/// Pack the bits of x (x must be a subset of `within`) into low positions,
/// one per set bit of `within` in ascending order.
Subset compress(Subset x, Subset within);

/// Inverse of compress: scatter low bits of x onto the set bits of `within`.
Subset expand(Subset x, Subset within);

/// Ordered list of distinct element names; position = element index.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(const std::string& name) const;

  Subset full() const {
    return size() == 64 ? Subset{~std::uint64_t{0}}
                        : Subset{(std::uint64_t{1} << size()) - 1};
  }
  bool fits(Subset s) const { return s.subset_of(full()); }

  /// Subset from element names; throws std::invalid_argument on unknown names.
  Subset subset_of(const std::vector<std::string>& names) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Ground set induced by a subset: labels of s in index order.
GroundSet sub_ground(const GroundSet& g, Subset s);

std::string to_string(Subset s, const GroundSet& g);

/// Deduplicated collection of subsets, sorted ascending by mask.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  explicit SubsetFamily(std::vector<Subset> members);

  bool contains(Subset s) const;
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  std::vector<Subset> members_;
};

/// Nested pair of subsets: lower ⊆ upper.
struct SubsetPair {
  Subset lower;
  Subset upper;

  friend constexpr bool operator==(SubsetPair a, SubsetPair b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
  friend constexpr bool operator<(SubsetPair a, SubsetPair b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  }
};

struct SubsetPairHash {
  std::size_t operator()(SubsetPair p) const {
    std::uint64_t h = p.lower.bits * 0x9e3779b97f4a7c15ull;
    h ^= p.upper.bits + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Set of nested subset pairs with O(1) expected membership.
/// Stored canonically sorted; equality compares the sorted pair lists.
class IntervalIdeal {
 public:
  IntervalIdeal() = default;
  explicit IntervalIdeal(std::vector<SubsetPair> pairs);

  bool contains(Subset lower, Subset upper) const {
    return index_.count(SubsetPair{lower, upper}) != 0;
  }
  const std::vector<SubsetPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  friend bool operator==(const IntervalIdeal& a, const IntervalIdeal& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<SubsetPair> pairs_;
  std::unordered_set<SubsetPair, SubsetPairHash> index_;
};

}  // namespace chroma
