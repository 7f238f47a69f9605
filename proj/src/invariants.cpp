#include "chroma/invariants.hpp"

#include <algorithm>

namespace chroma {

Composition StableFlag::type() const {
  Composition out;
  for (std::size_t i = 1; i < chain.size(); ++i)
    out.push_back((chain[i] - chain[i - 1]).count());
  return out;
}

bool is_proper_coloring(const ColoringProblem& c, const Coloring& f) {
  const int n = c.ground.size();
  if (static_cast<int>(f.colors.size()) != n)
    throw std::invalid_argument("coloring is not total on the ground set");
  int max_color = 0;
  for (int col : f.colors) {
    if (col < 1) throw std::invalid_argument("colors must be positive");
    max_color = std::max(max_color, col);
  }
  // The cumulative preimages form a multichain; equal consecutive steps only
  // need reflexive pairs, which hold for every family member, so it suffices
  // to check the strict steps.
  Subset cur;
  for (int level = 1; level <= max_color; ++level) {
    Subset next = cur;
    for (int i = 0; i < n; ++i)
      if (f.colors[static_cast<std::size_t>(i)] == level) next = next | Subset::single(i);
    if (next != cur) {
      if (!c.ideal.contains(cur, next)) return false;
      cur = next;
    }
  }
  return cur == c.ground.full() || (n == 0);
}

long long count_colorings(const ColoringProblem& c, int k) {
  if (k < 0) throw std::invalid_argument("negative color count");
  const int n = c.ground.size();
  double total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  if (total > 1e8) throw guard_error("k^n exceeds the oracle guard of 10^8");
  if (n == 0) return 1;
  if (k == 0) return 0;

  long long count = 0;
  Coloring f{std::vector<int>(static_cast<std::size_t>(n), 1)};
  while (true) {
    if (is_proper_coloring(c, f)) ++count;
    int pos = 0;
    while (pos < n && f.colors[static_cast<std::size_t>(pos)] == k) {
      f.colors[static_cast<std::size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == n) break;
    ++f.colors[static_cast<std::size_t>(pos)];
  }
  return count;
}

namespace {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw guard_error("walk count overflow");
  return out;
}

}  // namespace

UniPoly chromatic_polynomial(const ColoringProblem& c) {
  const auto& fam = c.family.members();
  if (fam.size() > 4096) throw guard_error("family larger than 4096 members");
  const std::size_t m = fam.size();

  // Dense adjacency of the ideal over the family (index order = mask order).
  std::vector<std::vector<long long>> adj(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (c.ideal.contains(fam[i], fam[j])) adj[i][j] = 1;

  const std::size_t src = 0;            // ∅ is the smallest mask
  const std::size_t dst = m - 1;        // N is the largest
  std::vector<long long> walks(m, 0);
  walks[src] = 1;

  std::vector<std::pair<long long, long long>> points;
  points.emplace_back(0, walks[dst]);
  for (int k = 1; k <= c.ground.size(); ++k) {
    std::vector<long long> next(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (walks[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (adj[i][j]) next[j] = checked_add(next[j], walks[i]);
    }
    walks = std::move(next);
    points.emplace_back(k, walks[dst]);
  }
  return lagrange_interpolate(points);
}

void for_each_stable_flag(const ColoringProblem& c,
                          const std::function<void(const StableFlag&)>& fn) {
  const Subset full = c.ground.full();
  std::vector<Subset> chain{Subset{}};
  auto dfs = [&](auto&& self) -> void {
    Subset cur = chain.back();
    if (cur == full) {
      fn(StableFlag{chain});
      return;
    }
    for (Subset next : c.family.members()) {
      if (next == cur || !cur.subset_of(next)) continue;
      if (!c.ideal.contains(cur, next)) continue;
      chain.push_back(next);
      self(self);
      chain.pop_back();
    }
  };
  dfs(dfs);
}

std::vector<StableFlag> enumerate_stable_flags(const ColoringProblem& c) {
  std::vector<StableFlag> out;
  for_each_stable_flag(c, [&](const StableFlag& f) { out.push_back(f); });
  return out;
}

QSymPoly chromatic_qsym(const ColoringProblem& c) {
  QSymPoly::TermMap acc;
  for_each_stable_flag(c, [&](const StableFlag& f) { ++acc[f.type()]; });
  return QSymPoly{std::move(acc)};
}

}  // namespace chroma
