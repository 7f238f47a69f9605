#include "chroma/geometry.hpp"

#include <algorithm>

namespace chroma {

namespace {

std::vector<Subset> augment(const std::vector<Subset>& chain, Subset full) {
  std::vector<Subset> out{Subset{}};
  for (Subset s : chain)
    if (s != out.back()) out.push_back(s);
  if (out.back() != full) out.push_back(full);
  return out;
}

}  // namespace

void for_each_relative_face(const ColoringProblem& c,
                            const std::function<void(const RelativeFace&)>& fn) {
  const Subset full = c.ground.full();
  const auto& fam = c.family.members();
  std::vector<Subset> chain;

  auto emit = [&]() {
    const Subset last = chain.empty() ? Subset{} : chain.back();
    if (last == full || c.ideal.contains(last, full))
      fn(RelativeFace{chain, augment(chain, full)});
  };

  auto dfs = [&](auto&& self, std::size_t from) -> void {
    emit();
    for (std::size_t i = from; i < fam.size(); ++i) {
      const Subset prev = chain.empty() ? Subset{} : chain.back();
      const Subset s = fam[i];
      // Internal augmented pairs must already be in the ideal; the closing
      // pair against N is checked at emission.
      const bool ok = (s == prev && chain.empty()) ||
                      (prev != s && prev.subset_of(s) && c.ideal.contains(prev, s));
      if (!ok) continue;
      chain.push_back(s);
      self(self, i + 1);
      chain.pop_back();
    }
  };
  dfs(dfs, 0);
}

std::vector<RelativeFace> relative_faces(const ColoringProblem& c) {
  std::vector<RelativeFace> out;
  for_each_relative_face(c, [&](const RelativeFace& f) { out.push_back(f); });
  return out;
}

long long hilbert_function(const ColoringProblem& c, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > 12) throw guard_error("hilbert degree exceeds guard 12");
  long long total = 0;
  for_each_relative_face(c, [&](const RelativeFace& f) {
    const auto k = static_cast<long long>(f.chain.size());
    if (n == 0) {
      if (k == 0) ++total;
    } else {
      total += binomial(n - 1, k - 1);
    }
  });
  return total;
}

QSymPoly ehrhart_qsym(const ColoringProblem& c) {
  const Subset full = c.ground.full();
  QSymPoly::TermMap acc;
  for_each_relative_face(c, [&](const RelativeFace& f) {
    if (f.chain.empty() || f.chain.front() != Subset{} || f.chain.back() != full) return;
    Composition type;
    for (std::size_t i = 1; i < f.chain.size(); ++i)
      type.push_back((f.chain[i] - f.chain[i - 1]).count());
    ++acc[type];
  });
  return QSymPoly{std::move(acc)};
}

std::vector<Subset> flag_of_point(const LatticePoint& pt, const GroundSet& ground) {
  const int n = ground.size();
  if (static_cast<int>(pt.coords.size()) != n)
    throw std::invalid_argument("lattice point is not total on the ground set");
  int max_coord = 0;
  for (int v : pt.coords) {
    if (v < 1) throw std::invalid_argument("lattice point coordinates must be positive");
    max_coord = std::max(max_coord, v);
  }
  std::vector<Subset> out;
  Subset cur;
  for (int level = 1; level <= max_coord; ++level) {
    for (int i = 0; i < n; ++i)
      if (pt.coords[static_cast<std::size_t>(i)] == level) cur = cur | Subset::single(i);
    if (!cur.empty() && (out.empty() || out.back() != cur)) out.push_back(cur);
  }
  return out;
}

long long count_lattice_points(const ColoringProblem& c, int box) {
  if (box < 1) throw std::invalid_argument("box must be positive");
  const int n = c.ground.size();
  double total = 1;
  for (int i = 0; i < n; ++i) total *= box;
  if (total > 1e8) throw guard_error("box^n exceeds the guard of 10^8");

  const Subset full = c.ground.full();
  auto counted = [&](const LatticePoint& pt) {
    const auto aug = augment(flag_of_point(pt, c.ground), full);
    for (std::size_t i = 1; i < aug.size(); ++i)
      if (!c.ideal.contains(aug[i - 1], aug[i])) return false;
    return true;
  };

  if (n == 0) return counted(LatticePoint{{}}) ? 1 : 0;

  long long count = 0;
  LatticePoint pt{std::vector<int>(static_cast<std::size_t>(n), 1)};
  while (true) {
    if (counted(pt)) ++count;
    int pos = 0;
    while (pos < n && pt.coords[static_cast<std::size_t>(pos)] == box) {
      pt.coords[static_cast<std::size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == n) break;
    ++pt.coords[static_cast<std::size_t>(pos)];
  }
  return count;
}

}  // namespace chroma
