#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "chroma/generate.hpp"
#include "chroma/qsym.hpp"

using namespace chroma;

namespace {

// Brute-force oracle: expand q over variables x_1..x_nvars as an exponent-map
// polynomial. Quasi-shuffle correctness reduces to ordinary polynomial
// multiplication of these expansions.
using Expansion = std::map<std::vector<int>, long long>;

Expansion expand(const QSymPoly& q, int nvars) {
  Expansion out;
  for (const auto& [alpha, c] : q.terms()) {
    const int len = static_cast<int>(alpha.size());
    std::vector<int> idx(static_cast<std::size_t>(len));
    auto rec = [&](auto&& self, int pos, int lo) -> void {
      if (pos == len) {
        std::vector<int> expo(static_cast<std::size_t>(nvars), 0);
        for (int i = 0; i < len; ++i)
          expo[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] =
              alpha[static_cast<std::size_t>(i)];
        out[expo] += c;
        return;
      }
      for (int v = lo; v < nvars; ++v) {
        idx[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, v + 1);
      }
    };
    rec(rec, 0, 0);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Expansion expansion_mul(const Expansion& a, const Expansion& b) {
  Expansion out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

QSymPoly random_qsym(Rng& rng, int max_weight) {
  QSymPoly::TermMap terms;
  const int nterms = 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < nterms; ++i) {
    const int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_weight) + 1));
    const auto comps = compositions_of(w);
    terms[comps[rng.below(comps.size())]] =
        static_cast<long long>(rng.below(7)) - 3;
  }
  return QSymPoly{std::move(terms)};
}

}  // namespace

TEST_CASE("qsym_add") {
  const QSymPoly m1 = QSymPoly::monomial({1});
  CHECK(qsym_add(m1, m1) == QSymPoly::monomial({1}, 2));
  const QSymPoly q = QSymPoly::monomial({2, 1}, 5);
  CHECK(qsym_add(q, QSymPoly::zero()) == q);
  CHECK(qsym_add(QSymPoly::monomial({1, 1}, 2), QSymPoly::monomial({1, 1}, -2)) ==
        QSymPoly::zero());
}

TEST_CASE("qsym_mul matches the expansion oracle on M[1]*M[1]") {
  const QSymPoly m1 = QSymPoly::monomial({1});
  const QSymPoly prod = qsym_mul(m1, m1);
  QSymPoly::TermMap expected;
  expected[{1, 1}] = 2;
  expected[{2}] = 1;
  CHECK(prod == QSymPoly{expected});
  CHECK(expand(prod, 3) == expansion_mul(expand(m1, 3), expand(m1, 3)));
}

TEST_CASE("qsym_mul unit and bilinearity against the oracle") {
  Rng rng{42};
  for (int t = 0; t < 60; ++t) {
    const QSymPoly a = random_qsym(rng, 3);
    const QSymPoly b = random_qsym(rng, 3);
    CHECK(qsym_mul(a, QSymPoly::one()) == a);
    CHECK(qsym_mul(QSymPoly::one(), b) == b);
    CHECK(expand(qsym_mul(a, b), 4) == expansion_mul(expand(a, 4), expand(b, 4)));
  }
}

TEST_CASE("qsym_mul is associative and commutative") {
  Rng rng{7};
  for (int t = 0; t < 40; ++t) {
    const QSymPoly a = random_qsym(rng, 3);
    const QSymPoly b = random_qsym(rng, 2);
    const QSymPoly c = random_qsym(rng, 1);
    CHECK(qsym_mul(a, b) == qsym_mul(b, a));
    CHECK(qsym_mul(qsym_mul(a, b), c) == qsym_mul(a, qsym_mul(b, c)));
  }
}

TEST_CASE("principal specialization") {
  CHECK(principal_specialization(QSymPoly::monomial({1, 1}), 3) == Rational{3});
  const QSymPoly q = qsym_add(QSymPoly::monomial({2, 1}, 4), QSymPoly::one());
  CHECK(principal_specialization(q, 0) == Rational{1});  // coefficient of M[]
  CHECK(principal_specialization(QSymPoly::monomial({1, 1}, 2), 3) == Rational{6});

  // specialization is the sum of expansion coefficients on n variables
  Rng rng{11};
  for (int t = 0; t < 40; ++t) {
    const QSymPoly a = random_qsym(rng, 4);
    for (int n = 0; n <= 4; ++n) {
      long long total = 0;
      for (const auto& [expo, c] : expand(a, n)) total += c;
      CHECK(principal_specialization(a, n) == Rational{total});
    }
  }
}

TEST_CASE("specialization is a ring map") {
  Rng rng{13};
  for (int t = 0; t < 40; ++t) {
    const QSymPoly a = random_qsym(rng, 3);
    const QSymPoly b = random_qsym(rng, 3);
    for (int n = 0; n <= 6; ++n)
      CHECK(principal_specialization(qsym_mul(a, b), n) ==
            principal_specialization(a, n) * principal_specialization(b, n));
  }
}

TEST_CASE("qsym_to_polynomial") {
  CHECK(qsym_to_polynomial(QSymPoly::monomial({1, 1}, 2)) ==
        UniPoly::from_coeffs({Rational{0}, Rational{-1}, Rational{1}}));
  CHECK(qsym_to_polynomial(QSymPoly::monomial({1})) ==
        UniPoly::from_coeffs({Rational{0}, Rational{1}}));

  SUBCASE("the 2-chain enumerator interpolates the strict-map counts") {
    std::vector<std::pair<long long, long long>> points;
    for (long long k = 0; k <= 3; ++k) {
      long long strict_pairs = 0;
      for (long long x = 1; x <= k; ++x)
        for (long long y = x + 1; y <= k; ++y) ++strict_pairs;
      points.emplace_back(k, strict_pairs);
    }
    CHECK(qsym_to_polynomial(QSymPoly::monomial({1, 1})) == lagrange_interpolate(points));
  }

  SUBCASE("agrees with the specialization at small integers") {
    Rng rng{17};
    for (int t = 0; t < 40; ++t) {
      const QSymPoly a = random_qsym(rng, 4);
      const UniPoly p = qsym_to_polynomial(a);
      for (int n = 0; n <= p.degree() + 2; ++n)
        CHECK(p.eval(Rational{n}) == principal_specialization(a, n));
    }
  }
}

TEST_CASE("lagrange interpolation") {
  CHECK(lagrange_interpolate({{0, 0}, {1, 0}, {2, 2}, {3, 6}}) ==
        UniPoly::from_coeffs({Rational{0}, Rational{-1}, Rational{1}}));
  CHECK(lagrange_interpolate({{0, 5}}) == UniPoly::constant(Rational{5}));
  CHECK(lagrange_interpolate({{0, 0}, {1, 1}, {2, 8}, {3, 27}}) ==
        UniPoly::from_coeffs({Rational{0}, Rational{0}, Rational{0}, Rational{1}}));
  CHECK_THROWS_AS(lagrange_interpolate({{1, 0}, {1, 2}}), std::invalid_argument);

  Rng rng{23};
  for (int t = 0; t < 30; ++t) {
    std::vector<std::pair<long long, long long>> points;
    for (long long x = 0; x < 5; ++x)
      points.emplace_back(x, static_cast<long long>(rng.below(41)) - 20);
    const UniPoly p = lagrange_interpolate(points);
    CHECK(p.degree() < 5);
    for (auto [x, y] : points) CHECK(p.eval(Rational{x}) == Rational{y});
  }
}

TEST_CASE("compositions_of") {
  CHECK(compositions_of(0) == std::vector<Composition>{{}});
  CHECK(compositions_of(3).size() == 4);
  CHECK(compositions_of(2) == std::vector<Composition>{{1, 1}, {2}});

  const auto all5 = compositions_of(5);
  CHECK(all5.size() == 16);
  for (std::size_t i = 0; i < all5.size(); ++i) {
    CHECK(comp_weight(all5[i]) == 5);
    for (std::size_t j = i + 1; j < all5.size(); ++j) CHECK(all5[i] != all5[j]);
  }
  CHECK(std::is_sorted(all5.begin(), all5.end(), CompositionOrder{}));

  CHECK_THROWS_AS(compositions_of(21), guard_error);
}

TEST_CASE("rendering") {
  QSymPoly::TermMap terms;
  terms[{1, 1}] = 2;
  terms[{2}] = 1;
  CHECK(to_string(QSymPoly{terms}) == "2*M[1,1] + M[2]");
  CHECK(to_string(QSymPoly::zero()) == "0");
  CHECK(to_string(QSymPoly::one()) == "M[]");
  CHECK(to_string(QSymPoly::monomial({3}, -2)) == "-2*M[3]");

  CHECK(to_string(UniPoly::from_coeffs({Rational{0}, Rational{-1}, Rational{1}})) ==
        "x^2 - x");
  CHECK(to_string(UniPoly::from_coeffs({Rational{0}, Rational{-1, 2}, Rational{1, 2}})) ==
        "1/2*x^2 - 1/2*x");
  CHECK(to_string(UniPoly::zero()) == "0");
  CHECK(to_string(UniPoly::constant(Rational{7})) == "7");
}
