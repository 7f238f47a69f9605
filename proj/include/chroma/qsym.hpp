#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chroma {

using Rational = boost::rational<long long>;

/// Integer composition: list of positive parts. The empty composition has
/// weight 0 and is the unit of the quasi-shuffle product.
using Composition = std::vector<int>;

int comp_weight(const Composition& alpha);

/// Canonical term order: longer compositions first, then lexicographic.
struct CompositionOrder {
  bool operator()(const Composition& a, const Composition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

/// Quasisymmetric function in the monomial basis: finitely supported
/// integer-coefficient map M_α → coefficient. No zero coefficients stored.
class QSymPoly {
 public:
  using TermMap = std::map<Composition, long long, CompositionOrder>;

  QSymPoly() = default;
  explicit QSymPoly(TermMap terms);

  static QSymPoly zero() { return QSymPoly{}; }
  static QSymPoly one() { return monomial({}, 1); }
  static QSymPoly monomial(Composition alpha, long long coeff = 1);

  long long coeff(const Composition& alpha) const;
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const QSymPoly&, const QSymPoly&) = default;

 private:
  TermMap terms_;
};

QSymPoly qsym_add(const QSymPoly& a, const QSymPoly& b);

/// Quasi-shuffle product of monomial basis elements, extended bilinearly.
QSymPoly qsym_mul(const QSymPoly& a, const QSymPoly& b);

/// Exact univariate polynomial over rationals; coeffs[i] is the coefficient
/// of x^i, trailing zeros trimmed.
struct UniPoly {
  std::vector<Rational> coeffs;

  static UniPoly zero() { return {}; }
  static UniPoly from_coeffs(std::vector<Rational> c);
  static UniPoly constant(Rational c) { return from_coeffs({c}); }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational eval(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// Exact binomial coefficient C(n, k) for small arguments.
long long binomial(long long n, long long k);

/// The polynomial C(x, k) = x(x-1)...(x-k+1)/k!.
UniPoly binomial_poly(int k);

/// Value of q at x_1 = ... = x_n = 1, all other variables 0:
/// Σ_α coeff(α)·C(n, length(α)).
Rational principal_specialization(const QSymPoly& q, int n);

/// Σ_α coeff(α)·C(x, length(α)); agrees with principal_specialization at
/// every nonnegative integer.
UniPoly qsym_to_polynomial(const QSymPoly& q);

/// Unique polynomial of degree < #points through the given points.
/// Throws std::invalid_argument on duplicate x-values.
UniPoly lagrange_interpolate(const std::vector<std::pair<long long, long long>>& points);

/// All compositions of n (2^{n-1} of them; one for n = 0), canonical order.
/// Guarded at n ≤ 20.
std::vector<Composition> compositions_of(int n);

std::string to_string(const Composition& alpha);
std::string to_string(const QSymPoly& q);
std::string to_string(const UniPoly& p);
std::string to_string(const Rational& r);

}  // namespace chroma
