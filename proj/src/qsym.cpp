#include "chroma/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chroma/sets.hpp"

namespace chroma {

int comp_weight(const Composition& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

QSymPoly::QSymPoly(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    for (int part : it->first)
      if (part < 1) throw std::invalid_argument("composition part must be positive");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

QSymPoly QSymPoly::monomial(Composition alpha, long long coeff) {
  TermMap t;
  if (coeff != 0) t.emplace(std::move(alpha), coeff);
  return QSymPoly{std::move(t)};
}

long long QSymPoly::coeff(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0 : it->second;
}

QSymPoly qsym_add(const QSymPoly& a, const QSymPoly& b) {
  QSymPoly::TermMap out = a.terms();
  for (const auto& [alpha, c] : b.terms()) out[alpha] += c;
  return QSymPoly{std::move(out)};
}

namespace {

// M_α·M_β expands over overlapping shuffles: at each step take a part of α,
// a part of β, or merge one of each.
void quasi_shuffles(const Composition& a, std::size_t i, const Composition& b,
                    std::size_t j, Composition& prefix,
                    std::vector<Composition>& out) {
  if (i == a.size() && j == b.size()) {
    out.push_back(prefix);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    quasi_shuffles(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    quasi_shuffles(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    prefix.push_back(a[i] + b[j]);
    quasi_shuffles(a, i + 1, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

QSymPoly qsym_mul(const QSymPoly& a, const QSymPoly& b) {
  QSymPoly::TermMap out;
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) {
      std::vector<Composition> shuffles;
      Composition prefix;
      quasi_shuffles(alpha, 0, beta, 0, prefix, shuffles);
      for (auto& gamma : shuffles) out[std::move(gamma)] += ca * cb;
    }
  }
  return QSymPoly{std::move(out)};
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> c) {
  while (!c.empty() && c.back() == Rational{0}) c.pop_back();
  return UniPoly{std::move(c)};
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc{0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), Rational{0});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  return a + Rational{-1} * b;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero();
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1, Rational{0});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> out = p.coeffs;
  for (auto& x : out) x *= c;
  return UniPoly::from_coeffs(std::move(out));
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

UniPoly binomial_poly(int k) {
  UniPoly p = UniPoly::constant(Rational{1});
  for (int i = 0; i < k; ++i)
    p = p * UniPoly::from_coeffs({Rational{-i}, Rational{1}});
  long long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return Rational{1, fact} * p;
}

Rational principal_specialization(const QSymPoly& q, int n) {
  Rational out{0};
  for (const auto& [alpha, c] : q.terms())
    out += Rational{c * binomial(n, static_cast<long long>(alpha.size()))};
  return out;
}

UniPoly qsym_to_polynomial(const QSymPoly& q) {
  UniPoly out;
  for (const auto& [alpha, c] : q.terms())
    out = out + Rational{c} * binomial_poly(static_cast<int>(alpha.size()));
  return out;
}

UniPoly lagrange_interpolate(const std::vector<std::pair<long long, long long>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate x-value " + std::to_string(points[i].first));

  UniPoly out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis = UniPoly::constant(Rational{points[i].second});
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = Rational{1, points[i].first - points[j].first} * basis *
              UniPoly::from_coeffs({Rational{-points[j].first}, Rational{1}});
    }
    out = out + basis;
  }
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions of a negative integer");
  if (n > 20) throw guard_error("composition weight " + std::to_string(n) + " exceeds guard 20");
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      cur.push_back(part);
      self(self, rest - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end(), CompositionOrder{});
  return out;
}

std::string to_string(const Composition& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + ")";
}

std::string to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

namespace {

std::string monomial_str(const Composition& alpha) {
  std::string out = "M[";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + "]";
}

}  // namespace

std::string to_string(const QSymPoly& q) {
  if (q.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : q.terms()) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += monomial_str(alpha);
  }
  return out;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coeffs[static_cast<std::size_t>(d)];
    if (c == Rational{0}) continue;
    Rational mag = c < Rational{0} ? -c : c;
    if (first) {
      if (c < Rational{0}) out += "-";
      first = false;
    } else {
      out += c < Rational{0} ? " - " : " + ";
    }
    bool unit = mag == Rational{1};
    if (d == 0) {
      out += to_string(mag);
    } else {
      if (!unit) out += to_string(mag) + "*";
      out += d == 1 ? "x" : "x^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace chroma
