#pragma once

// Truncated power series with exact rational coefficients, and the basis
// series whose M(k)-combinations generate the subset counts.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "divmatrix.hpp"
#include "error.hpp"
#include "numtheory.hpp"

namespace modpart {

/// Power series known through x^(order-1).
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static TruncatedSeries monomial(std::size_t exponent, std::size_t order, const Rational& c = 1) {
    TruncatedSeries s(order);
    if (exponent < order) s.coeffs_[exponent] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  const Rational& coefficient(std::size_t n) const {
    if (n >= coeffs_.size())
      throw std::out_of_range("series coefficient x^" + std::to_string(n) + " is beyond the truncation order " +
                              std::to_string(coeffs_.size()));
    return coeffs_[n];
  }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    truncate(o.order());
    for (std::size_t i = 0; i < order(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    truncate(o.order());
    for (std::size_t i = 0; i < order(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return c;
  }

  /// Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries reciprocal() const {
    require(order() > 0 && coeffs_[0] != 0, "reciprocal: constant term must be nonzero");
    TruncatedSeries r(order());
    r.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t n = 1; n < order(); ++n) {
      Rational acc = 0;
      for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
      r.coeffs_[n] = -acc * r.coeffs_[0];
    }
    return r;
  }

  TruncatedSeries pow(unsigned e) const {
    TruncatedSeries r = monomial(0, order());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return boost::multiprecision::denominator(c) == 1; });
  }

private:
  void truncate(std::size_t n) {
    if (n < coeffs_.size()) coeffs_.resize(n);
  }

  std::vector<Rational> coeffs_;
};

/// Sparse {"exponent": "coefficient"} map of the nonzero terms.
inline nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < s.order(); ++i)
    if (s.coefficient(i) != 0) j[std::to_string(i)] = to_string(s.coefficient(i));
  return j;
}

/// (-1)^(k-k/d)/k * x^k / (1-x^d)^(k/d), expanded with the negative binomial
/// series: the coefficient of x^(k + d m) is C(m + k/d - 1, k/d - 1).
inline TruncatedSeries basis_series(u64 k, u64 d, std::size_t order) {
  require(k >= 1 && d >= 1 && k % d == 0, "basis_series: d must divide k");
  require(order > k, "basis_series: order must exceed k");
  const u64 j = k / d;
  const Rational lead = Rational(parity_sign(k - j), static_cast<long long>(k));
  TruncatedSeries s(order);
  for (u64 m = 0; k + d * m < order; ++m)
    s[k + d * m] = lead * Rational(binomial(m + j - 1, static_cast<i64>(j - 1)));
  return s;
}

/// Generating series of the subset counts, one per divisor t of k:
/// component t is sum_d M(k)[t, d] * basis_series(k, d).
inline std::vector<TruncatedSeries> generating_series(u64 k, std::size_t order) {
  require(k >= 1 && order > k, "generating_series: need k >= 1 and order > k");
  const DivisorMatrix m = build_matrix(k);
  const auto& ds = m.divisors();
  std::vector<TruncatedSeries> basis;
  for (u64 d : ds) basis.push_back(basis_series(k, d, order));
  std::vector<TruncatedSeries> out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    TruncatedSeries g(order);
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (m(i, j) != 0) g += basis[j] * Rational(m(i, j));
    out.push_back(std::move(g));
  }
  return out;
}

} // namespace modpart
