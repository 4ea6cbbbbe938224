#pragma once

// Fraction-free (Bareiss) elimination over Z and Z[X].

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numtheory.hpp"

namespace modpart {

/// Dense row-major square matrix of big integers.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : n_(rows.size()), data_() {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
      require(r.size() == n_, "IntMatrix: rows must be square");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  std::size_t size() const { return n_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  static IntMatrix identity(std::size_t n, const Int& scale = 1) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scale;
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.n_ == b.n_, "IntMatrix product: size mismatch");
    IntMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t l = 0; l < a.n_; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, l) * b(l, j);
      }
    return c;
  }

private:
  std::size_t n_ = 0;
  std::vector<Int> data_;
};

/// Determinant by Bareiss elimination with row swaps on zero pivots.
inline Int determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        Int rem;
        boost::multiprecision::divide_qr(num, prev, a(i, j), rem);
        if (rem != 0) throw InternalError("Bareiss step left a remainder");
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Integer polynomial, coefficients indexed by exponent (lowest first),
/// kept without trailing zeros.
struct IntPoly {
  std::vector<Int> coeffs;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }
  IntPoly(std::initializer_list<long long> c) {
    for (long long v : c) coeffs.emplace_back(v);
    trim();
  }

  bool is_zero() const { return coeffs.empty(); }
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Int& lead() const { return coeffs.back(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPoly(std::move(c));
  }

  std::string str(char var = 'X') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      const Int& c = coeffs[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Int mag = neg ? Int(-c) : c;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }
};

/// Exact quotient of a by a monic divisor; throws if the division leaves a remainder.
inline IntPoly divide_exact_monic(IntPoly a, const IntPoly& monic) {
  require(!monic.is_zero() && monic.lead() == 1, "divide_exact_monic: divisor must be monic");
  if (a.is_zero()) return {};
  if (a.degree() < monic.degree()) throw InternalError("polynomial division left a remainder");
  const std::size_t dm = monic.degree();
  std::vector<Int> q(a.degree() - dm + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Int c = a.coeffs[i + dm];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) a.coeffs[i + j] -= c * monic.coeffs[j];
  }
  a.trim();
  if (!a.is_zero()) throw InternalError("polynomial division left a remainder");
  return IntPoly(std::move(q));
}

/// det(X*I - m) by Bareiss elimination over Z[X]. Every leading principal
/// minor of X*I - m is monic, so no pivoting is needed and each division is
/// an exact division by a monic polynomial.
inline IntPoly characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly{1};
  std::vector<IntPoly> a(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> IntPoly& { return a[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      at(i, j) = IntPoly(std::vector<Int>{-m(i, j)});
      if (i == j) at(i, j) = at(i, j) + IntPoly{0, 1};
    }
  IntPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = divide_exact_monic(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
    prev = at(k, k);
  }
  return at(n - 1, n - 1);
}

} // namespace modpart
