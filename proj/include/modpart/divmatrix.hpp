#pragma once

// Divisor-indexed matrices: the prime-power blocks, their Kronecker
// products M(k), the reversal W(k), and the closed forms for entries
// (local factors, square-free shortcut, Ramanujan sums).

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "linalg.hpp"
#include "numtheory.hpp"

namespace modpart {

/// Square integer matrix whose rows and columns are labelled by the
/// divisors of k in ascending order.
class DivisorMatrix {
public:
  explicit DivisorMatrix(u64 k) : k_(k), divisors_(modpart::divisors(k)), entries_(divisors_.size()) {}

  u64 k() const { return k_; }
  const std::vector<u64>& divisors() const { return divisors_; }
  std::size_t size() const { return divisors_.size(); }

  /// Positional access.
  Int& operator()(std::size_t i, std::size_t j) { return entries_(i, j); }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  /// Access by divisor labels.
  const Int& at(u64 row_divisor, u64 col_divisor) const {
    return entries_(divisor_index(divisors_, row_divisor), divisor_index(divisors_, col_divisor));
  }

  const IntMatrix& matrix() const { return entries_; }

  friend bool operator==(const DivisorMatrix& a, const DivisorMatrix& b) {
    return a.k_ == b.k_ && a.entries_ == b.entries_;
  }

  std::vector<std::vector<std::string>> rows_as_strings() const {
    std::vector<std::vector<std::string>> rows(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) rows[i].push_back(entries_(i, j).str());
    return rows;
  }

private:
  u64 k_;
  std::vector<u64> divisors_;
  IntMatrix entries_;
};

inline nlohmann::json to_json(const DivisorMatrix& m) {
  return {{"k", m.k()}, {"divisors", m.divisors()}, {"rows", m.rows_as_strings()}};
}

inline DivisorMatrix divisor_matrix_from_json(const nlohmann::json& j) {
  DivisorMatrix m(j.at("k").get<u64>());
  require(j.at("divisors").get<std::vector<u64>>() == m.divisors(), "matrix JSON: divisor list mismatch");
  const auto rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  require(rows.size() == m.size(), "matrix JSON: wrong row count");
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(rows[i].size() == m.size(), "matrix JSON: wrong column count");
    for (std::size_t j2 = 0; j2 < m.size(); ++j2) m(i, j2) = Int(rows[i][j2]);
  }
  return m;
}

/// M(p^m): first column 1, superdiagonal -p^i, lower part (p-1)p^(j-1).
inline DivisorMatrix prime_power_block(u64 p, unsigned m) {
  require(is_prime(p), "prime_power_block: p must be prime");
  require(m >= 1, "prime_power_block: exponent must be positive");
  u64 q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  DivisorMatrix out(q);
  const Int e = p - 1;
  for (std::size_t i = 0; i <= m; ++i) {
    out(i, 0) = 1;
    Int pw = 1; // p^(j-1)
    for (std::size_t j = 1; j <= m; ++j) {
      if (j <= i) out(i, j) = e * pw;
      else if (j == i + 1) out(i, j) = -pw;
      pw *= p;
    }
  }
  return out;
}

/// Kronecker product of matrices over coprime divisor sets, re-indexed by
/// the ascending divisors of the product. Commutative as stored arrays.
inline DivisorMatrix kronecker(const DivisorMatrix& a, const DivisorMatrix& b) {
  require(std::gcd(a.k(), b.k()) == 1, "kronecker: indices must be coprime");
  DivisorMatrix out(a.k() * b.k());
  const auto& da = a.divisors();
  const auto& db = b.divisors();
  std::vector<std::size_t> pos(da.size() * db.size());
  for (std::size_t i = 0; i < da.size(); ++i)
    for (std::size_t j = 0; j < db.size(); ++j)
      pos[i * db.size() + j] = divisor_index(out.divisors(), da[i] * db[j]);
  for (std::size_t r1 = 0; r1 < da.size(); ++r1)
    for (std::size_t r2 = 0; r2 < db.size(); ++r2)
      for (std::size_t c1 = 0; c1 < da.size(); ++c1) {
        if (a(r1, c1) == 0) continue;
        for (std::size_t c2 = 0; c2 < db.size(); ++c2)
          out(pos[r1 * db.size() + r2], pos[c1 * db.size() + c2]) = a(r1, c1) * b(r2, c2);
      }
  return out;
}

/// M(k) as the Kronecker product of its prime-power blocks.
inline DivisorMatrix build_matrix(u64 k) {
  require(k >= 1, "build_matrix: k must be positive");
  DivisorMatrix out(1);
  out(0, 0) = 1;
  for (const auto& [p, e] : factorize(k).factors) out = kronecker(out, prime_power_block(p, e));
  return out;
}

namespace detail {

// Entry (u, v) of M(q) for u, v | q, q a prime power.
inline i64 prime_power_entry(u64 u, u64 v) {
  if (v > u) return moebius(v / u) * static_cast<i64>(u);
  return static_cast<i64>(totient(v));
}

} // namespace detail

/// M(k)[t, d] as a product over the prime powers q || k of M(q)[gcd(q,t), gcd(q,d)].
inline i64 entry(u64 k, u64 t, u64 d) {
  require(k >= 1 && t >= 1 && d >= 1 && k % t == 0 && k % d == 0, "entry: t and d must divide k");
  i64 w = 1;
  for (u64 q : factorize(k).prime_power_parts()) {
    w *= detail::prime_power_entry(std::gcd(q, t), std::gcd(q, d));
    if (w == 0) break;
  }
  return w;
}

/// a(d, d', f) for a prime power f.
inline i64 local_factor(u64 d, u64 d2, u64 f) {
  require(is_prime_power(f), "local_factor: f must be a prime power");
  const u64 g = std::gcd(f, d);
  const u64 g2 = std::gcd(f, d2);
  if (g % g2 == 0) return static_cast<i64>(totient(g2));
  return moebius(g2 / g) * static_cast<i64>(g);
}

/// M(k)[d, d'] as the product of local factors over the prime powers of k.
inline i64 entry_by_local_factors(u64 k, u64 d, u64 d2) {
  require(k >= 1 && d >= 1 && d2 >= 1 && k % d == 0 && k % d2 == 0,
          "entry_by_local_factors: d and d' must divide k");
  i64 w = 1;
  for (u64 f : factorize(k).prime_power_parts()) w *= local_factor(d, d2, f);
  return w;
}

inline i64 squarefree_entry(u64 k, u64 d, u64 d2) {
  require(k >= 1 && factorize(k).squarefree(), "squarefree_entry: k must be square-free");
  require(k % d == 0 && k % d2 == 0, "squarefree_entry: d and d' must divide k");
  const u64 g = std::gcd(d, d2);
  return moebius(d2 / g) * static_cast<i64>(totient(g));
}

/// c_d(s) = mu(d/g) phi(d) / phi(d/g), g = gcd(s, d).
inline i64 ramanujan_sum(u64 d, i64 s) {
  require(d >= 1, "ramanujan_sum: d must be positive");
  const u64 g = gcd_signed(s, d);
  const u64 r = d / g;
  return moebius(r) * static_cast<i64>(totient(d) / totient(r));
}

/// c_d(s) as a floating sum of s-th powers of the primitive d-th roots of
/// unity. Throws if the sum is not within `tolerance` of a real integer.
inline i64 ramanujan_sum_numeric(u64 d, i64 s, double tolerance = 1e-6) {
  require(d >= 1, "ramanujan_sum_numeric: d must be positive");
  const u64 sr = mod_floor(s, d);
  std::complex<double> acc{0.0, 0.0};
  for (u64 j = 1; j <= d; ++j) {
    if (std::gcd(j, d) != 1) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * sr) % d) / static_cast<double>(d);
    acc += std::polar(1.0, angle);
  }
  const double nearest = std::round(acc.real());
  if (std::abs(acc.imag()) > tolerance || std::abs(acc.real() - nearest) > tolerance)
    throw InternalError("ramanujan_sum_numeric: root-of-unity sum is not near an integer");
  return static_cast<i64>(nearest);
}

/// W(k): the permutation sending divisor d to k/d.
inline DivisorMatrix reversal_matrix(u64 k) {
  require(k >= 1, "reversal_matrix: k must be positive");
  DivisorMatrix w(k);
  const auto& ds = w.divisors();
  for (std::size_t i = 0; i < ds.size(); ++i) w(i, divisor_index(ds, k / ds[i])) = 1;
  return w;
}

struct PropertyCheck {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

struct MatrixReport {
  u64 k;
  std::vector<PropertyCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
  }
};

/// Check the seven structural properties of M(k) exactly.
inline MatrixReport verify_properties(u64 k) {
  const DivisorMatrix m = build_matrix(k);
  const auto& ds = m.divisors();
  const std::size_t n = ds.size();
  MatrixReport rep{k, {}};

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (m(i, j) != entry_by_local_factors(k, ds[i], ds[j])) {
          ok = false;
          detail = "mismatch at (" + std::to_string(ds[i]) + "," + std::to_string(ds[j]) + ")";
        }
    rep.checks.push_back({1, "entries are products of local factors", ok, detail});
  }
  {
    const IntMatrix wm = reversal_matrix(k).matrix() * m.matrix();
    const bool ok = wm * wm == IntMatrix::identity(n, Int(k));
    rep.checks.push_back({2, "(W M)^2 = k I", ok, ""});
  }
  {
    const Int det = determinant(m.matrix());
    // k^(tau/2): tau is odd only when k is a perfect square.
    Int expected;
    if (n % 2 == 0) {
      expected = boost::multiprecision::pow(Int(k), static_cast<unsigned>(n / 2));
    } else {
      const Int root = boost::multiprecision::sqrt(Int(k));
      expected = boost::multiprecision::pow(root, static_cast<unsigned>(n));
    }
    rep.checks.push_back({3, "det M = k^(tau/2)", det == expected, "det=" + det.str() + " expected=" + expected.str()});
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      Int row = 0;
      for (std::size_t j = 0; j < n; ++j) row += m(i, j);
      if (row != (ds[i] == k ? Int(k) : Int(0))) ok = false;
    }
    rep.checks.push_back({4, "row sums equal k delta(d, k)", ok, ""});
  }
  {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) ok = ok && m(0, j) == moebius(ds[j]);
    rep.checks.push_back({5, "first row is mu(d)", ok, ""});
  }
  {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) ok = ok && m(n - 1, j) == totient(ds[j]);
    rep.checks.push_back({6, "last row is phi(d)", ok, ""});
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && m(i, 0) == 1;
    rep.checks.push_back({7, "first column is 1", ok, ""});
  }
  return rep;
}

inline IntPoly characteristic_polynomial(const DivisorMatrix& m) {
  return characteristic_polynomial(m.matrix());
}

/// The symmetric square of the 2x2 block M(p), in the basis f1^2, f1 fp, fp^2.
inline IntMatrix symmetric_square_block(u64 p) {
  require(is_prime(p), "symmetric_square_block: p must be prime");
  const long long q = static_cast<long long>(p);
  return IntMatrix{{1, 1, 1}, {-2, q - 2, 2 * (q - 1)}, {1, 1 - q, (q - 1) * (q - 1)}};
}

} // namespace modpart
