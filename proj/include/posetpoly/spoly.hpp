#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetpoly/numeric.hpp"

namespace posetpoly {

/// Polynomial with nonnegative integer coefficients. Coefficient i counts
/// the (i-1)-dimensional simplex faces, so the constant term is the empty
/// simplex. Trailing zeros are trimmed.
class SPoly {
 public:
  SPoly() = default;

  explicit SPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    for (const Int& v : c_)
      if (v < 0) throw std::invalid_argument("SPoly: negative coefficient");
    trim();
  }

  SPoly(std::initializer_list<int> coeffs) {
    for (int v : coeffs) {
      if (v < 0) throw std::invalid_argument("SPoly: negative coefficient");
      c_.emplace_back(v);
    }
    trim();
  }

  static SPoly zero() { return SPoly(); }
  static SPoly one() { return SPoly({1}); }
  static SPoly monomial(std::size_t k, Int coeff = 1) {
    std::vector<Int> c(k + 1);
    c[k] = std::move(coeff);
    return SPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Number of stored coefficients; degree + 1 when non-zero.
  std::size_t size() const { return c_.size(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Int& operator[](std::size_t i) const {
    static const Int kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
  }

  const std::vector<Int>& coeffs() const { return c_; }

  Int coefficient_sum() const {
    Int s = 0;
    for (const Int& v : c_) s += v;
    return s;
  }

  friend SPoly operator+(const SPoly& a, const SPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return SPoly(std::move(c));
  }

  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    if (a.is_zero() || b.is_zero()) return SPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return SPoly(std::move(c));
  }

  /// Coefficient-wise difference; nullopt if any coefficient would go
  /// negative.
  static std::optional<SPoly> try_subtract(const SPoly& a, const SPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = a[i] - b[i];
      if (c[i] < 0) return std::nullopt;
    }
    return SPoly(std::move(c));
  }

  /// Exact division by x. Throws if the constant term is non-zero, which
  /// always signals a caller bug in the origin bookkeeping.
  SPoly divided_by_x() const {
    if (c_.empty()) return SPoly();
    if (c_[0] != 0) throw std::invalid_argument("SPoly: division by x is inexact");
    return SPoly(std::vector<Int>(c_.begin() + 1, c_.end()));
  }

  /// Multiplication by x.
  SPoly shifted_up() const {
    if (c_.empty()) return SPoly();
    std::vector<Int> c;
    c.reserve(c_.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), c_.begin(), c_.end());
    return SPoly(std::move(c));
  }

  friend bool operator==(const SPoly& a, const SPoly& b) = default;

  /// Decimal coefficient strings, index = exponent.
  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const Int& v : c_) out.push_back(v.str());
    return out;
  }

  /// "1 + 3x + 3x^2 + x^3", or "0".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      bool show_coeff = c_[i] != 1 || i == 0;
      if (show_coeff) s += c_[i].str();
      if (i == 1) s += "x";
      if (i > 1) s += "x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

  friend std::ostream& operator<<(std::ostream& os, const SPoly& p) {
    return os << p.to_string();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// Outcome of a coefficient-wise comparison: either f <= g everywhere, or
/// the smallest exponent where it fails.
struct PolyLeVerdict {
  bool ok = true;
  std::size_t first_violation = 0;

  explicit operator bool() const { return ok; }
};

/// f <= g coefficient-wise, missing coefficients read as zero.
inline PolyLeVerdict poly_le(const SPoly& f, const SPoly& g) {
  std::size_t len = std::max(f.size(), g.size());
  for (std::size_t i = 0; i < len; ++i)
    if (f[i] > g[i]) return {false, i};
  return {true, 0};
}

/// Polynomial triple attached to one polytope: all simplex faces, the ones
/// through the origin vertex, and the ones avoiding it. s = s0 + s1 always.
struct SimplexPolys {
  SPoly s, s0, s1;
};

}  // namespace posetpoly
