#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "circfol/bigint.hpp"
#include "circfol/errors.hpp"

namespace circfol {

/// Dense univariate polynomial; coefficient i multiplies x^i. Normalized so
/// the leading coefficient is nonzero (the zero polynomial has no terms).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T lead() const { return c_.empty() ? T(0) : c_.back(); }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> d(k, T(0));
    d.insert(d.end(), c_.begin(), c_.end());
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form, highest degree first: "-4*w^2 - 2*w + 6".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
      T v = c_[static_cast<std::size_t>(d)];
      if (v == 0) continue;
      bool neg = v < 0;
      T mag = neg ? T(-v) : v;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (mag == 1);
      if (!unit || d == 0) os << mag;
      if (d > 0) {
        if (!unit) os << '*';
        os << var;
        if (d > 1) os << '^' << d;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

/// Laurent polynomial: coefficient i multiplies x^(low_degree + i).
template <class T>
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long low_degree, std::vector<T> coeffs)
      : low_(low_degree), c_(std::move(coeffs)) {
    normalize();
  }
  /// x^shift * p
  LaurentPolynomial(const Polynomial<T>& p, long shift)
      : LaurentPolynomial(shift, p.coefficients()) {}

  bool is_zero() const { return c_.empty(); }
  long low_degree() const { return low_; }
  long high_degree() const { return low_ + static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(long d) const {
    if (d < low_ || d > high_degree()) return T(0);
    return c_[static_cast<std::size_t>(d - low_)];
  }

  /// coeff(d) == coeff(-d) for every d.
  bool is_symmetric() const {
    if (is_zero()) return true;
    if (low_ != -high_degree()) return false;
    for (long d = 0; d <= high_degree(); ++d)
      if (coeff(d) != coeff(-d)) return false;
    return true;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return LaurentPolynomial(b.low_, negated(b.c_));
    if (b.is_zero()) return a;
    long lo = std::min(a.low_, b.low_);
    long hi = std::max(a.high_degree(), b.high_degree());
    std::vector<T> r(static_cast<std::size_t>(hi - lo + 1), T(0));
    for (long d = lo; d <= hi; ++d) r[static_cast<std::size_t>(d - lo)] = a.coeff(d) - b.coeff(d);
    return LaurentPolynomial(lo, std::move(r));
  }

  std::string str(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = high_degree(); d >= low_; --d) {
      T v = coeff(d);
      if (v == 0) continue;
      bool neg = v < 0;
      T mag = neg ? T(-v) : v;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (mag == 1);
      if (!unit || d == 0) os << mag;
      if (d != 0) {
        if (!unit) os << '*';
        os << var;
        if (d != 1) os << '^' << d;
      }
    }
    return os.str();
  }

 private:
  static std::vector<T> negated(std::vector<T> v) {
    for (auto& x : v) x = -x;
    return v;
  }
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead_zeros = 0;
    while (lead_zeros < c_.size() && c_[lead_zeros] == 0) ++lead_zeros;
    if (lead_zeros > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead_zeros));
      low_ += static_cast<long>(lead_zeros);
    }
    if (c_.empty()) low_ = 0;
  }

  long low_ = 0;
  std::vector<T> c_;
};

using IntLaurent = LaurentPolynomial<BigInt>;

// Ring hooks so DenseMatrix<IntPolynomial> works with det_bareiss.
inline bool is_zero(const IntPolynomial& p) { return p.is_zero(); }

/// Exact quotient num / den in Z[x]; throws when den does not divide num.
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

/// Quotient and remainder over Q[x].
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& num, const RatPolynomial& den);

RatPolynomial to_rational(const IntPolynomial& p);

/// Monic gcd over Q[x] (zero if both inputs are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
IntPolynomial primitive_part(const RatPolynomial& p);

/// p(a*x + b) computed exactly.
RatPolynomial compose_linear(const RatPolynomial& p, const BigRational& a, const BigRational& b);

}  // namespace circfol
