#pragma once

// Thin value types over MPFR. Every value carries its own precision and the
// result of an operation takes the larger operand precision, so there is no
// process-wide precision setting to coordinate between threads.

#include <mpfr.h>

#include <algorithm>
#include <concepts>
#include <string>
#include <type_traits>
#include <utility>

#include "circfol/bigint.hpp"

namespace circfol::mp {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 256;

class Real {
 public:
  explicit Real(Bits bits = kDefaultBits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(long value, Bits bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(double value, Bits bits) : Real(bits) { mpfr_set_d(v_, value, MPFR_RNDN); }
  Real(const BigInt& value, Bits bits) : Real(bits) {
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }
  Real(const BigRational& value, Bits bits) : Real(bits) {
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
  }

  Real(const Real& other) : Real(other.bits()) { mpfr_set(v_, other.v_, MPFR_RNDN); }
  Real(Real&& other) noexcept : Real(MPFR_PREC_MIN) { mpfr_swap(v_, other.v_); }
  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, other.bits());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  Bits bits() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Nearest integer (ties away from zero).
  BigInt round() const {
    BigInt r;
    Real t(bits());
    mpfr_round(t.v_, v_);
    mpfr_get_z(r.get_mpz_t(), t.v_, MPFR_RNDN);
    return r;
  }

  /// Decimal rendering with `digits` significant digits, e.g. "2.6180339887".
  std::string str(int digits = 20) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  Real& operator+=(const Real& o) { return apply(o, mpfr_add); }
  Real& operator-=(const Real& o) { return apply(o, mpfr_sub); }
  Real& operator*=(const Real& o) { return apply(o, mpfr_mul); }
  Real& operator/=(const Real& o) { return apply(o, mpfr_div); }

  Real operator-() const {
    Real r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  template <class Fn>
  Real& apply(const Real& o, Fn fn) {
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    fn(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

inline Bits max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

#define CIRCFOL_REAL_BINOP(op, fn)                                         \
  inline Real operator op(const Real& a, const Real& b) {                  \
    Real r(max_bits(a, b));                                                \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                              \
    return r;                                                              \
  }                                                                        \
  template <std::integral I>                                               \
  inline Real operator op(const Real& a, I b) {                            \
    return a op Real(static_cast<long>(b), a.bits());                      \
  }                                                                        \
  template <std::integral I>                                               \
  inline Real operator op(I a, const Real& b) {                            \
    return Real(static_cast<long>(a), b.bits()) op b;                      \
  }

CIRCFOL_REAL_BINOP(+, mpfr_add)
CIRCFOL_REAL_BINOP(-, mpfr_sub)
CIRCFOL_REAL_BINOP(*, mpfr_mul)
CIRCFOL_REAL_BINOP(/, mpfr_div)
#undef CIRCFOL_REAL_BINOP

inline int compare(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }
inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return compare(a, b) == 0; }
template <std::integral I>
int compare(const Real& a, I b) {
  if constexpr (std::is_signed_v<I>)
    return mpfr_cmp_si(a.get(), static_cast<long>(b));
  else
    return mpfr_cmp_ui(a.get(), static_cast<unsigned long>(b));
}
template <std::integral I> bool operator<(const Real& a, I b) { return compare(a, b) < 0; }
template <std::integral I> bool operator>(const Real& a, I b) { return compare(a, b) > 0; }
template <std::integral I> bool operator<=(const Real& a, I b) { return compare(a, b) <= 0; }
template <std::integral I> bool operator>=(const Real& a, I b) { return compare(a, b) >= 0; }
template <std::integral I> bool operator==(const Real& a, I b) { return compare(a, b) == 0; }

#define CIRCFOL_REAL_UNARY(name, fn)     \
  inline Real name(const Real& x) {      \
    Real r(x.bits());                    \
    fn(r.get(), x.get(), MPFR_RNDN);     \
    return r;                            \
  }

CIRCFOL_REAL_UNARY(abs, mpfr_abs)
CIRCFOL_REAL_UNARY(sqrt, mpfr_sqrt)
CIRCFOL_REAL_UNARY(log, mpfr_log)
CIRCFOL_REAL_UNARY(exp, mpfr_exp)
CIRCFOL_REAL_UNARY(cos, mpfr_cos)
CIRCFOL_REAL_UNARY(sin, mpfr_sin)
CIRCFOL_REAL_UNARY(acos, mpfr_acos)
#undef CIRCFOL_REAL_UNARY

inline Real pow(const Real& x, unsigned long e) {
  Real r(x.bits());
  mpfr_pow_ui(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r(max_bits(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline Real pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

/// 2^e at the given precision.
inline Real exp2i(long e, Bits bits) {
  Real r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

struct Complex {
  Real re;
  Real im;

  explicit Complex(Bits bits = kDefaultBits) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(re.bits()) {}

  Bits bits() const { return std::max(re.bits(), im.bits()); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex operator-() const { return {-re, -im}; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

inline Real abs(const Complex& z) {
  Real r(z.bits());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

/// Principal square root (branch cut on the negative real axis).
inline Complex sqrt(const Complex& z) {
  Real m = abs(z);
  if (m.is_zero()) return Complex(z.bits());
  Real a = sqrt((m + abs(z.re)) / 2);
  Real b = abs(z.im) / (a * 2);
  if (z.re.sign() >= 0) return {a, z.im.sign() < 0 ? -b : b};
  return {b, z.im.sign() < 0 ? -a : a};
}

inline Complex pow(const Complex& z, unsigned long e) {
  Complex result(Real(1L, z.bits()));
  Complex base = z;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// exp(i*theta)
inline Complex unit(const Real& theta) { return {cos(theta), sin(theta)}; }

}  // namespace circfol::mp
