#include "circfol/tree_counter.hpp"

#include <cmath>
#include <functional>

#include "circfol/arithmetic.hpp"
#include "circfol/chebyshev.hpp"
#include "circfol/kirchhoff.hpp"

namespace circfol {

const char* route_name(Route r) {
  switch (r) {
    case Route::resultant: return "resultant";
    case Route::spectral_roots: return "spectral_roots";
    case Route::spectral_eps: return "spectral_eps";
    case Route::oracle: return "oracle";
  }
  return "?";
}

BigInt resultant(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const auto a = static_cast<std::size_t>(p.degree());
  const auto b = static_cast<std::size_t>(q.degree());
  const std::size_t size = a + b;
  IntMatrix syl(size, size, BigInt(0));
  // b shifted copies of p, then a shifted copies of q; highest degree first.
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t k = 0; k <= a; ++k) syl(r, r + k) = p.coeff(a - k);
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t k = 0; k <= b; ++k) syl(b + r, r + k) = q.coeff(b - k);
  return det_fraction_free(syl);
}

void require_theorem_domain(const FoliationSpec& spec, long n) {
  if (n < 3) throw InvalidSpec("cover size n must be at least 3");
  if (!spec.base().is_connected()) throw InvalidSpec("base graph is disconnected");
  if (!is_cover_connected(spec, n))
    throw DisconnectedCover("gcd(n, jumps) != 1 for n = " + std::to_string(n) + "; the cover is disconnected");
  // Jumps that collide mod n only stack edge multiplicities, which the
  // closed formulas already account for. A jump that vanishes mod n is a loop.
  if (!jumps_nonzero_mod(spec, n))
    throw TheoremDomain("a jump is 0 mod " + std::to_string(n) + " and would be a loop in every layer");
}

TauResult tau_exact(const FoliationSpec& spec, long n) {
  require_theorem_domain(spec, n);
  const IntPolynomial g = shifted_g(build_Q(spec));
  const BigInt r = resultant(g, f_n(static_cast<unsigned long>(n)));
  TauResult out;
  out.n = n;
  out.tau = BigInt(n) * tau_base(spec.base()) * big_abs(r);
  out.route = Route::resultant;
  return out;
}

std::vector<PolyRoot> nonunit_roots(const IntPolynomial& Q, mp::Bits bits) {
  return find_roots(exact_div(Q, IntPolynomial{-1, 1}), bits);
}

mp::Complex lift_to_z(const mp::Complex& w) {
  const mp::Bits bits = w.bits();
  mp::Complex one(mp::Real(1L, bits));
  mp::Complex z = w + mp::sqrt(w * w - one);
  if (mp::abs(z) < mp::Real(1L, bits)) z = one / z;
  return z;
}

namespace {

// Evaluates `compute` at increasing precision until the value is within
// 0.25 of an integer and the precision comfortably covers its magnitude.
TauResult accept_rounded(long n, Route route, mp::Bits bits, mp::Bits max_bits,
                         const std::function<mp::Complex(mp::Bits)>& compute) {
  double last_residual = 0.0;
  for (mp::Bits b = bits; b <= max_bits; b *= 2) {
    const mp::Complex v = compute(b);
    const BigInt rounded = v.re.round();
    const mp::Real residual = mp::abs(v.re - mp::Real(rounded, b));
    const mp::Real imag = mp::abs(v.im);
    last_residual = residual.to_double();
    const long magnitude_bits = v.re.is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v.re.get()));
    const bool enough_bits = magnitude_bits + 40 < static_cast<long>(b);
    if (enough_bits && residual < mp::Real(0.25, b) && imag < mp::Real(0.25, b)) {
      TauResult out;
      out.n = n;
      out.tau = rounded;
      out.route = route;
      out.diagnostics = FloatDiagnostics{std::max(last_residual, imag.to_double()), b};
      return out;
    }
  }
  throw PrecisionExhausted(std::string(route_name(route)) + " residual " + std::to_string(last_residual) +
                           " not below 0.25 at " + std::to_string(max_bits) + " bits");
}

}  // namespace

TauResult tau_spectral_roots(const FoliationSpec& spec, long n, mp::Bits bits, mp::Bits max_bits) {
  require_theorem_domain(spec, n);
  const IntPolynomial Q = build_Q(spec);
  const BigInt q = q_sum_squares(spec);
  const auto un = static_cast<unsigned long>(n);
  // |lead Q| / 2^s, which is 1 unless some fiber is empty
  const BigInt scale = big_pow(empty_fiber_minor(spec), un) * n;

  return accept_rounded(n, Route::spectral_roots, bits, max_bits, [&](mp::Bits b) {
    mp::Real product(1L, b);
    mp::Complex one(mp::Real(1L, b));
    for (const auto& root : nonunit_roots(Q, b)) {
      const mp::Complex z = lift_to_z(root.value);
      const mp::Complex zn = mp::pow(z, un);
      const mp::Real term = mp::abs(zn + one / zn - mp::Complex(mp::Real(2L, b)));
      for (int k = 0; k < root.multiplicity; ++k) product *= term;
    }
    return mp::Complex(product * mp::Real(scale, b) / mp::Real(q, b));
  });
}

TauResult tau_spectral_eps(const FoliationSpec& spec, long n, mp::Bits bits, mp::Bits max_bits) {
  require_theorem_domain(spec, n);
  const IntLaurent P = build_P(spec);
  const IntPolynomial body(P.coefficients());
  const BigInt tau_H = tau_base(spec.base());
  const long low = P.low_degree();

  return accept_rounded(n, Route::spectral_eps, bits, max_bits, [&](mp::Bits b) {
    const mp::Real two_pi = mp::pi(b) * 2;
    mp::Complex product(mp::Real(1L, b));
    for (long j = 1; j < n; ++j) {
      const mp::Complex eps = mp::unit(two_pi * j / n);
      // |eps| = 1, so eps^low = conj(eps)^{-low}
      const mp::Complex shift =
          low < 0 ? mp::pow(mp::conj(eps), static_cast<unsigned long>(-low)) : mp::pow(eps, static_cast<unsigned long>(low));
      product = product * (evaluate(body, eps) * shift);
    }
    const mp::Real scale = mp::Real(tau_H, b) / mp::Real(BigInt(n), b);
    return product * scale;
  });
}

TauResult tau_by_oracle(const FoliationSpec& spec, long n) {
  TauResult out;
  out.n = n;
  out.tau = tau_oracle(expand_cover(spec, n));
  out.route = Route::oracle;
  return out;
}

}  // namespace circfol
