#include "circfol/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "circfol/arithmetic.hpp"
#include "circfol/chebyshev.hpp"
#include "circfol/kirchhoff.hpp"
#include "circfol/quadrature.hpp"
#include "circfol/roots.hpp"
#include "circfol/tree_counter.hpp"

namespace circfol {

void require_gcd_hypothesis(const FoliationSpec& spec) {
  if (!spec.base().is_connected()) throw InvalidSpec("base graph is disconnected");
  const ValidationReport v = validate(spec);
  if (!v.gcd_hypothesis)
    throw HypothesisViolation(v.has_jumps ? "jump gcd is " + std::to_string(v.jump_gcd) + ", not 1"
                                          : "spec has no jumps");
}

std::vector<mp::Complex> roots_outside_unit(const FoliationSpec& spec, mp::Bits bits) {
  require_gcd_hypothesis(spec);
  const IntPolynomial Q = build_Q(spec);
  for (mp::Bits b = bits;; b *= 2) {
    const mp::Real margin = 1 + mp::exp2i(-static_cast<long>(b) / 4, b);
    std::vector<mp::Complex> out;
    bool clean = true;
    for (const auto& root : nonunit_roots(Q, b)) {
      mp::Complex z = lift_to_z(root.value);
      if (!(mp::abs(z) > margin)) clean = false;
      for (int k = 0; k < root.multiplicity; ++k) out.push_back(z);
    }
    if (clean) return out;
    if (b * 2 > 4096) throw UnitCircleRoot("a root of P lies on the unit circle within tolerance");
  }
}

mp::Real mahler_from_roots(const FoliationSpec& spec, mp::Bits bits) {
  // leading coefficient of z^s P(z)
  mp::Real a(empty_fiber_minor(spec), bits);
  for (const auto& z : roots_outside_unit(spec, bits)) a *= mp::abs(z);
  return a;
}

mp::Real mahler_from_integral(const FoliationSpec& spec, mp::Bits bits, double tolerance) {
  if (!spec.base().is_connected()) throw InvalidSpec("base graph is disconnected");
  if (spec.jump_count() == 0) throw InvalidSpec("spec has no jumps");
  const IntPolynomial Q = build_Q(spec);
  // h(w) = Q(w) / (w - 1); log|Q(cos 2 pi t)| = log|h(cos 2 pi t)| + log(1 - cos 2 pi t)
  // and the second term integrates to -log 2 over [0, 1].
  const IntPolynomial h = exact_div(Q, IntPolynomial{-1, 1});
  const mp::Real two_pi = mp::pi(bits) * 2;

  // Integrand is symmetric under t -> 1 - t; integrate over [0, 1/2].
  std::vector<mp::Real> breaks{mp::Real(0L, bits), mp::Real(1L, bits) / 2};
  const mp::Real im_tol = mp::exp2i(-static_cast<long>(bits) / 2, bits);
  for (const auto& root : find_roots(h, bits)) {
    if (!(mp::abs(root.value.im) < im_tol)) continue;
    const mp::Real& w = root.value.re;
    if (w < mp::Real(-1L, bits) || w > mp::Real(1L, bits)) continue;
    breaks.push_back(mp::acos(w) / two_pi);
  }
  std::sort(breaks.begin(), breaks.end());

  auto integrand = [&](const mp::Real& t) {
    return mp::log(mp::abs(evaluate(h, mp::cos(two_pi * t))));
  };
  QuadratureOptions opts;
  opts.tolerance = tolerance > 0.0 ? tolerance : std::ldexp(1.0, -static_cast<int>(bits / 4));
  const QuadratureResult r = integrate_adaptive(integrand, breaks, bits, opts);
  return mp::exp(r.value * 2) / 2;
}

bool AsymptoticReport::discrepancy_decreasing() const {
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].discrepancy < samples[i - 1].discrepancy)) return false;
  return true;
}

AsymptoticReport check_asymptotics(const FoliationSpec& spec, const std::vector<long>& n_list, mp::Bits bits) {
  require_gcd_hypothesis(spec);
  AsymptoticReport rep{mahler_from_roots(spec, bits), mahler_from_integral(spec, bits), q_sum_squares(spec),
                       tau_base(spec.base()), {}};
  const mp::Real q(rep.q, bits);
  const mp::Real tau_H(rep.tau_H, bits);
  for (long n : n_list) {
    AsymptoticSample s{n, tau_exact(spec, n).tau, mp::Real(bits), mp::Real(bits), mp::Real(bits)};
    const mp::Real denom = mp::Real(n, bits) * mp::pow(rep.A_roots, static_cast<unsigned long>(n));
    s.ratio = mp::Real(s.tau, bits) * q / denom;
    s.ratio_with_tau_H = s.ratio / tau_H;
    s.discrepancy = mp::abs(1 - s.ratio);
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

mp::Real min_Q_on_unit_circle(const FoliationSpec& spec, std::size_t samples, mp::Bits bits) {
  const IntPolynomial Q = build_Q(spec);
  const mp::Real two_pi = mp::pi(bits) * 2;
  mp::Real best(bits);
  for (std::size_t k = 0; k < samples; ++k) {
    const mp::Real t = mp::Real(static_cast<long>(k), bits) / static_cast<long>(samples);
    mp::Real v = evaluate(Q, mp::cos(two_pi * t));
    if (k == 0 || v < best) best = std::move(v);
  }
  return best;
}

}  // namespace circfol
