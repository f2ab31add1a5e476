#pragma once

// Growth constant of tau(n): the Mahler measure A of P(z), computed from
// the roots of Q and, independently, as exp of the mean of log|Q(cos 2 pi t)|.

#include <cstddef>
#include <vector>

#include "circfol/bigint.hpp"
#include "circfol/foliation.hpp"
#include "circfol/mpreal.hpp"

namespace circfol {

/// Throws HypothesisViolation unless the spec has jumps with gcd 1.
void require_gcd_hypothesis(const FoliationSpec& spec);

/// z_j with |z_j| > 1 for every root w_j != 1 of Q (repeated according to
/// multiplicity). Retries at doubled precision up to 4096 bits before
/// throwing UnitCircleRoot when some |z_j| is within 2^(-bits/4) of 1.
std::vector<mp::Complex> roots_outside_unit(const FoliationSpec& spec, mp::Bits bits = mp::kDefaultBits);

/// c * prod |z_j| over roots_outside_unit, where c = empty_fiber_minor(spec)
/// is the leading coefficient of z^s P(z).
mp::Real mahler_from_roots(const FoliationSpec& spec, mp::Bits bits = mp::kDefaultBits);

/// exp(integral_0^1 log|Q(cos 2 pi t)| dt). The endpoint singularity from
/// the simple root w = 1 is removed analytically; interior zeros of Q on
/// [-1, 1] become panel breakpoints. Default tolerance is 2^(-bits/4).
mp::Real mahler_from_integral(const FoliationSpec& spec, mp::Bits bits = mp::kDefaultBits,
                              double tolerance = 0.0);

struct AsymptoticSample {
  long n = 0;
  BigInt tau;
  /// tau(n) * q / (n * A^n); tends to 1.
  mp::Real ratio;
  /// tau(n) * q / (n * tau(H) * A^n); tends to 1 / tau(H).
  mp::Real ratio_with_tau_H;
  /// |1 - ratio|
  mp::Real discrepancy;
};

struct AsymptoticReport {
  mp::Real A_roots;
  mp::Real A_integral;
  BigInt q;
  BigInt tau_H;
  std::vector<AsymptoticSample> samples;

  /// |1 - ratio| strictly decreasing along the samples (in the given order).
  bool discrepancy_decreasing() const;
};

AsymptoticReport check_asymptotics(const FoliationSpec& spec, const std::vector<long>& n_list,
                                   mp::Bits bits = mp::kDefaultBits);

/// min over t = k / samples (k = 0..samples-1) of Q(cos 2 pi t).
mp::Real min_Q_on_unit_circle(const FoliationSpec& spec, std::size_t samples, mp::Bits bits = mp::kDefaultBits);

}  // namespace circfol
