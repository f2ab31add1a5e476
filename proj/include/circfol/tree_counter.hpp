#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circfol/bigint.hpp"
#include "circfol/foliation.hpp"
#include "circfol/mpreal.hpp"
#include "circfol/polynomial.hpp"
#include "circfol/roots.hpp"

namespace circfol {

enum class Route { resultant, spectral_roots, spectral_eps, oracle };

const char* route_name(Route r);

struct FloatDiagnostics {
  /// |value - nearest integer| of the accepted evaluation.
  double residual = 0.0;
  /// Precision at which the value was accepted.
  mp::Bits bits = 0;
};

struct TauResult {
  long n = 0;
  BigInt tau;
  Route route = Route::resultant;
  std::optional<FloatDiagnostics> diagnostics;
};

/// Res(p, q) = lead(p)^{deg q} * prod_{p(a)=0} q(a), as the Sylvester
/// determinant.
BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

/// Throws InvalidSpec / DisconnectedCover / TheoremDomain when (spec, n) is
/// outside the range where the closed formulas apply.
void require_theorem_domain(const FoliationSpec& spec, long n);

/// Roots w != 1 of Q(w) (the simple root at 1 is divided out exactly),
/// with multiplicity; there are deg(Q) - 1 of them counted that way.
std::vector<PolyRoot> nonunit_roots(const IntPolynomial& Q, mp::Bits bits);

/// z with z + 1/z = 2w and |z| >= 1 (principal branch, inverted if needed).
mp::Complex lift_to_z(const mp::Complex& w);

/// tau(n) = n * tau(H) * |Res(g, f_n)|.
TauResult tau_exact(const FoliationSpec& spec, long n);

/// tau(n) = (n / q) * c^n * prod_p |z_p^n + z_p^{-n} - 2| over the roots
/// w_p != 1 of Q, with z_p + 1/z_p = 2 w_p and c = empty_fiber_minor(spec). Starts at `bits` and doubles up to
/// `max_bits` until the value is within 0.25 of an integer.
TauResult tau_spectral_roots(const FoliationSpec& spec, long n, mp::Bits bits = mp::kDefaultBits,
                             mp::Bits max_bits = 4096);

/// tau(n) = (tau(H) / n) * prod_{j=1}^{n-1} P(e^{2 pi i j / n}).
TauResult tau_spectral_eps(const FoliationSpec& spec, long n, mp::Bits bits = mp::kDefaultBits,
                           mp::Bits max_bits = 4096);

/// Matrix-tree count on the explicit cover. Also defined for disconnected
/// covers (returns 0); a jump that is 0 mod n throws DegenerateJump.
TauResult tau_by_oracle(const FoliationSpec& spec, long n);

}  // namespace circfol
