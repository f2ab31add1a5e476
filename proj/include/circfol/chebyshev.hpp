#pragma once

// Exact polynomial objects attached to a circulant foliation: the
// Chebyshev transform Q(w), the Laurent polynomial P(z), the shifted
// polynomial g(zeta) and the cover polynomials f_n(zeta).

#include "circfol/bigint.hpp"
#include "circfol/foliation.hpp"
#include "circfol/polynomial.hpp"

namespace circfol {

/// 2*T_k(w) via p_0 = 2, p_1 = 2w, p_{k+1} = 2w p_k - p_{k-1}.
IntPolynomial cheb_2T(unsigned long k);

/// Q(w) = det of the base's generalized Laplacian with diagonal
/// 2k_i + d_i - sum_j 2T_{s_ij}(w).
IntPolynomial build_Q(const FoliationSpec& spec);

/// P(z) = det with diagonal 2k_i + d_i - sum_j (z^{s_ij} + z^{-s_ij}).
IntLaurent build_P(const FoliationSpec& spec);

/// Q((z + 1/z)/2) expanded as a Laurent polynomial with rational
/// coefficients.
LaurentPolynomial<BigRational> joukowski_substitute(const IntPolynomial& q);

/// g(zeta) = Q((zeta + 2)/2) / zeta, sign-normalized to a positive leading
/// coefficient. The leading coefficient is empty_fiber_minor(spec), so g is
/// monic exactly when that minor is 1 (e.g. no empty fibers).
/// Throws NotDivisible when Q(1) != 0 and NonIntegerCoefficients when the
/// quotient is not an integer polynomial.
IntPolynomial shifted_g(const IntPolynomial& q);

/// f_n(zeta) = (j_n(zeta) - 2) / zeta with j_0 = 2, j_1 = zeta + 2,
/// j_{k+1} = (zeta + 2) j_k - j_{k-1}. Monic of degree n - 1.
IntPolynomial f_n(unsigned long n);

/// det of the base Laplacian restricted to the vertices whose fiber is empty
/// (1 when there are none). |lead Q| = 2^s times this.
BigInt empty_fiber_minor(const FoliationSpec& spec);

struct Lemma1Report {
  IntPolynomial Q;
  BigInt q;
  BigInt tau_H;
  BigInt Q_at_1;
  BigInt dQ_at_1;
  BigInt expected_dQ_at_1;  // -2 q tau(H)
  long degree = 0;
  long expected_degree = 0;  // sum of largest jumps
  BigInt lead;
  /// (-1)^m 2^s, the value usually quoted; wrong when a fiber is empty
  BigInt stated_lead;
  BigInt empty_fiber_minor;
  /// (-1)^(m - e) 2^s det L_H[E], E the e vertices with empty fibers
  BigInt expected_lead;

  bool root_at_one() const { return Q_at_1 == 0; }
  bool derivative_ok() const { return dQ_at_1 == expected_dQ_at_1; }
  bool degree_ok() const { return degree == expected_degree; }
  bool lead_ok() const { return lead == expected_lead; }
  bool stated_lead_ok() const { return lead == stated_lead; }
  bool ok() const { return root_at_one() && derivative_ok() && degree_ok() && lead_ok(); }
};

/// Evaluates the four exact identities on Q. Requires a connected base and
/// at least one jump (InvalidSpec otherwise); a failed identity is reported,
/// not thrown.
Lemma1Report check_lemma1(const FoliationSpec& spec);

}  // namespace circfol
