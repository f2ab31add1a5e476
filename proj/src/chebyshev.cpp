#include "circfol/chebyshev.hpp"

#include "circfol/arithmetic.hpp"
#include "circfol/dense_matrix.hpp"
#include "circfol/kirchhoff.hpp"

namespace circfol {

IntPolynomial cheb_2T(unsigned long k) {
  IntPolynomial prev = IntPolynomial::constant(2);
  if (k == 0) return prev;
  const IntPolynomial two_w{0, 2};
  IntPolynomial cur = two_w;
  for (unsigned long i = 1; i < k; ++i) {
    IntPolynomial next = two_w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial build_Q(const FoliationSpec& spec) {
  const std::size_t m = spec.vertex_count();
  const BaseGraph& base = spec.base();
  DenseMatrix<IntPolynomial> mat(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const FiberSpec& f = spec.fiber(i);
    IntPolynomial x = IntPolynomial::constant(BigInt(2 * static_cast<long>(f.size()) + base.degree(i)));
    for (Jump s : f.jumps()) x -= cheb_2T(static_cast<unsigned long>(s));
    mat(i, i) = std::move(x);
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) mat(i, j) = IntPolynomial::constant(BigInt(-base.multiplicity(i, j)));
  }
  return det_bareiss(std::move(mat), IntPolynomial::constant(1));
}

IntLaurent build_P(const FoliationSpec& spec) {
  // Row i is multiplied by z^{S_i} (S_i the largest jump of fiber i) so the
  // matrix is polynomial; the determinant is then divided by z^s.
  const std::size_t m = spec.vertex_count();
  const BaseGraph& base = spec.base();
  DenseMatrix<IntPolynomial> mat(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const FiberSpec& f = spec.fiber(i);
    const auto top = static_cast<std::size_t>(f.max_jump());
    std::vector<BigInt> diag(2 * top + 1, BigInt(0));
    diag[top] = 2 * static_cast<long>(f.size()) + base.degree(i);
    for (Jump s : f.jumps()) {
      diag[top + static_cast<std::size_t>(s)] -= 1;
      diag[top - static_cast<std::size_t>(s)] -= 1;
    }
    mat(i, i) = IntPolynomial(std::move(diag));
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) mat(i, j) = IntPolynomial::monomial(BigInt(-base.multiplicity(i, j)), top);
  }
  IntPolynomial det = det_bareiss(std::move(mat), IntPolynomial::constant(1));
  return IntLaurent(det, -spec.total_max_jump());
}

LaurentPolynomial<BigRational> joukowski_substitute(const IntPolynomial& q) {
  // ((z + 1/z)/2)^k = 2^{-k} sum_j C(k, j) z^{k - 2j}
  const long deg = q.degree();
  if (deg < 0) return {};
  std::vector<BigRational> c(static_cast<std::size_t>(2 * deg + 1), BigRational(0));
  for (long k = 0; k <= deg; ++k) {
    const BigInt& a = q.coefficients()[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    BigInt binom = 1;
    const BigInt pow2 = big_pow(BigInt(2), static_cast<unsigned long>(k));
    for (long j = 0; j <= k; ++j) {
      c[static_cast<std::size_t>(deg + k - 2 * j)] += BigRational(a * binom, pow2);
      binom = binom * (k - j) / (j + 1);
    }
  }
  for (auto& v : c) v.canonicalize();
  return LaurentPolynomial<BigRational>(-deg, std::move(c));
}

IntPolynomial shifted_g(const IntPolynomial& q) {
  // w = (zeta + 2)/2 = zeta/2 + 1
  RatPolynomial shifted = compose_linear(to_rational(q), BigRational(1, 2), BigRational(1));
  if (shifted.is_zero() || shifted.coeff(0) != 0)
    throw NotDivisible("Q((zeta+2)/2) is not divisible by zeta: Q(1) != 0");

  std::vector<BigInt> g;
  const auto& c = shifted.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i) {
    BigRational v = c[i];
    v.canonicalize();
    if (v.get_den() != 1)
      throw NonIntegerCoefficients("Q((zeta+2)/2)/zeta has non-integer coefficient " + v.get_str());
    g.push_back(v.get_num());
  }
  IntPolynomial out(std::move(g));
  if (out.lead() < 0) out *= BigInt(-1);
  if (out.coeff(0) == 0) throw NotDivisible("w = 1 is a multiple root of Q");
  return out;
}

IntPolynomial f_n(unsigned long n) {
  if (n == 0) throw std::invalid_argument("f_n requires n >= 1");
  const IntPolynomial zeta_plus_2{2, 1};
  IntPolynomial prev = IntPolynomial::constant(2);
  IntPolynomial cur = zeta_plus_2;
  for (unsigned long i = 1; i < n; ++i) {
    IntPolynomial next = zeta_plus_2 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // j_n(0) = 2, so j_n - 2 has no constant term
  return exact_div(cur - IntPolynomial::constant(2), IntPolynomial{0, 1});
}

Lemma1Report check_lemma1(const FoliationSpec& spec) {
  if (!spec.base().is_connected()) throw InvalidSpec("base graph is disconnected");
  if (spec.jump_count() == 0) throw InvalidSpec("spec has no jumps");

  Lemma1Report r;
  r.Q = build_Q(spec);
  r.q = q_sum_squares(spec);
  r.tau_H = tau_base(spec.base());
  r.Q_at_1 = r.Q.eval(BigInt(1));
  r.dQ_at_1 = r.Q.derivative().eval(BigInt(1));
  r.expected_dQ_at_1 = -2 * r.q * r.tau_H;
  r.degree = r.Q.degree();
  r.expected_degree = spec.total_max_jump();
  r.lead = r.Q.lead();
  r.stated_lead = big_pow(BigInt(2), static_cast<unsigned long>(r.expected_degree));
  if (spec.vertex_count() % 2 == 1) r.stated_lead = -r.stated_lead;

  std::size_t empty = 0;
  for (const auto& f : spec.fibers()) empty += f.empty() ? 1 : 0;
  r.empty_fiber_minor = empty_fiber_minor(spec);
  r.expected_lead = big_pow(BigInt(2), static_cast<unsigned long>(r.expected_degree)) * r.empty_fiber_minor;
  if ((spec.vertex_count() - empty) % 2 == 1) r.expected_lead = -r.expected_lead;
  return r;
}

BigInt empty_fiber_minor(const FoliationSpec& spec) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < spec.vertex_count(); ++i)
    if (spec.fiber(i).empty()) idx.push_back(i);
  const BaseGraph& h = spec.base();
  IntMatrix a(idx.size(), idx.size(), BigInt(0));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      a(r, c) = r == c ? BigInt(h.degree(idx[r])) : BigInt(-h.multiplicity(idx[r], idx[c]));
  return det_fraction_free(a);
}

}  // namespace circfol
