#include "circfol/roots.hpp"

#include <Eigen/Dense>

#include <complex>

namespace circfol {

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() < 1) return out;

  RatPolynomial f = to_rational(p);
  RatPolynomial df = f.derivative();
  RatPolynomial b = gcd(f, df);
  RatPolynomial c = divmod(f, b).first;
  RatPolynomial d = divmod(df, b).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    RatPolynomial a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(primitive_part(a), i);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
  }
  return out;
}

mp::Real evaluate(const IntPolynomial& p, const mp::Real& x) {
  mp::Real acc(x.bits());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + mp::Real(*it, x.bits());
  return acc;
}

mp::Complex evaluate(const IntPolynomial& p, const mp::Complex& x) {
  mp::Complex acc(x.bits());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x;
    acc.re += mp::Real(*it, x.bits());
  }
  return acc;
}

namespace {

std::vector<std::complex<double>> companion_eigenvalues(const IntPolynomial& h) {
  const auto d = static_cast<Eigen::Index>(h.degree());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const double lead = h.lead().get_d();
  for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < d; ++i)
    companion(i, d - 1) = -h.coeff(static_cast<std::size_t>(i)).get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < d; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

// Simultaneous Aberth-Ehrlich refinement of all roots of a square-free h.
std::vector<mp::Complex> aberth(const IntPolynomial& h, std::vector<mp::Complex> z, mp::Bits bits) {
  const IntPolynomial dh = h.derivative();
  std::vector<BigInt> abs_coeffs;
  for (const auto& c : h.coefficients()) abs_coeffs.push_back(big_abs(c));
  const IntPolynomial habs(std::move(abs_coeffs));
  const std::size_t d = z.size();
  const mp::Real tol = mp::exp2i(-static_cast<long>(bits) + 12, bits);
  // rounding noise of Horner's rule, relative to sum |a_i| |z|^i
  const mp::Real noise = mp::exp2i(-static_cast<long>(bits) + 4, bits) * static_cast<long>(d + 1);
  const int max_iter = 100 + 4 * static_cast<int>(bits);

  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    std::vector<mp::Complex> next = z;
    for (std::size_t k = 0; k < d; ++k) {
      mp::Complex pv = evaluate(h, z[k]);
      if (mp::abs(pv).is_zero()) continue;
      mp::Complex ratio = pv / evaluate(dh, z[k]);
      mp::Complex repulsion(bits);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) repulsion += mp::Complex(mp::Real(1L, bits)) / (z[k] - z[j]);
      mp::Complex denom = mp::Complex(mp::Real(1L, bits)) - ratio * repulsion;
      mp::Complex step = ratio / denom;
      next[k] = z[k] - step;
      mp::Real scale = mp::abs(z[k]);
      if (scale < mp::Real(1L, bits)) scale = mp::Real(1L, bits);
      // A step above tolerance still counts as converged when |h(z)| is
      // already at the evaluation noise (ill-conditioned clusters).
      if (mp::abs(step) > tol * scale && mp::abs(pv) > noise * evaluate(habs, mp::abs(z[k]))) converged = false;
    }
    z = std::move(next);
    if (converged) return z;
  }
  throw PrecisionExhausted("root refinement did not converge at " + std::to_string(bits) + " bits");
}

}  // namespace

std::vector<PolyRoot> find_roots(const IntPolynomial& p, mp::Bits bits) {
  std::vector<PolyRoot> out;
  for (const auto& [h, mult] : squarefree_decomposition(p)) {
    if (h.degree() == 1) {
      mp::Real r = -mp::Real(h.coeff(0), bits) / mp::Real(h.coeff(1), bits);
      out.push_back({mp::Complex(r), mult});
      continue;
    }
    std::vector<mp::Complex> start;
    const auto seeds = companion_eigenvalues(h);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      // a tiny deterministic offset keeps coincident double seeds apart
      const double nudge = 1e-9 * static_cast<double>(i + 1);
      start.push_back({mp::Real(seeds[i].real() + nudge, bits), mp::Real(seeds[i].imag() + nudge, bits)});
    }
    for (auto& z : aberth(h, std::move(start), bits)) out.push_back({std::move(z), mult});
  }
  return out;
}

}  // namespace circfol
