#include "circfol/arithmetic.hpp"

#include <sstream>

#include "circfol/chebyshev.hpp"
#include "circfol/dense_matrix.hpp"
#include "circfol/kirchhoff.hpp"
#include "circfol/tree_counter.hpp"

namespace circfol {

BigInt q_sum_squares(const FoliationSpec& spec) {
  BigInt q = 0;
  for (const auto& f : spec.fibers())
    for (Jump s : f.jumps()) q += BigInt(s) * s;
  return q;
}

BigInt q_minus_one(const FoliationSpec& spec) {
  const std::size_t m = spec.vertex_count();
  const BaseGraph& base = spec.base();
  IntMatrix W(m, m, BigInt(0));
  for (std::size_t i = 0; i < m; ++i) {
    long odd = 0;
    for (Jump s : spec.fiber(i).jumps()) odd += s % 2;
    W(i, i) = base.degree(i) + 4 * odd;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) W(i, j) = -base.multiplicity(i, j);
  }
  BigInt det = det_fraction_free(W);
  BigInt direct = build_Q(spec).eval(BigInt(-1));
  if (det != direct)
    throw InternalError("Q(-1) mismatch: determinant " + det.get_str() + " vs polynomial " + direct.get_str());
  return det;
}

SquareFreeSplit square_free_part(const BigInt& v, unsigned long bound) {
  if (v < 1) throw std::invalid_argument("square_free_part needs a positive integer");
  BigInt rest = v;
  BigInt p = 1;
  BigInt r = 1;
  unsigned long d = 2;
  for (; d <= bound && BigInt(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) r *= d;
    if (e % 2 == 1) p *= d;
  }
  if (rest == 1) return {p, r};
  // Either the loop ran out of candidates below sqrt(rest) (rest is prime)
  // or hit the bound.
  if (BigInt(d) * d > rest) return {p * rest, r};
  BigInt root;
  if (exact_sqrt(rest, root)) return {p, r * root};
  throw FactorizationLimit("cofactor " + rest.get_str() + " has no factor below " + std::to_string(bound) +
                           " and is not a perfect square");
}

TauDecomposition decompose_tau(const FoliationSpec& spec, long n) {
  TauDecomposition out;
  out.n = n;
  out.parity = n % 2 == 0 ? Parity::even : Parity::odd;
  out.tau = tau_exact(spec, n).tau;
  out.tau_H = tau_base(spec.base());
  out.p = out.parity == Parity::odd ? BigInt(1) : square_free_part(q_minus_one(spec)).p;

  const BigInt denom = out.p * n * out.tau_H;
  if (mpz_divisible_p(out.tau.get_mpz_t(), denom.get_mpz_t()) == 0)
    throw NotPerfectSquare("tau(" + std::to_string(n) + ") is not divisible by p*n*tau(H)");
  const BigInt quotient = out.tau / denom;
  if (!exact_sqrt(quotient, out.a))
    throw NotPerfectSquare("tau(" + std::to_string(n) + ")/(p*n*tau(H)) = " + quotient.get_str() +
                           " is not a perfect square");
  return out;
}

bool Theorem2Report::all_ok() const {
  for (const auto& r : rows)
    if (r.connected && r.in_domain && !r.ok) return false;
  return true;
}

std::vector<BigInt> Theorem2Report::a_sequence() const {
  std::vector<BigInt> out;
  for (const auto& r : rows)
    if (r.decomposition) out.push_back(r.decomposition->a);
  return out;
}

Theorem2Report verify_theorem2(const FoliationSpec& spec, long n_from, long n_to) {
  Theorem2Report report;
  for (long n = std::max(n_from, 3L); n <= n_to; ++n) {
    Theorem2Row row;
    row.n = n;
    row.connected = is_cover_connected(spec, n);
    row.in_domain = jumps_nonzero_mod(spec, n);
    if (!row.connected) {
      row.note = "cover disconnected";
    } else if (!row.in_domain) {
      row.note = "a jump is 0 mod n";
    } else {
      try {
        row.decomposition = decompose_tau(spec, n);
        row.ok = true;
      } catch (const Error& e) {
        row.note = e.what();
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

const char* parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::string theorem2_csv(const Theorem2Report& report) {
  std::ostringstream os;
  os << "n,parity,tau,p,a,ok\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << (r.n % 2 == 0 ? "even" : "odd") << ',';
    if (r.decomposition) {
      const auto& d = *r.decomposition;
      os << d.tau.get_str() << ',' << d.p.get_str() << ',' << d.a.get_str();
    } else {
      os << ",,";
    }
    os << ',' << (r.ok ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace circfol
