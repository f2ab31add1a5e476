#include "circfol/polynomial.hpp"

namespace circfol {

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw InternalError("polynomial division by zero");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw NotDivisible("polynomial quotient is not exact");

  std::vector<BigInt> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  std::vector<BigInt> quot(rem.size() - dn + 1);
  const BigInt& lead = d.back();

  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()) == 0)
      throw NotDivisible("polynomial quotient has non-integer coefficients");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d[j];
    quot[k] = q;
  }
  for (const auto& r : rem)
    if (r != 0) throw NotDivisible("polynomial quotient is not exact");
  return IntPolynomial(std::move(quot));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.is_zero()) throw InternalError("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPolynomial(), num};

  std::vector<BigRational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dn = d.size();
  std::vector<BigRational> quot(rem.size() - dn + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRational q = rem[k + dn - 1] / d.back();
    if (q == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d[j];
    quot[k] = q;
  }
  rem.resize(dn - 1);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

namespace {

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  BigRational inv = 1 / p.lead();
  return p * inv;
}

}  // namespace

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt den_lcm = 1;
  for (const auto& v : p.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<BigInt> c;
  BigInt content = 0;
  for (const auto& v : p.coefficients()) {
    BigRational scaled = v * BigRational(den_lcm);
    c.push_back(scaled.get_num());
    content = big_gcd(content, c.back());
  }
  if (c.back() < 0) content = -content;
  for (auto& v : c) v /= content;
  return IntPolynomial(std::move(c));
}

RatPolynomial compose_linear(const RatPolynomial& p, const BigRational& a, const BigRational& b) {
  RatPolynomial lin{b, a};
  RatPolynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + RatPolynomial::constant(*it);
  return acc;
}

}  // namespace circfol
