#pragma once

#include <utility>
#include <vector>

#include "circfol/mpreal.hpp"
#include "circfol/polynomial.hpp"

namespace circfol {

/// Yun's square-free decomposition: p = c * prod_i h_i^i with each h_i
/// square-free, primitive and pairwise coprime. Returns (h_i, i) for the
/// non-constant factors.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

struct PolyRoot {
  mp::Complex value;
  int multiplicity = 1;
};

/// All complex roots of p, grouped by multiplicity. Each square-free factor
/// is seeded with companion-matrix eigenvalues in double precision and then
/// polished to `bits` with simultaneous Aberth-Ehrlich iterations.
/// Throws PrecisionExhausted if the iteration does not settle.
std::vector<PolyRoot> find_roots(const IntPolynomial& p, mp::Bits bits);

mp::Real evaluate(const IntPolynomial& p, const mp::Real& x);
mp::Complex evaluate(const IntPolynomial& p, const mp::Complex& x);

}  // namespace circfol
