#pragma once

#include <cstddef>

#include "circfol/bigint.hpp"
#include "circfol/dense_matrix.hpp"
#include "circfol/foliation.hpp"

namespace circfol {

/// L = D - A with degrees and adjacency counted with multiplicity.
IntMatrix laplacian(const Multigraph& g);

/// Exact determinant (Bareiss). Throws std::invalid_argument for a
/// non-square matrix.
BigInt det_fraction_free(const IntMatrix& mat);

/// Number of spanning trees via the matrix-tree theorem: the determinant of
/// the Laplacian with row and column `deleted` removed. Zero iff g is
/// disconnected.
BigInt tau_oracle(const Multigraph& g, std::size_t deleted = 0);

/// tau of the base graph of a foliation.
BigInt tau_base(const BaseGraph& base);

}  // namespace circfol
