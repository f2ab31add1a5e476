#include "circfol/kirchhoff.hpp"

#include <stdexcept>

namespace circfol {

IntMatrix laplacian(const Multigraph& g) {
  IntMatrix L(g.vertex_count(), g.vertex_count(), BigInt(0));
  for (const auto& e : g.edges()) {
    L(e.u, e.u) += e.multiplicity;
    L(e.v, e.v) += e.multiplicity;
    L(e.u, e.v) -= e.multiplicity;
    L(e.v, e.u) -= e.multiplicity;
  }
  return L;
}

BigInt det_fraction_free(const IntMatrix& mat) {
  if (!mat.is_square())
    throw std::invalid_argument("det_fraction_free: " + std::to_string(mat.rows()) + "x" +
                                std::to_string(mat.cols()) + " matrix is not square");
  return det_bareiss(mat, BigInt(1));
}

BigInt tau_oracle(const Multigraph& g, std::size_t deleted) {
  if (deleted >= g.vertex_count()) throw std::out_of_range("tau_oracle: deleted index out of range");
  if (g.vertex_count() == 1) return 1;
  return det_fraction_free(laplacian(g).minor(deleted, deleted));
}

BigInt tau_base(const BaseGraph& base) { return tau_oracle(Multigraph::from_base(base)); }

}  // namespace circfol
