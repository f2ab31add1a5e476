#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "circfol/mpreal.hpp"

namespace circfol {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton on P_N
/// at the requested precision.
struct GaussLegendreRule {
  std::vector<mp::Real> nodes;
  std::vector<mp::Real> weights;
};

GaussLegendreRule gauss_legendre(std::size_t order, mp::Bits bits);

struct QuadratureResult {
  mp::Real value;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

struct QuadratureOptions {
  std::size_t order = 20;
  double tolerance = 1e-20;
  std::size_t max_panels = 20000;
};

/// Globally adaptive Gauss-Legendre: the panel with the largest error
/// estimate (|I(panel) - I(left) - I(right)|) is bisected until the summed
/// estimate drops below the tolerance. Integrable endpoint singularities
/// are handled by repeated bisection toward them. The initial panels are
/// the consecutive intervals of `breakpoints` (sorted, at least two).
/// Throws QuadratureNotConverged when max_panels is reached.
QuadratureResult integrate_adaptive(const std::function<mp::Real(const mp::Real&)>& f,
                                    const std::vector<mp::Real>& breakpoints, mp::Bits bits,
                                    const QuadratureOptions& options = {});

}  // namespace circfol
