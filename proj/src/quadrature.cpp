#include "circfol/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "circfol/errors.hpp"

namespace circfol {

GaussLegendreRule gauss_legendre(std::size_t order, mp::Bits bits) {
  GaussLegendreRule rule;
  rule.nodes.resize(order, mp::Real(bits));
  rule.weights.resize(order, mp::Real(bits));
  const mp::Real eps = mp::exp2i(-static_cast<long>(bits) + 8, bits);
  const auto n = static_cast<long>(order);
  const std::size_t half = (order + 1) / 2;

  for (std::size_t i = 0; i < half; ++i) {
    mp::Real x(std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5)), bits);
    mp::Real dp(bits);
    for (int iter = 0; iter < 100; ++iter) {
      // P_n(x) and P_n'(x) by the three-term recurrence
      mp::Real p0(1L, bits);
      mp::Real p1 = x;
      for (long k = 2; k <= n; ++k) {
        mp::Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      mp::Real step = p1 / dp;
      x -= step;
      if (mp::abs(step) < eps) break;
    }
    mp::Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

namespace {

struct Panel {
  mp::Real a;
  mp::Real b;
  mp::Real left;   // rule on [a, mid]
  mp::Real right;  // rule on [mid, b]
  mp::Real value;  // left + right
  double error;
};

mp::Real apply_rule(const GaussLegendreRule& rule, const std::function<mp::Real(const mp::Real&)>& f,
                    const mp::Real& a, const mp::Real& b) {
  const mp::Real half = (b - a) / 2;
  const mp::Real mid = (a + b) / 2;
  mp::Real sum(a.bits());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<mp::Real(const mp::Real&)>& f,
                                    const std::vector<mp::Real>& breakpoints, mp::Bits bits,
                                    const QuadratureOptions& options) {
  if (breakpoints.size() < 2) throw std::invalid_argument("integrate_adaptive needs at least two breakpoints");
  const GaussLegendreRule rule = gauss_legendre(options.order, bits);

  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::vector<Panel> heap;

  // A panel's error is judged against its two halves, so each entry stores
  // the refined (two-half) value.
  auto make_panel = [&](const mp::Real& a, const mp::Real& b, const mp::Real& whole) {
    const mp::Real mid = (a + b) / 2;
    mp::Real left = apply_rule(rule, f, a, mid);
    mp::Real right = apply_rule(rule, f, mid, b);
    mp::Real refined = left + right;
    double err = mp::abs(refined - whole).to_double();
    return Panel{a, b, std::move(left), std::move(right), std::move(refined), err};
  };

  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const mp::Real& a = breakpoints[i];
    const mp::Real& b = breakpoints[i + 1];
    if (!(a < b)) continue;
    heap.push_back(make_panel(a, b, apply_rule(rule, f, a, b)));
    std::push_heap(heap.begin(), heap.end(), by_error);
  }

  auto total_error = [&] {
    double e = 0.0;
    for (const auto& p : heap) e += p.error;
    return e;
  };

  while (total_error() > options.tolerance) {
    if (heap.size() >= options.max_panels)
      throw QuadratureNotConverged("adaptive quadrature did not reach tolerance " +
                                   std::to_string(options.tolerance) + " within " +
                                   std::to_string(options.max_panels) + " panels");
    std::pop_heap(heap.begin(), heap.end(), by_error);
    Panel worst = std::move(heap.back());
    heap.pop_back();
    const mp::Real mid = (worst.a + worst.b) / 2;
    heap.push_back(make_panel(worst.a, mid, worst.left));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(make_panel(mid, worst.b, worst.right));
    std::push_heap(heap.begin(), heap.end(), by_error);
  }

  QuadratureResult out{mp::Real(bits), total_error(), heap.size()};
  // sum in panel order for reproducibility
  std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : heap) out.value += p.value;
  return out;
}

}  // namespace circfol
