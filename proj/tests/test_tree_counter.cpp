#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circfol/chebyshev.hpp"
#include "circfol/kirchhoff.hpp"
#include "circfol/tree_counter.hpp"
#include "fixtures.hpp"

using namespace circfol;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

BigInt fib(long n) {
  BigInt a = 0, b = 1;
  for (long i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST_CASE("resultant") {
  CHECK(resultant(poly({-1, 1}), poly({1, 1})) == 2);
  CHECK(resultant(poly({-1, 0, 1}), poly({0, 1})) == -1);
  CHECK(resultant(f_n(5), poly({5, 1})) == 25);
  CHECK(resultant(poly({5, 1}), f_n(5)) == 25);
  // Res(p, q) = (-1)^{deg p deg q} Res(q, p)
  CHECK(resultant(poly({1, 0, 2}), poly({3, 1, 0, 1})) == resultant(poly({3, 1, 0, 1}), poly({1, 0, 2})));
  CHECK(resultant(poly({1, 1}), poly({-2, 1, 1})) == -2);
  // common root
  CHECK(resultant(poly({-1, 0, 1}), poly({-1, 1})) == 0);
}

TEST_CASE("exact counts") {
  for (long n = 3; n <= 20; ++n) CHECK(tau_exact(circulant_family({1}), n).tau == n);
  CHECK(tau_exact(circulant_family({1, 2}), 5).tau == 125);
  CHECK(tau_exact(gp_family(2), 5).tau == 2000);
  CHECK(tau_exact(gp_family(1), 4).tau == 384);
  CHECK(tau_exact(gp_family(1), 3).tau == 75);
  for (long n = 3; n <= 15; ++n) CHECK(tau_exact(circulant_family({1, 2}), n).tau == BigInt(n) * fib(n) * fib(n));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(tau_exact(circulant_family({2}), 4), DisconnectedCover);
  CHECK_THROWS_AS(tau_exact(circulant_family({1, 5}), 5), TheoremDomain);
  CHECK_THROWS_AS(tau_exact(circulant_family({1}), 2), InvalidSpec);
  CHECK_THROWS_AS(tau_exact(FoliationSpec(BaseGraph(2, {0, 0, 0, 0}), {FiberSpec{1}, FiberSpec{1}}), 5),
                  InvalidSpec);
  CHECK_THROWS_AS(tau_spectral_roots(circulant_family({2}), 6), DisconnectedCover);
  CHECK_THROWS_AS(tau_spectral_eps(circulant_family({2}), 6), DisconnectedCover);
}

TEST_CASE("spectral routes") {
  TauResult r = tau_spectral_roots(circulant_family({1, 2}), 4);
  CHECK(r.tau == 36);

  TauResult g = tau_spectral_roots(gp_family(1), 4, 128);
  CHECK(g.tau == 384);
  REQUIRE(g.diagnostics);
  CHECK(g.diagnostics->residual < 1e-20);
  CHECK(g.diagnostics->bits == 128);

  CHECK(tau_spectral_roots(torus_family(3), 3).tau == tau_oracle(expand_cover(torus_family(3), 3)));

  CHECK(tau_spectral_eps(circulant_family({1}), 6).tau == 6);
  CHECK(tau_spectral_eps(gp_family(2), 5).tau == 2000);
  const FoliationSpec y = ygraph_family({{1}, {1}, {1}});
  CHECK(tau_spectral_eps(y, 7).tau == tau_oracle(expand_cover(y, 7)));
}

TEST_CASE("all routes agree with the oracle on random specs") {
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    const FoliationSpec spec = testing::random_spec(rng);
    for (long n = 3; n <= 9; ++n) {
      if (!is_cover_connected(spec, n) || !jumps_nonzero_mod(spec, n)) continue;
      const BigInt oracle = tau_by_oracle(spec, n).tau;
      CAPTURE(t);
      CAPTURE(n);
      CHECK(tau_exact(spec, n).tau == oracle);
      CHECK(tau_spectral_roots(spec, n).tau == oracle);
      CHECK(tau_spectral_eps(spec, n).tau == oracle);
    }
  }
}

TEST_CASE("colliding jumps stack multiplicities and the closed formula still holds") {
  // 4 = -1 mod 5, 2 = -1 mod 3, 5 = -1 mod 6, 3 = -1 mod 4
  const std::vector<std::pair<FoliationSpec, long>> cases{{circulant_family({1, 4}), 5},
                                                          {circulant_family({1, 2}), 3},
                                                          {circulant_family({1, 5}), 6},
                                                          {circulant_family({1, 3}), 4},
                                                          {sandwich_family({{1, 2}, {2}, {1}}), 3}};
  for (const auto& [spec, n] : cases) {
    CAPTURE(n);
    REQUIRE_FALSE(jumps_injective_mod(spec, n));
    CHECK(tau_exact(spec, n).tau == tau_by_oracle(spec, n).tau);
  }
  CHECK(tau_exact(circulant_family({1, 4}), 5).tau == 80);
}

TEST_CASE("oracle on a disconnected cover") {
  CHECK(tau_by_oracle(circulant_family({2}), 6).tau == 0);
  CHECK_THROWS_AS(tau_by_oracle(circulant_family({3}), 3), DegenerateJump);
}

TEST_CASE("z lift") {
  mp::Complex w(mp::Real(-3L, 256) / 2, mp::Real(0L, 256));
  mp::Complex z = lift_to_z(w);
  const mp::Real phi2 = (3 + mp::sqrt(mp::Real(5L, 256))) / 2;
  CHECK(mp::abs(mp::abs(z) - phi2) < mp::exp2i(-200, 256));
}
