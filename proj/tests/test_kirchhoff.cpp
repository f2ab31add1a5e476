#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "circfol/kirchhoff.hpp"
#include "fixtures.hpp"

using namespace circfol;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), BigInt(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("laplacian") {
  Multigraph c3 = expand_cover(circulant_family({1}), 3);
  CHECK(laplacian(c3) == from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  CHECK(laplacian(Multigraph(2, {{0, 1, 2}})) == from_rows({{2, -2}, {-2, 2}}));

  IntMatrix l = laplacian(expand_cover(circulant_family({1, 2}), 4));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(l(i, i) == 4);
    CHECK(l(i, (i + 2) % 4) == -2);
  }
}

TEST_CASE("fraction-free determinant") {
  CHECK(det_fraction_free(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(det_fraction_free(from_rows({{2, 1}, {1, 2}})) == 3);
  CHECK(det_fraction_free(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det_fraction_free(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(det_fraction_free(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_fraction_free(IntMatrix(2, 3)), std::invalid_argument);

  for (std::size_t k = 1; k <= 10; ++k) {
    IntMatrix a(k, k, BigInt(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = static_cast<long>((i * j) % 7) - 3;
    CAPTURE(k);
    CHECK(det_fraction_free(a) == testing::cofactor_det(a));
  }

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + static_cast<std::size_t>(t % 8);
    IntMatrix a(k, k, BigInt(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = entry(rng);
    CHECK(det_fraction_free(a) == testing::cofactor_det(a));
  }
}

TEST_CASE("matrix-tree counts") {
  CHECK(tau_oracle(expand_cover(circulant_family({1}), 5)) == 5);
  CHECK(tau_oracle(testing::complete_graph(4)) == 16);
  CHECK(tau_oracle(testing::petersen()) == 2000);
  CHECK(testing::deletion_contraction(testing::petersen()) == 2000);
  CHECK(tau_oracle(expand_cover(gp_family(2), 5)) == 2000);
  CHECK(tau_oracle(Multigraph(1, {})) == 1);
  CHECK(tau_oracle(Multigraph(3, {{0, 1, 1}})) == 0);
  CHECK_THROWS_AS(tau_oracle(Multigraph(3, {{0, 1, 1}}), 3), std::out_of_range);

  for (long n = 3; n <= 30; ++n) CHECK(tau_oracle(expand_cover(circulant_family({1}), n)) == n);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(tau_oracle(testing::complete_graph(n)) == big_pow(BigInt(n), n - 2));
}

TEST_CASE("tau_base") {
  CHECK(tau_base(testing::cycle_base(3)) == 3);
  CHECK(tau_base(BaseGraph::from_edges(2, {{0, 1, 3}})) == 3);
  CHECK(tau_base(BaseGraph::from_edges(1, {})) == 1);
}

TEST_CASE("deletion-contraction agrees with the determinant on small covers") {
  for (const auto& f : testing::builtin_families()) {
    if (f.spec.vertex_count() > 3) continue;
    for (long n = 3; n <= 4; ++n) {
      if (!jumps_nonzero_mod(f.spec, n)) continue;
      Multigraph g = expand_cover(f.spec, n);
      if (g.total_multiplicity() > 22) continue;
      CAPTURE(f.name);
      CAPTURE(n);
      CHECK(tau_oracle(g) == testing::deletion_contraction(g));
    }
  }
}

TEST_CASE("every cofactor gives the same count") {
  for (const auto& f : testing::builtin_families()) {
    Multigraph g = expand_cover(f.spec, 7);
    const BigInt t0 = tau_oracle(g, 0);
    for (std::size_t v = 1; v < g.vertex_count(); v += 3) CHECK(tau_oracle(g, v) == t0);
  }
}

TEST_CASE("relabelling does not change the count") {
  std::mt19937 rng(5);
  for (const auto& f : testing::builtin_families()) {
    Multigraph g = expand_cover(f.spec, 6);
    std::vector<std::size_t> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CAPTURE(f.name);
    CHECK(tau_oracle(g.relabeled(perm)) == tau_oracle(g));
  }
}
