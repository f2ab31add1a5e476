#pragma once

// Independent reference implementations used only by the tests, plus the
// list of built-in families that the sweeps run over.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "circfol/bigint.hpp"
#include "circfol/dense_matrix.hpp"
#include "circfol/foliation.hpp"

namespace circfol::testing {

struct NamedSpec {
  std::string name;
  FoliationSpec spec;
};

inline std::vector<NamedSpec> builtin_families() {
  return {
      {"circulant:1", circulant_family({1})},
      {"circulant:1,2", circulant_family({1, 2})},
      {"circulant:1,3", circulant_family({1, 3})},
      {"circulant:2,3", circulant_family({2, 3})},
      {"gp:1", gp_family(1)},
      {"gp:2", gp_family(2)},
      {"gp:3", gp_family(3)},
      {"igraph:2,3", igraph_family(2, 3)},
      {"sandwich [1],[2],[1]", sandwich_family({{1}, {2}, {1}})},
      {"ygraph [1],[1],[1]", ygraph_family({{1}, {1}, {1}})},
      {"hgraph [1],[1],[1],[1]", hgraph_family({{1}, {1}, {1}, {1}})},
      {"torus:3", torus_family(3)},
      {"torus:4", torus_family(4)},
      {"torus:5", torus_family(5)},
  };
}

/// Laplace expansion along the last row, memoized over column subsets.
/// Exponential in k; meant for k <= 12.
inline BigInt cofactor_det(const IntMatrix& a) {
  const std::size_t k = a.rows();
  if (k == 0) return 1;
  std::vector<BigInt> d(std::size_t{1} << k);
  d[0] = 1;
  for (std::uint32_t mask = 1; mask < d.size(); ++mask) {
    const int r = __builtin_popcount(mask) - 1;
    BigInt sum = 0;
    int idx = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask & (1u << c))) continue;
      BigInt term = a(static_cast<std::size_t>(r), c) * d[mask & ~(1u << c)];
      if ((r + idx) % 2 == 0)
        sum += term;
      else
        sum -= term;
      ++idx;
    }
    d[mask] = sum;
  }
  return d.back();
}

/// Spanning trees by deletion-contraction on an edge-multiplicity matrix:
/// tau(G) = tau(G - uv) + mult(uv) * tau(G / uv).
inline BigInt deletion_contraction(std::vector<std::vector<long>> adj) {
  const std::size_t n = adj.size();
  if (n <= 1) return 1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adj[u][v] == 0) continue;
      const long k = adj[u][v];
      auto deleted = adj;
      deleted[u][v] = deleted[v][u] = 0;
      // contract v into u, dropping the loops
      std::vector<std::vector<long>> merged(n - 1, std::vector<long>(n - 1, 0));
      auto idx = [&](std::size_t x) { return x == v ? u - (u > v) : x - (x > v); };
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y) continue;
          const std::size_t ix = idx(x), iy = idx(y);
          if (ix != iy) merged[ix][iy] += adj[x][y];
        }
      return deletion_contraction(std::move(deleted)) + BigInt(k) * deletion_contraction(std::move(merged));
    }
  return 0;  // no edges and more than one vertex
}

inline BigInt deletion_contraction(const Multigraph& g) {
  std::vector<std::vector<long>> adj(g.vertex_count(), std::vector<long>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) {
    adj[e.u][e.v] += e.multiplicity;
    adj[e.v][e.u] += e.multiplicity;
  }
  return deletion_contraction(std::move(adj));
}

inline Multigraph petersen() {
  std::vector<Multigraph::Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5, 1});
    e.push_back({i, i + 5, 1});
    e.push_back({5 + i, 5 + (i + 2) % 5, 1});
  }
  return Multigraph(10, std::move(e));
}

inline Multigraph complete_graph(std::size_t n) {
  std::vector<Multigraph::Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, 1});
  return Multigraph(n, std::move(e));
}

inline BaseGraph cycle_base(std::size_t m) {
  std::vector<BaseGraph::Edge> e;
  for (std::size_t i = 0; i < m; ++i) e.push_back({i, (i + 1) % m, 1});
  return BaseGraph::from_edges(m, e);
}

inline BaseGraph complete_base(std::size_t m) {
  std::vector<BaseGraph::Edge> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) e.push_back({i, j, 1});
  return BaseGraph::from_edges(m, e);
}

inline BaseGraph petersen_base() {
  std::vector<BaseGraph::Edge> e;
  const Multigraph g = petersen();
  for (const auto& x : g.edges()) e.push_back({x.u, x.v, static_cast<int>(x.multiplicity)});
  return BaseGraph::from_edges(10, e);
}

/// Random spec with m <= 5, multiplicities <= 2 and jumps <= 4; the base is
/// connected and at least one jump is present.
inline FoliationSpec random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> m_dist(1, 5), mult(0, 2), coin(0, 1);
  for (;;) {
    const auto m = static_cast<std::size_t>(m_dist(rng));
    std::vector<BaseGraph::Edge> edges;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (int k = mult(rng); k > 0) edges.push_back({i, j, k});
    BaseGraph base = BaseGraph::from_edges(m, edges);
    if (!base.is_connected()) continue;
    std::vector<FiberSpec> fibers;
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Jump> jumps;
      for (Jump s = 1; s <= 4; ++s)
        if (coin(rng)) jumps.push_back(s);
      any = any || !jumps.empty();
      fibers.emplace_back(std::move(jumps));
    }
    if (!any) continue;
    return FoliationSpec(std::move(base), std::move(fibers));
  }
}

/// The multiplier check: scaling all jumps by r with gcd(r, n) = 1 gives an
/// isomorphic cover.
struct MultiplierCase {
  std::string name;
  FoliationSpec spec;
  long n;
  Jump r;
};

inline std::vector<MultiplierCase> multiplier_cases() {
  return {{"gp:2", gp_family(2), 7, 3}, {"circulant:1,3", circulant_family({1, 3}), 8, 3}};
}

}  // namespace circfol::testing
