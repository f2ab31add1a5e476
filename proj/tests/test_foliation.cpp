#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <map>
#include <numeric>

#include "circfol/foliation.hpp"
#include "circfol/foliation_json.hpp"
#include "fixtures.hpp"

using namespace circfol;

namespace {

std::map<std::pair<std::size_t, std::size_t>, long> edge_map(const Multigraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, long> out;
  for (const auto& e : g.edges()) out[{e.u, e.v}] += e.multiplicity;
  return out;
}

std::vector<long> degrees(const Multigraph& g) {
  std::vector<long> d(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    d[e.u] += e.multiplicity;
    d[e.v] += e.multiplicity;
  }
  return d;
}

std::size_t girth(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.multiplicity > 1) return 2;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t best = SIZE_MAX;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, SIZE_MAX), parent(n, SIZE_MAX);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("base graph validation") {
  CHECK_THROWS_AS(BaseGraph(0, {}), InvalidSpec);
  CHECK_THROWS_AS(BaseGraph(2, {0, 1, 2, 0}), InvalidSpec);   // asymmetric
  CHECK_THROWS_AS(BaseGraph(2, {1, 1, 1, 0}), InvalidSpec);   // loop
  CHECK_THROWS_AS(BaseGraph(2, {0, -1, -1, 0}), InvalidSpec);
  CHECK_THROWS_AS(BaseGraph(2, {0, 1, 1}), InvalidSpec);
  CHECK_THROWS_AS(BaseGraph::from_edges(2, {{0, 0, 1}}), InvalidSpec);
  CHECK_THROWS_AS(BaseGraph::from_edges(2, {{0, 2, 1}}), InvalidSpec);

  BaseGraph g = BaseGraph::from_edges(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 2}});
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.degree(1) == 4);
  CHECK(g.is_connected());
}

TEST_CASE("fiber jumps must be strictly increasing and positive") {
  CHECK_THROWS_AS(FiberSpec({2, 1}), InvalidSpec);
  CHECK_THROWS_AS(FiberSpec({1, 1}), InvalidSpec);
  CHECK_THROWS_AS(FiberSpec({0}), InvalidSpec);
  CHECK(FiberSpec{}.max_jump() == 0);
}

TEST_CASE("validate") {
  ValidationReport gp = validate(make_family("gp", {{2}}));
  CHECK(gp.ok());
  CHECK(gp.jump_gcd == 1);
  CHECK(gp.gcd_hypothesis);

  FoliationSpec even(BaseGraph::from_edges(2, {{0, 1, 1}}), {FiberSpec{2}, FiberSpec{4}});
  ValidationReport v = validate(even);
  CHECK(v.ok());
  CHECK(v.jump_gcd == 2);
  CHECK_FALSE(v.gcd_hypothesis);

  FoliationSpec split(BaseGraph(2, {0, 0, 0, 0}), {FiberSpec{1}, FiberSpec{1}});
  CHECK_FALSE(validate(split).ok());
  CHECK_FALSE(validate(split).issues.empty());
}

TEST_CASE("families") {
  FoliationSpec gp = make_family("gp", {{2}});
  CHECK(gp.base() == BaseGraph::from_edges(2, {{0, 1, 1}}));
  CHECK(gp.fibers() == std::vector<FiberSpec>{FiberSpec{2}, FiberSpec{1}});

  FoliationSpec torus = make_family("torus", {{3}});
  CHECK(torus.base() == testing::cycle_base(3));
  CHECK(torus.fibers() == std::vector<FiberSpec>(3, FiberSpec{1}));

  FoliationSpec y = make_family("ygraph", {{1}, {1}, {1}});
  CHECK(y.vertex_count() == 4);
  CHECK(y.base().degree(3) == 3);
  CHECK(y.fiber(3).empty());

  CHECK(parse_family("circulant:2,1") == circulant_family({1, 2}));
  CHECK(parse_family("igraph:2,3") == igraph_family(2, 3));
  CHECK(parse_family("ygraph:1,1,1") == y);
  CHECK_THROWS_AS(parse_family("moebius:3"), InvalidSpec);
  CHECK_THROWS_AS(parse_family("gp:x"), InvalidSpec);
  CHECK_THROWS_AS(parse_family("gp"), InvalidSpec);
  CHECK_THROWS_AS(make_family("torus", {{2}}), InvalidSpec);
}

TEST_CASE("json round trip") {
  for (const auto& f : testing::builtin_families()) {
    CAPTURE(f.name);
    CHECK(spec_from_json(spec_to_json(f.spec)) == f.spec);
  }
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"base": {"m": 2}})")), InvalidSpec);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"base": {"m": 2, "edges": [[0,1,1]]}, "fibers": [[1]]})")),
                  InvalidSpec);
  CHECK_THROWS_AS(read_spec_file("/nonexistent/spec.json"), InvalidSpec);
}

TEST_CASE("expand_cover") {
  Multigraph c5 = expand_cover(circulant_family({1}), 5);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edges().size() == 5);
  CHECK(degrees(c5) == std::vector<long>(5, 2));

  Multigraph pet = expand_cover(gp_family(2), 5);
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.total_multiplicity() == 15);
  CHECK(degrees(pet) == std::vector<long>(10, 3));
  CHECK(girth(pet) == 5);

  auto c4 = edge_map(expand_cover(circulant_family({1, 2}), 4));
  std::map<std::pair<std::size_t, std::size_t>, long> want{
      {{0, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{0, 3}, 1}, {{0, 2}, 2}, {{1, 3}, 2}};
  CHECK(c4 == want);

  // colliding jumps stack: 4 = -1 mod 5
  auto c5d = edge_map(expand_cover(circulant_family({1, 4}), 5));
  CHECK(c5d.size() == 5);
  for (const auto& [uv, k] : c5d) CHECK(k == 2);

  CHECK_THROWS_AS(expand_cover(circulant_family({1, 3}), 3), DegenerateJump);
  CHECK_THROWS_AS(expand_cover(circulant_family({1}), 2), InvalidSpec);
}

TEST_CASE("cover connectivity") {
  CHECK(is_cover_connected(gp_family(2), 6));
  CHECK_FALSE(is_cover_connected(circulant_family({2}), 6));
  CHECK(is_cover_connected(circulant_family({2}), 7));

  // union-find on the explicit cover agrees with the gcd rule
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    FoliationSpec spec = testing::random_spec(rng);
    for (long n = 3; n <= 12; ++n) {
      if (!jumps_nonzero_mod(spec, n)) continue;
      CAPTURE(n);
      CHECK(expand_cover(spec, n).is_connected() == is_cover_connected(spec, n));
    }
  }
}

TEST_CASE("jump reduction") {
  CHECK(reduce_jump(1, 5) == 1);
  CHECK(reduce_jump(4, 5) == 1);
  CHECK(reduce_jump(5, 5) == 0);
  CHECK(reduce_jump(3, 6) == 3);
  CHECK(reduce_jump(13, 6) == 1);
  CHECK(jumps_nonzero_mod(circulant_family({1, 4}), 5));
  CHECK_FALSE(jumps_injective_mod(circulant_family({1, 4}), 5));
  CHECK_FALSE(jumps_nonzero_mod(circulant_family({1, 5}), 5));
}
