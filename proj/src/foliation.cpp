#include "circfol/foliation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <utility>

namespace circfol {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

BaseGraph::BaseGraph(std::size_t m, std::vector<int> matrix)
    : m_(m), a_(std::move(matrix)) {
  if (m_ == 0) throw InvalidSpec("base graph needs at least one vertex");
  if (m_ > kMaxVertices)
    throw InvalidSpec("base graph has " + std::to_string(m_) + " vertices; at most 64 are supported");
  if (a_.size() != m_ * m_) throw InvalidSpec("multiplicity matrix has the wrong size");
  for (std::size_t i = 0; i < m_; ++i) {
    if (multiplicity(i, i) != 0) throw InvalidSpec("base graph has a loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < m_; ++j) {
      if (multiplicity(i, j) < 0) throw InvalidSpec("negative edge multiplicity");
      if (multiplicity(i, j) != multiplicity(j, i)) throw InvalidSpec("multiplicity matrix is not symmetric");
    }
  }
}

BaseGraph BaseGraph::from_edges(std::size_t m, const std::vector<Edge>& edges) {
  std::vector<int> a(m * m, 0);
  for (const auto& e : edges) {
    if (e.u >= m || e.v >= m) throw InvalidSpec("base edge endpoint out of range");
    if (e.u == e.v) throw InvalidSpec("base graph has a loop at vertex " + std::to_string(e.u));
    if (e.multiplicity < 0) throw InvalidSpec("negative edge multiplicity");
    a[e.u * m + e.v] += e.multiplicity;
    a[e.v * m + e.u] += e.multiplicity;
  }
  return BaseGraph(m, std::move(a));
}

int BaseGraph::degree(std::size_t i) const {
  int d = 0;
  for (std::size_t j = 0; j < m_; ++j) d += multiplicity(i, j);
  return d;
}

bool BaseGraph::is_connected() const {
  if (m_ == 0) return false;
  DisjointSets sets(m_);
  std::size_t components = m_;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j)
      if (multiplicity(i, j) > 0 && sets.unite(i, j)) --components;
  return components == 1;
}

std::vector<BaseGraph::Edge> BaseGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = i + 1; j < m_; ++j)
      if (multiplicity(i, j) > 0) out.push_back({i, j, multiplicity(i, j)});
  return out;
}

FiberSpec::FiberSpec(std::vector<Jump> jumps) : jumps_(std::move(jumps)) {
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (jumps_[i] <= 0) throw InvalidSpec("jumps must be positive integers");
    if (i > 0 && jumps_[i] <= jumps_[i - 1]) throw InvalidSpec("jumps must be strictly increasing");
  }
}

FoliationSpec::FoliationSpec(BaseGraph base, std::vector<FiberSpec> fibers,
                             std::vector<std::string> labels)
    : base_(std::move(base)), fibers_(std::move(fibers)), labels_(std::move(labels)) {
  if (fibers_.size() != base_.vertex_count())
    throw InvalidSpec("expected " + std::to_string(base_.vertex_count()) + " fibers, got " +
                      std::to_string(fibers_.size()));
  if (!labels_.empty() && labels_.size() != fibers_.size())
    throw InvalidSpec("labels must name every base vertex");
}

long FoliationSpec::total_max_jump() const {
  long s = 0;
  for (const auto& f : fibers_) s += f.max_jump();
  return s;
}

std::size_t FoliationSpec::jump_count() const {
  std::size_t k = 0;
  for (const auto& f : fibers_) k += f.size();
  return k;
}

Jump FoliationSpec::jump_gcd() const {
  Jump g = 0;
  for (const auto& f : fibers_)
    for (Jump s : f.jumps()) g = std::gcd(g, s);
  return g;
}

FoliationSpec FoliationSpec::scaled_jumps(Jump r) const {
  std::vector<FiberSpec> fibers;
  for (const auto& f : fibers_) {
    std::vector<Jump> j = f.jumps();
    for (auto& s : j) s *= r;
    fibers.emplace_back(std::move(j));
  }
  return FoliationSpec(base_, std::move(fibers), labels_);
}

ValidationReport validate(const FoliationSpec& spec) {
  ValidationReport r;
  r.base_connected = spec.base().is_connected();
  r.has_jumps = spec.jump_count() > 0;
  r.jump_gcd = spec.jump_gcd();
  r.gcd_hypothesis = r.has_jumps && r.jump_gcd == 1;
  if (!r.base_connected) r.issues.emplace_back("base graph is disconnected");
  if (!r.has_jumps) r.issues.emplace_back("no fiber has a jump");
  else if (!r.gcd_hypothesis)
    r.issues.push_back("jump gcd is " + std::to_string(r.jump_gcd) + ", not 1");
  return r;
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ == 0) throw InvalidSpec("multigraph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw InvalidSpec("edge endpoint out of range");
    if (e.u == e.v) throw InvalidSpec("multigraph edges must not be loops");
    if (e.multiplicity < 1) throw InvalidSpec("edge multiplicities must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
}

Multigraph Multigraph::from_base(const BaseGraph& base) {
  std::vector<Edge> edges;
  for (const auto& e : base.edges()) edges.push_back({e.u, e.v, e.multiplicity});
  return Multigraph(base.vertex_count(), std::move(edges));
}

long Multigraph::total_multiplicity() const {
  long t = 0;
  for (const auto& e : edges_) t += e.multiplicity;
  return t;
}

bool Multigraph::is_connected() const {
  DisjointSets sets(n_);
  std::size_t components = n_;
  for (const auto& e : edges_)
    if (sets.unite(e.u, e.v)) --components;
  return components == 1;
}

Multigraph Multigraph::relabeled(const std::vector<std::size_t>& perm) const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({perm.at(e.u), perm.at(e.v), e.multiplicity});
  return Multigraph(n_, std::move(edges));
}

// ---------------------------------------------------------------- families

namespace {

BaseGraph path_graph(std::size_t m) {
  std::vector<BaseGraph::Edge> e;
  for (std::size_t i = 0; i + 1 < m; ++i) e.push_back({i, i + 1, 1});
  return BaseGraph::from_edges(m, e);
}

std::vector<FiberSpec> to_fibers(const std::vector<std::vector<Jump>>& lists) {
  std::vector<FiberSpec> out;
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

std::vector<std::string> numbered(const char* prefix, std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= m; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<Jump> flatten(const std::vector<std::vector<Jump>>& params) {
  std::vector<Jump> out;
  for (const auto& p : params) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Flat integer lists for the multi-fiber families mean one jump per fiber.
std::vector<std::vector<Jump>> fiber_lists(const std::vector<std::vector<Jump>>& params) {
  if (params.size() == 1) {
    std::vector<std::vector<Jump>> out;
    for (Jump s : params[0]) out.push_back({s});
    return out;
  }
  return params;
}

}  // namespace

FoliationSpec circulant_family(std::vector<Jump> jumps) {
  std::sort(jumps.begin(), jumps.end());
  return FoliationSpec(BaseGraph(1, {0}), {FiberSpec(std::move(jumps))}, {"v1"});
}

FoliationSpec igraph_family(Jump k, Jump l) {
  return FoliationSpec(path_graph(2), {FiberSpec{k}, FiberSpec{l}}, {"inner", "outer"});
}

FoliationSpec gp_family(Jump k) { return igraph_family(k, 1); }

FoliationSpec sandwich_family(const std::vector<std::vector<Jump>>& fibers) {
  if (fibers.empty()) throw InvalidSpec("sandwich needs at least one fiber");
  return FoliationSpec(path_graph(fibers.size()), to_fibers(fibers), numbered("v", fibers.size()));
}

FoliationSpec ygraph_family(const std::vector<std::vector<Jump>>& fibers) {
  if (fibers.size() != 3) throw InvalidSpec("ygraph takes exactly 3 fibers");
  auto f = to_fibers(fibers);
  f.emplace_back();  // centre v4 carries the edgeless circulant
  BaseGraph base = BaseGraph::from_edges(4, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}});
  return FoliationSpec(std::move(base), std::move(f), numbered("v", 4));
}

FoliationSpec hgraph_family(const std::vector<std::vector<Jump>>& fibers) {
  if (fibers.size() != 4) throw InvalidSpec("hgraph takes exactly 4 fibers");
  auto f = to_fibers(fibers);
  f.emplace_back();
  f.emplace_back();
  // v1v5, v5v3, v2v6, v6v4, v5v6 (1-based)
  BaseGraph base = BaseGraph::from_edges(6, {{0, 4, 1}, {4, 2, 1}, {1, 5, 1}, {5, 3, 1}, {4, 5, 1}});
  return FoliationSpec(std::move(base), std::move(f), numbered("v", 6));
}

FoliationSpec torus_family(std::size_t m) {
  if (m < 3) throw InvalidSpec("torus needs a cycle of length at least 3");
  std::vector<BaseGraph::Edge> e;
  for (std::size_t i = 0; i < m; ++i) e.push_back({i, (i + 1) % m, 1});
  std::vector<FiberSpec> fibers(m, FiberSpec{1});
  return FoliationSpec(BaseGraph::from_edges(m, e), std::move(fibers), numbered("c", m));
}

FoliationSpec product_family(const BaseGraph& regular_base) {
  const std::size_t m = regular_base.vertex_count();
  for (std::size_t i = 1; i < m; ++i)
    if (regular_base.degree(i) != regular_base.degree(0)) throw InvalidSpec("product base must be regular");
  if (!regular_base.is_connected()) throw InvalidSpec("product base must be connected");
  return FoliationSpec(regular_base, std::vector<FiberSpec>(m, FiberSpec{1}));
}

FoliationSpec make_family(std::string_view name, const std::vector<std::vector<Jump>>& params) {
  auto need = [&](std::size_t count) {
    std::vector<Jump> flat = flatten(params);
    if (flat.size() != count)
      throw InvalidSpec(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    return flat;
  };
  if (name == "circulant") {
    std::vector<Jump> flat = flatten(params);
    if (flat.empty()) throw InvalidSpec("circulant needs at least one jump");
    return circulant_family(flat);
  }
  if (name == "gp") return gp_family(need(1)[0]);
  if (name == "igraph") {
    auto p = need(2);
    return igraph_family(p[0], p[1]);
  }
  if (name == "torus") {
    Jump m = need(1)[0];
    if (m < 3) throw InvalidSpec("torus needs m >= 3");
    return torus_family(static_cast<std::size_t>(m));
  }
  if (name == "sandwich") return sandwich_family(fiber_lists(params));
  if (name == "ygraph") return ygraph_family(fiber_lists(params));
  if (name == "hgraph") return hgraph_family(fiber_lists(params));
  if (name == "product") throw InvalidSpec("product takes a base graph; use product_family or a spec file");
  throw InvalidSpec("unknown family '" + std::string(name) + "'");
}

FoliationSpec parse_family(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidSpec("family string must look like name:params");
  std::string_view name = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  std::vector<Jump> values;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    Jump v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidSpec("bad integer '" + std::string(tok) + "' in family string");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (values.empty()) throw InvalidSpec("family string has no parameters");
  return make_family(name, {values});
}

// ------------------------------------------------------------------- cover

Jump reduce_jump(Jump s, long n) {
  Jump r = s % n;
  if (r < 0) r += n;
  return std::min(r, n - r) % n;
}

Multigraph expand_cover(const FoliationSpec& spec, long n) {
  if (n < 3) throw InvalidSpec("cover size n must be at least 3");
  if (!spec.base().is_connected()) throw InvalidSpec("base graph is disconnected");

  const std::size_t m = spec.vertex_count();
  const auto un = static_cast<std::size_t>(n);
  std::map<std::pair<std::size_t, std::size_t>, long> mult;
  auto add = [&](std::size_t a, std::size_t b, long k) {
    if (a > b) std::swap(a, b);
    mult[{a, b}] += k;
  };

  for (const auto& e : spec.base().edges())
    for (std::size_t k = 0; k < un; ++k) add(e.u * un + k, e.v * un + k, e.multiplicity);

  for (std::size_t i = 0; i < m; ++i) {
    for (Jump s : spec.fiber(i).jumps()) {
      Jump c = reduce_jump(s, n);
      if (c == 0)
        throw DegenerateJump("jump " + std::to_string(s) + " is 0 mod " + std::to_string(n));
      const auto uc = static_cast<std::size_t>(c);
      if (2 * c == n) {
        // antipodal jump: each pair is joined twice
        for (std::size_t k = 0; k < uc; ++k) add(i * un + k, i * un + k + uc, 2);
      } else {
        for (std::size_t k = 0; k < un; ++k) add(i * un + k, i * un + (k + uc) % un, 1);
      }
    }
  }

  std::vector<Multigraph::Edge> edges;
  edges.reserve(mult.size());
  for (const auto& [uv, k] : mult) edges.push_back({uv.first, uv.second, k});
  return Multigraph(m * un, std::move(edges));
}

bool is_cover_connected(const FoliationSpec& spec, long n) {
  return std::gcd(static_cast<Jump>(n), spec.jump_gcd()) == 1;
}

bool jumps_nonzero_mod(const FoliationSpec& spec, long n) {
  for (const auto& f : spec.fibers())
    for (Jump s : f.jumps())
      if (reduce_jump(s, n) == 0) return false;
  return true;
}

bool jumps_injective_mod(const FoliationSpec& spec, long n) {
  for (const auto& f : spec.fibers()) {
    std::vector<Jump> reduced;
    for (Jump s : f.jumps()) {
      Jump c = reduce_jump(s, n);
      if (c == 0) return false;
      reduced.push_back(c);
    }
    std::sort(reduced.begin(), reduced.end());
    if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end()) return false;
  }
  return true;
}

}  // namespace circfol
