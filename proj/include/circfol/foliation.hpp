#pragma once

// Circulant foliations over a base multigraph and their explicit Z_n covers.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circfol/errors.hpp"

namespace circfol {

using Jump = long;

/// Loop-free base multigraph given by a symmetric multiplicity matrix.
class BaseGraph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  BaseGraph() = default;
  /// `multiplicity` is row-major m x m. Throws InvalidSpec when it is not
  /// symmetric, has a nonzero diagonal or negative entries.
  BaseGraph(std::size_t m, std::vector<int> multiplicity);
  /// Builds from an edge list of (i, j, multiplicity); repeated pairs add up.
  struct Edge {
    std::size_t u;
    std::size_t v;
    int multiplicity;
  };
  static BaseGraph from_edges(std::size_t m, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return m_; }
  int multiplicity(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
  int degree(std::size_t i) const;
  bool is_connected() const;
  /// Edges with i < j and positive multiplicity, lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const BaseGraph&, const BaseGraph&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<int> a_;
};

/// Jumps of one circulant fiber, strictly increasing positive integers.
/// An empty list is the edgeless circulant.
class FiberSpec {
 public:
  FiberSpec() = default;
  FiberSpec(std::vector<Jump> jumps);  // NOLINT: implicit from a jump list is convenient
  FiberSpec(std::initializer_list<Jump> jumps) : FiberSpec(std::vector<Jump>(jumps)) {}

  const std::vector<Jump>& jumps() const { return jumps_; }
  std::size_t size() const { return jumps_.size(); }
  bool empty() const { return jumps_.empty(); }
  /// Largest jump, 0 for the empty fiber.
  Jump max_jump() const { return jumps_.empty() ? 0 : jumps_.back(); }

  friend bool operator==(const FiberSpec&, const FiberSpec&) = default;

 private:
  std::vector<Jump> jumps_;
};

/// A base graph with one fiber per base vertex; describes the whole family
/// H_n for every n at once.
class FoliationSpec {
 public:
  FoliationSpec() = default;
  FoliationSpec(BaseGraph base, std::vector<FiberSpec> fibers,
                std::vector<std::string> labels = {});

  const BaseGraph& base() const { return base_; }
  const std::vector<FiberSpec>& fibers() const { return fibers_; }
  const FiberSpec& fiber(std::size_t i) const { return fibers_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return base_.vertex_count(); }

  /// Sum of the largest jump of every fiber; the degree of Q(w).
  long total_max_jump() const;
  std::size_t jump_count() const;
  /// gcd of all jumps, 0 when there are none.
  Jump jump_gcd() const;
  /// The same family with every jump multiplied by r.
  FoliationSpec scaled_jumps(Jump r) const;

  friend bool operator==(const FoliationSpec&, const FoliationSpec&) = default;

 private:
  BaseGraph base_;
  std::vector<FiberSpec> fibers_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  bool base_connected = false;
  bool has_jumps = false;
  Jump jump_gcd = 0;
  /// gcd of all jumps equals 1 (needed for the root-location and asymptotic
  /// results).
  bool gcd_hypothesis = false;
  std::vector<std::string> issues;

  bool ok() const { return base_connected; }
};

ValidationReport validate(const FoliationSpec& spec);

/// Explicit loop-free multigraph; edges are (u, v, multiplicity) with u < v.
class Multigraph {
 public:
  struct Edge {
    std::size_t u;
    std::size_t v;
    long multiplicity;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Multigraph() = default;
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);
  static Multigraph from_base(const BaseGraph& base);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  long total_multiplicity() const;
  bool is_connected() const;
  /// Relabels vertex v as perm[v].
  Multigraph relabeled(const std::vector<std::size_t>& perm) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Named families. Every generator returns the spec exactly as the family is
// usually defined: a path for sandwiches and I-graphs, a star with an empty
// centre fiber for Y-graphs, and so on.
FoliationSpec circulant_family(std::vector<Jump> jumps);
FoliationSpec igraph_family(Jump k, Jump l);
FoliationSpec gp_family(Jump k);
FoliationSpec sandwich_family(const std::vector<std::vector<Jump>>& fibers);
FoliationSpec ygraph_family(const std::vector<std::vector<Jump>>& fibers);
FoliationSpec hgraph_family(const std::vector<std::vector<Jump>>& fibers);
FoliationSpec torus_family(std::size_t m);
/// C_n x H for a connected regular base H.
FoliationSpec product_family(const BaseGraph& regular_base);

/// Dispatches on a family name. `params` holds one list per fiber for
/// sandwich/ygraph/hgraph, the jump list for circulant, {k} for gp,
/// {k, l} for igraph and {m} for torus (flat lists may also be given as a
/// single inner list).
FoliationSpec make_family(std::string_view name, const std::vector<std::vector<Jump>>& params);

/// Parses "gp:2", "circulant:1,2", "torus:4", "ygraph:1,2,3". For the
/// multi-fiber families each comma-separated entry is a single-jump fiber.
FoliationSpec parse_family(std::string_view text);

/// Canonical representative of a jump in 1..floor(n/2); 0 when s = 0 mod n.
Jump reduce_jump(Jump s, long n);

/// Voltage cover H_n as an explicit multigraph. Vertex (k, v_i) is index
/// i*n + k. Requires n >= 3 and a connected base; throws DegenerateJump if
/// a jump is 0 mod n.
Multigraph expand_cover(const FoliationSpec& spec, long n);

/// gcd(n, all jumps) == 1.
bool is_cover_connected(const FoliationSpec& spec, long n);

/// No jump is 0 mod n (such a jump would be a loop in every layer).
bool jumps_nonzero_mod(const FoliationSpec& spec, long n);

/// True when every fiber's jumps stay pairwise distinct and nonzero after
/// reduction mod n.
bool jumps_injective_mod(const FoliationSpec& spec, long n);

}  // namespace circfol
