#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filtra/error.hpp"
#include "filtra/scalar.hpp"

namespace filtra {

// N-graded locally finite multigraph (Bratteli diagram) built to a finite
// depth. Level 0 holds the single root vertex. Immutable once frozen.
class GradedGraph {
 public:
  struct Vertex {
    std::string id;
    int level = 0;
    int index_in_level = 0;  // position within its level
  };
  struct Edge {
    int from = 0;  // vertex index at level n
    int to = 0;    // vertex index at level n+1
    int mult = 1;  // number of parallel copies
  };
  // One parallel copy of an edge.
  struct EdgeCopy {
    int edge = -1;
    int copy = 0;
    friend bool operator==(const EdgeCopy&, const EdgeCopy&) = default;
  };

  GradedGraph();

  int add_vertex(int level, const std::string& id);
  int add_edge(int from, int to, int mult = 1);
  // Validates the graph invariants; call after construction.
  void freeze();
  bool frozen() const { return frozen_; }

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int root() const { return 0; }

  const Vertex& vertex(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<int>& level(int n) const { return levels_[n]; }
  int level_size(int n) const { return static_cast<int>(levels_[n].size()); }
  const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }

  // Number of incoming edge copies (counting multiplicity).
  int in_degree(int v) const;
  int out_degree(int v) const;

  int find_vertex(const std::string& id) const;  // -1 when absent
  int require_vertex(const std::string& id) const;

  // Number of paths from the root to v, counting edge multiplicities.
  BigInt dim(int v) const;
  const std::vector<BigInt>& dims() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> in_edges_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::pair<std::string, int>> id_index_;  // sorted after freeze
  bool frozen_ = false;
  mutable std::vector<BigInt> dims_;  // filled lazily after freeze
};

// A path from the root to some vertex: the edge copies in level order.
struct Path {
  std::vector<GradedGraph::EdgeCopy> steps;

  int length() const { return static_cast<int>(steps.size()); }
  // Terminal vertex, or the root for the empty path.
  int terminal(const GradedGraph& g) const {
    return steps.empty() ? g.root() : g.edge(steps.back().edge).to;
  }
  // Vertex at a given level along the path (level <= length()).
  int vertex_at(const GradedGraph& g, int level) const {
    if (level == 0) return g.root();
    return g.edge(steps[level - 1].edge).to;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

// Checks that the steps form a connected root-to-vertex path.
void validate_path(const GradedGraph& g, const Path& p);

// Cotransition probabilities: one strictly positive weight per incoming edge
// copy, summing to one over each non-root vertex's incoming copies.
class Equipment {
 public:
  explicit Equipment(const GradedGraph* graph);

  const GradedGraph& graph() const { return *graph_; }

  void set_lambda(int edge, int copy, Scalar value);
  const Scalar& lambda(int edge, int copy) const {
    return lambda_[edge][copy];
  }
  const Scalar& lambda(const GradedGraph::EdgeCopy& ec) const {
    return lambda_[ec.edge][ec.copy];
  }
  const std::vector<Scalar>& edge_lambdas(int edge) const {
    return lambda_[edge];
  }

 private:
  const GradedGraph* graph_;
  std::vector<std::vector<Scalar>> lambda_;
};

struct EquipmentViolation {
  std::string vertex_id;
  std::string kind;  // "sum" | "zero weight" | "nonpositive"
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<EquipmentViolation> violations;
};

// The canonical (central) equipment: lambda proportional to dim of the
// predecessor, per edge copy.
Equipment central_equipment(const GradedGraph& g);

ValidationReport validate_equipment(const GradedGraph& g, const Equipment& eq);

// All paths from the root to v. Throws a size error beyond the cap.
std::vector<Path> enumerate_paths(const GradedGraph& g, int v,
                                  std::uint64_t cap = 1u << 16);

}  // namespace filtra
