#include "filtra/graph.hpp"

#include <algorithm>

namespace filtra {

GradedGraph::GradedGraph() {
  vertices_.push_back(Vertex{"@", 0, 0});
  levels_.push_back({0});
  in_edges_.push_back({});
  out_edges_.push_back({});
}

int GradedGraph::add_vertex(int level, const std::string& id) {
  if (frozen_) throw Error(ErrorKind::kValidation, "graph is frozen");
  if (level <= 0)
    throw Error(ErrorKind::kValidation, "vertices are added at levels >= 1");
  if (level > static_cast<int>(levels_.size()))
    throw Error(ErrorKind::kValidation,
                "level " + std::to_string(level) + " skips a level");
  int v = static_cast<int>(vertices_.size());
  if (level == static_cast<int>(levels_.size())) levels_.push_back({});
  vertices_.push_back(
      Vertex{id, level, static_cast<int>(levels_[level].size())});
  levels_[level].push_back(v);
  in_edges_.push_back({});
  out_edges_.push_back({});
  return v;
}

int GradedGraph::add_edge(int from, int to, int mult) {
  if (frozen_) throw Error(ErrorKind::kValidation, "graph is frozen");
  if (mult < 1)
    throw Error(ErrorKind::kValidation, "edge multiplicity must be >= 1");
  const Vertex& a = vertices_.at(from);
  const Vertex& b = vertices_.at(to);
  if (b.level != a.level + 1)
    throw Error(ErrorKind::kValidation,
                "edge must connect adjacent levels: " + a.id + " -> " + b.id);
  int e = static_cast<int>(edges_.size());
  edges_.push_back(Edge{from, to, mult});
  out_edges_[from].push_back(e);
  in_edges_[to].push_back(e);
  return e;
}

void GradedGraph::freeze() {
  if (frozen_) return;
  for (int v = 1; v < vertex_count(); ++v) {
    if (in_edges_[v].empty())
      throw Error(ErrorKind::kValidation,
                  "vertex " + vertices_[v].id + " has no incoming edge");
  }
  int top = depth();
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].level < top && out_edges_[v].empty())
      throw Error(ErrorKind::kValidation,
                  "non-frontier vertex " + vertices_[v].id +
                      " has no outgoing edge");
  }
  id_index_.reserve(vertices_.size());
  for (int v = 0; v < vertex_count(); ++v)
    id_index_.emplace_back(vertices_[v].id, v);
  std::sort(id_index_.begin(), id_index_.end());
  for (std::size_t i = 1; i < id_index_.size(); ++i) {
    if (id_index_[i - 1].first == id_index_[i].first)
      throw Error(ErrorKind::kValidation,
                  "duplicate vertex id: " + id_index_[i].first);
  }
  frozen_ = true;
}

int GradedGraph::in_degree(int v) const {
  int d = 0;
  for (int e : in_edges_[v]) d += edges_[e].mult;
  return d;
}

int GradedGraph::out_degree(int v) const {
  int d = 0;
  for (int e : out_edges_[v]) d += edges_[e].mult;
  return d;
}

int GradedGraph::find_vertex(const std::string& id) const {
  auto it = std::lower_bound(
      id_index_.begin(), id_index_.end(), id,
      [](const auto& p, const std::string& s) { return p.first < s; });
  if (it == id_index_.end() || it->first != id) return -1;
  return it->second;
}

int GradedGraph::require_vertex(const std::string& id) const {
  int v = find_vertex(id);
  if (v < 0) throw Error(ErrorKind::kLookup, "unknown vertex id: " + id);
  return v;
}

const std::vector<BigInt>& GradedGraph::dims() const {
  if (dims_.empty()) {
    dims_.assign(vertex_count(), BigInt(0));
    dims_[root()] = 1;
    for (int n = 1; n <= depth(); ++n) {
      for (int v : levels_[n]) {
        BigInt d = 0;
        for (int e : in_edges_[v]) d += BigInt(edges_[e].mult) * dims_[edges_[e].from];
        dims_[v] = d;
      }
    }
  }
  return dims_;
}

BigInt GradedGraph::dim(int v) const {
  if (v < 0 || v >= vertex_count())
    throw Error(ErrorKind::kLookup, "unknown vertex index");
  return dims()[v];
}

void validate_path(const GradedGraph& g, const Path& p) {
  int at = g.root();
  for (const auto& step : p.steps) {
    if (step.edge < 0 || step.edge >= g.edge_count())
      throw Error(ErrorKind::kStructure, "path step references unknown edge");
    const auto& e = g.edge(step.edge);
    if (e.from != at)
      throw Error(ErrorKind::kStructure, "path steps are not adjacent");
    if (step.copy < 0 || step.copy >= e.mult)
      throw Error(ErrorKind::kStructure, "path step copy out of range");
    at = e.to;
  }
}

Equipment::Equipment(const GradedGraph* graph) : graph_(graph) {
  lambda_.resize(graph->edge_count());
  for (int e = 0; e < graph->edge_count(); ++e)
    lambda_[e].assign(graph->edge(e).mult, Scalar(0));
}

void Equipment::set_lambda(int edge, int copy, Scalar value) {
  lambda_.at(edge).at(copy) = std::move(value);
}

Equipment central_equipment(const GradedGraph& g) {
  Equipment eq(&g);
  const auto& dims = g.dims();
  for (int n = 1; n <= g.depth(); ++n) {
    for (int v : g.level(n)) {
      BigInt total = 0;
      for (int e : g.in_edges(v))
        total += BigInt(g.edge(e).mult) * dims[g.edge(e).from];
      for (int e : g.in_edges(v)) {
        Scalar lam = Scalar::ratio(dims[g.edge(e).from], total);
        for (int c = 0; c < g.edge(e).mult; ++c) eq.set_lambda(e, c, lam);
      }
    }
  }
  return eq;
}

ValidationReport validate_equipment(const GradedGraph& g,
                                    const Equipment& eq) {
  ValidationReport report;
  for (int n = 1; n <= g.depth(); ++n) {
    for (int v : g.level(n)) {
      Scalar sum(0);
      for (int e : g.in_edges(v)) {
        for (int c = 0; c < g.edge(e).mult; ++c) {
          const Scalar& lam = eq.lambda(e, c);
          if (lam.is_zero()) {
            report.ok = false;
            report.violations.push_back(
                {g.vertex(v).id, "zero weight",
                 "stored lambda is zero on an incoming edge copy"});
          } else if (lam.sign() < 0) {
            report.ok = false;
            report.violations.push_back(
                {g.vertex(v).id, "nonpositive", "lambda " + lam.str()});
          }
          sum += lam;
        }
      }
      if (sum != Scalar(1)) {
        report.ok = false;
        report.violations.push_back(
            {g.vertex(v).id, "sum",
             "incoming lambdas sum to " + sum.str() + ", expected 1"});
      }
    }
  }
  return report;
}

namespace {
void enumerate_rec(const GradedGraph& g, int v, Path& partial,
                   std::vector<Path>& out) {
  if (v == g.root()) {
    Path p = partial;
    std::reverse(p.steps.begin(), p.steps.end());
    out.push_back(std::move(p));
    return;
  }
  for (int e : g.in_edges(v)) {
    for (int c = 0; c < g.edge(e).mult; ++c) {
      partial.steps.push_back({e, c});
      enumerate_rec(g, g.edge(e).from, partial, out);
      partial.steps.pop_back();
    }
  }
}
}  // namespace

std::vector<Path> enumerate_paths(const GradedGraph& g, int v,
                                  std::uint64_t cap) {
  BigInt d = g.dim(v);
  if (d > BigInt(cap))
    throw Error(ErrorKind::kSize, "dim(" + g.vertex(v).id + ") = " + d.str() +
                                      " exceeds enumeration cap " +
                                      std::to_string(cap));
  std::vector<Path> out;
  Path partial;
  enumerate_rec(g, v, partial, out);
  return out;
}

}  // namespace filtra
