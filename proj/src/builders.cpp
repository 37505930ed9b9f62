#include "filtra/builders.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace filtra {

namespace {
std::string pair_id(int n, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}
}  // namespace

GradedGraph build_pascal(int depth) {
  if (depth < 1) throw Error(ErrorKind::kDomain, "pascal depth must be >= 1");
  GradedGraph g;
  std::vector<int> prev{g.root()};
  for (int n = 1; n <= depth; ++n) {
    std::vector<int> cur;
    for (int k = 0; k <= n; ++k) cur.push_back(g.add_vertex(n, pair_id(n, k)));
    for (int k = 0; k <= n; ++k) {
      if (k > 0) g.add_edge(prev[k - 1], cur[k]);
      if (k < n) g.add_edge(prev[k], cur[k]);
    }
    prev = cur;
  }
  g.freeze();
  return g;
}

GradedGraph build_glimm(const std::vector<int>& arities) {
  if (arities.empty())
    throw Error(ErrorKind::kDomain, "glimm needs at least one arity");
  for (int r : arities)
    if (r < 2) throw Error(ErrorKind::kDomain, "glimm arities must be >= 2");
  GradedGraph g;
  int prev = g.root();
  for (std::size_t n = 1; n <= arities.size(); ++n) {
    int v = g.add_vertex(static_cast<int>(n), "b" + std::to_string(n));
    g.add_edge(prev, v, arities[n - 1]);
    prev = v;
  }
  g.freeze();
  return g;
}

GradedGraph build_line(int depth) {
  if (depth < 1) throw Error(ErrorKind::kDomain, "line depth must be >= 1");
  GradedGraph g;
  int prev = g.root();
  for (int n = 1; n <= depth; ++n) {
    int v = g.add_vertex(n, "l" + std::to_string(n));
    g.add_edge(prev, v, 1);
    prev = v;
  }
  g.freeze();
  return g;
}

namespace {
using Partition = std::vector<int>;  // weakly decreasing, sums to the level

std::string partition_id(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  // lexicographic descent, largest part first
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}
}  // namespace

GradedGraph build_young(int depth) {
  if (depth < 1) throw Error(ErrorKind::kDomain, "young depth must be >= 1");
  GradedGraph g;
  std::map<Partition, int> prev;
  prev[{}] = g.root();
  for (int n = 1; n <= depth; ++n) {
    std::map<Partition, int> cur;
    for (const Partition& p : partitions_of(n))
      cur[p] = g.add_vertex(n, partition_id(p));
    for (const auto& [p, v] : cur) {
      // predecessors: remove one removable box
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i + 1 < p.size() && p[i] == p[i + 1]) continue;
        Partition q = p;
        if (--q[i] == 0) q.erase(q.begin() + static_cast<long>(i));
        g.add_edge(prev.at(q), v);
      }
    }
    prev = std::move(cur);
  }
  g.freeze();
  return g;
}

GradedGraph build_ordered_pairs(int depth) {
  if (depth < 1)
    throw Error(ErrorKind::kDomain, "ordered_pairs depth must be >= 1");
  if (depth > 5)
    throw Error(ErrorKind::kSize,
                "ordered_pairs beyond depth 5 is refused (level sizes grow "
                "as 2^(2^(n-1)))");
  GradedGraph g;
  std::vector<int> prev;
  for (int n = 1; n <= depth; ++n) {
    std::vector<int> cur;
    if (n == 1) {
      for (const char* id : {"0", "1"}) {
        int v = g.add_vertex(1, id);
        g.add_edge(g.root(), v, 2);
        cur.push_back(v);
      }
    } else {
      for (std::size_t a = 0; a < prev.size(); ++a) {
        for (std::size_t b = 0; b < prev.size(); ++b) {
          std::string id =
              "<" + g.vertex(prev[a]).id + "|" + g.vertex(prev[b]).id + ">";
          int v = g.add_vertex(n, id);
          if (a == b) {
            g.add_edge(prev[a], v, 2);
          } else {
            g.add_edge(prev[a], v);
            g.add_edge(prev[b], v);
          }
          cur.push_back(v);
        }
      }
    }
    prev = std::move(cur);
  }
  g.freeze();
  return g;
}

GradedGraph build_words_z(int depth) {
  if (depth < 1) throw Error(ErrorKind::kDomain, "words_z depth must be >= 1");
  if (depth > 24)
    throw Error(ErrorKind::kSize, "words_z beyond depth 24 is refused");
  GradedGraph g;
  std::vector<int> prev;  // indexed by word value at level n-1
  for (int n = 1; n <= depth; ++n) {
    std::vector<int> cur(std::size_t{1} << n);
    for (std::uint64_t w = 0; w < cur.size(); ++w) {
      std::string id(static_cast<std::size_t>(n), '0');
      for (int b = 0; b < n; ++b)
        if ((w >> (n - 1 - b)) & 1u) id[static_cast<std::size_t>(b)] = '1';
      int v = g.add_vertex(n, id);
      cur[w] = v;
      if (n == 1) {
        g.add_edge(g.root(), v, 2);  // prefix and suffix are both empty
      } else {
        std::uint64_t prefix = w >> 1;
        std::uint64_t suffix = w & ((std::uint64_t{1} << (n - 1)) - 1);
        if (prefix == suffix) {
          g.add_edge(prev[prefix], v, 2);
        } else {
          g.add_edge(prev[prefix], v);
          g.add_edge(prev[suffix], v);
        }
      }
    }
    prev = std::move(cur);
  }
  g.freeze();
  return g;
}

GradedGraph build_two_state_chain(int depth) {
  if (depth < 1) throw Error(ErrorKind::kDomain, "chain depth must be >= 1");
  GradedGraph g;
  int prev0 = g.add_vertex(1, "s0@1");
  int prev1 = g.add_vertex(1, "s1@1");
  g.add_edge(g.root(), prev0, 2);
  g.add_edge(g.root(), prev1, 2);
  for (int n = 2; n <= depth; ++n) {
    int v0 = g.add_vertex(n, "s0@" + std::to_string(n));
    int v1 = g.add_vertex(n, "s1@" + std::to_string(n));
    g.add_edge(prev0, v0);
    g.add_edge(prev1, v0);
    g.add_edge(prev0, v1);
    g.add_edge(prev1, v1);
    prev0 = v0;
    prev1 = v1;
  }
  g.freeze();
  return g;
}

GradedGraph build_fibonacci_chain(int depth) {
  if (depth < 1) throw Error(ErrorKind::kDomain, "chain depth must be >= 1");
  GradedGraph g;
  int prev0 = g.add_vertex(1, "s0@1");
  int prev1 = g.add_vertex(1, "s1@1");
  g.add_edge(g.root(), prev0, 2);  // copies: predecessor state 0 / state 1
  g.add_edge(g.root(), prev1, 1);  // only 0 -> 1 is allowed
  for (int n = 2; n <= depth; ++n) {
    int v0 = g.add_vertex(n, "s0@" + std::to_string(n));
    int v1 = g.add_vertex(n, "s1@" + std::to_string(n));
    g.add_edge(prev0, v0);
    g.add_edge(prev1, v0);
    g.add_edge(prev0, v1);
    prev0 = v0;
    prev1 = v1;
  }
  g.freeze();
  return g;
}

}  // namespace filtra
