#pragma once

#include <vector>

#include "filtra/graph.hpp"

namespace filtra {

// Pascal graph: vertices (n,k), 0 <= k <= n, simple edges from (n-1,k-1)
// and (n-1,k).
GradedGraph build_pascal(int depth);

// Glimm "beads": one vertex per level, arities[n-1] parallel edges between
// levels n-1 and n. Arities must be >= 2.
GradedGraph build_glimm(const std::vector<int>& arities);

// Degenerate single-path chain (arity 1 everywhere); used for tests.
GradedGraph build_line(int depth);

// Young graph: level n = partitions of n, edges add one box.
GradedGraph build_young(int depth);

// Graph of ordered pairs: level-n vertices are ordered pairs of level-(n-1)
// vertices, starting from a 2-vertex first level; the edge to a repeated
// component has multiplicity 2, and the root edges have multiplicity 2 so
// that dim doubles at every level. Refused beyond depth 5.
GradedGraph build_ordered_pairs(int depth);

// Graph of binary words of Z: level-n vertices are binary words of length n,
// edges lead to the prefix and the suffix of length n-1 (one multiplicity-2
// edge when they coincide). Refused beyond depth 24.
GradedGraph build_words_z(int depth);

// Two-state Markov chain graph: states 0,1 per level, four simple edges
// between consecutive levels; the root edges have multiplicity 2 (the copy
// index plays the role of the chain's first coordinate).
GradedGraph build_two_state_chain(int depth);

// Fibonacci chain graph: states 0,1; transitions 0->0, 0->1, 1->0 only.
// Root edges mirror each state's cotransition arity (2 copies into state 0,
// 1 copy into state 1).
GradedGraph build_fibonacci_chain(int depth);

}  // namespace filtra
