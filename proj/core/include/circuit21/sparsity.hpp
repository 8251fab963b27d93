#pragma once

#include <optional>
#include <vector>

#include "circuit21/graph.hpp"

namespace c21 {

// f(G) = 2|V| - |E|; zero exactly for circuit edge counts.
int deficiency(const Graph&);

// i(X) <= 2|X|-1 for all nonempty X (exponential oracle, |V| <= 20).
bool is_sparse_bruteforce(const Graph&);

// (2,1) pebble game independence test, O(|V|*|E|). Two pebbles per vertex;
// an edge inserts when its endpoints hold >= 2 free pebbles after pebble
// searches; loops are permitted since l < k.
bool pebble_independent(const Graph&);

// |E| = 2|V| and every single-edge deletion is independent. Works for simple
// graphs and multigraphs.
bool is_circuit(const Graph&);

enum class CriticalKind { critical, semi_critical, node_critical, proper_critical };

struct CriticalSet {
  std::vector<int> members;
  CriticalKind kind = CriticalKind::critical;
  std::optional<int> witness_node;
  int count = 0;  // i(X)
};

// Inclusion-minimal critical X (i(X)=2|X|-1, X proper) with include within X
// and exclude disjoint from X; subsets are scanned by size in lexicographic
// label order, so the witness is reproducible. |V| <= 20.
std::optional<CriticalSet> find_critical_set(const Graph&,
                                             const std::vector<int>& include,
                                             const std::vector<int>& exclude);

// Some critical X with |X| < |V|-1 exists. |V| <= 20.
bool has_proper_critical_set(const Graph&);
std::vector<std::vector<int>> all_proper_critical_sets(const Graph&);

bool is_critical_set(const Graph&, const std::vector<int>& X);
// i(X) = 2|X|-2 and hereditarily i(X') <= 2|X'|-2.
bool is_semi_critical_set(const Graph&, const std::vector<int>& X);

// The subgraph induced on {v : d(v)=3} is acyclic. Pre: G is a circuit.
bool degree_three_forest_check(const Graph&);

}  // namespace c21
