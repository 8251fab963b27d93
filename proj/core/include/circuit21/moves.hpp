#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circuit21/graph.hpp"

namespace c21 {

// Delete edge xy, add a new vertex adjacent to x, y, z. Circuit-preserving.
// new_label < 0 allocates the next free label.
Graph one_extension(const Graph&, int x, int y, int z, int new_label = -1);

// Delete node v (degree 3), add edge uw between two of its neighbours.
// Caller decides admissibility by checking is_circuit on the result.
Graph one_reduction(const Graph&, int v, int u, int w);

// Delete vertex-disjoint edges ab and cd, add a new vertex adjacent to all
// four endpoints. Circuit-preserving.
Graph x_replacement(const Graph&, int a, int b, int c, int d, int new_label = -1);

// Delete degree-4 vertex v with neighbours {a,b,c,d}, add non-edges ab and cd.
Graph inverse_x_replacement(const Graph&, int v, int a, int b, int c, int d);

enum class SumCase { sum1, sum2a, sum2b, sum3, sum4, sum5 };
std::string to_string(SumCase);

enum class Sum5Side { none, apex, k4_type2, k4_type3, k4_type4 };
std::string to_string(Sum5Side);
Sum5Side sum5_side_from_string(const std::string&);

// A classified cut: one clause of the five-case separation list.
//   sum1 : cut-vertex x, i(A)=2|A|-1, i(B)=2|B|-1
//   sum2a: cut-pair, xy not an edge, i(A)=2|A|-2, i(B)=2|B|-2
//   sum2b: cut-pair, xy not an edge, i(A)=2|A|-1, i(B)=2|B|-3
//   sum3 : cut-pair, xy an edge (counted in both sides), i(A)=2|A|-1, i(B)=2|B|-2
//   sum4 : 3-edge cut, six distinct endpoints, i(A)=2|A|-1, i(B)=2|B|-2
//   sum5 : 4-edge cut, disjoint sides, i(A)=2|A|-2, i(B)=2|B|-2
struct Separation {
  SumCase kind;
  std::vector<int> side_a, side_b;  // sorted; share the cut vertices for 1/2/3
  std::vector<int> cut_vertices;    // {x} or {x,y}; empty for sum4/sum5
  std::vector<std::pair<int, int>> cut_edges;  // (A endpoint, B endpoint)
  int count_a = 0, count_b = 0;
};

// Everything needed to replay a join deterministically: which gadget vertices
// to strip from each part, the cut labels in each part's coordinates, and the
// cross-edge wiring.
struct JoinSpec {
  SumCase kind = SumCase::sum1;
  int xa = -1, xb = -1, ya = -1, yb = -1;
  std::vector<int> gadget_a, gadget_b;
  std::vector<std::pair<int, int>> cross;  // (label in part A, label in part B)
  Sum5Side kind_a = Sum5Side::none, kind_b = Sum5Side::none;
};

struct SplitResult {
  Graph part_a, part_b;
  JoinSpec spec;
};

// Split G along sep into two verified circuits. Option choices are fixed
// deterministically; for sum5 the gadget wiring candidates are enumerated in
// canonical order and the first yielding a verified circuit is taken. Throws
// if a part fails the circuit check.
SplitResult sum_split(const Graph&, const Separation&);

// All verified splits of G along sep over the lemma's free choices (missing
// gadget edges, sum5 wire assignments), deduped by part shapes, in a fixed
// order whose first entry is sum_split's answer.
std::vector<SplitResult> sum_split_variants(const Graph&, const Separation&,
                                            size_t limit = 24);

// Glue the parts back: strip the gadgets named in spec, unify cut vertices,
// re-add cross edges. Validates the gadget patterns and the case's critical-
// set side conditions, and verifies the result is a circuit. On the exact
// output of sum_split this reconstructs the original graph, labels included.
// b_relabel (optional out) records how part-B remnant labels map into the
// result.
Graph sum_join(const JoinSpec&, const Graph& part_a, const Graph& part_b,
               std::vector<std::pair<int, int>>* b_relabel = nullptr);

}  // namespace c21
