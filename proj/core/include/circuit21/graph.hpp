#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace c21 {

// Labeled multigraph with loops. Vertex labels are arbitrary non-negative
// integers (files use dense 0-based labels; moves that delete vertices leave
// holes). Edges are stored as a sorted multiset of normalized (u<=v) pairs;
// a loop is the pair (u,u).
//
// Counting conventions: a loop adds 2 to degree(v) but counts once in |E|
// and in induced counts.
//
// Graphs are immutable values: every mutation below returns a fresh Graph.
struct Graph {
  std::vector<int> verts;                    // sorted, unique
  std::vector<std::pair<int, int>> edges;    // normalized, sorted
  bool simple = true;                        // no loops, no repeated pair

  int n() const { return static_cast<int>(verts.size()); }
  int m() const { return static_cast<int>(edges.size()); }

  bool has_vertex(int v) const;
  bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }
  int multiplicity(int u, int v) const;
  int loop_count(int v) const { return multiplicity(v, v); }
  int degree(int v) const;          // loops count twice
  int min_degree() const;
  std::vector<int> neighbors(int v) const;  // distinct, excludes v itself
  int max_label() const;

  bool operator==(const Graph&) const = default;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction; validates that every endpoint is a declared vertex.
Graph make_graph(std::vector<int> verts, std::vector<std::pair<int, int>> edges);
Graph complete_graph(int n);

// Pure edits (each returns a new value).
Graph add_edge(const Graph&, int u, int v);
Graph remove_edge(const Graph&, int u, int v);   // one copy; throws if absent
Graph add_vertex(const Graph&, int v);
Graph remove_vertex(const Graph&, int v);        // drops incident edges
Graph induced_subgraph(const Graph&, const std::vector<int>& keep);
// Relabel to dense 0..n-1 in sorted-label order.
Graph to_dense_labels(const Graph&);

// Edge-list text format: line 1 "<n> <m>", then m lines "<u> <v>", 0-based
// labels, a loop as "u u", parallel edges as repeated lines. graph6 is
// accepted on input for simple graphs. Serialization needs dense labels and
// emits sorted edges.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph&);
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph&);   // simple graphs only

// Number of edges with both endpoints in X (multiplicity counted, loops once).
int induced_count(const Graph&, const std::vector<int>& X);
// Edges between A-B and B-A (paper's d(A,B)); loops and edges inside the
// intersection do not count.
int d_between(const Graph&, const std::vector<int>& A, const std::vector<int>& B);

bool is_connected(const Graph&);
// True iff |V| > k and no vertex set of size < k disconnects G. k in {1,2,3};
// parallel edges and loops add nothing.
bool is_k_connected(const Graph&, int k);

struct EdgeCut {
  std::vector<int> side_a, side_b;               // bipartition, A has min label
  std::vector<std::pair<int, int>> cut_edges;    // multiset crossing A|B
  bool trivial = false;                          // one side is a single vertex
};

// All non-trivial edge cuts of size <= k via bipartition enumeration
// (|V| <= 20). Empty result certifies essential (k+1)-edge-connectivity.
std::vector<EdgeCut> nontrivial_edge_cuts(const Graph&, int k);
bool essentially_k_edge_connected(const Graph&, int k);

struct VertexCut {
  std::vector<int> cut;                       // {x} or {x,y}
  std::vector<std::vector<int>> components;   // of G - cut, each sorted
};

std::vector<VertexCut> find_cut_vertices(const Graph&);
// Pairs {x,y} where neither member is itself a cut-vertex.
std::vector<VertexCut> find_cut_pairs(const Graph&);

}  // namespace c21
