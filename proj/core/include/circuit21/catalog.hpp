#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circuit21/canonical.hpp"
#include "circuit21/graph.hpp"

namespace c21 {

enum class BaseFamily { g_simple, gstar_extra };

struct BaseEntry {
  std::string name;
  Graph graph;
  BaseFamily family;
};

// 11 simple base graphs (K5, G57c, G59c, G293c, G308c, G312c, S1..S5) and the
// 13 multigraph entries R0..R12, in row order of the source figure.
const std::vector<BaseEntry>& base_graphs(BaseFamily);
const std::vector<BaseEntry>& all_base_graphs();

// Match by canonical form against all 24 entries.
std::optional<BaseEntry> is_base(const Graph&);

// Controlled multigraph circuit class: simple circuits, plus multigraph
// circuits that are 3-connected (or on < 4 vertices), have multiplicity <= 3,
// multi-edge endpoints of degree > 3, loop vertices of degree > 3 without
// incident multi-edges, and at most one loop unless the graph is a single
// vertex.
bool in_class_M(const Graph&);

enum class GadgetKind { k5_minus_e, k4, t1, t2, apex };

struct GadgetMatch {
  GadgetKind kind;
  std::vector<int> boundary;   // attachment vertices in role order
  std::vector<int> interior;   // side vertices with no edges leaving the side
  std::optional<std::pair<int, int>> missing_edge;  // for k5_minus_e / t2
};

// Confirms `side` is the named gadget with correct boundary wiring (boundary
// vertices are those of `side` with edges leaving it). Absent on mismatch.
std::optional<GadgetMatch> recognize_gadget(const Graph&, const std::vector<int>& side,
                                            GadgetKind);

// Test fixtures that are not bases.
Graph octahedron();      // K6 minus a one-factor
Graph g60();             // reduces to K5 at its unique node
Graph t1_gadget();       // degree-2 vertices 0 and 3
Graph t2_gadget();       // degree-2 vertices 0 and 4
// 10-vertex transcription shipped behind the CLI flag; its tikz source is
// ambiguous, so it is reported, not trusted.
Graph flagged_example_graph();

}  // namespace c21
