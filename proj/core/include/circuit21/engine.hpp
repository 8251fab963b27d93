#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circuit21/canonical.hpp"
#include "circuit21/catalog.hpp"
#include "circuit21/graph.hpp"
#include "circuit21/moves.hpp"

namespace c21 {

// Raised when no reduction or progressing split exists for a circuit; for
// genuine inputs this cannot happen, so it is the strongest possible test
// failure.
struct theorem_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NodeMove {
  int v, u, w, z;  // remove node v, add uw; z is the third neighbour
  Graph reduced;
};

struct Deg4Move {
  int v, a, b, c, d;  // remove v, add ab and cd
  Graph reduced;
};

// First node (ascending label, pair order within sorted neighbourhoods) whose
// 1-reduction yields a circuit.
std::optional<NodeMove> find_admissible_node(const Graph&);
// First degree-4 vertex and pairing whose inverse X-replacement yields a
// circuit.
std::optional<Deg4Move> find_admissible_degree4(const Graph&);

// All separations matching the five-case list, ordered cut-vertices, cut
// pairs, 3-edge cuts, 4-edge cuts.
std::vector<Separation> classify_separation(const Graph&);

// Replace every pendant K5-e side by a loop, every T1 side of a cut pair by a
// double edge, every T2 side by a triple edge. Errors if some cut lacks the
// required gadget side; the output lands in class M.
Graph gstar_construct(const Graph&);

struct CertNode {
  enum class Kind { base, ext, xrep, sum };
  Kind kind = Kind::base;
  std::string base_name;      // base
  int v = -1;                 // ext/xrep: label of the vertex the move adds
  int u = -1, w = -1, z = -1; // ext: deleted edge u-w, third vertex z
  int a = -1, b = -1, c = -1, d = -1;  // xrep: deleted edges a-b and c-d
  JoinSpec spec;              // sum
  std::vector<std::unique_ptr<CertNode>> children;
};

// Rooted move tree; leaves are catalog entries, replay rebuilds the target up
// to isomorphism.
struct Certificate {
  std::unique_ptr<CertNode> root;
  CanonicalForm target;
};

struct ReduceStep {
  enum class Kind { base, reduction_node, reduction_deg4, split };
  Kind kind;
  std::string base_name;            // base
  std::optional<NodeMove> node;     // reduction_node
  std::optional<Deg4Move> deg4;     // reduction_deg4
  std::optional<Separation> sep;    // split
  std::optional<SplitResult> split; // split
};

// One step: base match, else admissible node, else admissible degree-4
// vertex, else the first progressing split. Throws theorem_violation.
ReduceStep reduce_step(const Graph&);

// Full reduction tree with verified replay. Pre: is_circuit(G); simple inputs
// decompose over the simple base set, multigraphs over the extended one.
Certificate decompose(const Graph&);

// Deterministic reconstruction; checks every intermediate is a circuit (and
// simple if the target is) and that the final canonical form matches.
Graph replay_certificate(const Certificate&);

std::string certificate_to_text(const Certificate&);
Certificate certificate_from_text(const std::string&);
std::string certificate_to_dot(const Certificate&);

}  // namespace c21
