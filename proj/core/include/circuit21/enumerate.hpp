#pragma once

#include <map>
#include <string>
#include <vector>

#include "circuit21/canonical.hpp"
#include "circuit21/graph.hpp"

namespace c21 {

struct Census {
  enum class Provenance { exhaustive, generative };
  int n = 0;
  std::map<CanonicalForm, Graph> classes;
  Provenance provenance = Provenance::exhaustive;
};

// All isomorphism classes of simple circuits on exactly n vertices, by
// filtering 2n-edge subsets of Kn with a minimum-degree-3 prune. n <= 7 is
// fast; n = 8 scans ~3e7 subsets and must be requested explicitly.
// threads = 0 picks a sensible worker count for n = 8.
Census enumerate_exhaustive(int n, bool allow_heavy = false, int threads = 0);

// Closure of the simple base graphs under 1-extension, X-replacement and sum
// joins, truncated at order n. The closure works inside a universe of order
// <= ceiling (default n+2): sum joins reach some order-n circuits only
// through parts two vertices larger, so a same-order universe would miss
// them. ceiling < n is rejected.
Census enumerate_generative(int n, int ceiling = -1);

struct SweepReport {
  int violations = 0;
  std::vector<std::string> notes;
  int four_regular = 0;
  int no_move = 0;                       // members with no admissible node or
  std::vector<std::string> no_move_names;  // degree-4 vertex (base names if known)
};

// Runs the lemma assertions over every census member; violations are counted
// and described, zero on success.
SweepReport lemma_sweep(const Census&);

// One edge-list block per class, preceded by its canonical form hex string.
std::string export_census(const Census&);

}  // namespace c21
