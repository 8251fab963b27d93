#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circuit21/graph.hpp"

namespace c21 {

// Byte string identifying an isomorphism class (multiplicities and loops
// included). Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

// Degree-refinement plus backtracking permutation search; |V| <= 64.
CanonicalForm canonical_form(const Graph&);

// The vertex labels in canonical order (position -> label); applying this
// order to the graph yields the canonical form's encoding.
std::vector<int> canonical_order(const Graph&);

// label-to-label map g -> h if isomorphic.
std::optional<std::vector<std::pair<int, int>>> find_isomorphism(const Graph& g,
                                                                 const Graph& h);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace c21
