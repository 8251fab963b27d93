// Test-only brute-force oracles and input generators. These stay independent
// of the library code paths they check.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "circuit21/catalog.hpp"
#include "circuit21/graph.hpp"
#include "circuit21/moves.hpp"
#include "circuit21/sparsity.hpp"

namespace oracle {

using c21::Graph;

// i(X) <= 2|X|-1 over every nonempty subset, multiplicities counted, loops
// once; written directly against the edge list.
inline bool sparse_subsets(const Graph& g) {
  int n = g.n();
  for (unsigned X = 1; X < (1u << n); X++) {
    int cnt = 0;
    for (auto& [u, v] : g.edges) {
      int iu = static_cast<int>(std::lower_bound(g.verts.begin(), g.verts.end(), u) -
                                g.verts.begin());
      int iv = static_cast<int>(std::lower_bound(g.verts.begin(), g.verts.end(), v) -
                                g.verts.begin());
      if (((X >> iu) & 1) && ((X >> iv) & 1)) cnt++;
    }
    if (cnt > 2 * __builtin_popcount(X) - 1) return false;
  }
  return true;
}

inline bool circuit_by_definition(const Graph& g) {
  if (g.n() == 0 || g.m() != 2 * g.n()) return false;
  int n = g.n();
  for (unsigned X = 1; X + 1 < (1u << n); X++) {
    int cnt = 0;
    for (auto& [u, v] : g.edges) {
      int iu = static_cast<int>(std::lower_bound(g.verts.begin(), g.verts.end(), u) -
                                g.verts.begin());
      int iv = static_cast<int>(std::lower_bound(g.verts.begin(), g.verts.end(), v) -
                                g.verts.begin());
      if (((X >> iu) & 1) && ((X >> iv) & 1)) cnt++;
    }
    if (cnt > 2 * __builtin_popcount(X) - 1) return false;
  }
  return true;
}

inline bool connected_on(const Graph& g, const std::vector<int>& alive) {
  if (alive.empty()) return false;
  std::vector<int> seen = {alive[0]}, stack = {alive[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto& [a, b] : g.edges) {
      int other = a == v ? b : b == v ? a : -1;
      if (other < 0 || other == v) continue;
      if (std::find(alive.begin(), alive.end(), other) == alive.end()) continue;
      if (std::find(seen.begin(), seen.end(), other) == seen.end()) {
        seen.push_back(other);
        stack.push_back(other);
      }
    }
  }
  return seen.size() == alive.size();
}

// delete every subset of size < k and test connectivity
inline bool k_connected(const Graph& g, int k) {
  if (g.n() <= k) return false;
  int n = g.n();
  for (unsigned S = 0; S < (1u << n); S++) {
    if (__builtin_popcount(S) >= k) continue;
    std::vector<int> alive;
    for (int i = 0; i < n; i++)
      if (!((S >> i) & 1)) alive.push_back(g.verts[i]);
    if (!connected_on(g, alive)) return false;
  }
  return true;
}

// all non-trivial cuts of size <= k via bipartition enumeration
inline std::vector<std::vector<std::pair<int, int>>> nontrivial_cuts(const Graph& g, int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  int n = g.n();
  for (unsigned S = 1; S < (1u << (n - 1)); S++) {
    std::vector<int> a = {g.verts[0]}, b;
    for (int i = 1; i < n; i++)
      (((S >> (i - 1)) & 1) ? a : b).push_back(g.verts[i]);
    if (a.size() < 2 || b.size() < 2) continue;
    std::vector<std::pair<int, int>> cross;
    for (auto& e : g.edges) {
      bool ua = std::find(a.begin(), a.end(), e.first) != a.end();
      bool va = std::find(a.begin(), a.end(), e.second) != a.end();
      if (ua != va) cross.push_back(e);
    }
    if (static_cast<int>(cross.size()) <= k) out.push_back(cross);
  }
  return out;
}

inline Graph relabel(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); i++) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> es;
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(g.verts.begin(), g.verts.end(), v) -
                            g.verts.begin());
  };
  for (auto& [u, v] : g.edges) es.push_back({perm[idx(u)], perm[idx(v)]});
  std::vector<int> vs(g.n());
  for (int i = 0; i < g.n(); i++) vs[i] = i;
  return c21::make_graph(vs, es);
}

inline Graph random_graph(std::mt19937& rng, int max_n, bool allow_multi) {
  std::uniform_int_distribution<int> nd(1, max_n);
  int n = nd(rng);
  std::uniform_int_distribution<int> md(0, 2 * n + 2);
  int m = md(rng);
  std::vector<int> vs(n);
  for (int i = 0; i < n; i++) vs[i] = i;
  std::vector<std::pair<int, int>> es;
  std::uniform_int_distribution<int> vd(0, n - 1);
  for (int i = 0; i < m; i++) {
    int u = vd(rng), v = vd(rng);
    if (!allow_multi) {
      if (u == v) continue;
      bool dup = false;
      for (auto& e : es)
        if (e == std::make_pair(std::min(u, v), std::max(u, v))) dup = true;
      if (dup) continue;
    }
    es.push_back({u, v});
  }
  return c21::make_graph(vs, es);
}

// random simple connected 4-regular graph via the pairing model
inline std::optional<Graph> random_4regular(std::mt19937& rng, int n) {
  std::vector<int> stubs;
  for (int v = 0; v < n; v++)
    for (int i = 0; i < 4; i++) stubs.push_back(v);
  for (int attempt = 0; attempt < 50; attempt++) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> es;
    bool ok = true;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || seen[u][v]) {
        ok = false;
        break;
      }
      seen[u][v] = seen[v][u] = true;
      es.push_back({u, v});
    }
    if (!ok) continue;
    std::vector<int> vs(n);
    for (int i = 0; i < n; i++) vs[i] = i;
    Graph g = c21::make_graph(vs, es);
    if (c21::is_connected(g)) return g;
  }
  return std::nullopt;
}

// a circuit grown from a random base by random circuit-preserving moves
inline Graph random_move_circuit(std::mt19937& rng, int max_n) {
  auto& bases = c21::base_graphs(c21::BaseFamily::g_simple);
  std::vector<const c21::BaseEntry*> small;
  for (auto& e : bases)
    if (e.graph.n() <= max_n) small.push_back(&e);
  Graph g = small[rng() % small.size()]->graph;
  std::uniform_int_distribution<int> target_d(g.n(), max_n);
  int target = target_d(rng);
  while (g.n() < target) {
    std::vector<std::pair<int, int>> distinct = g.edges;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (rng() % 3 == 0) {
      // X-replacement if a disjoint pair exists
      std::vector<std::array<int, 4>> cands;
      for (size_t i = 0; i < distinct.size(); i++)
        for (size_t j = i + 1; j < distinct.size(); j++) {
          auto [a, b] = distinct[i];
          auto [c, d] = distinct[j];
          if (a != c && a != d && b != c && b != d) cands.push_back({a, b, c, d});
        }
      if (!cands.empty()) {
        auto& m = cands[rng() % cands.size()];
        g = c21::x_replacement(g, m[0], m[1], m[2], m[3]);
        continue;
      }
    }
    auto [x, y] = distinct[rng() % distinct.size()];
    std::vector<int> zs;
    for (int z : g.verts)
      if (z != x && z != y) zs.push_back(z);
    g = c21::one_extension(g, x, y, zs[rng() % zs.size()]);
  }
  return g;
}

// circuits with sum structure: glue pieces of two move-circuits and keep the
// result when the count calculus verifies it
inline std::optional<Graph> random_sum_circuit(std::mt19937& rng, int max_n) {
  using namespace c21;
  Graph h1 = random_move_circuit(rng, std::min(max_n, 8));
  Graph h2 = random_move_circuit(rng, std::min(max_n, 8));
  std::vector<int> nodes1, nodes2, deg4_2;
  for (int v : h1.verts)
    if (h1.degree(v) == 3) nodes1.push_back(v);
  for (int v : h2.verts) {
    if (h2.degree(v) == 3) nodes2.push_back(v);
    if (h2.degree(v) == 4) deg4_2.push_back(v);
  }
  if (nodes1.empty()) return std::nullopt;
  int v1 = nodes1[rng() % nodes1.size()];
  Graph a = remove_vertex(h1, v1);  // i(A) = 2|A|-1
  int mode = rng() % 2;
  if (mode == 0 && !nodes2.empty()) {
    // share one vertex: case-1 shape
    int v2 = nodes2[rng() % nodes2.size()];
    Graph b = remove_vertex(h2, v2);
    int xa = a.verts[rng() % a.verts.size()];
    int shift = a.max_label() + 1;
    int xb = b.verts[rng() % b.verts.size()];
    std::vector<int> vs = a.verts;
    std::vector<std::pair<int, int>> es = a.edges;
    auto map_b = [&](int v) { return v == xb ? xa : v + shift; };
    for (int v : b.verts)
      if (v != xb) vs.push_back(v + shift);
    for (auto& [u, v] : b.edges) es.push_back({map_b(u), map_b(v)});
    Graph g = make_graph(vs, es);
    if (g.n() <= max_n && g.simple && is_circuit(g)) return g;
    return std::nullopt;
  }
  if (deg4_2.empty()) return std::nullopt;
  // 3-edge matching: case-4 shape
  int v2 = deg4_2[rng() % deg4_2.size()];
  auto nb1 = h1.neighbors(v1);
  auto nb2 = h2.neighbors(v2);
  Graph b = remove_vertex(h2, v2);  // i(B) = 2|B|-2
  int shift = a.max_label() + 1;
  std::vector<int> vs = a.verts;
  std::vector<std::pair<int, int>> es = a.edges;
  for (int v : b.verts) vs.push_back(v + shift);
  for (auto& [u, v] : b.edges) es.push_back({u + shift, v + shift});
  std::shuffle(nb2.begin(), nb2.end(), rng);
  for (int i = 0; i < 3; i++) es.push_back({nb1[i], nb2[i] + shift});
  Graph g = make_graph(vs, es);
  if (g.n() <= max_n && g.simple && is_circuit(g)) return g;
  return std::nullopt;
}

}  // namespace oracle
