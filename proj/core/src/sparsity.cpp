#include "circuit21/sparsity.hpp"

#include <algorithm>
#include <stdexcept>

namespace c21 {

int deficiency(const Graph& g) { return 2 * g.n() - g.m(); }

namespace {

struct IndexedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // vertex indices, loops as (i,i)

  explicit IndexedGraph(const Graph& g) {
    n = g.n();
    edges.reserve(g.edges.size());
    auto idx = [&](int v) {
      return static_cast<int>(std::lower_bound(g.verts.begin(), g.verts.end(), v) -
                              g.verts.begin());
    };
    for (auto& [u, v] : g.edges) edges.push_back({idx(u), idx(v)});
  }
};

// (2,1) pebble game over indexed edges; skip_edge removes one edge position.
struct PebbleGame {
  int n;
  std::vector<int> peb;
  std::vector<std::vector<int>> out;

  explicit PebbleGame(int n_) : n(n_), peb(n_, 2), out(n_) {}

  // Move one free pebble to u along reversed directed paths; never takes a
  // pebble from `a` or `b` (already counted at the endpoints).
  bool gather(int u, int a, int b) {
    std::vector<int> parent(n, -2);
    std::vector<int> stack = {u};
    parent[u] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v != a && v != b && peb[v] > 0) {
        // reverse the path u -> ... -> v
        int w = v;
        while (parent[w] != -1) {
          int p = parent[w];
          auto it = std::find(out[p].begin(), out[p].end(), w);
          out[p].erase(it);
          out[w].push_back(p);
          w = p;
        }
        peb[v]--;
        peb[u]++;
        return true;
      }
      for (int w : out[v])
        if (w != v && parent[w] == -2) {
          parent[w] = v;
          stack.push_back(w);
        }
    }
    return false;
  }

  bool insert(int u, int v) {
    if (u == v) {
      while (peb[u] < 2)
        if (!gather(u, u, -1)) return false;
      peb[u]--;
      out[u].push_back(u);
      return true;
    }
    while (peb[u] + peb[v] < 2) {
      if (!gather(u, u, v) && !gather(v, u, v)) return false;
    }
    if (peb[u] > 0) {
      peb[u]--;
      out[u].push_back(v);
    } else {
      peb[v]--;
      out[v].push_back(u);
    }
    return true;
  }
};

bool pebble_run(const IndexedGraph& ig, int skip_edge) {
  PebbleGame game(ig.n);
  for (int i = 0; i < static_cast<int>(ig.edges.size()); i++) {
    if (i == skip_edge) continue;
    if (!game.insert(ig.edges[i].first, ig.edges[i].second)) return false;
  }
  return true;
}

}  // namespace

bool is_sparse_bruteforce(const Graph& g) {
  if (g.n() > 20) throw std::invalid_argument("is_sparse_bruteforce: |V| <= 20");
  int n = g.n();
  IndexedGraph ig(g);
  std::vector<unsigned> edge_mask(ig.edges.size());
  for (size_t i = 0; i < ig.edges.size(); i++)
    edge_mask[i] = (1u << ig.edges[i].first) | (1u << ig.edges[i].second);
  for (unsigned X = 1; X < (1u << n); X++) {
    int cnt = 0;
    for (unsigned em : edge_mask)
      if ((em & X) == em) cnt++;
    if (cnt > 2 * __builtin_popcount(X) - 1) return false;
  }
  return true;
}

bool pebble_independent(const Graph& g) {
  if (g.n() == 0) return true;
  return pebble_run(IndexedGraph(g), -1);
}

bool is_circuit(const Graph& g) {
  if (g.n() == 0) return false;
  if (g.m() != 2 * g.n()) return false;
  IndexedGraph ig(g);
  // one deletion test per distinct edge position; parallel copies behave
  // identically, so test the first of each run only
  for (int i = 0; i < static_cast<int>(ig.edges.size()); i++) {
    if (i > 0 && ig.edges[i] == ig.edges[i - 1]) continue;
    if (!pebble_run(ig, i)) return false;
  }
  return true;
}

namespace {

bool subset_critical(const Graph& g, const std::vector<unsigned>& edge_mask,
                     unsigned X) {
  int cnt = 0;
  for (unsigned em : edge_mask)
    if ((em & X) == em) cnt++;
  return cnt == 2 * __builtin_popcount(X) - 1;
}

std::vector<unsigned> edge_masks(const Graph& g) {
  IndexedGraph ig(g);
  std::vector<unsigned> out(ig.edges.size());
  for (size_t i = 0; i < ig.edges.size(); i++)
    out[i] = (1u << ig.edges[i].first) | (1u << ig.edges[i].second);
  return out;
}

}  // namespace

std::optional<CriticalSet> find_critical_set(const Graph& g,
                                             const std::vector<int>& include,
                                             const std::vector<int>& exclude) {
  if (g.n() > 20) throw std::invalid_argument("find_critical_set: |V| <= 20");
  for (int v : include)
    for (int w : exclude)
      if (v == w) throw std::invalid_argument("find_critical_set: include and exclude overlap");
  int n = g.n();
  auto idx = [&](int v) {
    auto it = std::lower_bound(g.verts.begin(), g.verts.end(), v);
    if (it == g.verts.end() || *it != v)
      throw std::invalid_argument("find_critical_set: unknown label");
    return static_cast<int>(it - g.verts.begin());
  };
  unsigned inc = 0, exc = 0;
  for (int v : include) inc |= 1u << idx(v);
  for (int v : exclude) exc |= 1u << idx(v);
  auto masks = edge_masks(g);
  unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
  // by size, lexicographic within size over the sorted label order
  for (int size = std::max(1, __builtin_popcount(inc)); size < n; size++) {
    // iterate all subsets of given popcount in increasing numeric order
    unsigned X = (1u << size) - 1;
    while (X <= full) {
      if ((X & inc) == inc && (X & exc) == 0 && subset_critical(g, masks, X)) {
        CriticalSet cs;
        for (int i = 0; i < n; i++)
          if ((X >> i) & 1) cs.members.push_back(g.verts[i]);
        cs.kind = CriticalKind::critical;
        cs.count = 2 * size - 1;
        return cs;
      }
      // Gosper's hack
      unsigned c = X & -X, r = X + c;
      unsigned next = (((r ^ X) >> 2) / c) | r;
      if (next <= X || next > full) break;
      X = next;
    }
  }
  return std::nullopt;
}

bool is_critical_set(const Graph& g, const std::vector<int>& X) {
  if (static_cast<int>(X.size()) >= g.n()) return false;
  return induced_count(g, X) == 2 * static_cast<int>(X.size()) - 1;
}

bool is_semi_critical_set(const Graph& g, const std::vector<int>& X) {
  int k = static_cast<int>(X.size());
  if (induced_count(g, X) != 2 * k - 2) return false;
  Graph h = induced_subgraph(g, X);
  auto masks = edge_masks(h);
  for (unsigned S = 1; S < (1u << k); S++) {
    int cnt = 0;
    for (unsigned em : masks)
      if ((em & S) == em) cnt++;
    if (cnt > 2 * __builtin_popcount(S) - 2) return false;
  }
  return true;
}

bool has_proper_critical_set(const Graph& g) {
  if (g.n() > 20) throw std::invalid_argument("has_proper_critical_set: |V| <= 20");
  int n = g.n();
  auto masks = edge_masks(g);
  for (unsigned X = 1; X < (1u << n); X++) {
    if (__builtin_popcount(X) >= n - 1) continue;
    if (subset_critical(g, masks, X)) return true;
  }
  return false;
}

std::vector<std::vector<int>> all_proper_critical_sets(const Graph& g) {
  if (g.n() > 20) throw std::invalid_argument("all_proper_critical_sets: |V| <= 20");
  int n = g.n();
  auto masks = edge_masks(g);
  std::vector<std::vector<int>> out;
  for (unsigned X = 1; X < (1u << n); X++) {
    if (__builtin_popcount(X) >= n - 1) continue;
    if (subset_critical(g, masks, X)) {
      std::vector<int> s;
      for (int i = 0; i < n; i++)
        if ((X >> i) & 1) s.push_back(g.verts[i]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool degree_three_forest_check(const Graph& g) {
  if (!is_circuit(g)) throw std::invalid_argument("degree_three_forest_check: input not a circuit");
  std::vector<int> v3;
  for (int v : g.verts)
    if (g.degree(v) == 3) v3.push_back(v);
  Graph h = induced_subgraph(g, v3);
  // acyclic multigraph: every component has |E| = |V|-1 and no loops/parallels
  if (!h.simple && h.m() > 0) return false;
  // union-find cycle check
  std::vector<int> parent(h.n());
  for (int i = 0; i < h.n(); i++) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(h.verts.begin(), h.verts.end(), v) -
                            h.verts.begin());
  };
  for (auto& [u, v] : h.edges) {
    int a = find(idx(u)), b = find(idx(v));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace c21
