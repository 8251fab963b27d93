#include "circuit21/graph.hpp"

#include <algorithm>
#include <sstream>

namespace c21 {

namespace {

std::pair<int, int> norm(int u, int v) {
  return u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
}

int index_of(const std::vector<int>& verts, int v) {
  auto it = std::lower_bound(verts.begin(), verts.end(), v);
  if (it == verts.end() || *it != v) return -1;
  return static_cast<int>(it - verts.begin());
}

}  // namespace

bool Graph::has_vertex(int v) const { return index_of(verts, v) >= 0; }

int Graph::multiplicity(int u, int v) const {
  auto p = norm(u, v);
  auto r = std::equal_range(edges.begin(), edges.end(), p);
  return static_cast<int>(r.second - r.first);
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto& [a, b] : edges) {
    if (a == v) d++;
    if (b == v) d++;
  }
  return d;
}

int Graph::min_degree() const {
  int best = -1;
  for (int v : verts) {
    int d = degree(v);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> ns;
  for (auto& [a, b] : edges) {
    if (a == v && b != v) ns.push_back(b);
    if (b == v && a != v) ns.push_back(a);
  }
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

int Graph::max_label() const { return verts.empty() ? -1 : verts.back(); }

Graph make_graph(std::vector<int> verts, std::vector<std::pair<int, int>> edges) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (auto& e : edges) e = norm(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  Graph g;
  g.verts = std::move(verts);
  g.edges = std::move(edges);
  for (auto& [u, v] : g.edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw parse_error("edge endpoint is not a declared vertex");
  }
  g.simple = true;
  for (size_t i = 0; i < g.edges.size(); i++) {
    if (g.edges[i].first == g.edges[i].second ||
        (i + 1 < g.edges.size() && g.edges[i] == g.edges[i + 1])) {
      g.simple = false;
      break;
    }
  }
  return g;
}

Graph complete_graph(int n) {
  std::vector<int> vs(n);
  for (int i = 0; i < n; i++) vs[i] = i;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) es.push_back({i, j});
  return make_graph(std::move(vs), std::move(es));
}

Graph add_edge(const Graph& g, int u, int v) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("add_edge: unknown endpoint");
  auto es = g.edges;
  es.push_back(norm(u, v));
  return make_graph(g.verts, std::move(es));
}

Graph remove_edge(const Graph& g, int u, int v) {
  auto p = norm(u, v);
  auto es = g.edges;
  auto it = std::find(es.begin(), es.end(), p);
  if (it == es.end()) throw std::invalid_argument("remove_edge: edge absent");
  es.erase(it);
  return make_graph(g.verts, std::move(es));
}

Graph add_vertex(const Graph& g, int v) {
  if (g.has_vertex(v)) throw std::invalid_argument("add_vertex: label in use");
  auto vs = g.verts;
  vs.push_back(v);
  return make_graph(std::move(vs), g.edges);
}

Graph remove_vertex(const Graph& g, int v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("remove_vertex: unknown label");
  std::vector<int> vs;
  for (int u : g.verts)
    if (u != v) vs.push_back(u);
  std::vector<std::pair<int, int>> es;
  for (auto& e : g.edges)
    if (e.first != v && e.second != v) es.push_back(e);
  return make_graph(std::move(vs), std::move(es));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> vs = keep;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown label");
  std::vector<std::pair<int, int>> es;
  for (auto& e : g.edges)
    if (std::binary_search(vs.begin(), vs.end(), e.first) &&
        std::binary_search(vs.begin(), vs.end(), e.second))
      es.push_back(e);
  return make_graph(std::move(vs), std::move(es));
}

Graph to_dense_labels(const Graph& g) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (auto& [u, v] : g.edges)
    es.push_back({index_of(g.verts, u), index_of(g.verts, v)});
  std::vector<int> vs(g.n());
  for (int i = 0; i < g.n(); i++) vs[i] = i;
  return make_graph(std::move(vs), std::move(es));
}

Graph parse_graph(const std::string& text) {
  // Peel the first non-empty line; if it is not "<n> <m>", try graph6.
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) break;
  }
  {
    std::istringstream hdr(line);
    long long n, m;
    std::string rest;
    if (!(hdr >> n >> m) || (hdr >> rest)) {
      // graph6 candidate: printable chars in [63,126]
      std::string g6 = line;
      while (!g6.empty() && (g6.back() == '\r' || g6.back() == ' ')) g6.pop_back();
      bool plausible = !g6.empty();
      for (char c : g6)
        if (c < 63 || c > 126) plausible = false;
      if (plausible) return parse_graph6(g6);
      throw parse_error("malformed header: expected \"<n> <m>\"");
    }
    if (n < 0 || m < 0) throw parse_error("malformed header: negative count");
    if (n > 1000000 || m > 4000000) throw parse_error("malformed header: size out of range");
    std::vector<int> vs(n);
    for (int i = 0; i < n; i++) vs[i] = i;
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (long long i = 0; i < m; i++) {
      long long u, v;
      if (!(in >> u >> v)) throw parse_error("truncated edge list");
      if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error("endpoint out of range");
      es.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return make_graph(std::move(vs), std::move(es));
  }
}

std::string serialize_graph(const Graph& g) {
  for (int i = 0; i < g.n(); i++)
    if (g.verts[i] != i)
      throw std::invalid_argument("serialize_graph: labels must be dense 0-based");
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(const std::string& line) {
  size_t pos = 0;
  auto byte = [&](size_t i) -> int {
    if (i >= line.size()) throw parse_error("graph6: truncated");
    int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw parse_error("graph6: invalid character");
    return c - 63;
  };
  long long n;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    // 126 prefix: 18-bit order (the 258048+ form is out of scope here)
    if (line[0] != '~') throw parse_error("graph6: bad order prefix");
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n > 100000) throw parse_error("graph6: order out of range");
  std::vector<int> vs(n);
  for (int i = 0; i < n; i++) vs[i] = i;
  std::vector<std::pair<int, int>> es;
  int bits = 0, have = 0, cur = 0;
  (void)bits;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++) {
      if (have == 0) {
        cur = byte(pos++);
        have = 6;
      }
      have--;
      if ((cur >> have) & 1) es.push_back({i, j});
    }
  }
  return make_graph(std::move(vs), std::move(es));
}

std::string to_graph6(const Graph& g0) {
  if (!g0.simple) throw std::invalid_argument("to_graph6: simple graphs only");
  Graph g = to_dense_labels(g0);
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int have = 0, cur = 0;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++) {
      cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(cur + 63));
        have = 0;
        cur = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
  return out;
}

int induced_count(const Graph& g, const std::vector<int>& X) {
  std::vector<int> xs = X;
  std::sort(xs.begin(), xs.end());
  for (int v : xs)
    if (!g.has_vertex(v)) throw std::invalid_argument("induced_count: unknown label");
  int c = 0;
  for (auto& [u, v] : g.edges)
    if (std::binary_search(xs.begin(), xs.end(), u) &&
        std::binary_search(xs.begin(), xs.end(), v))
      c++;
  return c;
}

int d_between(const Graph& g, const std::vector<int>& A, const std::vector<int>& B) {
  std::vector<int> a = A, b = B;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto in = [](const std::vector<int>& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
  };
  int c = 0;
  for (auto& [u, v] : g.edges) {
    bool fwd = in(a, u) && !in(b, u) && in(b, v) && !in(a, v);
    bool bwd = in(a, v) && !in(b, v) && in(b, u) && !in(a, u);
    if (fwd || bwd) c++;
  }
  return c;
}

namespace {

// Components of g restricted to `alive` (sorted label list).
std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<int>& alive) {
  std::vector<std::vector<int>> comps;
  std::vector<int> seen(alive.size(), 0);
  auto idx = [&](int v) { return index_of(alive, v); };
  for (size_t s = 0; s < alive.size(); s++) {
    if (seen[s]) continue;
    std::vector<int> stack = {alive[s]}, comp;
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto& [a, b] : g.edges) {
        int other = -1;
        if (a == v) other = b;
        else if (b == v) other = a;
        if (other < 0 || other == v) continue;
        int i = idx(other);
        if (i >= 0 && !seen[i]) {
          seen[i] = 1;
          stack.push_back(other);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  return components_of(g, g.verts).size() == 1;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("is_k_connected: k must be 1, 2 or 3");
  if (g.n() <= k) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  // delete every subset of size < k and test connectivity
  int n = g.n();
  for (int i = 0; i < n; i++) {
    std::vector<int> alive;
    for (int v : g.verts)
      if (v != g.verts[i]) alive.push_back(v);
    if (components_of(g, alive).size() > 1) return false;
  }
  if (k == 2) return true;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      std::vector<int> alive;
      for (int v : g.verts)
        if (v != g.verts[i] && v != g.verts[j]) alive.push_back(v);
      if (components_of(g, alive).size() > 1) return false;
    }
  return true;
}

std::vector<EdgeCut> nontrivial_edge_cuts(const Graph& g, int k) {
  if (k > 4) throw std::invalid_argument("nontrivial_edge_cuts: k <= 4");
  if (g.n() > 20) throw std::invalid_argument("nontrivial_edge_cuts: |V| <= 20");
  std::vector<EdgeCut> cuts;
  int n = g.n();
  if (n < 4) return cuts;  // both sides need >= 2 vertices
  // bipartitions with vertex 0 pinned to side A
  for (unsigned long long mask = 0; mask < (1ull << (n - 1)); mask++) {
    std::vector<int> a = {g.verts[0]}, b;
    for (int i = 1; i < n; i++) {
      if ((mask >> (i - 1)) & 1) a.push_back(g.verts[i]);
      else b.push_back(g.verts[i]);
    }
    if (a.size() < 2 || b.size() < 2) continue;
    std::vector<std::pair<int, int>> cross;
    for (auto& e : g.edges) {
      bool ua = std::binary_search(a.begin(), a.end(), e.first);
      bool va = std::binary_search(a.begin(), a.end(), e.second);
      if (ua != va) cross.push_back(e);
      if (static_cast<int>(cross.size()) > k) break;
    }
    if (static_cast<int>(cross.size()) > k) continue;
    // must actually disconnect (catches already-disconnected inputs too)
    EdgeCut cut;
    cut.side_a = std::move(a);
    cut.side_b = std::move(b);
    cut.cut_edges = std::move(cross);
    cut.trivial = false;
    cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end(), [](const EdgeCut& x, const EdgeCut& y) {
    if (x.cut_edges.size() != y.cut_edges.size())
      return x.cut_edges.size() < y.cut_edges.size();
    return x.side_a < y.side_a;
  });
  return cuts;
}

bool essentially_k_edge_connected(const Graph& g, int k) {
  return nontrivial_edge_cuts(g, k - 1).empty();
}

std::vector<VertexCut> find_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("find_cut_vertices: graph not connected");
  std::vector<VertexCut> out;
  for (int x : g.verts) {
    std::vector<int> alive;
    for (int v : g.verts)
      if (v != x) alive.push_back(v);
    if (alive.empty()) continue;
    auto comps = components_of(g, alive);
    if (comps.size() > 1) out.push_back({{x}, std::move(comps)});
  }
  return out;
}

std::vector<VertexCut> find_cut_pairs(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("find_cut_pairs: graph not connected");
  std::vector<int> cutv;
  for (auto& c : find_cut_vertices(g)) cutv.push_back(c.cut[0]);
  std::vector<VertexCut> out;
  int n = g.n();
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      int x = g.verts[i], y = g.verts[j];
      if (std::find(cutv.begin(), cutv.end(), x) != cutv.end()) continue;
      if (std::find(cutv.begin(), cutv.end(), y) != cutv.end()) continue;
      std::vector<int> alive;
      for (int v : g.verts)
        if (v != x && v != y) alive.push_back(v);
      if (alive.empty()) continue;
      auto comps = components_of(g, alive);
      if (comps.size() > 1) out.push_back({{x, y}, std::move(comps)});
    }
  }
  return out;
}

}  // namespace c21
