#include "circuit21/catalog.hpp"

#include <algorithm>
#include <map>

#include "circuit21/sparsity.hpp"

namespace c21 {

namespace {

using EL = std::vector<std::pair<int, int>>;

Graph graph_on(int n, EL edges) {
  std::vector<int> vs(n);
  for (int i = 0; i < n; i++) vs[i] = i;
  return make_graph(std::move(vs), std::move(edges));
}

Graph k6_minus(const EL& removed) {
  Graph k6 = complete_graph(6);
  Graph g = k6;
  for (auto& [u, v] : removed) g = remove_edge(g, u, v);
  return g;
}

Graph k5_minus_plus(std::pair<int, int> missing, EL extra) {
  Graph g = remove_edge(complete_graph(5), missing.first, missing.second);
  for (auto& [u, v] : extra) g = add_edge(g, u, v);
  return g;
}

std::vector<BaseEntry> build_g_simple() {
  std::vector<BaseEntry> out;
  auto add = [&](const std::string& name, Graph g) {
    out.push_back({name, std::move(g), BaseFamily::g_simple});
  };
  add("K5", complete_graph(5));
  // K6 minus a triangle
  add("G57c", k6_minus({{0, 2}, {0, 5}, {2, 5}}));
  // K6 minus a three-edge path
  add("G59c", k6_minus({{0, 5}, {1, 4}, {1, 5}}));
  add("G293c", graph_on(7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                            {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}));
  add("G308c", graph_on(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                            {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {5, 6}}));
  add("G312c", graph_on(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 3},
                            {2, 4}, {2, 5}, {2, 6}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}));
  // two K4 blocks joined by a perfect matching
  add("S1", graph_on(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                         {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                         {0, 5}, {1, 4}, {2, 7}, {3, 6}}));
  add("S2", graph_on(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7},
                         {0, 4}, {1, 5}, {2, 6}, {3, 7},
                         {0, 5}, {1, 4}, {2, 7}, {3, 6}, {1, 3}, {5, 7}}));
  add("S3", graph_on(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7},
                         {0, 4}, {1, 5}, {2, 6}, {3, 7},
                         {0, 5}, {1, 4}, {2, 7}, {3, 6}, {2, 5}, {1, 6}}));
  add("S4", graph_on(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7},
                         {0, 4}, {1, 5}, {2, 6}, {3, 7},
                         {0, 5}, {1, 4}, {2, 7}, {3, 6}, {1, 6}, {5, 7}}));
  // two K5-e blocks sharing vertex 4; the left block misses 0-4, the right 7-8
  add("S5", graph_on(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                         {2, 4}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {4, 8},
                         {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}}));
  return out;
}

std::vector<BaseEntry> build_gstar_extra() {
  std::vector<BaseEntry> out;
  auto add = [&](const std::string& name, Graph g) {
    out.push_back({name, std::move(g), BaseFamily::gstar_extra});
  };
  add("R0", graph_on(1, {{0, 0}, {0, 0}}));
  add("R1", graph_on(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}}));
  add("R2", graph_on(3, {{1, 1}, {0, 1}, {1, 2}, {0, 2}, {0, 2}, {0, 2}}));
  add("R3", graph_on(3, {{0, 1}, {1, 2}, {0, 2}, {0, 0}, {1, 1}, {2, 2}}));
  add("R4", graph_on(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 2}, {3, 3}}));
  add("R5", graph_on(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 2}, {0, 2}, {3, 3}}));
  add("R6", graph_on(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 2}, {0, 2}, {0, 2}}));
  add("R7", graph_on(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {0, 2}, {0, 2}, {1, 3}, {1, 3}}));
  add("R8", graph_on(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {0, 2}, {0, 2}, {2, 3}, {2, 3}}));
  add("R9", k5_minus_plus({0, 4}, {{2, 2}}));
  add("R10", k5_minus_plus({0, 4}, {{0, 0}}));
  add("R11", k5_minus_plus({0, 4}, {{2, 3}}));
  add("R12", k5_minus_plus({0, 4}, {{3, 4}}));
  return out;
}

}  // namespace

const std::vector<BaseEntry>& base_graphs(BaseFamily fam) {
  static const std::vector<BaseEntry> gs = build_g_simple();
  static const std::vector<BaseEntry> rs = build_gstar_extra();
  return fam == BaseFamily::g_simple ? gs : rs;
}

const std::vector<BaseEntry>& all_base_graphs() {
  static const std::vector<BaseEntry> all = [] {
    std::vector<BaseEntry> v = base_graphs(BaseFamily::g_simple);
    auto& r = base_graphs(BaseFamily::gstar_extra);
    v.insert(v.end(), r.begin(), r.end());
    return v;
  }();
  return all;
}

std::optional<BaseEntry> is_base(const Graph& g) {
  static const std::map<CanonicalForm, const BaseEntry*> index = [] {
    std::map<CanonicalForm, const BaseEntry*> m;
    for (auto& e : all_base_graphs()) m.emplace(canonical_form(e.graph), &e);
    return m;
  }();
  auto it = index.find(canonical_form(g));
  if (it == index.end()) return std::nullopt;
  return *it->second;
}

bool in_class_M(const Graph& g) {
  if (!is_circuit(g)) return false;
  if (g.simple) return true;
  if (g.n() >= 4 && !is_k_connected(g, 3)) return false;
  for (int v : g.verts) {
    int loops = g.loop_count(v);
    bool multi = false;
    for (int u : g.neighbors(v))
      if (g.multiplicity(v, u) >= 2) {
        if (g.multiplicity(v, u) > 3) return false;
        multi = true;
      }
    if (multi && g.degree(v) <= 3) return false;
    if (loops >= 1) {
      if (g.degree(v) <= 3 || multi) return false;
    }
    if (loops >= 2 && g.n() != 1) return false;
    if (loops > 2) return false;
  }
  return true;
}

namespace {

std::vector<int> boundary_of(const Graph& g, const std::vector<int>& side) {
  std::vector<int> s = side, out;
  std::sort(s.begin(), s.end());
  for (int v : s) {
    for (int u : g.neighbors(v))
      if (!std::binary_search(s.begin(), s.end(), u)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

bool induces_k4(const Graph& g, const std::vector<int>& s) {
  if (s.size() != 4) return false;
  for (size_t i = 0; i < 4; i++)
    for (size_t j = i + 1; j < 4; j++)
      if (g.multiplicity(s[i], s[j]) != 1) return false;
  for (int v : s)
    if (g.loop_count(v) != 0) return false;
  return true;
}

// 5 labels inducing K5 minus exactly one edge, simple; returns the missing pair.
std::optional<std::pair<int, int>> k5_minus_e_shape(const Graph& g,
                                                    const std::vector<int>& s) {
  if (s.size() != 5) return std::nullopt;
  std::optional<std::pair<int, int>> missing;
  for (size_t i = 0; i < 5; i++) {
    if (g.loop_count(s[i]) != 0) return std::nullopt;
    for (size_t j = i + 1; j < 5; j++) {
      int m = g.multiplicity(s[i], s[j]);
      if (m > 1) return std::nullopt;
      if (m == 0) {
        if (missing) return std::nullopt;
        missing = {s[i], s[j]};
      }
    }
  }
  if (!missing) return std::nullopt;
  return missing;
}

}  // namespace

std::optional<GadgetMatch> recognize_gadget(const Graph& g, const std::vector<int>& side,
                                            GadgetKind kind) {
  std::vector<int> s = side;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (!g.has_vertex(v)) return std::nullopt;
  auto bnd = boundary_of(g, s);
  if (bnd.empty() && (kind == GadgetKind::t1 || kind == GadgetKind::t2)) {
    // standalone gadget: the wing vertices play the boundary roles
    for (int v : s)
      if (g.loop_count(v) == 0 && g.degree(v) == 2) bnd.push_back(v);
  }
  std::vector<int> interior;
  for (int v : s)
    if (std::find(bnd.begin(), bnd.end(), v) == bnd.end()) interior.push_back(v);

  switch (kind) {
    case GadgetKind::k5_minus_e: {
      auto missing = k5_minus_e_shape(g, s);
      if (!missing) return std::nullopt;
      if (bnd.size() != 1) return std::nullopt;
      return GadgetMatch{kind, bnd, interior, missing};
    }
    case GadgetKind::k4: {
      if (!induces_k4(g, s)) return std::nullopt;
      return GadgetMatch{kind, bnd, interior, std::nullopt};
    }
    case GadgetKind::t1: {
      if (s.size() != 6 || bnd.size() != 2) return std::nullopt;
      int x = bnd[0], y = bnd[1];
      if (g.has_edge(x, y)) return std::nullopt;
      std::vector<int> core;
      for (int v : s)
        if (v != x && v != y) core.push_back(v);
      if (!induces_k4(g, core)) return std::nullopt;
      auto in_core_nbrs = [&](int v) {
        std::vector<int> r;
        for (int u : core)
          if (g.multiplicity(v, u) == 1) r.push_back(u);
          else if (g.multiplicity(v, u) > 1) r.push_back(-1);
        return r;
      };
      auto nx = in_core_nbrs(x), ny = in_core_nbrs(y);
      if (nx.size() != 2 || ny.size() != 2) return std::nullopt;
      for (int a : nx)
        if (a < 0 || std::find(ny.begin(), ny.end(), a) != ny.end()) return std::nullopt;
      for (int a : ny)
        if (a < 0) return std::nullopt;
      return GadgetMatch{kind, {x, y}, core, std::nullopt};
    }
    case GadgetKind::t2: {
      if (s.size() != 7 || bnd.size() != 2) return std::nullopt;
      int x = bnd[0], y = bnd[1];
      if (g.has_edge(x, y)) return std::nullopt;
      std::vector<int> core;
      for (int v : s)
        if (v != x && v != y) core.push_back(v);
      auto missing = k5_minus_e_shape(g, core);
      if (!missing) return std::nullopt;
      std::vector<int> nx, ny;
      for (int u : core) {
        int mx = g.multiplicity(x, u), my = g.multiplicity(y, u);
        if (mx > 1 || my > 1) return std::nullopt;
        if (mx == 1) nx.push_back(u);
        if (my == 1) ny.push_back(u);
      }
      if (nx.size() != 2 || ny.size() != 2) return std::nullopt;
      for (int a : nx)
        if (std::find(ny.begin(), ny.end(), a) != ny.end()) return std::nullopt;
      // the missing core edge joins one x-target and one y-target
      auto in = [](const std::vector<int>& v, int a) {
        return std::find(v.begin(), v.end(), a) != v.end();
      };
      auto [mu, mv] = *missing;
      bool ok = (in(nx, mu) && in(ny, mv)) || (in(nx, mv) && in(ny, mu));
      if (!ok) return std::nullopt;
      return GadgetMatch{kind, {x, y}, core, missing};
    }
    case GadgetKind::apex: {
      if (s.size() != 1) return std::nullopt;
      int v = s[0];
      if (g.loop_count(v) != 0) return std::nullopt;
      for (int u : g.neighbors(v))
        if (g.multiplicity(v, u) != 1) return std::nullopt;
      return GadgetMatch{kind, {v}, {}, std::nullopt};
    }
  }
  return std::nullopt;
}

Graph octahedron() {
  Graph g = complete_graph(6);
  g = remove_edge(g, 0, 3);
  g = remove_edge(g, 1, 4);
  g = remove_edge(g, 2, 5);
  return g;
}

Graph g60() {
  return graph_on(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5},
                      {3, 4}, {3, 5}, {4, 5}, {0, 5}, {1, 5}});
}

Graph t1_gadget() {
  return graph_on(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}, {1, 5}, {2, 4},
                      {2, 5}, {0, 2}, {3, 5}});
}

Graph t2_gadget() {
  return graph_on(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {3, 6}, {3, 5},
                      {1, 3}, {1, 6}, {2, 6}, {2, 5}, {0, 2}, {4, 6}});
}

Graph flagged_example_graph() {
  return graph_on(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2},
                       {1, 3}, {1, 7}, {2, 3}, {4, 5}, {4, 6}, {4, 8}, {5, 6},
                       {5, 7}, {5, 8}, {6, 8}, {7, 9}, {4, 9}, {2, 9}});
}

}  // namespace c21
