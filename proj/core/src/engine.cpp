#include "circuit21/engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "circuit21/sparsity.hpp"

namespace c21 {

std::optional<NodeMove> find_admissible_node(const Graph& g) {
  for (int v : g.verts) {
    if (g.degree(v) != 3 || g.loop_count(v) != 0) continue;
    auto nb = g.neighbors(v);
    if (nb.size() != 3) continue;
    for (int i = 0; i < 3; i++)
      for (int j = i + 1; j < 3; j++) {
        int u = nb[i], w = nb[j];
        if (g.has_edge(u, w)) continue;
        Graph red = one_reduction(g, v, u, w);
        if (is_circuit(red)) {
          int z = nb[3 - i - j];
          return NodeMove{v, u, w, z, std::move(red)};
        }
      }
  }
  return std::nullopt;
}

std::optional<Deg4Move> find_admissible_degree4(const Graph& g) {
  static const int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (int v : g.verts) {
    if (g.degree(v) != 4 || g.loop_count(v) != 0) continue;
    auto nb = g.neighbors(v);
    if (nb.size() != 4) continue;
    for (auto& p : pairing) {
      int a = nb[p[0]], b = nb[p[1]], c = nb[p[2]], d = nb[p[3]];
      if (g.has_edge(a, b) || g.has_edge(c, d)) continue;
      Graph red = inverse_x_replacement(g, v, a, b, c, d);
      if (is_circuit(red)) return Deg4Move{v, a, b, c, d, std::move(red)};
    }
  }
  return std::nullopt;
}

namespace {

std::vector<int> union_sorted(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// components-as-sides around a vertex cut; emits each component against the
// rest (once for two components).
void emit_vertex_cut_separations(const Graph& g, const VertexCut& cut,
                                 std::vector<Separation>& out) {
  const auto& comps = cut.components;
  size_t limit = comps.size() == 2 ? 1 : comps.size();
  for (size_t ci = 0; ci < limit; ci++) {
    std::vector<int> a = union_sorted(comps[ci], cut.cut);
    std::vector<int> b = cut.cut;
    for (size_t cj = 0; cj < comps.size(); cj++)
      if (cj != ci) b = union_sorted(b, comps[cj]);
    int ia = induced_count(g, a), ib = induced_count(g, b);
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    Separation sep;
    sep.side_a = a;
    sep.side_b = b;
    sep.cut_vertices = cut.cut;
    sep.count_a = ia;
    sep.count_b = ib;
    if (cut.cut.size() == 1) {
      if (ia == 2 * na - 1 && ib == 2 * nb - 1) {
        sep.kind = SumCase::sum1;
        out.push_back(std::move(sep));
      }
      continue;
    }
    int x = cut.cut[0], y = cut.cut[1];
    if (!g.has_edge(x, y)) {
      if (ia == 2 * na - 2 && ib == 2 * nb - 2) {
        sep.kind = SumCase::sum2a;
        out.push_back(std::move(sep));
      } else if (ia == 2 * na - 1 && ib == 2 * nb - 3) {
        sep.kind = SumCase::sum2b;
        out.push_back(std::move(sep));
      } else if (ia == 2 * na - 3 && ib == 2 * nb - 1) {
        std::swap(sep.side_a, sep.side_b);
        std::swap(sep.count_a, sep.count_b);
        sep.kind = SumCase::sum2b;
        out.push_back(std::move(sep));
      }
    } else {
      if (ia == 2 * na - 1 && ib == 2 * nb - 2) {
        sep.kind = SumCase::sum3;
        out.push_back(std::move(sep));
      } else if (ia == 2 * na - 2 && ib == 2 * nb - 1) {
        std::swap(sep.side_a, sep.side_b);
        std::swap(sep.count_a, sep.count_b);
        sep.kind = SumCase::sum3;
        out.push_back(std::move(sep));
      }
    }
  }
}

int distinct_endpoints(const std::vector<std::pair<int, int>>& es, bool first) {
  std::vector<int> v;
  for (auto& e : es) v.push_back(first ? e.first : e.second);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return static_cast<int>(v.size());
}

}  // namespace

std::vector<Separation> classify_separation(const Graph& g) {
  std::vector<Separation> out;
  if (g.n() < 2 || !is_connected(g)) return out;

  for (auto& cut : find_cut_vertices(g)) emit_vertex_cut_separations(g, cut, out);
  size_t vertex_cuts_end = out.size();
  for (auto& cut : find_cut_pairs(g)) emit_vertex_cut_separations(g, cut, out);
  (void)vertex_cuts_end;

  std::vector<Separation> edge_seps;
  for (auto& cut : nontrivial_edge_cuts(g, 4)) {
    int k = static_cast<int>(cut.cut_edges.size());
    if (k != 3 && k != 4) continue;
    int na = static_cast<int>(cut.side_a.size()), nb = static_cast<int>(cut.side_b.size());
    int ia = induced_count(g, cut.side_a), ib = induced_count(g, cut.side_b);
    // orient each cut edge as (A endpoint, B endpoint)
    auto orient = [&](const std::vector<int>& aside) {
      std::vector<std::pair<int, int>> es;
      for (auto& [u, v] : cut.cut_edges) {
        bool ua = std::binary_search(aside.begin(), aside.end(), u);
        es.push_back(ua ? std::make_pair(u, v) : std::make_pair(v, u));
      }
      std::sort(es.begin(), es.end());
      return es;
    };
    if (k == 3) {
      Separation sep;
      if (ia == 2 * na - 1 && ib == 2 * nb - 2) {
        sep.side_a = cut.side_a;
        sep.side_b = cut.side_b;
        sep.count_a = ia;
        sep.count_b = ib;
      } else if (ia == 2 * na - 2 && ib == 2 * nb - 1) {
        sep.side_a = cut.side_b;
        sep.side_b = cut.side_a;
        sep.count_a = ib;
        sep.count_b = ia;
      } else {
        continue;
      }
      sep.kind = SumCase::sum4;
      sep.cut_edges = orient(sep.side_a);
      // six distinct endpoints
      if (distinct_endpoints(sep.cut_edges, true) != 3) continue;
      if (distinct_endpoints(sep.cut_edges, false) != 3) continue;
      edge_seps.push_back(std::move(sep));
    } else {
      if (!(ia == 2 * na - 2 && ib == 2 * nb - 2)) continue;
      Separation sep;
      sep.kind = SumCase::sum5;
      sep.side_a = cut.side_a;
      sep.side_b = cut.side_b;
      sep.count_a = ia;
      sep.count_b = ib;
      sep.cut_edges = orient(sep.side_a);
      if (distinct_endpoints(sep.cut_edges, true) < 3) continue;
      if (distinct_endpoints(sep.cut_edges, false) < 3) continue;
      edge_seps.push_back(std::move(sep));
    }
  }
  std::stable_sort(edge_seps.begin(), edge_seps.end(),
                   [](const Separation& a, const Separation& b) {
                     if (a.kind != b.kind) return a.kind < b.kind;
                     return a.side_a < b.side_a;
                   });
  out.insert(out.end(), edge_seps.begin(), edge_seps.end());
  return out;
}

namespace {

using CanonSet = std::set<std::string>;

bool part_ok(const Graph& part, const std::string& self_canon, const CanonSet& avoid,
             bool allow_same, bool allow_larger, int gn) {
  if (is_base(part)) return true;
  if (part.n() == gn && !allow_same) return false;
  if (part.n() > gn && !allow_larger) return false;
  // never revisit the input or a path ancestor (sizes are not monotone along
  // fallback splits, so even smaller parts are checked)
  std::string c = canonical_form(part).bytes;
  if (c == self_canon) return false;
  return avoid.find(c) == avoid.end();
}

// Gated split candidates in engine priority order:
//   pass 0: both parts strictly smaller
//   pass 1: same-size parts sanctioned for sums 1, 4, 5 (pendant K5-e blobs
//           converge on S5-like bases, sum4/5 gadget sides can tie the size)
//   pass 2: sums over cut pairs may grow a part while eliminating the pair
//           (case 3) or trading a small side for a gadget (cases 2a/2b);
//           progress is guarded by the ancestor memo and the search budget
std::vector<std::pair<Separation, SplitResult>> gated_splits(const Graph& g,
                                                             const CanonSet& avoid) {
  auto seps = classify_separation(g);
  std::string self_canon = canonical_form(g).bytes;
  std::vector<std::vector<SplitResult>> variants(seps.size());
  std::vector<bool> have(seps.size(), false);
  std::vector<std::vector<bool>> used(seps.size());
  std::vector<std::pair<Separation, SplitResult>> out;
  for (int pass = 0; pass < 3; pass++) {
    for (size_t si = 0; si < seps.size(); si++) {
      auto& sep = seps[si];
      bool allow_same = false, allow_larger = false;
      if (pass == 0) {
      } else if (pass == 1) {
        if (sep.kind != SumCase::sum1 && sep.kind != SumCase::sum4 &&
            sep.kind != SumCase::sum5)
          continue;
        allow_same = true;
      } else {
        if (sep.kind != SumCase::sum2a && sep.kind != SumCase::sum2b &&
            sep.kind != SumCase::sum3)
          continue;
        allow_same = allow_larger = true;
      }
      if (!have[si]) {
        have[si] = true;
        try {
          variants[si] = sum_split_variants(g, sep);
        } catch (const std::invalid_argument&) {
        }
        used[si].assign(variants[si].size(), false);
      }
      for (size_t vi = 0; vi < variants[si].size(); vi++) {
        if (used[si][vi]) continue;
        const SplitResult& sr = variants[si][vi];
        if (!part_ok(sr.part_a, self_canon, avoid, allow_same, allow_larger, g.n()))
          continue;
        if (!part_ok(sr.part_b, self_canon, avoid, allow_same, allow_larger, g.n()))
          continue;
        used[si][vi] = true;
        out.push_back({sep, sr});
      }
    }
  }
  return out;
}

ReduceStep reduce_step_impl(const Graph& g, const CanonSet& avoid) {
  if (auto entry = is_base(g)) {
    ReduceStep step;
    step.kind = ReduceStep::Kind::base;
    step.base_name = entry->name;
    return step;
  }
  if (auto nm = find_admissible_node(g)) {
    ReduceStep step;
    step.kind = ReduceStep::Kind::reduction_node;
    step.node = std::move(nm);
    return step;
  }
  if (auto dm = find_admissible_degree4(g)) {
    ReduceStep step;
    step.kind = ReduceStep::Kind::reduction_deg4;
    step.deg4 = std::move(dm);
    return step;
  }
  auto splits = gated_splits(g, avoid);
  if (!splits.empty()) {
    ReduceStep step;
    step.kind = ReduceStep::Kind::split;
    step.sep = splits[0].first;
    step.split = splits[0].second;
    return step;
  }
  throw theorem_violation("no admissible reduction or progressing split exists");
}

}  // namespace

ReduceStep reduce_step(const Graph& g) {
  if (!is_circuit(g)) throw std::invalid_argument("reduce_step: input is not a circuit");
  return reduce_step_impl(g, {});
}

Graph gstar_construct(const Graph& g0) {
  if (!g0.simple || !is_circuit(g0))
    throw std::invalid_argument("gstar_construct: input must be a simple circuit");
  Graph g = g0;
  for (int round = 0; round < g0.n(); round++) {
    // collect replacements against the current graph, apply simultaneously
    struct Repl {
      std::vector<int> interior;
      int x, y;     // y < 0 for a loop
      int copies;   // 1 loop, 2 double, 3 triple
    };
    std::vector<Repl> repls;
    std::vector<int> taken;
    auto disjoint = [&](const std::vector<int>& in) {
      for (int v : in)
        if (std::find(taken.begin(), taken.end(), v) != taken.end()) return false;
      return true;
    };
    if (is_connected(g)) {
      for (auto& cut : find_cut_vertices(g)) {
        int x = cut.cut[0];
        for (auto& comp : cut.components) {
          if (comp.size() != 4) continue;
          auto side = union_sorted(comp, {x});
          if (recognize_gadget(g, side, GadgetKind::k5_minus_e) && disjoint(comp)) {
            repls.push_back({comp, x, -1, 1});
            taken.insert(taken.end(), comp.begin(), comp.end());
          }
        }
      }
      for (auto& cut : find_cut_pairs(g)) {
        int x = cut.cut[0], y = cut.cut[1];
        if (g.has_edge(x, y)) continue;
        // one replacement per cut pair: if both sides carry a gadget the
        // second side is the surviving remainder
        for (auto& comp : cut.components) {
          auto side = union_sorted(comp, cut.cut);
          if (comp.size() == 4 && recognize_gadget(g, side, GadgetKind::t1) && disjoint(comp)) {
            repls.push_back({comp, x, y, 2});
            taken.insert(taken.end(), comp.begin(), comp.end());
            break;
          }
          if (comp.size() == 5 && recognize_gadget(g, side, GadgetKind::t2) && disjoint(comp)) {
            repls.push_back({comp, x, y, 3});
            taken.insert(taken.end(), comp.begin(), comp.end());
            break;
          }
        }
      }
    }
    if (repls.empty()) break;
    for (auto& r : repls) {
      for (int v : r.interior) g = remove_vertex(g, v);
      for (int i = 0; i < r.copies; i++) g = add_edge(g, r.x, r.y < 0 ? r.x : r.y);
    }
  }
  if (g.n() > 1 && (!find_cut_vertices(g).empty() || !find_cut_pairs(g).empty()))
    throw std::invalid_argument("gstar_construct: a cut lacks the required gadget side");
  if (!in_class_M(g))
    throw std::invalid_argument("gstar_construct: result leaves the controlled class");
  return g;
}

// ---------------------------------------------------------------------------
// decompose: phase 1 builds the reduction tree on the input's own labels,
// phase 2 re-simulates the replay bottom-up and rewrites every move into the
// replay's coordinates so the emitted certificate replays exactly.

namespace {

struct DecompNode {
  Graph g;
  ReduceStep step;
  std::vector<std::unique_ptr<DecompNode>> children;
};

constexpr int kDepthBudget = 400;
constexpr int kSearchBudget = 50000;

// Depth-first search with backtracking: a reduction or split whose subtree
// dead-ends is abandoned and the next candidate step is tried. Genuine
// circuits never exhaust the candidates (that is the constructive theorem);
// the budgets turn a latent engine bug into a diagnostic instead of a hang.
std::unique_ptr<DecompNode> build_tree(const Graph& g, CanonSet& ancestors, int depth,
                                       int& budget) {
  if (depth > kDepthBudget || --budget < 0)
    throw theorem_violation("decomposition search budget exceeded");
  std::string canon = canonical_form(g).bytes;
  if (ancestors.count(canon))
    throw theorem_violation("decomposition revisited an ancestor graph");

  auto node = std::make_unique<DecompNode>();
  node->g = g;
  if (auto entry = is_base(g)) {
    node->step.kind = ReduceStep::Kind::base;
    node->step.base_name = entry->name;
    return node;
  }

  ancestors.insert(canon);
  struct Eraser {
    CanonSet& set;
    std::string key;
    ~Eraser() { set.erase(key); }
  } eraser{ancestors, canon};

  // all admissible 1-reductions, then inverse X-replacements, in search order
  for (int v : g.verts) {
    if (g.degree(v) != 3 || g.loop_count(v) != 0) continue;
    auto nb = g.neighbors(v);
    if (nb.size() != 3) continue;
    for (int i = 0; i < 3; i++)
      for (int j = i + 1; j < 3; j++) {
        int u = nb[i], w = nb[j];
        if (g.has_edge(u, w)) continue;
        Graph red = one_reduction(g, v, u, w);
        if (!is_circuit(red)) continue;
        try {
          auto child = build_tree(red, ancestors, depth + 1, budget);
          node->step.kind = ReduceStep::Kind::reduction_node;
          node->step.node = NodeMove{v, u, w, nb[3 - i - j], std::move(red)};
          node->children.push_back(std::move(child));
          return node;
        } catch (const theorem_violation&) {
          if (budget < 0) throw;
        }
      }
  }
  static const int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (int v : g.verts) {
    if (g.degree(v) != 4 || g.loop_count(v) != 0) continue;
    auto nb = g.neighbors(v);
    if (nb.size() != 4) continue;
    for (auto& p : pairing) {
      int a = nb[p[0]], b = nb[p[1]], c = nb[p[2]], d = nb[p[3]];
      if (g.has_edge(a, b) || g.has_edge(c, d)) continue;
      Graph red = inverse_x_replacement(g, v, a, b, c, d);
      if (!is_circuit(red)) continue;
      try {
        auto child = build_tree(red, ancestors, depth + 1, budget);
        node->step.kind = ReduceStep::Kind::reduction_deg4;
        node->step.deg4 = Deg4Move{v, a, b, c, d, std::move(red)};
        node->children.push_back(std::move(child));
        return node;
      } catch (const theorem_violation&) {
        if (budget < 0) throw;
      }
    }
  }
  for (auto& [sep, sr] : gated_splits(g, ancestors)) {
    try {
      auto child_a = build_tree(sr.part_a, ancestors, depth + 1, budget);
      auto child_b = build_tree(sr.part_b, ancestors, depth + 1, budget);
      node->step.kind = ReduceStep::Kind::split;
      node->step.sep = sep;
      node->step.split = sr;
      node->children.push_back(std::move(child_a));
      node->children.push_back(std::move(child_b));
      return node;
    } catch (const theorem_violation&) {
      if (budget < 0) throw;
    }
  }
  throw theorem_violation("no admissible reduction or progressing split exists");
}

struct Emission {
  std::unique_ptr<CertNode> node;
  Graph replayed;
  std::map<int, int> sigma;  // replay label -> decomposition label
};

std::map<int, int> invert(const std::map<int, int>& m) {
  std::map<int, int> inv;
  for (auto& [k, v] : m) inv[v] = k;
  return inv;
}

Emission emit(const DecompNode& d) {
  Emission out;
  switch (d.step.kind) {
    case ReduceStep::Kind::base: {
      const BaseEntry* entry = nullptr;
      for (auto& e : all_base_graphs())
        if (e.name == d.step.base_name) entry = &e;
      auto iso = find_isomorphism(entry->graph, d.g);
      out.node = std::make_unique<CertNode>();
      out.node->kind = CertNode::Kind::base;
      out.node->base_name = d.step.base_name;
      out.replayed = entry->graph;
      for (auto& [a, b] : *iso) out.sigma[a] = b;
      return out;
    }
    case ReduceStep::Kind::reduction_node: {
      Emission child = emit(*d.children[0]);
      auto inv = invert(child.sigma);
      const NodeMove& mv = *d.step.node;
      int u = inv.at(mv.u), w = inv.at(mv.w), z = inv.at(mv.z);
      int v = child.replayed.max_label() + 1;
      out.replayed = one_extension(child.replayed, u, w, z, v);
      out.sigma = child.sigma;
      out.sigma[v] = mv.v;
      out.node = std::make_unique<CertNode>();
      out.node->kind = CertNode::Kind::ext;
      out.node->v = v;
      out.node->u = u;
      out.node->w = w;
      out.node->z = z;
      out.node->children.push_back(std::move(child.node));
      return out;
    }
    case ReduceStep::Kind::reduction_deg4: {
      Emission child = emit(*d.children[0]);
      auto inv = invert(child.sigma);
      const Deg4Move& mv = *d.step.deg4;
      int a = inv.at(mv.a), b = inv.at(mv.b), c = inv.at(mv.c), dd = inv.at(mv.d);
      int v = child.replayed.max_label() + 1;
      out.replayed = x_replacement(child.replayed, a, b, c, dd, v);
      out.sigma = child.sigma;
      out.sigma[v] = mv.v;
      out.node = std::make_unique<CertNode>();
      out.node->kind = CertNode::Kind::xrep;
      out.node->v = v;
      out.node->a = a;
      out.node->b = b;
      out.node->c = c;
      out.node->d = dd;
      out.node->children.push_back(std::move(child.node));
      return out;
    }
    case ReduceStep::Kind::split: {
      Emission ea = emit(*d.children[0]);
      Emission eb = emit(*d.children[1]);
      auto inva = invert(ea.sigma), invb = invert(eb.sigma);
      const JoinSpec& s0 = d.step.split->spec;
      JoinSpec s;
      s.kind = s0.kind;
      s.kind_a = s0.kind_a;
      s.kind_b = s0.kind_b;
      if (s0.xa >= 0) s.xa = inva.at(s0.xa);
      if (s0.ya >= 0) s.ya = inva.at(s0.ya);
      if (s0.xb >= 0) s.xb = invb.at(s0.xb);
      if (s0.yb >= 0) s.yb = invb.at(s0.yb);
      for (int t : s0.gadget_a) s.gadget_a.push_back(inva.at(t));
      for (int t : s0.gadget_b) s.gadget_b.push_back(invb.at(t));
      for (auto& [pa, pb] : s0.cross) s.cross.push_back({inva.at(pa), invb.at(pb)});
      std::vector<std::pair<int, int>> bmap;
      out.replayed = sum_join(s, ea.replayed, eb.replayed, &bmap);
      for (int v : out.replayed.verts) out.sigma[v] = -1;
      for (auto& [from, to] : bmap) out.sigma[to] = eb.sigma.at(from);
      for (auto& [v, tag] : out.sigma)
        if (tag == -1) out.sigma[v] = ea.sigma.at(v);
      out.node = std::make_unique<CertNode>();
      out.node->kind = CertNode::Kind::sum;
      out.node->spec = s;
      out.node->children.push_back(std::move(ea.node));
      out.node->children.push_back(std::move(eb.node));
      return out;
    }
  }
  throw std::logic_error("emit: unreachable");
}

}  // namespace

Certificate decompose(const Graph& g) {
  if (!is_circuit(g)) throw std::invalid_argument("decompose: input is not a circuit");
  CanonSet ancestors;
  int budget = kSearchBudget;
  auto tree = build_tree(g, ancestors, 0, budget);
  Emission e = emit(*tree);
  Certificate cert;
  cert.root = std::move(e.node);
  cert.target = canonical_form(g);
  if (canonical_form(e.replayed) != cert.target)
    throw std::logic_error("decompose: certificate replay does not match the input");
  return cert;
}

namespace {

bool form_is_simple(const CanonicalForm& f) {
  if (f.bytes.empty()) return true;
  int n = static_cast<unsigned char>(f.bytes[0]);
  for (int i = 1; i <= n && i < static_cast<int>(f.bytes.size()); i++)
    if (f.bytes[i] != 0) return false;
  for (size_t i = 1 + n; i < f.bytes.size(); i++)
    if (static_cast<unsigned char>(f.bytes[i]) > 1) return false;
  return true;
}

Graph replay_node(const CertNode& node, bool need_simple) {
  auto check = [&](Graph g) {
    if (!is_circuit(g))
      throw std::invalid_argument("replay: intermediate graph is not a circuit");
    if (need_simple && !g.simple)
      throw std::invalid_argument("replay: intermediate graph is not simple");
    return g;
  };
  switch (node.kind) {
    case CertNode::Kind::base: {
      for (auto& e : all_base_graphs())
        if (e.name == node.base_name) return check(e.graph);
      throw std::invalid_argument("replay: unknown base graph " + node.base_name);
    }
    case CertNode::Kind::ext: {
      Graph g = replay_node(*node.children.at(0), need_simple);
      return check(one_extension(g, node.u, node.w, node.z, node.v));
    }
    case CertNode::Kind::xrep: {
      Graph g = replay_node(*node.children.at(0), need_simple);
      return check(x_replacement(g, node.a, node.b, node.c, node.d, node.v));
    }
    case CertNode::Kind::sum: {
      Graph a = replay_node(*node.children.at(0), need_simple);
      Graph b = replay_node(*node.children.at(1), need_simple);
      return check(sum_join(node.spec, a, b));
    }
  }
  throw std::logic_error("replay: unreachable");
}

}  // namespace

Graph replay_certificate(const Certificate& cert) {
  if (!cert.root) throw std::invalid_argument("replay: empty certificate");
  bool need_simple = form_is_simple(cert.target);
  Graph g = replay_node(*cert.root, need_simple);
  if (canonical_form(g) != cert.target)
    throw std::invalid_argument("replay: final form mismatch");
  return g;
}

// ---------------------------------------------------------------------------
// text format: "TARGET <hex>" then one node per line, depth-prefixed

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); i++) {
    if (i) s.push_back(',');
    s += std::to_string(v[i]);
  }
  return s;
}

void write_node(const CertNode& n, int depth, std::ostringstream& out) {
  out << depth << ' ';
  switch (n.kind) {
    case CertNode::Kind::base:
      out << "BASE " << n.base_name << '\n';
      break;
    case CertNode::Kind::ext:
      out << "EXT v=" << n.v << " del=" << n.u << '-' << n.w << " z=" << n.z << '\n';
      break;
    case CertNode::Kind::xrep:
      out << "XREP v=" << n.v << " del=" << n.a << '-' << n.b << ',' << n.c << '-' << n.d
          << '\n';
      break;
    case CertNode::Kind::sum: {
      const JoinSpec& s = n.spec;
      out << "SUM" << to_string(s.kind) << " cut=";
      if (s.kind == SumCase::sum4 || s.kind == SumCase::sum5) {
        for (size_t i = 0; i < s.cross.size(); i++) {
          if (i) out << ',';
          out << s.cross[i].first << '-' << s.cross[i].second;
        }
      } else {
        out << s.xa << '/' << s.xb;
        if (s.ya >= 0) out << ',' << s.ya << '/' << s.yb;
      }
      out << " opts=";
      bool first = true;
      auto field = [&](const std::string& k, const std::string& v) {
        if (!first) out << ';';
        first = false;
        out << k << '=' << v;
      };
      if (s.kind_a != Sum5Side::none) field("kA", to_string(s.kind_a));
      if (!s.gadget_a.empty()) field("gA", join_ints(s.gadget_a));
      if (s.kind_b != Sum5Side::none) field("kB", to_string(s.kind_b));
      if (!s.gadget_b.empty()) field("gB", join_ints(s.gadget_b));
      if (first) out << "-";
      out << '\n';
      break;
    }
  }
  for (auto& c : n.children) write_node(*c, depth + 1, out);
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

struct Line {
  int depth;
  std::string text;
};

std::unique_ptr<CertNode> parse_node(const std::vector<Line>& lines, size_t& pos, int depth) {
  if (pos >= lines.size() || lines[pos].depth != depth)
    throw std::invalid_argument("certificate parse: bad tree structure");
  std::istringstream in(lines[pos].text);
  pos++;
  std::string head;
  in >> head;
  auto node = std::make_unique<CertNode>();
  auto get_kv = [&](const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0)
      throw std::invalid_argument("certificate parse: expected " + key + "=");
    return tok.substr(key.size() + 1);
  };
  if (head == "BASE") {
    node->kind = CertNode::Kind::base;
    in >> node->base_name;
    return node;
  }
  if (head == "EXT") {
    node->kind = CertNode::Kind::ext;
    std::string t1, t2, t3;
    in >> t1 >> t2 >> t3;
    node->v = std::stoi(get_kv(t1, "v"));
    auto del = get_kv(t2, "del");
    auto dash = del.find('-');
    node->u = std::stoi(del.substr(0, dash));
    node->w = std::stoi(del.substr(dash + 1));
    node->z = std::stoi(get_kv(t3, "z"));
    node->children.push_back(parse_node(lines, pos, depth + 1));
    return node;
  }
  if (head == "XREP") {
    node->kind = CertNode::Kind::xrep;
    std::string t1, t2;
    in >> t1 >> t2;
    node->v = std::stoi(get_kv(t1, "v"));
    auto del = get_kv(t2, "del");
    auto comma = del.find(',');
    auto e1 = del.substr(0, comma), e2 = del.substr(comma + 1);
    node->a = std::stoi(e1.substr(0, e1.find('-')));
    node->b = std::stoi(e1.substr(e1.find('-') + 1));
    node->c = std::stoi(e2.substr(0, e2.find('-')));
    node->d = std::stoi(e2.substr(e2.find('-') + 1));
    node->children.push_back(parse_node(lines, pos, depth + 1));
    return node;
  }
  if (head.rfind("SUM", 0) == 0) {
    node->kind = CertNode::Kind::sum;
    JoinSpec& s = node->spec;
    std::string tag = head.substr(3);
    if (tag == "1") s.kind = SumCase::sum1;
    else if (tag == "2a") s.kind = SumCase::sum2a;
    else if (tag == "2b") s.kind = SumCase::sum2b;
    else if (tag == "3") s.kind = SumCase::sum3;
    else if (tag == "4") s.kind = SumCase::sum4;
    else if (tag == "5") s.kind = SumCase::sum5;
    else throw std::invalid_argument("certificate parse: unknown sum case " + tag);
    std::string t1, t2;
    in >> t1 >> t2;
    auto cut = get_kv(t1, "cut");
    if (s.kind == SumCase::sum4 || s.kind == SumCase::sum5) {
      std::istringstream cs(cut);
      std::string pair;
      while (std::getline(cs, pair, ',')) {
        auto dash = pair.find('-');
        s.cross.push_back({std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1))});
      }
    } else {
      std::istringstream cs(cut);
      std::string pair;
      int idx = 0;
      while (std::getline(cs, pair, ',')) {
        auto slash = pair.find('/');
        int pa = std::stoi(pair.substr(0, slash)), pb = std::stoi(pair.substr(slash + 1));
        if (idx == 0) {
          s.xa = pa;
          s.xb = pb;
        } else {
          s.ya = pa;
          s.yb = pb;
        }
        idx++;
      }
    }
    auto opts = get_kv(t2, "opts");
    if (opts != "-") {
      std::istringstream os(opts);
      std::string fld;
      while (std::getline(os, fld, ';')) {
        auto eq = fld.find('=');
        auto key = fld.substr(0, eq), val = fld.substr(eq + 1);
        if (key == "kA") s.kind_a = sum5_side_from_string(val);
        else if (key == "kB") s.kind_b = sum5_side_from_string(val);
        else if (key == "gA") s.gadget_a = parse_ints(val);
        else if (key == "gB") s.gadget_b = parse_ints(val);
        else throw std::invalid_argument("certificate parse: unknown option " + key);
      }
    }
    node->children.push_back(parse_node(lines, pos, depth + 1));
    node->children.push_back(parse_node(lines, pos, depth + 1));
    return node;
  }
  throw std::invalid_argument("certificate parse: unknown node " + head);
}

}  // namespace

std::string certificate_to_text(const Certificate& cert) {
  std::ostringstream out;
  out << "TARGET " << cert.target.hex() << '\n';
  write_node(*cert.root, 0, out);
  return out.str();
}

Certificate certificate_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Certificate cert;
  std::vector<Line> lines;
  bool have_target = false;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("TARGET ", 0) == 0) {
      std::string hex = line.substr(7);
      if (hex.size() % 2) throw std::invalid_argument("certificate parse: bad target hex");
      std::string bytes;
      for (size_t i = 0; i < hex.size(); i += 2)
        bytes.push_back(static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16)));
      cert.target = {bytes};
      have_target = true;
      continue;
    }
    std::istringstream ls(line);
    Line l;
    if (!(ls >> l.depth)) throw std::invalid_argument("certificate parse: missing depth");
    std::getline(ls, l.text);
    while (!l.text.empty() && l.text.front() == ' ') l.text.erase(l.text.begin());
    lines.push_back(std::move(l));
  }
  if (!have_target) throw std::invalid_argument("certificate parse: missing TARGET line");
  size_t pos = 0;
  cert.root = parse_node(lines, pos, 0);
  if (pos != lines.size())
    throw std::invalid_argument("certificate parse: trailing nodes");
  return cert;
}

namespace {

void dot_node(const CertNode& n, int& counter, int parent, std::ostringstream& out) {
  int id = counter++;
  std::string label;
  switch (n.kind) {
    case CertNode::Kind::base: label = "BASE " + n.base_name; break;
    case CertNode::Kind::ext: label = "EXT v=" + std::to_string(n.v); break;
    case CertNode::Kind::xrep: label = "XREP v=" + std::to_string(n.v); break;
    case CertNode::Kind::sum: label = "SUM" + to_string(n.spec.kind); break;
  }
  out << "  n" << id << " [label=\"" << label << "\"];\n";
  if (parent >= 0) out << "  n" << parent << " -> n" << id << ";\n";
  for (auto& c : n.children) dot_node(*c, counter, id, out);
}

}  // namespace

std::string certificate_to_dot(const Certificate& cert) {
  std::ostringstream out;
  out << "digraph certificate {\n  node [shape=box];\n";
  int counter = 0;
  dot_node(*cert.root, counter, -1, out);
  out << "}\n";
  return out.str();
}

}  // namespace c21
