#include "circuit21/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "circuit21/catalog.hpp"
#include "circuit21/engine.hpp"
#include "circuit21/moves.hpp"
#include "circuit21/sparsity.hpp"

namespace c21 {

namespace {

struct SubsetScanner {
  int n, target;
  std::vector<std::pair<int, int>> all_edges;
  std::vector<unsigned> edge_mask;               // endpoint bitmask per edge
  std::vector<std::vector<int>> incident_after;  // [v][i]: edges >= i touching v
  std::vector<unsigned> check_sets;              // subsets that can violate sparsity

  explicit SubsetScanner(int n_) : n(n_), target(2 * n_) {
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++) {
        all_edges.push_back({i, j});
        edge_mask.push_back((1u << i) | (1u << j));
      }
    int m = static_cast<int>(all_edges.size());
    incident_after.assign(n, std::vector<int>(m + 1, 0));
    for (int v = 0; v < n; v++)
      for (int i = m - 1; i >= 0; i--)
        incident_after[v][i] = incident_after[v][i + 1] +
                               (all_edges[i].first == v || all_edges[i].second == v);
    // a simple-graph violation i(X) > 2|X|-1 needs C(|X|,2) >= 2|X|, so |X| >= 5
    for (unsigned X = 1; X < (1u << n); X++) {
      int k = __builtin_popcount(X);
      if (k >= 5 && k < n) check_sets.push_back(X);
    }
  }

  // |E| = 2n plus the subset bound is exactly the circuit definition
  bool picked_is_circuit(const std::vector<int>& picked) const {
    for (unsigned X : check_sets) {
      int cnt = 0;
      for (int e : picked)
        if ((edge_mask[e] & X) == edge_mask[e]) cnt++;
      if (cnt > 2 * __builtin_popcount(X) - 1) return false;
    }
    return true;
  }

  template <typename Sink>
  void scan(int idx, int chosen, std::vector<int>& degree, std::vector<int>& picked,
            Sink&& sink) {
    int m = static_cast<int>(all_edges.size());
    if (chosen == target) {
      if (picked_is_circuit(picked)) sink(picked);
      return;
    }
    if (idx == m || chosen + (m - idx) < target) return;
    for (int v = 0; v < n; v++)
      if (degree[v] + incident_after[v][idx] < 3) return;
    auto [a, b] = all_edges[idx];
    picked.push_back(idx);
    degree[a]++;
    degree[b]++;
    scan(idx + 1, chosen + 1, degree, picked, sink);
    degree[a]--;
    degree[b]--;
    picked.pop_back();
    scan(idx + 1, chosen, degree, picked, sink);
  }

  Graph build(const std::vector<int>& picked) const {
    std::vector<int> vs(n);
    for (int i = 0; i < n; i++) vs[i] = i;
    std::vector<std::pair<int, int>> es;
    es.reserve(picked.size());
    for (int i : picked) es.push_back(all_edges[i]);
    return make_graph(std::move(vs), std::move(es));
  }
};

void insert_class(Census& census, const Graph& g) {
  census.classes.emplace(canonical_form(g), g);
}

// Branch-and-bound canonical key for simple graphs on <= 8 vertices: the
// lexicographically smallest row-by-row adjacency encoding over all vertex
// orders consistent with an iterated degree refinement. Used to dedupe the
// census scan cheaply; the general canonizer runs once per surviving class
// (their agreement is covered by tests).
struct FastCanon {
  int n = 0;
  unsigned char adj[8] = {0};

  void add_edge(int u, int v) {
    adj[u] |= static_cast<unsigned char>(1u << v);
    adj[v] |= static_cast<unsigned char>(1u << u);
  }

  std::uint64_t key() const {
    // refine colors
    int color[8] = {0};
    for (int v = 0; v < n; v++) color[v] = __builtin_popcount(adj[v]);
    for (int round = 0; round < n; round++) {
      long long sig[8];
      for (int v = 0; v < n; v++) {
        int nb[8], k = 0;
        for (int u = 0; u < n; u++)
          if ((adj[v] >> u) & 1) nb[k++] = color[u];
        std::sort(nb, nb + k);
        long long s = color[v];
        for (int i = 0; i < k; i++) s = s * 97 + nb[i] + 1;
        sig[v] = s;
      }
      long long sorted[8];
      std::copy(sig, sig + n, sorted);
      std::sort(sorted, sorted + n);
      int fresh[8];
      bool same = true;
      for (int v = 0; v < n; v++) {
        fresh[v] = static_cast<int>(std::lower_bound(sorted, sorted + n, sig[v]) - sorted);
        if (fresh[v] != color[v]) same = false;
      }
      std::copy(fresh, fresh + n, color);
      if (same) break;
    }
    // positions grouped by color class
    int order[8];
    for (int i = 0; i < n; i++) order[i] = i;
    std::sort(order, order + n, [&](int a, int b) { return color[a] < color[b]; });
    int pos_color[8];
    for (int i = 0; i < n; i++) pos_color[i] = color[order[i]];

    int best_rows[8];
    bool have_best = false;
    int placed[8];
    unsigned used = 0;
    int rows[8];

    // DFS over class-consistent placements with prefix pruning
    auto dfs = [&](auto&& self, int pos, bool tight) -> void {
      if (pos == n) {
        if (!have_best || std::lexicographical_compare(rows, rows + n, best_rows, best_rows + n)) {
          std::copy(rows, rows + n, best_rows);
          have_best = true;
        }
        return;
      }
      for (int v = 0; v < n; v++) {
        if ((used >> v) & 1) continue;
        if (color[v] != pos_color[pos]) continue;
        int bits = 0;
        for (int j = 0; j < pos; j++) bits = (bits << 1) | ((adj[v] >> placed[j]) & 1);
        bool t = tight;
        if (have_best && t) {
          if (bits > best_rows[pos]) continue;
          if (bits < best_rows[pos]) t = false;
        }
        rows[pos] = bits;
        placed[pos] = v;
        used |= 1u << v;
        self(self, pos + 1, t);
        used &= ~(1u << v);
      }
    };
    dfs(dfs, 0, true);

    std::uint64_t k = static_cast<std::uint64_t>(n);
    for (int i = 0; i < n; i++) k = (k << i) | static_cast<unsigned>(best_rows[i]);
    return k;
  }
};

}  // namespace

Census enumerate_exhaustive(int n, bool allow_heavy, int threads) {
  if (n > 8) throw std::invalid_argument("enumerate_exhaustive: n <= 8");
  if (n == 8 && !allow_heavy)
    throw std::invalid_argument("enumerate_exhaustive: n = 8 must be requested explicitly");
  Census census;
  census.n = n;
  census.provenance = Census::Provenance::exhaustive;
  if (n < 1 || 2 * n > n * (n - 1) / 2) return census;

  SubsetScanner scanner(n);
  if (n < 8) {
    std::map<std::uint64_t, std::vector<int>> reps;
    std::vector<int> degree(n, 0), picked;
    scanner.scan(0, 0, degree, picked, [&](const std::vector<int>& p) {
      FastCanon fc;
      fc.n = n;
      for (int e : p) fc.add_edge(scanner.all_edges[e].first, scanner.all_edges[e].second);
      reps.emplace(fc.key(), p);
    });
    for (auto& [key, p] : reps) insert_class(census, scanner.build(p));
    return census;
  }

  // n = 8: partition the subset space by the decisions on a short edge prefix
  int workers = threads > 0 ? threads
                            : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  const int prefix = 10;
  struct Task {
    std::vector<int> picked;
    std::vector<int> degree;
  };
  std::vector<Task> tasks;
  {
    // enumerate all prefix decision patterns without degree pruning (the
    // prune needs full suffix info, cheap enough to defer)
    for (unsigned mask = 0; mask < (1u << prefix); mask++) {
      Task t;
      t.degree.assign(n, 0);
      bool ok = true;
      for (int i = 0; i < prefix; i++)
        if ((mask >> i) & 1) {
          t.picked.push_back(i);
          t.degree[scanner.all_edges[i].first]++;
          t.degree[scanner.all_edges[i].second]++;
        }
      if (static_cast<int>(t.picked.size()) > scanner.target) ok = false;
      if (ok) tasks.push_back(std::move(t));
    }
  }
  std::mutex merge_mutex;
  std::map<std::uint64_t, std::vector<int>> reps;
  std::atomic<size_t> next_task{0};
  auto worker = [&]() {
    std::map<std::uint64_t, std::vector<int>> local;
    for (;;) {
      size_t ti = next_task.fetch_add(1);
      if (ti >= tasks.size()) break;
      Task t = tasks[ti];
      std::vector<int> picked = t.picked;
      scanner.scan(prefix, static_cast<int>(picked.size()), t.degree, picked,
                   [&](const std::vector<int>& p) {
                     FastCanon fc;
                     fc.n = n;
                     for (int e : p)
                       fc.add_edge(scanner.all_edges[e].first, scanner.all_edges[e].second);
                     local.emplace(fc.key(), p);
                   });
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (auto& [key, p] : local) reps.emplace(key, p);
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; i++) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& [key, p] : reps) insert_class(census, scanner.build(p));
  return census;
}

namespace {

// pattern scans used by the generative sum-join closure ----------------------

struct PendantBlob {
  int x;
  std::vector<int> interior;  // 4 vertices
};

std::vector<PendantBlob> pendant_blobs(const Graph& g) {
  std::vector<PendantBlob> out;
  if (!is_connected(g)) return out;
  for (auto& cut : find_cut_vertices(g)) {
    for (auto& comp : cut.components) {
      if (comp.size() != 4) continue;
      std::vector<int> side = comp;
      side.push_back(cut.cut[0]);
      std::sort(side.begin(), side.end());
      if (recognize_gadget(g, side, GadgetKind::k5_minus_e))
        out.push_back({cut.cut[0], comp});
    }
  }
  return out;
}

struct PairSide {
  int x, y;
  std::vector<int> interior;
};

std::vector<PairSide> pair_sides(const Graph& g, GadgetKind kind, size_t interior_size) {
  std::vector<PairSide> out;
  if (!is_connected(g)) return out;
  for (auto& cut : find_cut_pairs(g)) {
    if (g.has_edge(cut.cut[0], cut.cut[1])) continue;
    for (auto& comp : cut.components) {
      if (comp.size() != interior_size) continue;
      std::vector<int> side = comp;
      side.push_back(cut.cut[0]);
      side.push_back(cut.cut[1]);
      std::sort(side.begin(), side.end());
      if (recognize_gadget(g, side, kind)) out.push_back({cut.cut[0], cut.cut[1], comp});
    }
  }
  return out;
}

// sum4 part-B shape: a 5-set inducing K5-e whose only contact is 3 wires from
// one of its vertices to 3 distinct outside targets.
struct Sum4BSide {
  std::vector<int> gadget;
  std::vector<int> targets;
};

std::vector<Sum4BSide> sum4_b_sides(const Graph& g) {
  std::vector<Sum4BSide> out;
  if (!is_connected(g)) return out;
  for (auto& cut : find_cut_vertices(g)) {
    int r = cut.cut[0];
    for (auto& comp : cut.components) {
      if (comp.size() != 4) continue;
      std::vector<int> side = comp;
      side.push_back(r);
      std::sort(side.begin(), side.end());
      if (!recognize_gadget(g, side, GadgetKind::k5_minus_e)) continue;
      std::vector<int> targets;
      for (int u : g.neighbors(r))
        if (!std::binary_search(side.begin(), side.end(), u)) targets.push_back(u);
      if (targets.size() != 3) continue;
      bool simple_wires = true;
      for (int t : targets)
        if (g.multiplicity(r, t) != 1) simple_wires = false;
      int outside_deg = 0;
      for (int t : g.neighbors(r))
        if (!std::binary_search(side.begin(), side.end(), t))
          outside_deg += g.multiplicity(r, t);
      if (!simple_wires || outside_deg != 3) continue;
      out.push_back({side, targets});
    }
  }
  return out;
}

// sum5 3-distinct part shape: 4-set inducing K4 with exactly 4 outside wires
// to exactly 3 distinct targets.
struct Sum5K4Side {
  std::vector<int> gadget;
  std::vector<std::pair<int, int>> wires;  // (gadget vertex, target)
};

std::vector<Sum5K4Side> sum5_k4_sides(const Graph& g) {
  std::vector<Sum5K4Side> out;
  int n = g.n();
  if (n < 5) return out;
  std::vector<int> vs = g.verts;
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++)
      for (int c = b + 1; c < n; c++)
        for (int d = c + 1; d < n; d++) {
          std::vector<int> s = {vs[a], vs[b], vs[c], vs[d]};
          if (!recognize_gadget(g, s, GadgetKind::k4)) continue;
          std::vector<std::pair<int, int>> wires;
          bool ok = true;
          for (int v : s)
            for (int u : g.neighbors(v)) {
              if (std::binary_search(s.begin(), s.end(), u)) continue;
              if (g.multiplicity(v, u) != 1) ok = false;
              wires.push_back({v, u});
            }
          if (!ok || wires.size() != 4) continue;
          std::set<int> targets;
          for (auto& [gv, t] : wires) targets.insert(t);
          if (targets.size() != 3) continue;
          out.push_back({s, wires});
        }
  return out;
}

struct ApexSide {
  int apex;
  std::vector<int> targets;
};

std::vector<ApexSide> apex_sides(const Graph& g, int degree) {
  std::vector<ApexSide> out;
  for (int v : g.verts) {
    if (g.degree(v) != degree || g.loop_count(v) != 0) continue;
    auto nb = g.neighbors(v);
    if (static_cast<int>(nb.size()) != degree) continue;
    out.push_back({v, nb});
  }
  return out;
}

void permute_matchings(const std::vector<int>& a_stubs, const std::vector<int>& b_stubs,
                       const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
  std::vector<int> perm(b_stubs.size());
  for (size_t i = 0; i < perm.size(); i++) perm[i] = static_cast<int>(i);
  std::vector<int> sorted_b = b_stubs;
  std::sort(sorted_b.begin(), sorted_b.end());
  do {
    std::vector<std::pair<int, int>> cross;
    for (size_t i = 0; i < a_stubs.size(); i++) cross.push_back({a_stubs[i], sorted_b[perm[i]]});
    f(cross);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

namespace {

// per-graph gadget pattern cache for the join closure
struct PatternCache {
  Graph g;
  std::vector<PendantBlob> blobs;
  std::vector<PairSide> t1sides, k5fsides;
  std::vector<Sum4BSide> sum4bsides;
  std::vector<ApexSide> apex3, apex4;
  std::vector<Sum5K4Side> k4sides;

  explicit PatternCache(Graph graph) : g(std::move(graph)) {
    blobs = pendant_blobs(g);
    t1sides = pair_sides(g, GadgetKind::t1, 4);
    k5fsides = pair_sides(g, GadgetKind::t2, 5);
    sum4bsides = sum4_b_sides(g);
    apex3 = apex_sides(g, 3);
    apex4 = apex_sides(g, 4);
    k4sides = sum5_k4_sides(g);
  }
};

Sum5Side k4_kind(const Sum5K4Side& side) {
  std::set<int> f;
  for (auto& [gv, t] : side.wires) f.insert(gv);
  return f.size() == 2 ? Sum5Side::k4_type2 : f.size() == 3 ? Sum5Side::k4_type3
                                                            : Sum5Side::k4_type4;
}

std::vector<int> k4_stubs(const Sum5K4Side& side) {
  std::vector<int> stubs;
  for (auto& [gv, t] : side.wires) stubs.push_back(t);
  std::sort(stubs.begin(), stubs.end());
  return stubs;
}

// all joins of A and B (in that role order) landing at order <= ceiling
void joins_between(const PatternCache& A, const PatternCache& B, int ceiling,
                   const std::function<void(const JoinSpec&, const Graph&, const Graph&)>& f) {
  int na = A.g.n(), nb = B.g.n();
  if (na - 4 + nb - 4 - 1 <= ceiling)
    for (auto& pa : A.blobs)
      for (auto& pb : B.blobs) {
        JoinSpec s;
        s.kind = SumCase::sum1;
        s.xa = pa.x;
        s.xb = pb.x;
        s.gadget_a = pa.interior;
        s.gadget_b = pb.interior;
        f(s, A.g, B.g);
      }
  if (na - 4 + nb - 4 - 2 <= ceiling)
    for (auto& pa : A.t1sides)
      for (auto& pb : B.t1sides) {
        JoinSpec s;
        s.kind = SumCase::sum2a;
        s.xa = pa.x;
        s.ya = pa.y;
        s.xb = pb.x;
        s.yb = pb.y;
        s.gadget_a = pa.interior;
        s.gadget_b = pb.interior;
        f(s, A.g, B.g);
        std::swap(s.xb, s.yb);
        f(s, A.g, B.g);
      }
  if (na + nb - 5 - 2 <= ceiling)
    for (auto& pb : B.k5fsides)
      for (auto& [x, y] : A.g.edges) {
        JoinSpec s;
        s.kind = SumCase::sum2b;
        s.xa = x;
        s.ya = y;
        s.xb = pb.x;
        s.yb = pb.y;
        s.gadget_b = pb.interior;
        f(s, A.g, B.g);
        std::swap(s.xb, s.yb);
        f(s, A.g, B.g);
      }
  if (na - 4 + nb - 5 - 2 <= ceiling)
    for (auto& pa : A.t1sides)
      for (auto& pb : B.k5fsides) {
        JoinSpec s;
        s.kind = SumCase::sum3;
        s.xa = pa.x;
        s.ya = pa.y;
        s.xb = pb.x;
        s.yb = pb.y;
        s.gadget_a = pa.interior;
        s.gadget_b = pb.interior;
        f(s, A.g, B.g);
        std::swap(s.xb, s.yb);
        f(s, A.g, B.g);
      }
  if (na - 1 + nb - 5 <= ceiling)
    for (auto& ap : A.apex3)
      for (auto& bs : B.sum4bsides)
        permute_matchings(ap.targets, bs.targets,
                          [&](const std::vector<std::pair<int, int>>& cross) {
                            JoinSpec s;
                            s.kind = SumCase::sum4;
                            s.gadget_a = {ap.apex};
                            s.gadget_b = bs.gadget;
                            s.kind_a = Sum5Side::apex;
                            s.cross = cross;
                            f(s, A.g, B.g);
                          });
  auto sum5_join = [&](const std::vector<int>& ga, Sum5Side ka,
                       const std::vector<int>& a_stubs, const std::vector<int>& gb,
                       Sum5Side kb, const std::vector<int>& b_stubs, int size) {
    if (size > ceiling) return;
    permute_matchings(a_stubs, b_stubs, [&](const std::vector<std::pair<int, int>>& cross) {
      JoinSpec s;
      s.kind = SumCase::sum5;
      s.gadget_a = ga;
      s.gadget_b = gb;
      s.kind_a = ka;
      s.kind_b = kb;
      s.cross = cross;
      f(s, A.g, B.g);
    });
  };
  for (auto& pa : A.apex4)
    for (auto& pb : B.apex4)
      sum5_join({pa.apex}, Sum5Side::apex, pa.targets, {pb.apex}, Sum5Side::apex, pb.targets,
                na - 1 + nb - 1);
  for (auto& pa : A.apex4)
    for (auto& pb : B.k4sides)
      sum5_join({pa.apex}, Sum5Side::apex, pa.targets, pb.gadget, k4_kind(pb), k4_stubs(pb),
                na - 1 + nb - 4);
  for (auto& pa : A.k4sides)
    for (auto& pb : B.apex4)
      sum5_join(pa.gadget, k4_kind(pa), k4_stubs(pa), {pb.apex}, Sum5Side::apex, pb.targets,
                na - 4 + nb - 1);
  for (auto& pa : A.k4sides)
    for (auto& pb : B.k4sides)
      sum5_join(pa.gadget, k4_kind(pa), k4_stubs(pa), pb.gadget, k4_kind(pb), k4_stubs(pb),
                na - 4 + nb - 4);
}

}  // namespace

Census enumerate_generative(int n, int ceiling) {
  if (n > 8) throw std::invalid_argument("enumerate_generative: n <= 8");
  if (ceiling < 0) ceiling = n + 2;
  if (ceiling < n) throw std::invalid_argument("enumerate_generative: ceiling < n");
  Census census;
  census.n = n;
  census.provenance = Census::Provenance::generative;
  std::set<CanonicalForm> universe;
  std::vector<PatternCache> queue;
  // rare-pattern indices keep the join pairing far below universe^2
  std::vector<size_t> with_blob, with_t1, with_k5f, with_sum4b, with_k4side, with_apex4;
  std::vector<std::vector<size_t>> by_order(ceiling + 1);
  auto offer = [&](const Graph& g) {
    if (g.n() > ceiling || !g.simple) return;
    auto form = canonical_form(g);
    if (!universe.insert(form).second) return;
    queue.emplace_back(g);
    if (g.n() == n) census.classes.emplace(form, g);
  };
  for (auto& e : base_graphs(BaseFamily::g_simple))
    if (e.graph.n() <= ceiling) offer(e.graph);

  auto attempt = [&](const JoinSpec& s, const Graph& a, const Graph& b) {
    try {
      offer(sum_join(s, a, b));
    } catch (const std::invalid_argument&) {
    }
  };
  auto both_orders = [&](size_t i, size_t j) {
    // copies: offer() may reallocate the queue mid-join
    PatternCache a = queue[i], b = queue[j];
    joins_between(a, b, ceiling, attempt);
    if (i != j) joins_between(b, a, ceiling, attempt);
  };

  for (size_t qi = 0; qi < queue.size(); qi++) {
    // moves (extensions keep us inside the universe ceiling)
    {
      Graph g = queue[qi].g;
      if (g.n() + 1 <= ceiling) {
        std::vector<std::pair<int, int>> distinct = g.edges;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (auto& [x, y] : distinct)
          for (int z : g.verts) {
            if (z == x || z == y) continue;
            offer(one_extension(g, x, y, z));
          }
        for (size_t i = 0; i < distinct.size(); i++)
          for (size_t j = i + 1; j < distinct.size(); j++) {
            auto [a, b] = distinct[i];
            auto [c, d] = distinct[j];
            if (a == c || a == d || b == c || b == d) continue;
            offer(x_replacement(g, a, b, c, d));
          }
      }
    }
    // sum joins: pair the new graph with earlier partners through the rare
    // side of each case (gadget-pattern holders), bounded by the size
    // arithmetic of the join
    PatternCache pc = queue[qi];
    int nq = pc.g.n();
    std::set<size_t> partners;
    auto add_list = [&](const std::vector<size_t>& list, int max_partner_order) {
      for (size_t j : list)
        if (queue[j].g.n() <= max_partner_order) partners.insert(j);
    };
    if (!pc.blobs.empty()) add_list(with_blob, ceiling + 9 - nq);
    if (!pc.t1sides.empty()) {
      add_list(with_t1, ceiling + 10 - nq);
      add_list(with_k5f, ceiling + 11 - nq);
    }
    if (!pc.k5fsides.empty()) {
      add_list(with_t1, ceiling + 11 - nq);
      // any partner can play the edge-strip side of a 2b join
      for (int o = 5; o <= std::min(ceiling, ceiling + 7 - nq); o++)
        add_list(by_order[o], ceiling);
    }
    if (!pc.sum4bsides.empty())
      for (int o = 5; o <= std::min(ceiling, ceiling + 6 - nq); o++)
        add_list(by_order[o], ceiling);
    if (!pc.apex3.empty()) add_list(with_sum4b, ceiling + 6 - nq);
    if (!pc.apex4.empty()) {
      for (int o = 5; o <= std::min(ceiling, ceiling + 2 - nq); o++)
        add_list(by_order[o], ceiling);  // apex-apex sums are tiny
      add_list(with_k4side, ceiling + 5 - nq);
    }
    if (!pc.k4sides.empty()) {
      add_list(with_apex4, ceiling + 5 - nq);
      add_list(with_k4side, ceiling + 8 - nq);
    }
    // 2b: the new graph as the edge-strip side against known K5-f holders
    add_list(with_k5f, ceiling + 7 - nq);
    partners.insert(qi);  // self-joins are legitimate
    for (size_t j : partners) both_orders(qi, j);

    by_order[nq].push_back(qi);
    if (!pc.blobs.empty()) with_blob.push_back(qi);
    if (!pc.t1sides.empty()) with_t1.push_back(qi);
    if (!pc.k5fsides.empty()) with_k5f.push_back(qi);
    if (!pc.sum4bsides.empty()) with_sum4b.push_back(qi);
    if (!pc.k4sides.empty()) with_k4side.push_back(qi);
    if (!pc.apex4.empty()) with_apex4.push_back(qi);
  }
  return census;
}

namespace {

bool two_edge_connected(const Graph& g) {
  if (!is_connected(g)) return false;
  for (size_t i = 0; i < g.edges.size(); i++) {
    Graph h = g;
    h.edges.erase(h.edges.begin() + i);
    if (!is_connected(h)) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_critical_sets(const Graph& g) {
  std::vector<std::vector<int>> out;
  int n = g.n();
  for (unsigned X = 1; X + 1 < (1u << n); X++) {
    std::vector<int> s;
    for (int i = 0; i < n; i++)
      if ((X >> i) & 1) s.push_back(g.verts[i]);
    if (static_cast<int>(s.size()) == n) continue;
    if (induced_count(g, s) == 2 * static_cast<int>(s.size()) - 1) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

SweepReport lemma_sweep(const Census& census) {
  SweepReport report;
  auto fail = [&](const std::string& msg) {
    report.violations++;
    report.notes.push_back(msg);
  };

  for (auto& [form, g] : census.classes) {
    std::string tag = "n=" + std::to_string(g.n()) + " " + form.hex().substr(0, 12);
    if (!is_circuit(g)) fail(tag + ": census member fails the circuit test");
    // connectivity facts
    if (!is_connected(g)) fail(tag + ": circuit is disconnected");
    if (!two_edge_connected(g)) fail(tag + ": circuit is not 2-edge-connected");
    // degree-3 induced forest
    if (!degree_three_forest_check(g)) fail(tag + ": degree-3 vertices induce a cycle");
    // minimum degree 4 means connected and 4-regular
    if (g.min_degree() == 4) {
      report.four_regular++;
      for (int v : g.verts)
        if (g.degree(v) != 4) fail(tag + ": min degree 4 but not 4-regular");
    }
    // critical union/intersection closure
    auto crits = all_critical_sets(g);
    for (size_t i = 0; i < crits.size(); i++)
      for (size_t j = i + 1; j < crits.size(); j++) {
        std::vector<int> inter, uni;
        std::set_intersection(crits[i].begin(), crits[i].end(), crits[j].begin(),
                              crits[j].end(), std::back_inserter(inter));
        std::set_union(crits[i].begin(), crits[i].end(), crits[j].begin(), crits[j].end(),
                       std::back_inserter(uni));
        if (inter.empty() || static_cast<int>(uni.size()) > g.n() - 1) continue;
        if (induced_count(g, inter) != 2 * static_cast<int>(inter.size()) - 1)
          fail(tag + ": critical intersection not critical");
        if (induced_count(g, uni) != 2 * static_cast<int>(uni.size()) - 1)
          fail(tag + ": critical union not critical");
        if (d_between(g, crits[i], crits[j]) != 0)
          fail(tag + ": crossing critical sets joined by an edge");
      }
    // admissible-edge biconditional at every node and pair
    for (int v : g.verts) {
      if (g.degree(v) != 3) continue;
      auto nb = g.neighbors(v);
      if (nb.size() != 3) continue;
      for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++) {
          int u = nb[i], w = nb[j], z = nb[3 - i - j];
          bool attempt = false;
          if (!g.has_edge(u, w)) attempt = is_circuit(one_reduction(g, v, u, w));
          bool blocked = g.has_edge(u, w) ||
                         find_critical_set(g, {u, w}, {v, z}).has_value();
          if (attempt == blocked)
            fail(tag + ": admissible-edge biconditional mismatch at node " +
                 std::to_string(v));
        }
    }
    // a proper critical set leaves at least two nodes outside
    if (essentially_k_edge_connected(g, 4)) {
      for (auto& X : all_proper_critical_sets(g)) {
        int outside = 0;
        for (int v : g.verts)
          if (g.degree(v) == 3 && !std::binary_search(X.begin(), X.end(), v)) outside++;
        if (outside < 2) fail(tag + ": proper critical set with fewer than two outside nodes");
      }
    }
    // admissibility guarantees
    bool has_node_move = find_admissible_node(g).has_value();
    bool has_deg4_move = find_admissible_degree4(g).has_value();
    if (!has_node_move && !has_deg4_move) {
      report.no_move++;
      auto entry = is_base(g);
      report.no_move_names.push_back(entry ? entry->name : form.hex().substr(0, 12));
    }
    bool ess5 = essentially_k_edge_connected(g, 5);
    bool proper = has_proper_critical_set(g);
    if (g.min_degree() == 3 && is_k_connected(g, 3) && !is_base(g)) {
      if ((ess5 && !proper) || (essentially_k_edge_connected(g, 4) && proper)) {
        if (!has_node_move) fail(tag + ": admissible node guaranteed but not found");
      }
    }
    if (g.min_degree() == 4 && ess5 && !isomorphic(g, complete_graph(5))) {
      if (!has_deg4_move) fail(tag + ": admissible degree-4 vertex guaranteed but not found");
    }
  }
  std::sort(report.no_move_names.begin(), report.no_move_names.end());
  return report;
}

std::string export_census(const Census& census) {
  std::ostringstream out;
  for (auto& [form, g] : census.classes) {
    out << form.hex() << '\n';
    out << serialize_graph(to_dense_labels(g));
    out << '\n';
  }
  return out.str();
}

}  // namespace c21
