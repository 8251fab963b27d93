#include "circuit21/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace c21 {

namespace {

struct Canonizer {
  int n;
  std::vector<std::vector<unsigned char>> mult;  // diagonal = loop count
  std::string best;
  std::vector<int> best_perm;  // canonical position -> vertex index
  bool have_best = false;

  explicit Canonizer(const Graph& g) {
    n = g.n();
    mult.assign(n, std::vector<unsigned char>(n, 0));
    std::vector<int> labels = g.verts;
    auto idx = [&](int v) {
      return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) -
                              labels.begin());
    };
    for (auto& [u, v] : g.edges) {
      int a = idx(u), b = idx(v);
      if (mult[a][b] == 255) throw std::invalid_argument("multiplicity too large");
      mult[a][b]++;
      if (a != b) mult[b][a]++;
    }
  }

  // Iterated neighbourhood refinement; colors stay order-stable.
  std::vector<int> refine(std::vector<int> color) const {
    for (int round = 0; round < n; round++) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; v++) {
        std::vector<int> s;
        s.push_back(color[v]);
        s.push_back(mult[v][v]);
        std::vector<std::pair<int, int>> nb;
        for (int u = 0; u < n; u++)
          if (u != v && mult[v][u] > 0) nb.push_back({color[u], mult[v][u]});
        std::sort(nb.begin(), nb.end());
        for (auto& [c, m] : nb) {
          s.push_back(c);
          s.push_back(m);
        }
        sig[v] = {std::move(s), v};
      }
      std::map<std::vector<int>, int> order;
      for (auto& [s, v] : sig) order.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : order) id = next++;
      std::vector<int> fresh(n);
      for (auto& [s, v] : sig) fresh[v] = order[s];
      if (fresh == color) break;
      color = std::move(fresh);
    }
    return color;
  }

  std::string encode(const std::vector<int>& perm) const {
    std::string s;
    s.reserve(2 + n + n * (n - 1) / 2);
    s.push_back(static_cast<char>(n));
    for (int i = 0; i < n; i++) s.push_back(static_cast<char>(mult[perm[i]][perm[i]]));
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        s.push_back(static_cast<char>(mult[perm[i]][perm[j]]));
    return s;
  }

  void search(const std::vector<int>& color) {
    // cells sorted by color id; vertices within a cell by index
    int ncell = 0;
    for (int c : color) ncell = std::max(ncell, c + 1);
    std::vector<std::vector<int>> cells(ncell);
    for (int v = 0; v < n; v++) cells[color[v]].push_back(v);
    int target = -1;
    for (int c = 0; c < ncell; c++)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::vector<int> perm;
      for (auto& cell : cells) perm.push_back(cell[0]);
      std::string enc = encode(perm);
      if (!have_best || enc < best) {
        best = std::move(enc);
        best_perm = std::move(perm);
        have_best = true;
      }
      return;
    }
    for (int v : cells[target]) {
      std::vector<int> c2 = color;
      for (int u = 0; u < n; u++)
        if (c2[u] >= c2[v] && u != v) c2[u]++;
      search(refine(c2));
    }
  }
};

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

static std::vector<int> canonical_perm(const Graph& g) {
  if (g.n() > 64) throw std::invalid_argument("canonical_form: |V| <= 64");
  if (g.n() == 0) return {};
  Canonizer cz(g);
  std::vector<int> init(g.n(), 0);
  cz.search(cz.refine(init));
  return cz.best_perm;
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.n() > 64) throw std::invalid_argument("canonical_form: |V| <= 64");
  if (g.n() == 0) return {std::string(1, '\0')};
  Canonizer cz(g);
  std::vector<int> init(g.n(), 0);
  cz.search(cz.refine(init));
  return {cz.best};
}

std::vector<int> canonical_order(const Graph& g) {
  auto perm = canonical_perm(g);
  std::vector<int> out;
  out.reserve(perm.size());
  for (int i : perm) out.push_back(g.verts[i]);
  return out;
}

std::optional<std::vector<std::pair<int, int>>> find_isomorphism(const Graph& g,
                                                                 const Graph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
  if (canonical_form(g) != canonical_form(h)) return std::nullopt;
  auto og = canonical_order(g), oh = canonical_order(h);
  std::vector<std::pair<int, int>> map;
  map.reserve(og.size());
  for (size_t i = 0; i < og.size(); i++) map.push_back({og[i], oh[i]});
  std::sort(map.begin(), map.end());
  return map;
}

bool isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace c21
