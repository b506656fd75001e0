#include "polymin/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace polymin {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

// ---------------------------------------------------------------------------
// VertexColoredPoset

void VertexColoredPoset::validate() const {
  const int n = static_cast<int>(size());
  if (!names.empty() && names.size() != colors.size())
    throw std::invalid_argument("poset: names/colors size mismatch");
  std::vector<std::vector<int>> succ(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : covers) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("poset: bad cover index");
    if (!seen.insert({u, v}).second) throw std::invalid_argument("poset: duplicate cover");
    succ[u].push_back(v);
  }
  // Kahn's algorithm for acyclicity.
  std::vector<int> indeg(n, 0);
  for (auto [u, v] : covers) ++indeg[v];
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int w : succ[order[h]])
      if (--indeg[w] == 0) order.push_back(w);
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("poset: covers contain a cycle");
  // A cover u<v is redundant if v is reachable from u by a longer path.
  for (auto [u, v] : covers) {
    std::vector<char> mark(n, 0);
    std::vector<int> stack;
    for (int w : succ[u])
      if (w != v) stack.push_back(w);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == v) throw std::invalid_argument("poset: cover implied by transitivity");
      if (mark[x]) continue;
      mark[x] = 1;
      for (int w : succ[x]) stack.push_back(w);
    }
  }
}

std::vector<int> VertexColoredPoset::levels() const {
  const int n = static_cast<int>(size());
  std::vector<std::vector<int>> pred(n);
  for (auto [u, v] : covers) pred[v].push_back(u);
  std::vector<int> lvl(n, -1);
  std::function<int(int)> get = [&](int v) {
    if (lvl[v] >= 0) return lvl[v];
    int best = 0;
    for (int u : pred[v]) best = std::max(best, get(u) + 1);
    return lvl[v] = best;
  };
  for (int v = 0; v < n; ++v) get(v);
  return lvl;
}

// ---------------------------------------------------------------------------
// EdgeColoredPoset

EdgeColoredPoset::EdgeColoredPoset(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), up_(n), down_(n), rank_(n, 0), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) throw std::invalid_argument("poset: label count mismatch");
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge& ed = edges_[e];
    if (ed.from < 0 || ed.to < 0 || ed.from >= static_cast<int>(n) || ed.to >= static_cast<int>(n) ||
        ed.from == ed.to)
      throw std::invalid_argument("poset: bad edge endpoint");
    up_[ed.from].push_back(e);
    down_[ed.to].push_back(e);
  }
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> lvl(n, kUnset);
  for (std::size_t s = 0; s < n; ++s) {
    if (lvl[s] != kUnset) continue;
    std::vector<int> comp{static_cast<int>(s)};
    lvl[s] = 0;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      int x = comp[h];
      auto visit = [&](int y, int want) {
        if (lvl[y] == kUnset) {
          lvl[y] = want;
          comp.push_back(y);
        } else if (lvl[y] != want) {
          throw std::invalid_argument("poset: edges are not consistent with a rank function");
        }
      };
      for (int e : up_[x]) visit(edges_[e].to, lvl[x] + 1);
      for (int e : down_[x]) visit(edges_[e].from, lvl[x] - 1);
    }
    int lo = lvl[comp[0]];
    for (int x : comp) lo = std::min(lo, lvl[x]);
    for (int x : comp) {
      rank_[x] = lvl[x] - lo;
      length_ = std::max(length_, rank_[x]);
    }
  }
}

std::string EdgeColoredPoset::label(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<ColorId> EdgeColoredPoset::colors() const {
  std::set<ColorId> s;
  for (const Edge& e : edges_) s.insert(e.color);
  return {s.begin(), s.end()};
}

std::optional<int> EdgeColoredPoset::find_edge(int u, int v) const {
  for (int e : up_[u])
    if (edges_[e].to == v) return e;
  return std::nullopt;
}

std::vector<int> EdgeColoredPoset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(size()); ++v)
    if (up_[v].empty()) out.push_back(v);
  return out;
}

std::vector<int> EdgeColoredPoset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(size()); ++v)
    if (down_[v].empty()) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Birkhoff correspondence

EdgeColoredPoset down_set_lattice(const VertexColoredPoset& P, std::vector<std::uint64_t>* ideals) {
  P.validate();
  const int n = static_cast<int>(P.size());
  if (n > 64) throw std::invalid_argument("down_set_lattice: at most 64 vertices supported");
  std::vector<std::uint64_t> lower(n, 0);
  for (auto [u, v] : P.covers) lower[v] |= std::uint64_t{1} << u;

  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> all{0};
  for (std::size_t h = 0; h < all.size(); ++h) {
    std::uint64_t I = all[h];
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if ((I & bit) == 0 && (lower[v] & ~I) == 0 && seen.insert(I | bit).second) all.push_back(I | bit);
    }
  }
  std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) index[all[i]] = i;

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(all.size());
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    std::uint64_t I = all[i];
    std::string lab = "{";
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (I & bit) {
        if (lab.size() > 1) lab += ',';
        lab += P.names.empty() ? std::to_string(v) : P.names[v];
      } else if ((lower[v] & ~I) == 0) {
        edges.push_back({i, index.at(I | bit), P.colors[v]});
      }
    }
    labels.push_back(lab + "}");
  }
  if (ideals) *ideals = all;
  return EdgeColoredPoset(all.size(), std::move(edges), std::move(labels));
}

VertexColoredPoset join_irreducibles(const EdgeColoredPoset& L, std::vector<int>* which) {
  std::vector<int> ji;
  for (int v = 0; v < static_cast<int>(L.size()); ++v)
    if (L.down(v).size() == 1) ji.push_back(v);
  const int m = static_cast<int>(ji.size());
  std::vector<int> pos(L.size(), -1);
  for (int a = 0; a < m; ++a) pos[ji[a]] = a;

  // leq[a][b]: ji[a] <= ji[b] in L.
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a) {
    std::vector<char> mark(L.size(), 0);
    std::vector<int> stack{ji[a]};
    mark[ji[a]] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (pos[x] >= 0) leq[a][pos[x]] = 1;
      for (int e : L.up(x)) {
        int y = L.edge(e).to;
        if (!mark[y]) {
          mark[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  VertexColoredPoset P;
  for (int a = 0; a < m; ++a) {
    P.names.push_back(L.label(ji[a]));
    P.colors.push_back(L.edge(L.down(ji[a]).front()).color);
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      if (cover) P.covers.emplace_back(a, b);
    }
  if (which) *which = ji;
  return P;
}

// ---------------------------------------------------------------------------
// Components and m-values

Component component(const EdgeColoredPoset& L, const std::set<ColorId>& K, int t) {
  std::vector<char> mark(L.size(), 0);
  std::vector<int> verts{t};
  mark[t] = 1;
  for (std::size_t h = 0; h < verts.size(); ++h) {
    int x = verts[h];
    auto visit = [&](int e, int y) {
      if (K.count(L.edge(e).color) && !mark[y]) {
        mark[y] = 1;
        verts.push_back(y);
      }
    };
    for (int e : L.up(x)) visit(e, L.edge(e).to);
    for (int e : L.down(x)) visit(e, L.edge(e).from);
  }
  std::sort(verts.begin(), verts.end());
  std::unordered_map<int, int> local;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    labels.push_back(L.label(verts[i]));
    for (int e : L.up(verts[i])) {
      const Edge& ed = L.edge(e);
      if (K.count(ed.color)) edges.push_back({i, local.at(ed.to), ed.color});
    }
  }
  return {EdgeColoredPoset(verts.size(), std::move(edges), std::move(labels)), std::move(verts)};
}

namespace {

// Fills out[v] for every v in the color-i component of s; returns members.
std::vector<int> color_component_m(const EdgeColoredPoset& L, ColorId i, int s, std::vector<int>& level) {
  std::vector<int> comp{s};
  level[s] = 0;
  int lo = 0, hi = 0;
  for (std::size_t h = 0; h < comp.size(); ++h) {
    int x = comp[h];
    auto visit = [&](int y, int want) {
      if (level[y] == std::numeric_limits<int>::min()) {
        level[y] = want;
        lo = std::min(lo, want);
        hi = std::max(hi, want);
        comp.push_back(y);
      }
    };
    for (int e : L.up(x))
      if (L.edge(e).color == i) visit(L.edge(e).to, level[x] + 1);
    for (int e : L.down(x))
      if (L.edge(e).color == i) visit(L.edge(e).from, level[x] - 1);
  }
  for (int x : comp) level[x] = 2 * (level[x] - lo) - (hi - lo);
  return comp;
}

}  // namespace

int m_value(const EdgeColoredPoset& L, ColorId i, int s) {
  std::vector<int> level(L.size(), std::numeric_limits<int>::min());
  color_component_m(L, i, s, level);
  return level[s];
}

std::vector<std::vector<int>> m_values(const EdgeColoredPoset& L, const std::vector<ColorId>& colors) {
  const int n = static_cast<int>(L.size());
  std::vector<std::vector<int>> out(n, std::vector<int>(colors.size(), 0));
  for (std::size_t c = 0; c < colors.size(); ++c) {
    std::vector<int> level(n, std::numeric_limits<int>::min());
    for (int v = 0; v < n; ++v)
      if (level[v] == std::numeric_limits<int>::min()) color_component_m(L, colors[c], v, level);
    for (int v = 0; v < n; ++v) out[v][c] = level[v];
  }
  return out;
}

std::vector<long long> rank_generating_function(const EdgeColoredPoset& L) {
  std::vector<long long> coeff(static_cast<std::size_t>(L.length()) + 1, 0);
  for (int v = 0; v < static_cast<int>(L.size()); ++v) ++coeff[L.rank(v)];
  return coeff;
}

// ---------------------------------------------------------------------------
// Structure checks

namespace {

// Up-sets (or down-sets) as bitsets, with bits ordered by rank so that the
// lowest set bit of an intersection is an element of minimal rank.
std::vector<Bits> closure_sets(const EdgeColoredPoset& L, bool upward, const std::vector<int>& bitpos) {
  const int n = static_cast<int>(L.size());
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return upward ? L.rank(a) > L.rank(b) : L.rank(a) < L.rank(b);
  });
  std::vector<Bits> sets(n, Bits(words_for(n), 0));
  for (int v : order) {
    set_bit(sets[v], bitpos[v]);
    const auto& nbrs = upward ? L.up(v) : L.down(v);
    for (int e : nbrs) {
      int w = upward ? L.edge(e).to : L.edge(e).from;
      for (std::size_t k = 0; k < sets[v].size(); ++k) sets[v][k] |= sets[w][k];
    }
  }
  return sets;
}

bool all_pairs_bounded(const EdgeColoredPoset& L, bool upward) {
  const int n = static_cast<int>(L.size());
  std::vector<int> by_rank(n);
  for (int v = 0; v < n; ++v) by_rank[v] = v;
  std::stable_sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
    return upward ? L.rank(a) < L.rank(b) : L.rank(a) > L.rank(b);
  });
  std::vector<int> bitpos(n);
  for (int i = 0; i < n; ++i) bitpos[by_rank[i]] = i;
  auto sets = closure_sets(L, upward, bitpos);
  std::vector<int> count(n);
  for (int v = 0; v < n; ++v) {
    int c = 0;
    for (auto w : sets[v]) c += std::popcount(w);
    count[v] = c;
  }
  const std::size_t W = words_for(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int total = 0;
      int first = -1;
      for (std::size_t k = 0; k < W; ++k) {
        std::uint64_t w = sets[x][k] & sets[y][k];
        if (w && first < 0) first = static_cast<int>(k * 64 + std::countr_zero(w));
        total += std::popcount(w);
      }
      if (first < 0 || count[by_rank[first]] != total) return false;
    }
  return true;
}

}  // namespace

bool is_lattice(const EdgeColoredPoset& L) {
  if (L.size() == 0) return false;
  return all_pairs_bounded(L, true) && all_pairs_bounded(L, false);
}

DiamondColoringReport check_diamond_coloring(const EdgeColoredPoset& L) {
  DiamondColoringReport rep;
  for (int q = 0; q < static_cast<int>(L.size()); ++q) {
    const auto& ups = L.up(q);
    for (std::size_t a = 0; a < ups.size(); ++a)
      for (std::size_t b = a + 1; b < ups.size(); ++b) {
        const Edge& qr = L.edge(ups[a]);
        const Edge& qs = L.edge(ups[b]);
        for (int e : L.up(qr.to)) {
          const Edge& rt = L.edge(e);
          auto st = L.find_edge(qs.to, rt.to);
          if (!st) continue;
          ++rep.diamonds;
          if (rt.color != qs.color || L.edge(*st).color != qr.color) {
            if (rep.ok) rep.failure = std::array<int, 4>{q, qr.to, qs.to, rt.to};
            rep.ok = false;
          }
        }
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<std::vector<int>> find_poset_isomorphism(const VertexColoredPoset& a, const VertexColoredPoset& b,
                                                       const ColorMap& relabel) {
  const int n = static_cast<int>(a.size());
  if (n != static_cast<int>(b.size()) || a.covers.size() != b.covers.size()) return std::nullopt;
  auto la = a.levels(), lb = b.levels();
  std::vector<std::vector<int>> da(n), db(n);
  std::vector<int> ua(n, 0), ub(n, 0);
  for (auto [u, v] : a.covers) {
    da[v].push_back(u);
    ++ua[u];
  }
  for (auto [u, v] : b.covers) {
    db[v].push_back(u);
    ++ub[u];
  }
  std::vector<ColorId> ca(n);
  for (int v = 0; v < n; ++v) ca[v] = relabel ? relabel(a.colors[v]) : a.colors[v];

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return la[x] < la[y]; });

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int idx) {
    if (idx == n) return true;
    int v = order[idx];
    for (int w = 0; w < n; ++w) {
      if (used[w] || lb[w] != la[v] || b.colors[w] != ca[v] || db[w].size() != da[v].size() || ub[w] != ua[v])
        continue;
      bool ok = true;
      for (int u : da[v])
        if (std::find(db[w].begin(), db[w].end(), map[u]) == db[w].end()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(idx + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

namespace {

// Bitmask of join-irreducibles below each vertex, bit i = ji[i].
std::vector<std::uint64_t> ji_masks(const EdgeColoredPoset& L, const std::vector<int>& ji) {
  const int n = static_cast<int>(L.size());
  std::vector<int> pos(n, -1);
  for (int i = 0; i < static_cast<int>(ji.size()); ++i) pos[ji[i]] = i;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return L.rank(x) < L.rank(y); });
  std::vector<std::uint64_t> mask(n, 0);
  for (int v : order) {
    if (pos[v] >= 0) mask[v] |= std::uint64_t{1} << pos[v];
    for (int e : L.down(v)) mask[v] |= mask[L.edge(e).from];
  }
  return mask;
}

}  // namespace

std::optional<std::vector<int>> find_color_isomorphism(const EdgeColoredPoset& a, const EdgeColoredPoset& b,
                                                       const ColorMap& relabel) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return std::nullopt;
  std::vector<int> wa, wb;
  auto Pa = join_irreducibles(a, &wa);
  auto Pb = join_irreducibles(b, &wb);
  if (Pa.size() > 64 || Pb.size() > 64) throw std::invalid_argument("isomorphism: too many join-irreducibles");
  auto phi = find_poset_isomorphism(Pa, Pb, relabel);
  if (!phi) return std::nullopt;
  auto ma = ji_masks(a, wa);
  auto mb = ji_masks(b, wb);
  std::unordered_map<std::uint64_t, int> where;
  for (int v = 0; v < static_cast<int>(b.size()); ++v)
    if (!where.emplace(mb[v], v).second) return std::nullopt;  // b is not distributive
  std::vector<int> map(a.size(), -1);
  std::vector<char> hit(b.size(), 0);
  for (int v = 0; v < static_cast<int>(a.size()); ++v) {
    std::uint64_t img = 0;
    for (int i = 0; i < static_cast<int>(wa.size()); ++i)
      if (ma[v] >> i & 1) img |= std::uint64_t{1} << (*phi)[i];
    auto it = where.find(img);
    if (it == where.end() || hit[it->second]) return std::nullopt;
    map[v] = it->second;
    hit[it->second] = 1;
  }
  for (const Edge& e : a.edges()) {
    auto f = b.find_edge(map[e.from], map[e.to]);
    ColorId want = relabel ? relabel(e.color) : e.color;
    if (!f || b.edge(*f).color != want) return std::nullopt;
  }
  return map;
}

// ---------------------------------------------------------------------------
// Serialisation

nlohmann::json to_json(const EdgeColoredPoset& L) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < static_cast<int>(L.size()); ++v)
    j["vertices"].push_back({{"id", v}, {"label", L.label(v)}, {"rank", L.rank(v)}});
  j["covers"] = nlohmann::json::array();
  for (const Edge& e : L.edges()) j["covers"].push_back({e.from, e.to, e.color.str()});
  return j;
}

nlohmann::json to_json(const VertexColoredPoset& P) {
  nlohmann::json j;
  auto lv = P.levels();
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < static_cast<int>(P.size()); ++v) {
    nlohmann::json x = {{"id", v}, {"color", P.colors[v].str()}, {"rank", lv[v]}};
    if (!P.names.empty()) x["label"] = P.names[v];
    j["vertices"].push_back(x);
  }
  j["covers"] = nlohmann::json::array();
  for (auto [u, v] : P.covers) j["covers"].push_back({u, v, P.colors[v].str()});
  return j;
}

std::string to_dot(const EdgeColoredPoset& L, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (int v = 0; v < static_cast<int>(L.size()); ++v)
    os << "  n" << v << " [label=\"" << L.label(v) << "\"];\n";
  std::map<int, std::vector<int>> by_rank;
  for (int v = 0; v < static_cast<int>(L.size()); ++v) by_rank[L.rank(v)].push_back(v);
  for (const auto& [r, vs] : by_rank) {
    os << "  { rank=same;";
    for (int v : vs) os << " n" << v << ";";
    os << " }\n";
  }
  for (const Edge& e : L.edges())
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.color.str() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace polymin
