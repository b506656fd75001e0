#include "polymin/skew_tabular.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace polymin {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

GTParallelogram::GTParallelogram(int n, int m) : n_(n), m_(m), g_(static_cast<std::size_t>(n + 2) * m, 0) {
  if (n < 0 || m < 1) throw std::invalid_argument("GT parallelogram needs n >= 0 and m >= 1");
}

Partition GTParallelogram::lower_frame() const {
  Partition q;
  for (int t = 1; t <= m_; ++t) q.push_back(get(0, 1 - t));
  return q;
}

Partition GTParallelogram::upper_frame() const {
  Partition p;
  for (int t = 1; t <= m_; ++t) p.push_back(get(n_ + 1, n_ + 2 - t));
  return p;
}

bool GTParallelogram::satisfies_inequalities() const {
  for (int i = 1; i <= n_ + 1; ++i)
    for (int j = i - m_ + 1; j <= i; ++j) {
      int v = get(i, j);
      if (contains(i - 1, j) && get(i - 1, j) < v) return false;
      if (contains(i - 1, j - 1) && get(i - 1, j - 1) > v) return false;
    }
  return true;
}

std::vector<int> GTParallelogram::interior() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j > i - m_; --j) out.push_back(get(i, j));
  return out;
}

std::string GTParallelogram::str() const {
  std::ostringstream os;
  for (int i = 0; i <= n_ + 1; ++i) {
    if (i) os << " | ";
    for (int j = i; j > i - m_; --j) os << (j == i ? "" : " ") << get(i, j);
  }
  return os.str();
}

namespace {

std::string key_of(const std::vector<int>& v) {
  std::string k;
  for (int x : v) {
    k += std::to_string(x);
    k += ',';
  }
  return k;
}

}  // namespace

int SkewLattice::index_of(const GTParallelogram& g) const {
  if (g.n() != n || g.m() != m) return -1;
  auto it = index_.find(key_of(g.interior()));
  return it == index_.end() ? -1 : it->second;
}

SkewLattice build_skew_lattice(int n, const Partition& P, const Partition& Q, int m) {
  if (n < 1) throw std::invalid_argument("skew lattice needs n >= 1");
  if (m == 0) m = static_cast<int>(std::max(P.size(), Q.size()));
  if (m < 1 || static_cast<int>(P.size()) > m || static_cast<int>(Q.size()) > m)
    throw std::invalid_argument("skew lattice: frame longer than m");
  Partition p = P, q = Q;
  p.resize(m, 0);
  q.resize(m, 0);
  if (!is_partition(p) || !is_partition(q)) throw std::invalid_argument("skew lattice: frame is not a partition");
  for (int t = 0; t < m; ++t)
    if (p[t] < q[t]) throw std::invalid_argument("skew lattice: need P_i >= Q_i");

  SkewLattice L;
  L.n = n;
  L.m = m;
  L.P = p;
  L.Q = q;
  GTParallelogram g(n, m);
  for (int t = 1; t <= m; ++t) {
    g.set(0, 1 - t, q[t - 1]);
    g.set(n + 1, n + 2 - t, p[t - 1]);
  }
  // Cells in interior() order. Each pair constraint involves columns i-1
  // and i, so it is checked when column i is filled (column n+1 is fixed
  // and checked while filling column n).
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j > i - m; --j) cells.emplace_back(i, j);
  const int hi_all = p[0];
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      L.elements.push_back(g);
      return;
    }
    auto [i, j] = cells[c];
    int lo = 0, hi = hi_all;
    if (g.contains(i - 1, j)) hi = std::min(hi, g.get(i - 1, j));
    if (g.contains(i - 1, j - 1)) lo = std::max(lo, g.get(i - 1, j - 1));
    // Chains to the fixed column n+1.
    if (g.contains(n + 1, j + n + 1 - i)) hi = std::min(hi, g.get(n + 1, j + n + 1 - i));
    if (g.contains(n + 1, j)) lo = std::max(lo, g.get(n + 1, j));
    for (int v = lo; v <= hi; ++v) {
      g.set(i, j, v);
      rec(c + 1);
    }
  };
  rec(0);
  g = GTParallelogram();

  std::sort(L.elements.begin(), L.elements.end(),
            [](const GTParallelogram& x, const GTParallelogram& y) { return x.interior() < y.interior(); });
  std::vector<std::string> labels;
  for (int v = 0; v < static_cast<int>(L.elements.size()); ++v) {
    if (!L.elements[v].satisfies_inequalities()) throw std::logic_error("skew lattice: enumeration bug");
    L.index_.emplace(key_of(L.elements[v].interior()), v);
    labels.push_back(L.elements[v].str());
  }
  std::vector<Edge> edges;
  for (int v = 0; v < static_cast<int>(L.elements.size()); ++v)
    for (auto [i, j] : cells) {
      GTParallelogram up = L.elements[v];
      up.set(i, j, up.get(i, j) + 1);
      int w = L.index_of(up);
      if (w >= 0) {
        edges.push_back({v, w, color(i)});
        L.edge_cell.emplace_back(i, j);
      }
    }
  L.graph = EdgeColoredPoset(L.elements.size(), std::move(edges), std::move(labels));
  return L;
}

BigRational gt_coefficient(const GTParallelogram& s, int i, int j) {
  if (i < 1 || i > s.n() || !s.contains(i, j)) throw std::invalid_argument("gt_coefficient: not an interior cell");
  const int m = s.m();
  const long g = s.get(i, j);
  BigInt num = -1, den = 1;
  for (int p = i + 1; p > i + 1 - m; --p) num *= g - s.get(i + 1, p) + j - p;
  for (int p = i - 1; p > i - 1 - m; --p) num *= g - s.get(i - 1, p) + j - p - 1;
  for (int p = i; p > i - m; --p) {
    if (p == j) continue;
    long a = g - s.get(i, p) + j - p;
    if (a == 0 || a - 1 == 0) throw std::domain_error("gt_coefficient: vanishing denominator");
    den *= (a - 1) * a;
  }
  BigRational r(num, den);
  r.canonicalize();
  if (r <= 0) throw std::domain_error("gt_coefficient: non-positive value " + to_string(r));
  return r;
}

std::vector<BigRational> skew_coefficients(const SkewLattice& L) {
  std::vector<BigRational> out;
  out.reserve(L.graph.edges().size());
  for (std::size_t e = 0; e < L.graph.edges().size(); ++e) {
    auto [i, j] = L.edge_cell[e];
    out.push_back(gt_coefficient(L.elements[L.graph.edge(static_cast<int>(e)).to], i, j));
  }
  return out;
}

}  // namespace polymin
