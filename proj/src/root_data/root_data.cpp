#include "polymin/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polymin {

int DynkinDiagram::index_of(ColorId c) const {
  for (int i = 0; i < rank(); ++i)
    if (nodes[i] == c) return i;
  return -1;
}

bool DynkinDiagram::adjacent(int i, int j) const {
  for (auto [a, b] : edges)
    if ((a == i && b == j) || (a == j && b == i)) return true;
  return false;
}

DynkinDiagram dynkin_E7() {
  DynkinDiagram D;
  D.name = "E7";
  D.nodes = {color(1), color(2), color(3), color(4), color(5), color(5, true), color(6, true)};
  // 1-2-3-4-5'-6', 4-5
  D.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 6}, {3, 4}};
  return D;
}

DynkinDiagram dynkin_E6() {
  DynkinDiagram D;
  D.name = "E6";
  for (int i = 1; i <= 6; ++i) D.nodes.push_back(color(i, true));
  // 1'-2'-3'-5'-6', 3'-4'
  D.edges = {{0, 1}, {1, 2}, {2, 4}, {4, 5}, {2, 3}};
  return D;
}

DynkinDiagram dynkin_A(int n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  DynkinDiagram D;
  D.name = "A" + std::to_string(n);
  for (int i = 1; i <= n; ++i) D.nodes.push_back(color(i));
  for (int i = 0; i + 1 < n; ++i) D.edges.emplace_back(i, i + 1);
  return D;
}

CartanMatrix cartan_matrix(const DynkinDiagram& D) {
  const int r = D.rank();
  CartanMatrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  for (auto [i, j] : D.edges) {
    if (i == j || i < 0 || j < 0 || i >= r || j >= r) throw std::invalid_argument("Dynkin diagram: bad edge");
    a[i][j] = a[j][i] = -1;
  }
  return a;
}

namespace {

void require_connected(const DynkinDiagram& D) {
  const int r = D.rank();
  if (r == 0) throw std::invalid_argument("Dynkin diagram is empty");
  std::vector<int> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [i, j] : D.edges) parent[find(i)] = find(j);
  for (int i = 0; i < r; ++i)
    if (find(i) != find(0)) throw std::invalid_argument("Dynkin diagram is disconnected");
}

std::size_t expected_root_count(const DynkinDiagram& D) {
  const std::size_t r = D.nodes.size();
  if (D.name == "E7") return 63;
  if (D.name == "E6") return 36;
  if (!D.name.empty() && D.name[0] == 'A') return r * (r + 1) / 2;
  return 0;
}

// <beta, alpha_i^vee> for beta in root coordinates.
int pair_with_coroot(const CartanMatrix& a, const Root& beta, int i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * a[j][i];
  return s;
}

}  // namespace

std::vector<Root> positive_roots(const DynkinDiagram& D) {
  require_connected(D);
  const int r = D.rank();
  auto a = cartan_matrix(D);
  std::set<Root> found;
  std::vector<Root> queue;
  for (int i = 0; i < r; ++i) {
    Root e(r, 0);
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (int i = 0; i < r; ++i) {
      Root beta = queue[h];
      int c = pair_with_coroot(a, beta, i);
      beta[i] -= c;
      if (std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; }) &&
          std::any_of(beta.begin(), beta.end(), [](int x) { return x > 0; }) && found.insert(beta).second)
        queue.push_back(beta);
    }
  }
  std::vector<Root> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
  auto want = expected_root_count(D);
  if (want && out.size() != want) throw std::logic_error("positive_roots: wrong root count for " + D.name);
  return out;
}

ColorId psi(ColorId c) {
  if (!c.primed || c.index < 1 || c.index > 6) throw std::invalid_argument("psi: not an E6 color");
  if (c.index <= 4) return color(c.index + 1);
  return c;
}

ColorId psi_inverse(ColorId c) {
  if (!c.primed && c.index >= 2 && c.index <= 5) return color(c.index - 1, true);
  if (c.primed && (c.index == 5 || c.index == 6)) return c;
  throw std::invalid_argument("psi_inverse: color not in the image of psi");
}

Weight weight_of(const EdgeColoredPoset& L, const DynkinDiagram& D, int t) {
  Weight w;
  for (ColorId c : D.nodes) w.push_back(m_value(L, c, t));
  return w;
}

std::vector<Weight> all_weights(const EdgeColoredPoset& L, const DynkinDiagram& D) { return m_values(L, D.nodes); }

PhiReport check_phi_structured(const EdgeColoredPoset& L, const DynkinDiagram& D) {
  PhiReport rep;
  auto a = cartan_matrix(D);
  auto wt = all_weights(L, D);
  for (int e = 0; e < static_cast<int>(L.edges().size()); ++e) {
    const Edge& ed = L.edge(e);
    ++rep.edges_checked;
    int i = D.index_of(ed.color);
    if (i < 0) {
      rep.ok = false;
      rep.edge = e;
      return rep;
    }
    for (int j = 0; j < D.rank(); ++j) {
      int got = wt[ed.to][j] - wt[ed.from][j];
      if (got != a[j][i]) {
        rep.ok = false;
        rep.edge = e;
        rep.j = D.nodes[j];
        rep.expected = a[j][i];
        rep.found = got;
        return rep;
      }
    }
  }
  return rep;
}

BigInt weyl_dim(const DynkinDiagram& D, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != D.rank()) throw std::invalid_argument("weyl_dim: weight has wrong length");
  if (std::any_of(lambda.begin(), lambda.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("weyl_dim: weight is not dominant");
  BigRational prod = 1;
  for (const Root& alpha : positive_roots(D)) {
    long num = 0, den = 0;
    for (int i = 0; i < D.rank(); ++i) {
      num += static_cast<long>(alpha[i]) * (lambda[i] + 1);
      den += alpha[i];
    }
    BigRational f(num, den);
    f.canonicalize();
    prod *= f;
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
  return prod.get_num();
}

Character freudenthal_char(const DynkinDiagram& D, const Weight& lambda) {
  const int r = D.rank();
  if (static_cast<int>(lambda.size()) != r) throw std::invalid_argument("freudenthal: weight has wrong length");
  if (std::any_of(lambda.begin(), lambda.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("freudenthal: weight is not dominant");
  auto a = cartan_matrix(D);
  auto roots = positive_roots(D);

  // Weights are tracked as mu = lambda - beta with beta in root coordinates.
  // With (alpha_i, alpha_j) = a[i][j] all the quantities are integers:
  //   (nu, alpha) = sum_i alpha_i nu_i                  (nu in weight coords)
  //   |lambda+rho|^2 - |mu+rho|^2 = 2 sum_i beta_i (lambda_i + 1) - beta^T a beta
  auto to_weight = [&](const Root& beta) {
    Weight mu = lambda;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) mu[j] -= beta[i] * a[i][j];
    return mu;
  };
  std::map<Root, long long> mult;
  mult[Root(r, 0)] = 1;
  std::vector<Root> layer{Root(r, 0)};
  while (!layer.empty()) {
    std::set<Root> candidates;
    for (const Root& beta : layer)
      for (int i = 0; i < r; ++i) {
        Root next = beta;
        ++next[i];
        candidates.insert(next);
      }
    std::vector<Root> next_layer;
    for (const Root& beta : candidates) {
      long long denom = 0;
      for (int i = 0; i < r; ++i) {
        denom += 2LL * beta[i] * (lambda[i] + 1);
        for (int j = 0; j < r; ++j) denom -= static_cast<long long>(beta[i]) * a[i][j] * beta[j];
      }
      long long numer = 0;
      for (const Root& alpha : roots) {
        Root up = beta;
        for (int k = 1;; ++k) {
          bool valid = true;
          for (int i = 0; i < r; ++i) {
            up[i] -= alpha[i];
            if (up[i] < 0) valid = false;
          }
          if (!valid) break;
          auto it = mult.find(up);
          if (it == mult.end()) continue;
          Weight nu = to_weight(up);
          long long ip = 0;
          for (int i = 0; i < r; ++i) ip += static_cast<long long>(alpha[i]) * nu[i];
          numer += 2 * it->second * ip;
        }
      }
      if (denom == 0) {
        if (numer != 0) throw std::logic_error("freudenthal: zero denominator with nonzero numerator");
        continue;
      }
      if (numer % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
      long long m = numer / denom;
      if (m > 0) {
        mult[beta] = m;
        next_layer.push_back(beta);
      }
    }
    layer = std::move(next_layer);
  }
  Character ch;
  for (const auto& [beta, m] : mult) ch[to_weight(beta)] = m;
  return ch;
}

bool is_weyl_invariant(const DynkinDiagram& D, const Character& ch) {
  auto a = cartan_matrix(D);
  for (const auto& [mu, m] : ch)
    for (int i = 0; i < D.rank(); ++i) {
      Weight s = mu;
      for (int j = 0; j < D.rank(); ++j) s[j] -= mu[i] * a[i][j];
      auto it = ch.find(s);
      if (it == ch.end() || it->second != m) return false;
    }
  return true;
}

nlohmann::json character_to_json(const Weight& lambda, const Character& ch) {
  nlohmann::json j;
  j["lambda"] = lambda;
  j["weights"] = nlohmann::json::array();
  for (const auto& [mu, m] : ch) j["weights"].push_back({{"mu", mu}, {"mult", m}});
  return j;
}

}  // namespace polymin
