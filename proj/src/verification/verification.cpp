#include "polymin/verification.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "polymin/parallel.hpp"

namespace polymin {

namespace {

nlohmann::json edge_json(const EdgeColoredPoset& L, int e, const std::vector<BigRational>& P) {
  const Edge& ed = L.edge(e);
  return {{"from", L.label(ed.from)}, {"to", L.label(ed.to)}, {"color", ed.color.str()}, {"P", to_string(P[e])}};
}

}  // namespace

DiamondReport check_diamond_relations(const EdgeColoredPoset& L, const std::vector<BigRational>& P,
                                      const DynkinDiagram& D, unsigned threads) {
  if (P.size() != L.edges().size()) throw std::invalid_argument("diamonds: one coefficient per edge");
  struct Partial {
    long long diamonds = 0, strong = 0;
    nlohmann::json failure;
  };
  std::vector<Partial> parts(std::max(1u, threads));
  parallel_chunks(L.size(), threads, [&](unsigned c, std::size_t b, std::size_t e) {
    Partial& part = parts[c];
    for (std::size_t q = b; q < e; ++q) {
      const auto& ups = L.up(static_cast<int>(q));
      for (std::size_t x = 0; x < ups.size(); ++x)
        for (std::size_t y = x + 1; y < ups.size(); ++y) {
          const int qr = ups[x], qs = ups[y];
          const int r = L.edge(qr).to, s = L.edge(qs).to;
          for (int rt : L.up(r)) {
            auto st = L.find_edge(s, L.edge(rt).to);
            if (!st) continue;
            ++part.diamonds;
            bool good = P[*st] * P[rt] == P[qs] * P[qr];
            ColorId cj = L.edge(qr).color, ci = L.edge(qs).color;
            int ij = D.index_of(ci), jj = D.index_of(cj);
            if (ci != cj && ij >= 0 && jj >= 0 && !D.adjacent(ij, jj)) {
              ++part.strong;
              good = good && P[qr] == P[*st] && P[qs] == P[rt];
            }
            if (!good && part.failure.is_null())
              part.failure = {{"q", L.label(static_cast<int>(q))},
                              {"t", L.label(L.edge(rt).to)},
                              {"colors", {cj.str(), ci.str()}},
                              {"edges", {edge_json(L, qr, P), edge_json(L, qs, P), edge_json(L, rt, P),
                                         edge_json(L, *st, P)}}};
          }
        }
    }
  });
  DiamondReport rep;
  for (auto& p : parts) {
    rep.diamonds += p.diamonds;
    rep.strong_checks += p.strong;
    if (rep.ok && !p.failure.is_null()) {
      rep.ok = false;
      rep.failure = p.failure;
    }
  }
  return rep;
}

CrossingReport check_crossing_relations(const EdgeColoredPoset& L, const std::vector<BigRational>& P,
                                        const std::vector<ColorId>& colors) {
  if (P.size() != L.edges().size()) throw std::invalid_argument("crossings: one coefficient per edge");
  CrossingReport rep;
  auto m = m_values(L, colors);
  for (int r = 0; r < static_cast<int>(L.size()); ++r)
    for (std::size_t c = 0; c < colors.size(); ++c) {
      BigRational lhs = 0;
      for (int e : L.down(r))
        if (L.edge(e).color == colors[c]) lhs += P[e];
      for (int e : L.up(r))
        if (L.edge(e).color == colors[c]) lhs -= P[e];
      ++rep.checks;
      if (lhs != m[r][c] && rep.ok) {
        rep.ok = false;
        rep.failure = {{"vertex", L.label(r)}, {"color", colors[c].str()}, {"lhs", to_string(lhs)}, {"rhs", m[r][c]}};
      }
    }
  return rep;
}

Certificate certify_module(const EdgeColoredPoset& L, const std::vector<BigRational>& P, const DynkinDiagram& D,
                           unsigned threads) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::time_point a) {
    return std::chrono::duration<double, std::milli>(Clock::now() - a).count();
  };
  Certificate cert;
  auto& j = cert.data;
  j["vertices"] = L.size();
  j["edges"] = L.edges().size();
  j["diagram"] = D.name;

  auto t0 = Clock::now();
  nlohmann::json positivity = {{"pass", true}};
  for (std::size_t e = 0; e < P.size(); ++e)
    if (P[e] <= 0) {
      positivity = {{"pass", false}, {"failure", edge_json(L, static_cast<int>(e), P)}};
      break;
    }
  if (P.size() != L.edges().size()) positivity = {{"pass", false}, {"failure", "coefficient count mismatch"}};
  j["positivity"] = positivity;
  if (!positivity["pass"].get<bool>()) {
    cert.ok = false;
    return cert;
  }

  auto phi = check_phi_structured(L, D);
  j["phi"] = {{"pass", phi.ok}, {"edges", phi.edges_checked}, {"ms", ms(t0)}};
  if (!phi.ok && phi.edge) {
    j["phi"]["failure"] = edge_json(L, *phi.edge, P);
    if (phi.j) {
      j["phi"]["failure"]["j"] = phi.j->str();
      j["phi"]["failure"]["expected"] = phi.expected;
      j["phi"]["failure"]["found"] = phi.found;
    }
  }

  t0 = Clock::now();
  auto dia = check_diamond_relations(L, P, D, threads);
  j["diamond"] = {{"pass", dia.ok}, {"diamonds", dia.diamonds}, {"strong", dia.strong_checks}, {"ms", ms(t0)}};
  if (!dia.ok) j["diamond"]["failure"] = dia.failure;

  t0 = Clock::now();
  auto cr = check_crossing_relations(L, P, D.nodes);
  j["crossing"] = {{"pass", cr.ok}, {"checks", cr.checks}, {"ms", ms(t0)}};
  if (!cr.ok) j["crossing"]["failure"] = cr.failure;

  cert.ok = phi.ok && dia.ok && cr.ok;
  j["pass"] = cert.ok;
  return cert;
}

CharacterReport check_character(const EdgeColoredPoset& L, const DynkinDiagram& D, const Weight& lambda) {
  CharacterReport rep;
  Character got;
  for (const auto& w : all_weights(L, D)) ++got[w];
  Character want = freudenthal_char(D, lambda);
  rep.distinct_weights = got.size();
  for (const auto& [w, m] : got) {
    rep.dimension += m;
    if (m != 1) rep.multiplicity_free = false;
  }
  for (const auto& [w, m] : want) {
    auto it = got.find(w);
    long long have = it == got.end() ? 0 : it->second;
    if (have != m) {
      rep.ok = false;
      rep.failure = {{"mu", w}, {"lattice", have}, {"freudenthal", m}};
      return rep;
    }
  }
  for (const auto& [w, m] : got)
    if (!want.count(w)) {
      rep.ok = false;
      rep.failure = {{"mu", w}, {"lattice", m}, {"freudenthal", 0}};
      return rep;
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic-leading polynomial; throws on remainder.
Polynomial divide(Polynomial a, const Polynomial& b) {
  if (b.empty() || b.back() == 0) throw std::invalid_argument("division by zero polynomial");
  if (a.size() < b.size()) throw std::invalid_argument("q-integer quotient is not a polynomial");
  Polynomial q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt lead = a[i + b.size() - 1];
    if (lead % b.back() != 0) throw std::invalid_argument("q-integer quotient is not a polynomial");
    q[i] = lead / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (const auto& x : a)
    if (x != 0) throw std::invalid_argument("q-integer quotient is not a polynomial");
  return q;
}

Polynomial q_integer(int m) { return Polynomial(static_cast<std::size_t>(std::max(m, 1)), 1); }

}  // namespace

Polynomial q_integer_quotient(const std::vector<std::pair<int, int>>& numer_denom) {
  Polynomial num{1}, den{1};
  for (auto [a, b] : numer_denom) {
    if (a < 1 || b < 1) throw std::invalid_argument("q-integers must be positive");
    num = multiply(num, q_integer(a));
    den = multiply(den, q_integer(b));
  }
  return divide(num, den);
}

Polynomial e7_rgf_formula(int k) {
  static const std::vector<std::pair<int, int>> kExp = {{17, 1}, {16, 1}, {15, 1}, {14, 1}, {13, 2}, {12, 2},
                                                        {11, 2}, {10, 2}, {9, 3},  {8, 2},  {7, 2},  {6, 2},
                                                        {5, 2},  {4, 1},  {3, 1},  {2, 1},  {1, 1}};
  std::vector<std::pair<int, int>> f;
  for (auto [j, e] : kExp)
    for (int t = 0; t < e; ++t) f.emplace_back(k + j, j);
  return q_integer_quotient(f);
}

Polynomial e6_rgf_formula(int a, int b) {
  static const std::vector<std::pair<int, int>> kSingle = {{7, 1}, {6, 1}, {5, 1}, {4, 2}, {3, 1}, {2, 1}, {1, 1}};
  static const std::vector<std::pair<int, int>> kJoint = {{11, 1}, {10, 1}, {9, 1}, {8, 2}, {7, 1}, {6, 1}, {5, 1}};
  std::vector<std::pair<int, int>> f;
  for (auto [j, e] : kSingle)
    for (int t = 0; t < e; ++t) {
      f.emplace_back(a + j, j);
      f.emplace_back(b + j, j);
    }
  for (auto [j, e] : kJoint)
    for (int t = 0; t < e; ++t) f.emplace_back(a + b + j, j);
  return q_integer_quotient(f);
}

bool is_symmetric(const std::vector<long long>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != c[c.size() - 1 - i]) return false;
  return true;
}

bool is_unimodal(const std::vector<long long>& c) {
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

RgfReport check_rgf_products(const ArrayLattice& L) {
  RgfReport rep;
  rep.computed = rank_generating_function(L.graph());
  switch (L.family()) {
    case Family::E7:
      rep.formula = e7_rgf_formula(L.bound());
      break;
    case Family::E6OnePrime:
      rep.formula = e6_rgf_formula(L.bound(), 0);
      break;
    case Family::E6SixPrime:
      rep.formula = e6_rgf_formula(0, L.bound());
      break;
    case Family::E6TwoParameter:
      rep.formula = e6_rgf_formula(L.a(), L.b());
      break;
  }
  std::size_t n = std::max(rep.computed.size(), rep.formula.size());
  rep.difference.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt c = i < rep.computed.size() ? BigInt(static_cast<long>(rep.computed[i])) : BigInt(0);
    BigInt f = i < rep.formula.size() ? rep.formula[i] : BigInt(0);
    rep.difference[i] = c - f;
    if (rep.difference[i] != 0) rep.matches_formula = false;
  }
  rep.symmetric = is_symmetric(rep.computed);
  rep.unimodal = is_unimodal(rep.computed);
  rep.ok = rep.matches_formula && rep.symmetric && rep.unimodal;
  return rep;
}

std::string polynomial_to_string(const std::vector<long long>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return first ? "0" : os.str();
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : p) j.push_back(c.get_str());
  return j;
}

}  // namespace polymin
