#include "polymin/gtcoeff.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "../lattices/tables.hpp"
#include "polymin/parallel.hpp"

namespace polymin {

namespace {

constexpr int kM = 9;

struct ResolvedCell {
  int col;
  int j;
  detail::CellKind kind;
  int position;  // E7 position index for entries
};

struct GtTable {
  int n;
  std::vector<ResolvedCell> cells;
  // E7 position -> interior cell carrying it (columns 1..n).
  std::map<int, std::pair<int, int>> interior;
};

ColorId column_color(int n, int col) {
  if (n == 6 && (col == 5 || col == 6)) return color(col, true);
  return color(col);
}

GtTable resolve(std::span<const detail::GtCellSpec> spec, int n) {
  const auto& d = compression_poset(CompressionPosetId::E7);
  GtTable t{n, {}, {}};
  for (const auto& c : spec) {
    int pos = c.kind == detail::CellKind::Entry ? d.index_of({c.source.p, c.source.q}) : -1;
    t.cells.push_back({c.col, c.j, c.kind, pos});
    // Interior cells may also repeat frame values; only a cell in the
    // column of the entry's own color is free to move.
    if (pos >= 0 && c.col >= 1 && c.col <= n && column_color(n, c.col) == c.source.p)
      if (!t.interior.emplace(pos, std::make_pair(c.col, c.j)).second)
        throw std::logic_error("GT table: entry appears twice in the interior");
  }
  if (static_cast<int>(t.cells.size()) != (n + 2) * kM) throw std::logic_error("GT table: wrong cell count");
  return t;
}

const GtTable& table5() {
  static const GtTable t = resolve(detail::gt5_cells(), 5);
  return t;
}

const GtTable& table6() {
  static const GtTable t = resolve(detail::gt6_cells(), 6);
  return t;
}

GTParallelogram fill(const GtTable& t, std::span<const int> c, int k) {
  const auto width = compression_poset(CompressionPosetId::E7).positions.size();
  if (c.size() != width) throw std::invalid_argument("GT conversion: array has wrong length");
  GTParallelogram g(t.n, kM);
  for (const auto& cell : t.cells) {
    int v = cell.kind == detail::CellKind::Entry ? c[cell.position] : cell.kind == detail::CellKind::Zero ? 0 : k;
    g.set(cell.col, cell.j, v);
  }
  if (!g.satisfies_inequalities()) throw std::logic_error("GT conversion: inequalities fail for " + g.str());
  return g;
}

std::vector<int> unfill(const GtTable& t, const GTParallelogram& g) {
  const auto width = compression_poset(CompressionPosetId::E7).positions.size();
  std::vector<int> c(width, -1);
  for (const auto& cell : t.cells) {
    if (cell.kind != detail::CellKind::Entry) continue;
    int v = g.get(cell.col, cell.j);
    if (c[cell.position] >= 0 && c[cell.position] != v)
      throw std::invalid_argument("GT conversion: inconsistent repeated entry");
    c[cell.position] = v;
  }
  return c;
}

int value_at(std::span<const int> c, int p, int q, bool primed = false) {
  return c[compression_poset(CompressionPosetId::E7).index_of({color(p, primed), q})];
}

}  // namespace

std::set<ColorId> j5_colors() { return {color(1), color(2), color(3), color(4), color(5)}; }
std::set<ColorId> j6_colors() { return {color(1), color(2), color(3), color(4), color(5, true), color(6, true)}; }

GTParallelogram to_gt5(std::span<const int> c, int k) { return fill(table5(), c, k); }
GTParallelogram to_gt6(std::span<const int> c, int k) { return fill(table6(), c, k); }
std::vector<int> from_gt5(const GTParallelogram& g) { return unfill(table5(), g); }
std::vector<int> from_gt6(const GTParallelogram& g) { return unfill(table6(), g); }

J5Frame j5_frame(std::span<const int> c, int k) {
  J5Frame f;
  f.c5p4 = value_at(c, 5, 4, true);
  f.c5p6 = value_at(c, 5, 6, true);
  f.c5p10 = value_at(c, 5, 10, true);
  f.c5p12 = value_at(c, 5, 12, true);
  f.c6p5 = value_at(c, 6, 5, true);
  f.c6p11 = value_at(c, 6, 11, true);
  f.P = {k, k, k, k, k, f.c5p6, f.c5p6, f.c5p10, f.c5p10};
  f.Q = {f.c5p4, f.c5p4, f.c5p4, f.c5p4, f.c5p12, f.c5p12, f.c5p12, f.c5p12, 0};
  return f;
}

J6Frame j6_frame(std::span<const int> c, int k) {
  J6Frame f;
  f.c54 = value_at(c, 5, 4);
  f.c58 = value_at(c, 5, 8);
  f.c512 = value_at(c, 5, 12);
  f.P = {k, k, k, k, k, k, f.c58, f.c58, f.c58};
  f.Q = {f.c54, f.c54, f.c54, f.c54, f.c512, f.c512, f.c512, f.c512, 0};
  return f;
}

int gt6_column(ColorId c) {
  if (!c.primed && c.index >= 1 && c.index <= 4) return c.index;
  if (c.primed && (c.index == 5 || c.index == 6)) return c.index;
  throw std::invalid_argument("gt6_column: color not in J6");
}

ColorId gt6_color(int column) {
  if (column >= 1 && column <= 4) return color(column);
  if (column == 5 || column == 6) return color(column, true);
  throw std::invalid_argument("gt6_color: bad column");
}

int gt_m_value(const GTParallelogram& g, int i) {
  if (i < 1 || i > g.n()) throw std::invalid_argument("gt_m_value: not an interior column");
  int s = 0;
  for (int q = 0; q < g.m(); ++q) s += 2 * g.get(i, i - q) - g.get(i + 1, i + 1 - q) - g.get(i - 1, i - 1 - q);
  return s;
}

namespace {

struct RouteResult {
  BigRational value;
  bool both = false;
  bool agree = true;
  BigRational other;
};

RouteResult evaluate(const ArrayLattice& L, int e) {
  if (L.family() != Family::E7) throw std::invalid_argument("edge_coefficient_E7: not an E7 lattice");
  const Edge& ed = L.graph().edge(e);
  const int pos = L.edge_position(e);
  const int k = L.bound();
  std::vector<int> s = L.array_values(ed.to);
  std::optional<BigRational> via5, via6;
  if (auto it = table5().interior.find(pos); it != table5().interior.end()) {
    if (it->second.first != ed.color.index || ed.color.primed) throw std::logic_error("GT5 table: column/color mismatch");
    via5 = gt_coefficient(to_gt5(s, k), it->second.first, it->second.second);
  }
  if (auto it = table6().interior.find(pos); it != table6().interior.end()) {
    if (gt6_color(it->second.first) != ed.color) throw std::logic_error("GT6 table: column/color mismatch");
    via6 = gt_coefficient(to_gt6(s, k), it->second.first, it->second.second);
  }
  RouteResult r;
  if (via5 && via6) {
    r.both = true;
    r.value = *via5;
    r.other = *via6;
    r.agree = *via5 == *via6;
  } else if (via5) {
    r.value = *via5;
  } else if (via6) {
    r.value = *via6;
  } else {
    throw std::logic_error("edge_coefficient_E7: position in neither GT table");
  }
  return r;
}

}  // namespace

BigRational edge_coefficient_E7(const ArrayLattice& L, int e) {
  auto r = evaluate(L, e);
  if (!r.agree)
    throw std::logic_error("route disagreement on edge " + std::to_string(e) + ": P=" + to_string(r.value) +
                           " Q=" + to_string(r.other));
  return r.value;
}

E7Coefficients e7_coefficients(const ArrayLattice& L, unsigned threads) {
  const std::size_t n = L.graph().edges().size();
  E7Coefficients out;
  out.value.resize(n);
  struct Partial {
    long long checks = 0, mismatches = 0;
    std::string first;
  };
  std::vector<Partial> parts(std::max(1u, threads));
  parallel_chunks(n, threads, [&](unsigned c, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      auto r = evaluate(L, static_cast<int>(i));
      out.value[i] = r.value;
      if (!r.both) continue;
      ++parts[c].checks;
      if (!r.agree && parts[c].mismatches++ == 0)
        parts[c].first = "edge " + std::to_string(i) + ": P=" + to_string(r.value) + " Q=" + to_string(r.other);
    }
  });
  for (const auto& p : parts) {
    out.route_checks += p.checks;
    out.route_mismatches += p.mismatches;
    if (out.first_mismatch.empty()) out.first_mismatch = p.first;
  }
  return out;
}

EmbeddedComponent embed_e6_in_e7(const ArrayLattice& L7, const ArrayLattice& L6) {
  if (L7.family() != Family::E7 || L6.family() == Family::E7)
    throw std::invalid_argument("embed_e6_in_e7: expects an E7 and an E6 lattice");
  if (L7.bound() != L6.bound()) throw std::invalid_argument("embed_e6_in_e7: parameters do not match");
  const int k = L7.bound();
  std::vector<int> top;
  switch (L6.family()) {
    case Family::E6OnePrime:
      top = distinguished_max(MaxKind::MPrime, k);
      break;
    case Family::E6SixPrime:
      top = distinguished_max(MaxKind::MDoublePrime, k);
      break;
    default:
      top = distinguished_max(MaxKind::MTilde, k, L6.a(), L6.b());
      break;
  }
  EmbeddedComponent out;
  out.top = L7.index_of(top);
  if (out.top < 0) throw std::logic_error("embed_e6_in_e7: distinguished maximum is not an element");
  out.comp = component(L7.graph(), psi_image_colors(), out.top);
  auto iso = find_color_isomorphism(out.comp.poset, L6.graph(), psi_inverse);
  if (iso) {
    out.found = true;
    out.iso = std::move(*iso);
  }
  return out;
}

std::vector<BigRational> e6_coefficients(const ArrayLattice& L6, unsigned threads) {
  const ArrayLattice L7 = build_E7_lattice(L6.bound());
  const auto coeff7 = e7_coefficients(L7, threads);
  auto emb = embed_e6_in_e7(L7, L6);
  if (!emb.found) throw std::logic_error("e6_coefficients: no color isomorphism with the E7 component");
  std::vector<int> back(L6.size(), -1);  // L6 vertex -> E7 vertex
  for (std::size_t i = 0; i < emb.iso.size(); ++i) back[emb.iso[i]] = emb.comp.vertices[i];
  std::vector<BigRational> out;
  out.reserve(L6.graph().edges().size());
  for (const Edge& ed : L6.graph().edges()) {
    auto e7 = L7.graph().find_edge(back[ed.from], back[ed.to]);
    if (!e7) throw std::logic_error("e6_coefficients: edge has no preimage");
    out.push_back(coeff7.value[*e7]);
  }
  return out;
}

}  // namespace polymin
