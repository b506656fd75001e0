#include "polymin/lattices.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tables.hpp"

namespace polymin {

std::string Position::str() const { return p.str() + "," + std::to_string(q); }

int CompressionPosetData::index_of(Position pos) const {
  for (int i = 0; i < static_cast<int>(positions.size()); ++i)
    if (positions[i] == pos) return i;
  throw std::out_of_range("no position " + pos.str() + " in " + name);
}

VertexColoredPoset CompressionPosetData::poset() const {
  VertexColoredPoset P;
  for (const Position& pos : positions) {
    P.names.push_back(pos.str());
    P.colors.push_back(pos.p);
  }
  P.covers = covers;
  return P;
}

namespace {

std::vector<int> closure(const CompressionPosetData& d, int start, bool upward) {
  std::vector<char> mark(d.positions.size(), 0);
  std::vector<int> stack{start};
  mark[start] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [lo, hi] : d.covers) {
      int from = upward ? lo : hi, to = upward ? hi : lo;
      if (from == x && !mark[to]) {
        mark[to] = 1;
        stack.push_back(to);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mark.size()); ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

CompressionPosetData load(int which) {
  const auto& t = detail::compression_table(which);
  CompressionPosetData d;
  d.name = t.name;
  for (const auto& p : t.positions) d.positions.push_back({p.p, p.q});
  for (const auto& c : t.covers)
    d.covers.emplace_back(d.index_of({c.lo.p, c.lo.q}), d.index_of({c.hi.p, c.hi.q}));
  return d;
}

}  // namespace

std::vector<int> CompressionPosetData::up_set(int i) const { return closure(*this, i, true); }
std::vector<int> CompressionPosetData::down_set(int i) const { return closure(*this, i, false); }

const CompressionPosetData& compression_poset(CompressionPosetId id) {
  static const std::array<CompressionPosetData, 4> kData = {load(0), load(1), load(2), load(3)};
  return kData[static_cast<int>(id)];
}

// ---------------------------------------------------------------------------

std::span<const std::uint8_t> ArrayLattice::array(int v) const {
  return {values_.data() + static_cast<std::size_t>(v) * width(), width()};
}

std::vector<int> ArrayLattice::array_values(int v) const {
  auto a = array(v);
  return {a.begin(), a.end()};
}

int ArrayLattice::index_of(std::span<const int> values) const {
  if (values.size() != width()) return -1;
  std::string key(values.size(), '\0');
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > 255) return -1;
    key[i] = static_cast<char>(values[i]);
  }
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int ArrayLattice::max_element() const {
  auto m = graph_.maximal_elements();
  if (m.size() != 1) throw std::logic_error("lattice has no unique maximum");
  return m[0];
}

int ArrayLattice::min_element() const {
  auto m = graph_.minimal_elements();
  if (m.size() != 1) throw std::logic_error("lattice has no unique minimum");
  return m[0];
}

DynkinDiagram ArrayLattice::diagram() const { return family_ == Family::E7 ? dynkin_E7() : dynkin_E6(); }

Weight ArrayLattice::highest_weight() const {
  switch (family_) {
    case Family::E7:
      return {bound_, 0, 0, 0, 0, 0, 0};
    case Family::E6OnePrime:
      return {bound_, 0, 0, 0, 0, 0};
    case Family::E6SixPrime:
      return {0, 0, 0, 0, 0, bound_};
    case Family::E6TwoParameter:
      return {a_, 0, 0, 0, 0, b_};
  }
  return {};
}

std::string ArrayLattice::describe() const {
  switch (family_) {
    case Family::E7:
      return "L_E7(" + std::to_string(bound_) + "w1)";
    case Family::E6OnePrime:
      return "L_E6(" + std::to_string(bound_) + "w1')";
    case Family::E6SixPrime:
      return "L_E6(" + std::to_string(bound_) + "w6')";
    case Family::E6TwoParameter:
      return "L_E6(" + std::to_string(a_) + "w1'+" + std::to_string(b_) + "w6')";
  }
  return {};
}

nlohmann::json ArrayLattice::element_to_json(int v) const {
  nlohmann::json c = nlohmann::json::object();
  auto arr = array(v);
  for (std::size_t i = 0; i < width(); ++i) c[data_->positions[i].str()] = arr[i];
  // nlohmann sorts object keys; keep the canonical order explicitly as well.
  nlohmann::json order = nlohmann::json::array();
  for (const auto& pos : data_->positions) order.push_back(pos.str());
  return {{"c", c}, {"order", order}};
}

ArrayLattice build_array_lattice(Family family, int p1, int p2, std::size_t max_size) {
  ArrayLattice L;
  L.family_ = family;
  if (p1 < 0 || p2 < 0) throw std::invalid_argument("lattice parameters must be nonnegative");
  switch (family) {
    case Family::E7:
      L.data_ = &compression_poset(CompressionPosetId::E7);
      L.bound_ = p1;
      break;
    case Family::E6OnePrime:
      L.data_ = &compression_poset(CompressionPosetId::E6OnePrime);
      L.bound_ = p1;
      break;
    case Family::E6SixPrime:
      L.data_ = &compression_poset(CompressionPosetId::E6SixPrime);
      L.bound_ = p1;
      break;
    case Family::E6TwoParameter:
      L.data_ = &compression_poset(CompressionPosetId::E6Combined);
      L.a_ = p1;
      L.b_ = p2;
      L.bound_ = p1 + p2;
      break;
  }
  if (L.bound_ > 255) throw std::invalid_argument("lattice parameter too large");
  const auto& d = *L.data_;
  const int w = static_cast<int>(d.positions.size());

  std::vector<int> lb(w, 0), ub(w, L.bound_);
  if (family == Family::E6TwoParameter) {
    for (int i : d.up_set(d.index_of({color(1, true), 8}))) ub[i] = std::min(ub[i], L.a_);
    for (int i : d.down_set(d.index_of({color(1, true), 6}))) lb[i] = std::max(lb[i], L.a_);
  }
  std::vector<std::vector<int>> lower(w);
  for (auto [lo, hi] : d.covers) {
    if (lo >= hi) throw std::logic_error("compression table is not listed along a linear extension");
    lower[hi].push_back(lo);
  }

  std::vector<int> cur(w, 0);
  std::size_t count = 0;
  std::function<void(int)> rec = [&](int t) {
    if (t == w) {
      if (max_size && count >= max_size)
        throw std::length_error("lattice exceeds the size limit of " + std::to_string(max_size));
      for (int x : cur) L.values_.push_back(static_cast<std::uint8_t>(x));
      ++count;
      return;
    }
    int hi = ub[t];
    for (int lo : lower[t]) hi = std::min(hi, cur[lo]);
    for (int v = lb[t]; v <= hi; ++v) {
      cur[t] = v;
      rec(t + 1);
    }
  };
  rec(0);

  L.index_.reserve(count);
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::string key(reinterpret_cast<const char*>(L.values_.data() + v * w), w);
    L.index_.emplace(key, static_cast<int>(v));
    std::string lab;
    for (int i = 0; i < w; ++i) {
      if (L.bound_ >= 10 && i) lab += '.';
      lab += std::to_string(L.values_[v * w + i]);
    }
    labels.push_back(std::move(lab));
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < count; ++v) {
    std::string key(reinterpret_cast<const char*>(L.values_.data() + v * w), w);
    for (int t = 0; t < w; ++t) {
      ++key[t];
      auto it = L.index_.find(key);
      if (it != L.index_.end()) {
        edges.push_back({static_cast<int>(v), it->second, d.positions[t].p});
        L.edge_position_.push_back(t);
      }
      --key[t];
    }
  }
  L.graph_ = EdgeColoredPoset(count, std::move(edges), std::move(labels));
  return L;
}

ArrayLattice build_E7_lattice(int k, std::size_t max_size) { return build_array_lattice(Family::E7, k, 0, max_size); }

ArrayLattice build_E6_lattice(E6Variant variant, int a, int b, std::size_t max_size) {
  switch (variant) {
    case E6Variant::OnePrime:
      return build_array_lattice(Family::E6OnePrime, a, 0, max_size);
    case E6Variant::SixPrime:
      return build_array_lattice(Family::E6SixPrime, a, 0, max_size);
    case E6Variant::TwoParameter:
      return build_array_lattice(Family::E6TwoParameter, a, b, max_size);
  }
  throw std::invalid_argument("unknown E6 variant");
}

std::vector<int> distinguished_max(MaxKind kind, int k, int a, int b) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const auto& d = compression_poset(CompressionPosetId::E7);
  const int w = static_cast<int>(d.positions.size());
  auto at = [&](int p, int q, bool primed = false) { return d.index_of({color(p, primed), q}); };
  std::vector<int> c(w, -1);
  auto fill = [&](const std::vector<int>& idx, int v) {
    for (int i : idx) c[i] = v;
  };
  auto intersect = [](std::vector<int> x, const std::vector<int>& y) {
    std::vector<int> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  };
  switch (kind) {
    case MaxKind::M:
      std::fill(c.begin(), c.end(), k);
      break;
    case MaxKind::MPrime:
      std::fill(c.begin(), c.end(), k);
      c[at(1, 16)] = 0;
      break;
    case MaxKind::MDoublePrime:
      fill(d.up_set(at(1, 8)), 0);
      fill(d.down_set(at(6, 11, true)), k);
      break;
    case MaxKind::MTilde:
      if (a < 0 || b < 0 || a + b != k) throw std::invalid_argument("m~(a,b) requires a + b = k");
      c[at(1, 16)] = 0;
      c[at(1, 8)] = a;
      c[at(1, 0)] = k;
      fill(intersect(d.up_set(at(2, 9)), d.down_set(at(2, 15))), a);
      fill(intersect(d.up_set(at(2, 1)), d.down_set(at(6, 11, true))), k);
      break;
  }
  if (std::find(c.begin(), c.end(), -1) != c.end()) throw std::logic_error("distinguished_max: unassigned position");
  return c;
}

std::set<ColorId> psi_image_colors() {
  return {color(2), color(3), color(4), color(5), color(5, true), color(6, true)};
}

}  // namespace polymin
