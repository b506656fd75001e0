#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace polymin {

/// Column-major sparse matrix; each column is an ordered map row -> value.
/// Zero values are dropped on insertion.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<std::size_t, T>& column(std::size_t c) const { return cols_data(c); }

  T at(std::size_t r, std::size_t c) const {
    const auto& col = cols_data(c);
    auto it = col.find(r);
    return it == col.end() ? T{} : it->second;
  }

  void add(std::size_t r, std::size_t c, const T& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix::add");
    if (data_.size() < cols_) data_.resize(cols_);
    auto& slot = data_[c][r];
    slot += v;
    if (slot == T{}) data_[c].erase(r);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : data_) n += col.size();
    return n;
  }

  bool is_zero() const { return nonzeros() == 0; }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix: dimension mismatch in product");
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (const auto& [k, bv] : b.cols_data(j))
        for (const auto& [i, av] : a.cols_data(k)) out.add(i, j, av * bv);
    return out;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

  SparseMatrix scaled(const T& s) const {
    SparseMatrix out(rows_, cols_);
    for (std::size_t j = 0; j < data_.size(); ++j)
      for (const auto& [i, v] : data_[j]) out.add(i, j, v * s);
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a.cols_data(j) != b.cols_data(j)) return false;
    return true;
  }

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("SparseMatrix: dimension mismatch");
    SparseMatrix out = a;
    for (std::size_t j = 0; j < b.data_.size(); ++j)
      for (const auto& [i, v] : b.data_[j]) out.add(i, j, subtract ? T{} - v : v);
    return out;
  }

  const std::map<std::size_t, T>& cols_data(std::size_t c) const {
    static const std::map<std::size_t, T> kEmpty;
    return c < data_.size() ? data_[c] : kEmpty;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, T>> data_;
};

/// AB - BA.
template <class T>
SparseMatrix<T> commutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

}  // namespace polymin
