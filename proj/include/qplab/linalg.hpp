#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qplab/field.hpp"

namespace qplab {

template <class F>
class DenseMatrix {
 public:
  using Elem = typename F::Elem;

  DenseMatrix(F field, size_t rows, size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static DenseMatrix identity(F field, size_t n);

  const F& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Elem& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  Elem* row(size_t i) { return data_.data() + i * cols_; }
  const Elem* row(size_t i) const { return data_.data() + i * cols_; }

  void append_row(const std::vector<Elem>& r);
  DenseMatrix transposed() const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;
  bool operator==(const DenseMatrix& o) const;

 private:
  F field_;
  size_t rows_, cols_;
  std::vector<Elem> data_;
};

template <class F>
struct RrefResult {
  DenseMatrix<F> reduced;   // rank rows, pivot entries 1, pivot columns otherwise zero
  std::vector<size_t> pivots;
};

template <class F>
RrefResult<F> rref(DenseMatrix<F> m);

template <class F>
size_t rank(DenseMatrix<F> m);

/// Basis of {v : m v = 0}, one vector per non-pivot column.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const DenseMatrix<F>& m);

/// Throws invalid_coordinate_change when m is singular.
template <class F>
DenseMatrix<F> inverse(const DenseMatrix<F>& m);

/// Sparse row for rank computations: column indices strictly increasing.
template <class F>
struct SparseRow {
  std::vector<uint32_t> cols;
  std::vector<typename F::Elem> vals;
  size_t size() const { return cols.size(); }
};

/// Rank of a sparse matrix. Over F_p the elimination switches to dense SIMD
/// rows once fill-in makes the active rows heavy.
template <class F>
size_t sparse_rank(const F& field, std::vector<SparseRow<F>> rows, size_t ncols);

}  // namespace qplab
