#include "qplab/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "qplab/simd/kernels.hpp"

namespace qplab {

namespace {

// dst[j] += c * src[j] for j in [0, n)
void row_axpy(const PrimeField& K, uint32_t* dst, const uint32_t* src, uint32_t c, size_t n) {
  simd::active_kernels().axpy_mod(dst, src, c, n, K.characteristic());
}
void row_axpy(const RationalField&, mpq_class* dst, const mpq_class* src, const mpq_class& c, size_t n) {
  for (size_t j = 0; j < n; ++j)
    if (sgn(src[j]) != 0) dst[j] += c * src[j];
}

void row_scale(const PrimeField& K, uint32_t* v, uint32_t c, size_t n) {
  simd::active_kernels().scale_mod(v, c, n, K.characteristic());
}
void row_scale(const RationalField&, mpq_class* v, const mpq_class& c, size_t n) {
  for (size_t j = 0; j < n; ++j)
    if (sgn(v[j]) != 0) v[j] *= c;
}

template <class F>
size_t find_pivot_row(const DenseMatrix<F>& m, size_t from, size_t col) {
  for (size_t i = from; i < m.rows(); ++i)
    if (!m.field().is_zero(m.at(i, col))) return i;
  return m.rows();
}

template <class F>
void swap_rows(DenseMatrix<F>& m, size_t a, size_t b) {
  if (a == b) return;
  std::swap_ranges(m.row(a), m.row(a) + m.cols(), m.row(b));
}

// Echelon form in place; `full` also clears above the pivots. Returns pivot columns.
template <class F>
std::vector<size_t> eliminate(DenseMatrix<F>& m, bool full) {
  const F& K = m.field();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    size_t p = find_pivot_row(m, r, col);
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    const size_t tail = m.cols() - col;
    row_scale(K, m.row(r) + col, K.inv(m.at(r, col)), tail);
    for (size_t i = full ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r || K.is_zero(m.at(i, col))) continue;
      auto c = K.neg(m.at(i, col));
      row_axpy(K, m.row(i) + col, m.row(r) + col, c, tail);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

template <class F>
DenseMatrix<F> DenseMatrix<F>::identity(F field, size_t n) {
  DenseMatrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

template <class F>
void DenseMatrix<F>::append_row(const std::vector<Elem>& r) {
  if (r.size() != cols_) throw Error(ErrorKind::domain, "row length does not match matrix width");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

template <class F>
DenseMatrix<F> DenseMatrix<F>::transposed() const {
  DenseMatrix t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

template <class F>
DenseMatrix<F> DenseMatrix<F>::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::domain, "matrix shapes do not compose");
  DenseMatrix out(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (field_.is_zero(at(i, k))) continue;
      row_axpy(field_, out.row(i), o.row(k), at(i, k), o.cols_);
    }
  return out;
}

template <class F>
std::vector<typename F::Elem> DenseMatrix<F>::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::domain, "vector length does not match matrix width");
  std::vector<Elem> out(rows_, field_.zero());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
  return out;
}

template <class F>
bool DenseMatrix<F>::operator==(const DenseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

template <class F>
RrefResult<F> rref(DenseMatrix<F> m) {
  auto pivots = eliminate(m, true);
  DenseMatrix<F> reduced(m.field(), 0, m.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    reduced.append_row(std::vector<typename F::Elem>(m.row(i), m.row(i) + m.cols()));
  return {std::move(reduced), std::move(pivots)};
}

template <class F>
size_t rank(DenseMatrix<F> m) {
  if (m.rows() > m.cols()) m = m.transposed();
  return eliminate(m, false).size();
}

template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const DenseMatrix<F>& m) {
  const F& K = m.field();
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(m.cols(), K.zero());
    v[free] = K.one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = K.neg(red.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
DenseMatrix<F> inverse(const DenseMatrix<F>& m) {
  const F& K = m.field();
  const size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::invalid_coordinate_change, "matrix is not square");
  DenseMatrix<F> aug(K, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = K.one();
  }
  auto pivots = eliminate(aug, true);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorKind::invalid_coordinate_change, "coordinate change matrix is singular");
  DenseMatrix<F> inv(K, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

namespace {

// A stored pivot row: its lead entry is 1 at column `lead`. Heavy rows over
// F_p are kept densely from `lead` on so the SIMD axpy can be used.
template <class F>
struct PivotRow {
  size_t lead = 0;
  SparseRow<F> sparse;
  std::vector<typename F::Elem> dense;  // entries for columns [lead, ncols)
  bool is_dense = false;
};

}  // namespace

template <class F>
size_t sparse_rank(const F& K, std::vector<SparseRow<F>> rows, size_t ncols) {
  using Elem = typename F::Elem;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow<F>& a, const SparseRow<F>& b) { return a.size() < b.size(); });
  std::vector<int> pivot_of(ncols, -1);
  std::vector<PivotRow<F>> pivots;
  std::vector<Elem> work(ncols, K.zero());
  const size_t heavy = std::max<size_t>(32, ncols / 6);

  for (const auto& row : rows) {
    if (row.size() == 0) continue;
    size_t first = row.cols.front();
    for (size_t k = 0; k < row.size(); ++k) work[row.cols[k]] = row.vals[k];
    size_t lead = ncols;
    for (size_t c = first; c < ncols; ++c) {
      if (K.is_zero(work[c])) continue;
      int pi = pivot_of[c];
      if (pi < 0) {
        lead = c;
        break;
      }
      const auto& pr = pivots[pi];
      Elem f = K.neg(work[c]);
      if (pr.is_dense) {
        if constexpr (is_prime_field_v<F>) {
          row_axpy(K, work.data() + c, pr.dense.data(), f, ncols - c);
        } else {
          for (size_t j = 0; j < pr.dense.size(); ++j)
            if (!K.is_zero(pr.dense[j])) work[c + j] = K.add(work[c + j], K.mul(f, pr.dense[j]));
        }
      } else {
        for (size_t k = 0; k < pr.sparse.size(); ++k) {
          auto col = pr.sparse.cols[k];
          work[col] = K.add(work[col], K.mul(f, pr.sparse.vals[k]));
        }
      }
    }
    if (lead == ncols) continue;
    PivotRow<F> pr;
    pr.lead = lead;
    Elem inv = K.inv(work[lead]);
    size_t nnz = 0;
    for (size_t c = lead; c < ncols; ++c) nnz += !K.is_zero(work[c]);
    if (is_prime_field_v<F> && nnz > heavy) {
      pr.is_dense = true;
      pr.dense.assign(work.begin() + lead, work.end());
      for (auto& v : pr.dense) v = K.mul(v, inv);
    } else {
      for (size_t c = lead; c < ncols; ++c)
        if (!K.is_zero(work[c])) {
          pr.sparse.cols.push_back(static_cast<uint32_t>(c));
          pr.sparse.vals.push_back(K.mul(work[c], inv));
        }
    }
    std::fill(work.begin() + lead, work.end(), K.zero());
    pivot_of[lead] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(pr));
  }
  return pivots.size();
}

template class DenseMatrix<PrimeField>;
template class DenseMatrix<RationalField>;
template RrefResult<PrimeField> rref(DenseMatrix<PrimeField>);
template RrefResult<RationalField> rref(DenseMatrix<RationalField>);
template size_t rank(DenseMatrix<PrimeField>);
template size_t rank(DenseMatrix<RationalField>);
template std::vector<std::vector<uint32_t>> kernel_basis(const DenseMatrix<PrimeField>&);
template std::vector<std::vector<mpq_class>> kernel_basis(const DenseMatrix<RationalField>&);
template DenseMatrix<PrimeField> inverse(const DenseMatrix<PrimeField>&);
template DenseMatrix<RationalField> inverse(const DenseMatrix<RationalField>&);
template size_t sparse_rank(const PrimeField&, std::vector<SparseRow<PrimeField>>, size_t);
template size_t sparse_rank(const RationalField&, std::vector<SparseRow<RationalField>>, size_t);

}  // namespace qplab
