#include "qplab/linalg.hpp"
#include "qplab/polynomial.hpp"

namespace qplab {

template <class F>
Polynomial<F> linear_substitution(const Polynomial<F>& f, const std::vector<std::vector<typename F::Elem>>& m) {
  const int n = f.nvars();
  if (static_cast<int>(m.size()) != n)
    throw Error(ErrorKind::invalid_coordinate_change, "matrix size does not match the ring");
  DenseMatrix<F> mat(f.field(), 0, n);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::invalid_coordinate_change, "matrix is not square");
    mat.append_row(row);
  }
  if (rank(mat) != static_cast<size_t>(n))
    throw Error(ErrorKind::invalid_coordinate_change, "coordinate change matrix is singular");
  std::vector<Polynomial<F>> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Term<F>> terms;
    for (int j = 0; j < n; ++j)
      if (!f.field().is_zero(m[i][j])) terms.push_back({Monomial::variable(j), m[i][j]});
    images.push_back(Polynomial<F>::from_terms(f.field(), n, std::move(terms)));
  }
  return f.substitute(images);
}

template Polynomial<PrimeField> linear_substitution(const Polynomial<PrimeField>&,
                                                    const std::vector<std::vector<uint32_t>>&);
template Polynomial<RationalField> linear_substitution(const Polynomial<RationalField>&,
                                                       const std::vector<std::vector<mpq_class>>&);

}  // namespace qplab
