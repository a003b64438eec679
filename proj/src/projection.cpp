#include "qplab/projection.hpp"

#include <algorithm>

namespace qplab {

template <class F>
DenseMatrix<F> completion_matrix(const F& K, int nvars, const std::vector<std::vector<typename F::Elem>>& pts) {
  const size_t k = pts.size();
  DenseMatrix<F> rows(K, 0, nvars);
  for (const auto& p : pts) {
    if (p.size() != static_cast<size_t>(nvars))
      throw Error(ErrorKind::domain, "point has " + std::to_string(p.size()) + " coordinates, expected " +
                                         std::to_string(nvars));
    rows.append_row(p);
  }
  auto red = rref(rows);
  if (red.pivots.size() < k) throw Error(ErrorKind::rank, "the projection points are linearly dependent");
  DenseMatrix<F> A(K, nvars, nvars);
  for (size_t j = 0; j < k; ++j)
    for (int i = 0; i < nvars; ++i) A.at(i, j) = pts[j][i];
  size_t col = k;
  for (int i = 0; i < nvars; ++i)
    if (std::find(red.pivots.begin(), red.pivots.end(), static_cast<size_t>(i)) == red.pivots.end())
      A.at(i, col++) = K.one();
  return A;
}

namespace {

template <class F>
std::vector<std::vector<typename F::Elem>> as_rows(const DenseMatrix<F>& A) {
  std::vector<std::vector<typename F::Elem>> m(A.rows());
  for (size_t i = 0; i < A.rows(); ++i) m[i].assign(A.row(i), A.row(i) + A.cols());
  return m;
}

template <class F>
Ideal<F> changed_ideal(const Ideal<F>& I, const DenseMatrix<F>& A) {
  auto m = as_rows(A);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(linear_substitution(g, m));
  return Ideal<F>(I.field(), I.nvars(), std::move(gens));
}

template <class F>
void require_on(const Variety<F>& V, const std::vector<typename F::Elem>& p) {
  if (p.size() != static_cast<size_t>(V.ideal.nvars()))
    throw Error(ErrorKind::domain, "point has the wrong number of coordinates");
  if (std::all_of(p.begin(), p.end(), [&](const auto& v) { return V.field().is_zero(v); }))
    throw Error(ErrorKind::domain, "the zero vector is not a projective point");
  if (!point_on(V.ideal, p)) throw Error(ErrorKind::membership, "point does not lie on " + V.name);
}

}  // namespace

template <class F>
Variety<F> project_from_points(const Variety<F>& V, const std::vector<std::vector<typename F::Elem>>& pts,
                               bool real_points) {
  const F& K = V.field();
  const int nv = V.ideal.nvars();
  const int k = static_cast<int>(pts.size());
  for (const auto& p : pts) require_on(V, p);
  auto A = completion_matrix(K, nv, pts);
  if (k == 0) return V;
  if (k >= nv) throw Error(ErrorKind::rank, "cannot project from " + std::to_string(k) + " points in P^" +
                                                std::to_string(nv - 1));
  Ideal<F> image = elimination_ideal(changed_ideal(V.ideal, A), k);

  std::optional<RationalMap<F>> param;
  if (V.param) {
    auto Ainv = inverse(A);
    RationalMap<F> p;
    p.source_nvars = V.param->source_nvars;
    p.source_ideal = V.param->source_ideal;
    p.rational = V.param->rational && real_points;
    const auto& old = V.param->components;
    for (int l = k; l < nv; ++l) {
      Polynomial<F> c(K, p.source_nvars);
      for (int i = 0; i < nv; ++i)
        if (!K.is_zero(Ainv.at(l, i))) c += old[i].scaled(Ainv.at(l, i));
      p.components.push_back(std::move(c));
    }
    param = std::move(p);
  }
  std::string name = V.name + "/proj" + std::to_string(k);
  return Variety<F>{std::move(image), std::move(param), V.totally_real && real_points, std::move(name)};
}

template <class F>
PEIResult<F> partial_elimination_ideals(const Variety<F>& V, const std::vector<typename F::Elem>& q, int m,
                                        int max_degree) {
  if (m < 0) throw Error(ErrorKind::domain, "PEI index must be nonnegative");
  require_on(V, q);
  const F& K = V.field();
  const int nv = V.ideal.nvars();
  PEIResult<F> out;
  out.center = q;
  out.max_degree = max_degree;
  auto A = completion_matrix(K, nv, {q});
  Ideal<F> J = changed_ideal(V.ideal, A);
  const auto block = MonomialOrder::block(1);
  std::vector<Polynomial<F>> gb =
      J.is_zero() ? std::vector<Polynomial<F>>{} : J.truncated_groebner_basis(block, max_degree + m);

  // leading x0-coefficient of each GB member, as a form in x1..x_r
  std::vector<std::pair<int, Polynomial<F>>> coeffs;
  for (const auto& g : gb) {
    int top = 0;
    for (const auto& t : g.terms()) top = std::max<int>(top, t.mono[0]);
    std::vector<Term<F>> terms;
    for (const auto& t : g.terms())
      if (t.mono[0] == top) terms.push_back({t.mono.shifted_down(1), t.coef});
    coeffs.push_back({top, Polynomial<F>::from_terms(K, nv - 1, std::move(terms))});
  }
  for (int i = 0; i <= m; ++i) {
    std::vector<Polynomial<F>> gens;
    for (const auto& [deg, c] : coeffs)
      if (deg <= i) gens.push_back(c);
    out.ideals.emplace_back(K, nv - 1, std::move(gens));
  }
  for (int i = 0; i + 1 <= m; ++i)
    if (!out.ideals[i + 1].contains(out.ideals[i]))
      throw Error(ErrorKind::containment, "partial elimination ideals fail to form a chain at " + std::to_string(i));
  for (int i = 0; i <= m; ++i)
    for (int t = 0; t <= max_degree; ++t)
      out.dims_deg[{i, t}] = out.ideals[i].is_zero() ? 0 : graded_piece_dim(out.ideals[i], t);
  return out;
}

std::string PeiIdentity::to_string() const {
  return std::to_string(dim_i2) + (holds ? " = " : " != ") + std::to_string(dim_projection_i2) + " + " +
         std::to_string(dim_k1_1);
}

template <class F>
PeiIdentity pei_dimension_identity_check(const Variety<F>& V, const std::vector<typename F::Elem>& q) {
  auto pei = partial_elimination_ideals(V, q, 1, 2);
  PeiIdentity r;
  r.dim_i2 = V.ideal.is_zero() ? 0 : graded_piece_dim(V.ideal, 2);
  r.dim_projection_i2 = pei.dims_deg.at({0, 2});
  r.dim_k1_1 = pei.dims_deg.at({1, 1});
  r.holds = r.dim_i2 == r.dim_projection_i2 + r.dim_k1_1;
  return r;
}

#define QPLAB_INSTANTIATE(F)                                                                                   \
  template DenseMatrix<F> completion_matrix(const F&, int, const std::vector<std::vector<F::Elem>>&);          \
  template Variety<F> project_from_points(const Variety<F>&, const std::vector<std::vector<F::Elem>>&, bool);  \
  template PEIResult<F> partial_elimination_ideals(const Variety<F>&, const std::vector<F::Elem>&, int, int);  \
  template PeiIdentity pei_dimension_identity_check(const Variety<F>&, const std::vector<F::Elem>&);

QPLAB_INSTANTIATE(PrimeField)
QPLAB_INSTANTIATE(RationalField)

}  // namespace qplab
