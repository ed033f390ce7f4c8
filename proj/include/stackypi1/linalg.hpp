#ifndef STACKYPI1_LINALG_HPP
#define STACKYPI1_LINALG_HPP

// Exact linear algebra over a field (rref, kernels, subspace calculus) and
// over the integers (Smith and Hermite normal forms).  Subspaces of K^n are
// carried as n x d matrices whose columns form a basis.

#include <utility>
#include <vector>

#include "stackypi1/scalar.hpp"

namespace stackypi1::linalg {

template <typename Scalar>
struct Rref {
  Mat<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  Mat<S> a = input;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == S(0)) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == S(0)) continue;
      const S f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

/// Rank via fraction-free (Bareiss) elimination on the row-scaled integer
/// matrix; no rational is ever formed inside the elimination loop.
Eigen::Index rank(const MatrixQ& a);
Eigen::Index rank(const MatrixZ& a);

/// Basis of {x : a x = 0} as columns.
template <typename Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const auto r = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Eigen::Index n = a.cols();
  const Eigen::Index dim = n - static_cast<Eigen::Index>(r.pivots.size());
  Mat<S> basis = zeros<S>(n, dim);
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = S(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      basis(r.pivots[i], k) = -r.reduced(static_cast<Eigen::Index>(i), free);
    ++k;
  }
  return basis;
}

/// Independent subset of the columns of a spanning the same space.
template <typename Derived>
Mat<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const auto r = rref(a);
  Mat<S> basis(a.rows(), static_cast<Eigen::Index>(r.pivots.size()));
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    basis.col(static_cast<Eigen::Index>(k)) = a.col(r.pivots[k]);
  return basis;
}

template <typename S>
Mat<S> hcat(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out(a.rows(), a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

template <typename S>
Mat<S> vcat(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) out.topRows(a.rows()) = a;
  if (b.rows() > 0) out.bottomRows(b.rows()) = b;
  return out;
}

template <typename S>
Mat<S> span_sum(const Mat<S>& a, const Mat<S>& b) {
  return column_basis(hcat(a, b));
}

template <typename S>
Mat<S> intersect(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() == 0 || b.cols() == 0) return zeros<S>(a.rows(), 0);
  Mat<S> joined = hcat<S>(a, -b);
  Mat<S> ker = nullspace(joined);
  Mat<S> out = a * ker.topRows(a.cols());
  return column_basis(out);
}

/// {x in span(domain) : m x in span(target)}, as a basis.
template <typename S>
Mat<S> preimage(const Mat<S>& m, const Mat<S>& domain, const Mat<S>& target) {
  if (domain.cols() == 0) return zeros<S>(m.cols(), 0);
  Mat<S> image = m * domain;
  Mat<S> joined = hcat<S>(image, -target);
  Mat<S> ker = nullspace(joined);
  Mat<S> out = domain * ker.topRows(domain.cols());
  return column_basis(out);
}

template <typename S>
Mat<S> image(const Mat<S>& m, const Mat<S>& domain) {
  if (domain.cols() == 0) return zeros<S>(m.rows(), 0);
  return column_basis(Mat<S>(m * domain));
}

template <typename S>
bool contains(const Mat<S>& space, const Mat<S>& vectors) {
  if (vectors.cols() == 0) return true;
  return column_basis(hcat(space, vectors)).cols() == space.cols();
}

template <typename S>
Eigen::Index dim(const Mat<S>& space) { return space.cols(); }

/// Columns of `outer` completing a basis of `inner` (assumed inside `outer`)
/// to a basis of `outer`; the returned vectors represent outer / inner.
template <typename S>
Mat<S> complement(const Mat<S>& inner, const Mat<S>& outer) {
  Mat<S> joined = hcat(inner, outer);
  const auto r = rref(joined);
  std::vector<Eigen::Index> picked;
  for (auto p : r.pivots)
    if (p >= inner.cols()) picked.push_back(p);
  Mat<S> out(outer.rows(), static_cast<Eigen::Index>(picked.size()));
  for (std::size_t k = 0; k < picked.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = joined.col(picked[k]);
  return out;
}

/// Coordinates c with basis * c = v; basis must have independent columns and
/// v must lie in their span.
template <typename S>
Vec<S> coordinates(const Mat<S>& basis, const Vec<S>& v) {
  Mat<S> aug = hcat<S>(basis, Mat<S>(v));
  const auto r = rref(aug);
  Vec<S> c = Vec<S>::Zero(basis.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= basis.cols()) throw std::logic_error("coordinates: vector outside span");
    c(r.pivots[i]) = r.reduced(static_cast<Eigen::Index>(i), basis.cols());
  }
  return c;
}

template <typename S>
Mat<S> inverse(const Mat<S>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Eigen::Index n = a.rows();
  const auto r = rref(hcat<S>(a, identity<S>(n)));
  if (static_cast<Eigen::Index>(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] >= n))
    throw std::domain_error("inverse: matrix is singular");
  return r.reduced.rightCols(n);
}

// ---- integer lattices ------------------------------------------------------

struct SmithForm {
  std::vector<Integer> invariants;  // nonzero diagonal entries d1 | d2 | ...
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariants.size()); }
};

/// Invariant factors of an integer matrix (signs normalized to positive).
SmithForm smith_normal_form(const MatrixZ& a);

/// Row-style Hermite normal form: returns a matrix whose nonzero rows form
/// the echelon basis of the row lattice of a (positive pivots, entries above
/// each pivot reduced into [0, pivot)).
MatrixZ hermite_normal_form(const MatrixZ& a);

}  // namespace stackypi1::linalg

#endif  // STACKYPI1_LINALG_HPP
