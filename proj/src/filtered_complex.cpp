#include "stackypi1/filtered_complex.hpp"

#include "stackypi1/error.hpp"
#include "stackypi1/linalg.hpp"

namespace stackypi1 {

Eigen::Index FilteredComplex::dim(int i) const {
  if (i < min_degree_ || i > max_degree()) return 0;
  return dims_[static_cast<std::size_t>(i - min_degree_)];
}

MatrixQ FilteredComplex::d(int i) const {
  if (i < min_degree_ || i >= max_degree()) return zeros<Rational>(dim(i + 1), dim(i));
  return d_[static_cast<std::size_t>(i - min_degree_)];
}

MatrixQ FilteredComplex::W(int i, int m) const {
  const Eigen::Index n = dim(i);
  if (n == 0 || m < min_weight_) return zeros<Rational>(n, 0);
  if (m >= max_weight_) return identity<Rational>(n);
  return W_[static_cast<std::size_t>(i - min_degree_)][static_cast<std::size_t>(m - min_weight_)];
}

void FilteredComplex::validate() const {
  if (min_weight_ > max_weight_)
    throw Error(ErrorKind::InvalidArgument, "weight bounds are reversed");
  for (int i = min_degree_; i < max_degree(); ++i) {
    const MatrixQ di = d(i);
    if (di.rows() != dim(i + 1) || di.cols() != dim(i))
      throw Error(ErrorKind::InvalidArgument, "differential in degree " + std::to_string(i) + " has shape " +
                                                  std::to_string(di.rows()) + "x" + std::to_string(di.cols()) +
                                                  ", expected " + std::to_string(dim(i + 1)) + "x" +
                                                  std::to_string(dim(i)));
  }
  for (int i = min_degree_; i + 1 < max_degree(); ++i)
    if (!is_zero(MatrixQ(d(i + 1) * d(i))))
      throw Error(ErrorKind::NotAComplex, "d o d is nonzero from degree " + std::to_string(i));
  for (int i = min_degree_; i <= max_degree(); ++i) {
    const auto& steps = W_[static_cast<std::size_t>(i - min_degree_)];
    for (int m = min_weight_; m <= max_weight_; ++m) {
      const MatrixQ& w = steps[static_cast<std::size_t>(m - min_weight_)];
      if (w.rows() != dim(i))
        throw Error(ErrorKind::InvalidArgument, "filtration step W_" + std::to_string(m) + " in degree " +
                                                    std::to_string(i) + " has vectors of the wrong length");
      if (m > min_weight_ && !linalg::contains(w, steps[static_cast<std::size_t>(m - 1 - min_weight_)]))
        throw Error(ErrorKind::NonExhaustive, "filtration is not increasing at W_" + std::to_string(m) +
                                                  " in degree " + std::to_string(i));
    }
    if (linalg::rank(steps.back()) != dim(i))
      throw Error(ErrorKind::NonExhaustive, "W_" + std::to_string(max_weight_) + " in degree " + std::to_string(i) +
                                                " is not the whole space (filtration must be exhaustive at the upper bound)");
    for (int m = min_weight_; m <= max_weight_; ++m) {
      const MatrixQ img = d(i) * W(i, m);
      if (!linalg::contains(W(i + 1, m), img))
        throw Error(ErrorKind::FiltrationNotPreserved, "d(W_" + std::to_string(m) + " F^" + std::to_string(i) +
                                                           ") is not contained in W_" + std::to_string(m) + " F^" +
                                                           std::to_string(i + 1));
    }
  }
}

FilteredComplex assemble_filtered_complex(int min_degree, std::vector<Eigen::Index> dims, std::vector<MatrixQ> d,
                                          int min_weight, int max_weight, std::vector<std::vector<MatrixQ>> W,
                                          std::map<Cell, int> slopes) {
  FilteredComplex fc;
  fc.min_degree_ = min_degree;
  fc.dims_ = std::move(dims);
  fc.d_ = std::move(d);
  fc.min_weight_ = min_weight;
  fc.max_weight_ = max_weight;
  for (auto& per_degree : W)
    for (auto& w : per_degree) w = linalg::column_basis(w);
  fc.W_ = std::move(W);
  fc.slopes_ = std::move(slopes);
  if (fc.W_.size() != fc.dims_.size())
    throw Error(ErrorKind::InvalidArgument, "filtration given for " + std::to_string(fc.W_.size()) + " degrees, complex has " +
                                                std::to_string(fc.dims_.size()));
  if (fc.d_.size() + 1 != fc.dims_.size() && !(fc.dims_.empty() && fc.d_.empty()))
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(fc.dims_.size() ? fc.dims_.size() - 1 : 0) +
                                                " differentials, got " + std::to_string(fc.d_.size()));
  fc.validate();
  return fc;
}

FilteredComplex build_filtered_complex(const RawFilteredComplex& raw) {
  const std::size_t n = raw.dims.size();
  if (raw.filtration.size() != n)
    throw Error(ErrorKind::InvalidArgument, "filtration lists " + std::to_string(raw.filtration.size()) +
                                                " degrees, complex has " + std::to_string(n));
  for (auto dval : raw.dims)
    if (dval < 0) throw Error(ErrorKind::InvalidArgument, "negative term dimension");
  std::vector<std::vector<MatrixQ>> W(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& steps = raw.filtration[i];
    for (const auto& [m, span] : steps) {
      if (m < raw.min_weight || m > raw.max_weight)
        throw Error(ErrorKind::NonExhaustive, "filtration step at weight " + std::to_string(m) + " in degree " +
                                                  std::to_string(raw.min_degree + static_cast<int>(i)) +
                                                  " lies outside the declared bounds [" + std::to_string(raw.min_weight) +
                                                  ", " + std::to_string(raw.max_weight) + "]");
      if (span.rows() != raw.dims[i] && span.cols() > 0)
        throw Error(ErrorKind::InvalidArgument, "filtration vectors in degree " +
                                                    std::to_string(raw.min_degree + static_cast<int>(i)) +
                                                    " have the wrong length");
    }
    for (int m = raw.min_weight; m <= raw.max_weight; ++m) {
      auto it = steps.upper_bound(m);
      if (it == steps.begin())
        W[i].push_back(zeros<Rational>(raw.dims[i], 0));
      else {
        --it;
        W[i].push_back(it->second.cols() == 0 ? zeros<Rational>(raw.dims[i], 0) : it->second);
      }
    }
  }
  return assemble_filtered_complex(raw.min_degree, raw.dims, raw.differentials, raw.min_weight, raw.max_weight,
                                   std::move(W), raw.slopes);
}

}  // namespace stackypi1
