#ifndef STACKYPI1_SCALAR_HPP
#define STACKYPI1_SCALAR_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace stackypi1 {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Mat<Rational>;
using VectorQ = Vec<Rational>;
using MatrixZ = Mat<Integer>;
using VectorZ = Vec<Integer>;

/// Parses "p", "-p" or "p/q" (decimal, arbitrary precision). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != S(0)) return false;
  return true;
}

template <typename Scalar>
Mat<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  Mat<Scalar> m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Scalar(0);
  return m;
}

template <typename Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  Mat<Scalar> m = zeros<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

}  // namespace stackypi1

#endif  // STACKYPI1_SCALAR_HPP
