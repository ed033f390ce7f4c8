#include "stackypi1/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace stackypi1 {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: " + s);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(num, den);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

namespace linalg {

namespace {

Eigen::Index bareiss_rank(MatrixZ a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Eigen::Index rank(const MatrixZ& a) { return bareiss_rank(a); }

Eigen::Index rank(const MatrixQ& a) {
  MatrixZ z(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) l = boost::multiprecision::lcm(l, denominator_of(a(i, j)));
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      z(i, j) = numerator_of(a(i, j)) * (l / denominator_of(a(i, j)));
  }
  return bareiss_rank(std::move(z));
}

SmithForm smith_normal_form(const MatrixZ& input) {
  MatrixZ a = input;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the trailing block
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) { pi = i; pj = j; }
    if (pi < 0) break;
    a.row(pi).swap(a.row(t));
    a.col(pj).swap(a.col(t));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) {
          a.row(i).swap(a.row(t));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) {
          a.col(j).swap(a.col(t));
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: the pivot must divide every trailing entry
      for (Eigen::Index i = t + 1; i < rows && clean; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            clean = false;
            break;
          }
    }
    ++t;
  }
  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  for (Eigen::Index i = 0; i < std::min(rows, cols); ++i)
    if (a(i, i) != 0) out.invariants.push_back(abs(a(i, i)));
  std::sort(out.invariants.begin(), out.invariants.end());
  return out;
}

MatrixZ hermite_normal_form(const MatrixZ& input) {
  MatrixZ a = input;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c below row r into row r
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best < 0 || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best < 0) break;
      a.row(best).swap(a.row(r));
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        const Integer q = a(i, c) / a(r, c);
        a.row(i) -= q * a.row(r);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.row(r) = -a.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = a(i, c) / a(r, c);
      if (a(i, c) - q * a(r, c) < 0) q -= 1;
      a.row(i) -= q * a.row(r);
    }
    ++r;
  }
  return a.topRows(r);
}

}  // namespace linalg
}  // namespace stackypi1
