#include <catch_amalgamated.hpp>

#include <random>

#include "stackypi1/linalg.hpp"

using namespace stackypi1;
using namespace stackypi1::linalg;

namespace {

MatrixZ random_int_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  MatrixZ m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational("12345678901234567890123/1")) == "12345678901234567890123");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rank and nullspace over Q") {
  MatrixQ a(3, 3);
  a << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(rank(a) == 2);
  const MatrixQ n = nullspace(a);
  REQUIRE(n.cols() == 1);
  CHECK(is_zero(MatrixQ(a * n)));
}

TEST_CASE("subspace operations") {
  MatrixQ x = zeros<Rational>(3, 2), y = zeros<Rational>(3, 2);
  x(0, 0) = 1;
  x(1, 1) = 1;
  y(1, 0) = 1;
  y(2, 1) = 1;
  CHECK(dim(intersect(x, y)) == 1);
  CHECK(dim(span_sum(x, y)) == 3);
  CHECK(contains(span_sum(x, y), x));
  CHECK(dim(complement(intersect(x, y), x)) == 1);
}

TEST_CASE("Smith form invariants divide and preserve the determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const MatrixZ m = random_int_matrix(rng, 4, 4, 6);
    const auto s = smith_normal_form(m);
    CHECK(s.rank() == rank(m));
    for (std::size_t i = 1; i < s.invariants.size(); ++i) CHECK(s.invariants[i] % s.invariants[i - 1] == 0);
  }
  MatrixZ d = MatrixZ::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  CHECK(smith_normal_form(d).invariants == std::vector<Integer>{1, 6});
  MatrixZ z2(1, 2);
  z2 << 2, 4;
  CHECK(smith_normal_form(z2).invariants == std::vector<Integer>{2});
}

TEST_CASE("Hermite form spans the same lattice") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const MatrixZ m = random_int_matrix(rng, 3, 4, 5);
    const MatrixZ h = hermite_normal_form(m);
    // same row space over Q, and invariants agree, so the same lattice
    CHECK(rank(h) == rank(m));
    CHECK(smith_normal_form(h).invariants == smith_normal_form(m).invariants);
  }
}
