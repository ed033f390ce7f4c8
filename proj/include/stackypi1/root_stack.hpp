#ifndef STACKYPI1_ROOT_STACK_HPP
#define STACKYPI1_ROOT_STACK_HPP

#include <string>
#include <vector>

#include "stackypi1/finite_group.hpp"
#include "stackypi1/scalar.hpp"

namespace stackypi1 {

/// Local monodromy Z^r -> Phi, e_i |-> g_i, with root multiplicities n_i.
struct LocalMonodromyDatum {
  FiniteGroup phi;
  std::vector<int> elements;
  std::vector<int> roots;
};

enum class LiftVerdict { NoLift, Lifts, Etale };
const char* to_string(LiftVerdict v);

struct RootLiftResult {
  LiftVerdict verdict = LiftVerdict::NoLift;
  MatrixZ kernel_basis;                 // Hermite basis of K, one row per vector
  std::vector<Integer> invariants;      // Smith invariants of Z^r / K (the subgroup <g_i>)
  Integer subgroup_order;               // |<g_i>| = [Z^r : K]
  bool contained = false;               // K inside (+) n_i Z
  /// Coordinate (row, column) of the first kernel entry not divisible by n_column.
  int offending_row = -1, offending_column = -1;
};

/// Throws NonCommuting, InvalidArgument.
RootLiftResult root_lift_check(const LocalMonodromyDatum& datum);

}  // namespace stackypi1

#endif  // STACKYPI1_ROOT_STACK_HPP
