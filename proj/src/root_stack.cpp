#include "stackypi1/root_stack.hpp"

#include <map>

#include "stackypi1/linalg.hpp"

namespace stackypi1 {

const char* to_string(LiftVerdict v) {
  switch (v) {
    case LiftVerdict::NoLift: return "no_lift";
    case LiftVerdict::Lifts: return "lifts";
    case LiftVerdict::Etale: return "etale";
  }
  return "?";
}

RootLiftResult root_lift_check(const LocalMonodromyDatum& d) {
  const auto& phi = d.phi;
  const std::size_t r = d.elements.size();
  if (d.roots.size() != r)
    throw Error(ErrorKind::InvalidArgument, "got " + std::to_string(r) + " elements but " +
                                                std::to_string(d.roots.size()) + " root multiplicities");
  for (std::size_t i = 0; i < r; ++i) {
    if (d.elements[i] < 0 || d.elements[i] >= phi.order())
      throw Error(ErrorKind::InvalidArgument, "element index out of range", "/elements/" + std::to_string(i));
    if (d.roots[i] < 1) throw Error(ErrorKind::InvalidArgument, "root multiplicity must be positive", "/roots/" + std::to_string(i));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (phi.mul(d.elements[i], d.elements[j]) != phi.mul(d.elements[j], d.elements[i]))
        throw Error(ErrorKind::NonCommuting, "g" + std::to_string(i + 1) + " and g" + std::to_string(j + 1) +
                                                 " do not commute");

  // Relations of A = <g_1..g_r>, built one generator at a time: the order of
  // g_{k+1} modulo A_k and the expression of that power inside A_k.
  std::map<int, std::vector<long long>> expr{{phi.identity(), std::vector<long long>(r, 0)}};
  std::vector<std::vector<long long>> relations;
  for (std::size_t k = 0; k < r; ++k) {
    const int g = d.elements[k];
    long long m = 1;
    int power = g;
    while (!expr.count(power)) {
      power = phi.mul(power, g);
      ++m;
    }
    std::vector<long long> rel = expr.at(power);
    for (auto& x : rel) x = -x;
    rel[k] += m;
    relations.push_back(rel);
    // A_{k+1} = union of g^j A_k, 0 <= j < m
    std::map<int, std::vector<long long>> grown = expr;
    int gj = phi.identity();
    for (long long j = 1; j < m; ++j) {
      gj = phi.mul(gj, g);
      for (const auto& [a, v] : expr) {
        auto w = v;
        w[k] += j;
        grown.emplace(phi.mul(gj, a), std::move(w));
      }
    }
    expr = std::move(grown);
  }

  RootLiftResult out;
  MatrixZ rel = zeros<Integer>(static_cast<Eigen::Index>(relations.size()), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < relations.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) rel(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = relations[i][j];
  out.kernel_basis = linalg::hermite_normal_form(rel);
  const auto snf = linalg::smith_normal_form(out.kernel_basis);
  out.subgroup_order = 1;
  for (const auto& x : snf.invariants) {
    out.subgroup_order *= x;
    if (x > 1) out.invariants.push_back(x);
  }
  if (snf.rank() != static_cast<Eigen::Index>(r))
    throw Error(ErrorKind::InvalidArgument, "kernel lattice is not of full rank");
  if (out.subgroup_order != Integer(static_cast<long long>(expr.size())))
    throw Error(ErrorKind::ValidationFailed, "kernel index disagrees with the subgroup order");

  out.contained = true;
  for (Eigen::Index i = 0; i < out.kernel_basis.rows() && out.contained; ++i)
    for (Eigen::Index j = 0; j < out.kernel_basis.cols(); ++j)
      if (out.kernel_basis(i, j) % d.roots[static_cast<std::size_t>(j)] != 0) {
        out.contained = false;
        out.offending_row = static_cast<int>(i);
        out.offending_column = static_cast<int>(j);
        break;
      }
  Integer box = 1;
  for (int n : d.roots) box *= n;
  if (!out.contained) out.verdict = LiftVerdict::NoLift;
  else out.verdict = out.subgroup_order == box ? LiftVerdict::Etale : LiftVerdict::Lifts;
  return out;
}

}  // namespace stackypi1
