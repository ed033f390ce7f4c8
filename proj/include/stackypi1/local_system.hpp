#ifndef STACKYPI1_LOCAL_SYSTEM_HPP
#define STACKYPI1_LOCAL_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stackypi1/finite_group.hpp"
#include "stackypi1/scalar.hpp"
#include "stackypi1/simplicial.hpp"

namespace stackypi1 {

/// Coefficient data on a simplicial space.  Representations are given on
/// level-0 components (one element per generator); transports on
/// nondegenerate edges.  The transport at an edge e is the isomorphism from
/// the fiber at d0(e) to the fiber at d1(e).  Degenerate edges carry the
/// identity; an explicit entry for one is accepted only if it is the
/// identity.
template <typename Element>
struct LocalSystemData {
  std::map<std::string, std::vector<Element>> representation;
  std::map<std::string, Element> transport;
};

struct FiniteLocalSystem : LocalSystemData<int> {
  FiniteGroup group;
};

struct MatrixLocalSystem : LocalSystemData<MatrixQ> {
  int dimension = 1;
};

using LocalSystem = std::variant<FiniteLocalSystem, MatrixLocalSystem>;

struct TriangleCheck {
  std::string simplex;
  bool ok = true;
};

struct LocalSystemReport {
  bool ok = true;
  bool relators_ok = true;
  bool degeneracy_unit_ok = true;
  bool conjugation_ok = true;
  bool cocycle_ok = true;
  std::vector<TriangleCheck> triangles;
  std::vector<std::string> failures;
};

/// Validates a local system: relators, degeneracy unit, conjugation
/// compatibility and the cocycle condition on every nondegenerate 2-simplex.
/// Throws StructureMismatch for elements outside the structure group and
/// MissingTransport for absent data.
LocalSystemReport check_local_system(const SimplicialSpace& space, const LocalSystem& system);

/// Monodromy phi(d2) phi(d0) phi(d1)^-1 around a 2-simplex, in the fiber at
/// its vertex 0.
int triangle_monodromy(const SimplicialSpace& space, const FiniteLocalSystem& system, int simplex);
MatrixQ triangle_monodromy(const SimplicialSpace& space, const MatrixLocalSystem& system, int simplex);

struct CohomologyDegree {
  int degree = 0;
  bool computed = true;
  Eigen::Index dimension = 0;
  MatrixQ cocycles;  // columns: representatives of a basis of H^degree
  std::string note;
};

struct CohomologyResult {
  std::string model;  // "cochain" or "presentation"
  std::vector<Eigen::Index> term_dimensions;
  std::vector<CohomologyDegree> degrees;
};

/// Cohomology with coefficients in a matrix local system.  When every
/// component group is trivial, uses the normalized cochain complex
/// C^j = (+) fibers over nondegenerate j-simplices and reports degrees
/// 0..max_degree (max_degree <= 2).  Otherwise H^0 and H^1 come from the
/// edge-path presentation via Fox calculus and higher degrees are marked
/// not computed.
CohomologyResult cohomology(const SimplicialSpace& space, const MatrixLocalSystem& system, int max_degree = 2);

/// Trivial rank-n system (identity representations and transports).
MatrixLocalSystem trivial_matrix_system(const SimplicialSpace& space, int dimension = 1);
FiniteLocalSystem trivial_finite_system(const SimplicialSpace& space, const FiniteGroup& group);

/// Fiber dimension at each unnormalized level-k component and coface maps
/// (f o d_a, transported along edge 01 for a = 0), as used by the weight
/// filtration on total cohomology.
struct CosimplicialVectorSpace {
  std::vector<Eigen::Index> dims;                 // per level 0..3
  std::vector<std::vector<MatrixQ>> cofaces;      // cofaces[k][a]: level k -> level k+1
};
CosimplicialVectorSpace cochain_cosimplicial(const SimplicialSpace& space, const MatrixLocalSystem& system);

}  // namespace stackypi1

#endif  // STACKYPI1_LOCAL_SYSTEM_HPP
