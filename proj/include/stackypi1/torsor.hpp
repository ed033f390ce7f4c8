#ifndef STACKYPI1_TORSOR_HPP
#define STACKYPI1_TORSOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stackypi1/error.hpp"
#include "stackypi1/finite_group.hpp"
#include "stackypi1/local_system.hpp"
#include "stackypi1/simplicial.hpp"

namespace stackypi1 {

/// Descent datum with framings.  Transports on the spanning tree rooted at
/// the distinguished basepoint are the identity (the gauge slice), and
/// `framing` holds one G-element per basepoint, the first fixed to the
/// identity.
struct FramedTorsor {
  FiniteLocalSystem datum;
  std::vector<int> framing;
};

struct FramedEnumeration {
  std::vector<FramedTorsor> framed;       // canonical order
  std::uint64_t unframed_count = 0;       // gauge classes of data with the tree slice
  std::vector<std::string> warnings;
  std::string root;                       // vertex the tree is rooted at
  std::vector<std::string> tree_edges;
};

struct EnumerationOptions {
  int threads = 1;
  Budget* budget = nullptr;
};

/// All descent data (representations on X_0, transports on X_1) satisfying
/// the relator, intertwining and triangle-cocycle conditions, framed at the
/// simplicial basepoint.  Basepoint points may lie on levels 0..2; each
/// simplex is framed at its vertex 0.  Throws Disconnected, EmptyBasepoint,
/// BasepointMissing.
FramedEnumeration enumerate_framed(const SimplicialSpace& space, const SimplicialBasepoint& basepoint,
                                   const FiniteGroup& g, const EnumerationOptions& opt = {});

struct TorsorClass {
  FiniteLocalSystem representative;  // least element of its orbit
  std::uint64_t orbit_size = 0;      // in the framed set at a single vertex basepoint
  std::uint64_t automorphisms = 0;   // stabilizer order
};

struct TorsorClassification {
  std::vector<TorsorClass> classes;
  std::uint64_t framed_count = 0;
  std::uint64_t framing_group_order = 0;  // |G|
  Rational groupoid_cardinality;          // sum of 1 / |Aut|
  std::vector<std::string> warnings;
};

/// Isomorphism classes of G-torsors: orbits of the framing change on the
/// framed set at the least vertex.  Throws Disconnected.
TorsorClassification torsor_classes(const SimplicialSpace& space, const FiniteGroup& g,
                                    const EnumerationOptions& opt = {});

struct WeightClass {
  std::vector<std::size_t> members;  // indices into TorsorClassification::classes
  std::size_t representative = 0;
  /// Restriction to X_0: canonical conjugacy representative of each vertex
  /// representation, in vertex order.
  std::vector<std::vector<int>> restriction;
};

struct WeightEquivalence {
  TorsorClassification classification;
  std::vector<WeightClass> classes;
};

/// Partition of torsor classes by isomorphism class of the restriction to X_0.
WeightEquivalence weight_equivalence(const SimplicialSpace& space, const FiniteGroup& g,
                                     const EnumerationOptions& opt = {});

/// Least element of the orbit of a tuple under simultaneous conjugation.
std::vector<int> canonical_conjugate(const FiniteGroup& g, const std::vector<int>& tuple);

}  // namespace stackypi1

#endif  // STACKYPI1_TORSOR_HPP
