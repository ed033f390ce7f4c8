#ifndef STACKYPI1_REALIZATION_HPP
#define STACKYPI1_REALIZATION_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackypi1/error.hpp"
#include "stackypi1/finite_group.hpp"
#include "stackypi1/presentation.hpp"
#include "stackypi1/simplicial.hpp"

namespace stackypi1 {

using Edge2 = std::array<int, 2>;       // sorted vertex pair
using Triangle2 = std::array<int, 3>;   // sorted vertex triple

/// Finite 2-dimensional simplicial complex on vertices 0..num_vertices-1.
/// Edges and triangles are kept sorted and duplicate-free.
struct SimplicialComplex2 {
  int num_vertices = 0;
  std::vector<Edge2> edges;
  std::vector<Triangle2> triangles;

  /// Index of an edge, or -1.
  int edge_index(int a, int b) const;
  int euler_characteristic() const {
    return num_vertices - static_cast<int>(edges.size()) + static_cast<int>(triangles.size());
  }
};

/// Sorts, deduplicates and adds the edges of every triangle.
SimplicialComplex2 make_complex(int num_vertices, std::vector<Edge2> edges, std::vector<Triangle2> triangles);

struct ComplexConditions {
  bool triangle_edges_present = true;
  bool vertices_in_edges = true;
  bool edges_in_triangles = true;
  bool triangles_connected = true;
  bool all() const { return triangle_edges_present && vertices_in_edges && edges_in_triangles && triangles_connected; }
};
ComplexConditions check_conditions(const SimplicialComplex2& a);

struct DualArc {
  int a = 0, b = 0;  // triangle indices, a < b
  int edge = 0;      // shared edge index
};

struct DualGraph {
  int nodes = 0;
  std::vector<DualArc> arcs;  // one per unordered pair of triangles sharing an edge, sorted
};
DualGraph dual_graph(const SimplicialComplex2& a);

/// Breadth-first spanning tree from triangle 0 (the lexicographically least),
/// as indices into the arc list.  Throws Disconnected if the dual graph is
/// not connected.
std::vector<int> maximal_tree(const DualGraph& g);

struct Unfolding {
  SimplicialComplex2 complex;
  std::vector<int> vertex_map;       // unfolded vertex -> vertex of A
  std::vector<int> triangle_origin;  // unfolded triangle -> triangle of A
};

/// Triangles of A glued only along the tree arcs.  Throws NotSpanningTree.
Unfolding unfold(const SimplicialComplex2& a, const DualGraph& g, const std::vector<int>& tree);

/// pi_1(|A|) as the free group on the edges of A_1 outside a spanning tree,
/// modulo the images of the fundamental cycles of the unfolded 1-skeleton.
/// Throws MapMismatch when the map is not simplicial.
GroupPresentation pushout_presentation(const SimplicialComplex2& a, const Unfolding& u);

/// Edge-path group of the complex computed through the simplicial-space
/// machinery (vertex 0 as basepoint).
GroupPresentation complex_pi1(const SimplicialComplex2& a);
SimplicialSpace complex_to_space(const SimplicialComplex2& a);

/// H_1 from the integral boundary matrices.
Abelianization homology_h1(const SimplicialComplex2& a);

struct RealizationStep {
  std::string kind;     // "generator-loop", "relator-disk", "fin", "bridge", "base-triangle"
  std::string detail;
  std::vector<int> triangles;  // triangles added by this step (indices in the final complex)
};

/// Presentation complex, triangulated, then repaired: fins put every edge in
/// a triangle and bridges join adjacency components.  Each fin and bridge is
/// a disk attached along an arc, so pi_1 is unchanged.
struct RealizedComplex {
  SimplicialComplex2 complex;
  std::vector<RealizationStep> steps;
  bool used_bridges = false;
};
RealizedComplex presentation_to_complex(const GroupPresentation& p);

struct LineConfiguration {
  /// Lines indexed like the graph's edges; points like its vertices.
  std::vector<Edge2> lines;
  std::vector<std::vector<int>> points;  // per vertex: indices of the lines through it
};
LineConfiguration line_configuration(const SimplicialComplex2& graph_of);

struct RealizationPlan {
  GroupPresentation input;
  RealizedComplex realized;
  DualGraph dual;
  std::vector<int> tree;
  Unfolding unfolding;
  GroupPresentation pushout;
  LineConfiguration Y;
  LineConfiguration Z;
  std::vector<int> z_to_y;  // line of Z -> line of Y
};
RealizationPlan realize(const GroupPresentation& p);

// ---- fingerprinting -------------------------------------------------------------

struct HomCount {
  std::string group;
  int order = 0;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
};

struct FingerprintResult {
  bool consistent = true;
  std::string reason;                 // empty when consistent
  std::optional<std::string> witness; // distinguishing group, if any
  Abelianization ab_first, ab_second;
  std::vector<HomCount> counts;       // up to and including the witness
};

/// Abelianizations and |Hom(P_i, G)| over the catalog groups of order
/// <= order_bound.  "consistent" is not a proof of isomorphism.
FingerprintResult fingerprint(const GroupPresentation& p1, const GroupPresentation& p2, int order_bound,
                              int threads = 1, Budget* budget = nullptr);

}  // namespace stackypi1

#endif  // STACKYPI1_REALIZATION_HPP
