#ifndef STACKYPI1_SIMPLICIAL_HPP
#define STACKYPI1_SIMPLICIAL_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stackypi1/presentation.hpp"

namespace stackypi1 {

constexpr int kTopLevel = 3;

// ---- raw input -------------------------------------------------------------

struct RawComponent {
  std::string id;
  GroupPresentation group;
};

/// Face i of a nondegenerate component at `level`.  `target` names a
/// component one level down, either nondegenerate or in degenerate notation
/// "s<J>(<id>)"; `images` are words in the target's generators, one per
/// generator of the source group.
struct RawFace {
  int level = 1;
  std::string source;
  int index = 0;
  std::string target;
  std::vector<Word> images;
};

struct RawDegeneracy {
  int level = 0;
  std::string source;
  int index = 0;
  std::string target;
};

struct RawSpace {
  std::array<std::vector<RawComponent>, kTopLevel + 1> levels;
  std::vector<RawFace> faces;
  std::vector<RawDegeneracy> degeneracies;  // must be empty; closure is synthesized
};

// ---- validated space -------------------------------------------------------

/// Component map plus group homomorphism (generator images as words).
struct ComponentMap {
  int target = -1;  // index in the adjacent level
  std::vector<Word> images;
};

struct Component {
  std::string id;
  GroupPresentation group;
  bool nondegenerate = true;
  /// Degenerate components are sigma^*(base) for a monotone surjection
  /// sigma: [k] -> [p], p < k, and a nondegenerate base at level p.
  std::vector<int> sigma;
  int base_level = 0;
  int base = -1;
  std::vector<ComponentMap> faces;         // k+1 entries for k >= 1
  std::vector<ComponentMap> degeneracies;  // k+1 entries for k < kTopLevel
};

class SimplicialSpace {
 public:
  const std::vector<Component>& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const Component& component(int k, int i) const { return level(k).at(static_cast<std::size_t>(i)); }
  /// Index of the component with this id at level k, or -1.
  int find(int k, const std::string& id) const;
  std::vector<int> nondegenerate(int k) const;
  std::array<std::size_t, kTopLevel + 1> nondegenerate_counts() const;
  /// Word-problem checks that neither free reduction nor bounded coset
  /// enumeration could settle.
  const std::vector<std::string>& unverified() const { return unverified_; }
  /// Vertex i of a component (image of i under the iterated faces), as a
  /// level-0 index.
  int vertex(int k, int c, int i) const;
  /// Edge (i, j), i < j, of a level-k component, as a level-1 index.
  int edge(int k, int c, int i, int j) const;

 private:
  friend SimplicialSpace build_space(const RawSpace& raw);
  std::array<std::vector<Component>, kTopLevel + 1> levels_;
  std::vector<std::string> unverified_;
};

/// Validates the raw data, synthesizes the degenerate closure and checks all
/// simplicial identities (components and group homomorphisms) up to level 3.
SimplicialSpace build_space(const RawSpace& raw);

/// Name of the degenerate simplex sigma^*(base).
std::string degenerate_name(const std::vector<int>& sigma, const std::string& base);

struct SimplicialBasepoint {
  std::vector<std::pair<int, std::string>> points;  // (level, component id)
};

/// Connected components of the realization, as sorted lists of level-0 ids.
std::vector<std::vector<std::string>> pi0(const SimplicialSpace& space);

/// Edge-path presentation of pi_1 at a level-0 basepoint, before and after
/// the Tietze post-pass.
GroupPresentation pi1_presentation_raw(const SimplicialSpace& space, const std::string& basepoint);
GroupPresentation pi1_presentation(const SimplicialSpace& space, const std::string& basepoint);

/// Edge-path presentation of the connected component containing `root`:
/// generators are the component-group generators of its vertices (vertex
/// index order) followed by its nondegenerate edges.  `vertex_offset[v]` is
/// the generator offset of vertex v (-1 outside the component) and
/// `edge_generator[e]` the 1-based generator of edge e (0 if degenerate or
/// outside).
struct EdgePathPresentation {
  GroupPresentation presentation;
  std::vector<int> vertex_offset;
  std::vector<int> edge_generator;
  std::vector<int> tree_edges;
};
EdgePathPresentation edge_path_presentation(const SimplicialSpace& space, const std::string& root);

/// Spanning forest of the 1-skeleton: nondegenerate edges chosen by BFS
/// from each level-0 component in id order.  Returns level-1 indices.
std::vector<int> spanning_tree_edges(const SimplicialSpace& space, const std::string& root);

// ---- sample spaces -----------------------------------------------------------

namespace spaces {
RawSpace boundary_triangle();
RawSpace full_triangle();
RawSpace circle();
RawSpace coordinate_planes();
RawSpace pyramid();
/// A space with trivial groups: vertices v0..v{n-1}, the given edges
/// (source, target) and triangles as (d0, d1, d2) edge indices, where a
/// negative entry -v-1 stands for the degenerate edge at vertex v.
RawSpace from_simplices(int vertices, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::array<int, 3>>& triangles);
}  // namespace spaces

}  // namespace stackypi1

#endif  // STACKYPI1_SIMPLICIAL_HPP
