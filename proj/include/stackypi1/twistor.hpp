#ifndef STACKYPI1_TWISTOR_HPP
#define STACKYPI1_TWISTOR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stackypi1/filtered_complex.hpp"
#include "stackypi1/local_system.hpp"
#include "stackypi1/simplicial.hpp"
#include "stackypi1/spectral.hpp"

namespace stackypi1 {

// Semistable bundles on the twistor line are modeled by slope tags on pure
// pieces: a cell (m, n) tagged s stands for H^n(Gr_m) (x) O(s).

enum class MixedKind { DMixed, BMixed, Neither };
std::string to_string(MixedKind k);

struct SlopeCell {
  int weight = 0;
  int degree = 0;
  Eigen::Index dimension = 0;
  int slope = 0;
};

struct Classification {
  MixedKind kind = MixedKind::Neither;
  bool d_mixed = false;  // slope = m + n on every nonzero E_1 cell
  bool b_mixed = false;  // slope = m on every nonzero E_1 cell
  std::vector<SlopeCell> cells;
  std::optional<SlopeCell> d_offender;
  std::optional<SlopeCell> b_offender;
};

/// Purity pattern of the slope tags over the nonzero E_1 cells.  When both
/// patterns hold (everything in degree 0) the kind is DMixed.
/// Throws MissingSlopeTag naming the first untagged nonzero cell.
Classification classify_mtc(const FilteredComplex& fc);

struct DegenerationCertificate {
  int from_page = 2;
  bool passed = true;
  int checked_through = 0;  // last page whose differentials were computed
  std::optional<PageDifferential> first_nonzero;
  /// Classification of the input, or nullopt when it carries no usable tags.
  std::optional<MixedKind> classified;
};

/// Verifies d_r = 0 for from_page <= r < bound_page(fc).
DegenerationCertificate check_degeneration(const FilteredComplex& fc, int from_page);
/// D-mixed: from E_2; B-mixed: from E_1.
DegenerationCertificate check_degeneration(const FilteredComplex& fc, MixedKind kind);

/// Three-step filtration with d_2 != 0, found by exhaustive search over small
/// complexes and frozen.
FilteredComplex d2_witness();

/// Weight-w concentrated complex with tags w + i in degree i.
FilteredComplex harmonic_complex(const std::vector<Eigen::Index>& dims, const std::vector<MatrixQ>& d, int w);

// ---- mixed twistor structures -----------------------------------------------------

struct MixedTwistorStructure {
  Eigen::Index dimension = 0;
  int min_weight = 0;
  int max_weight = 0;
  std::vector<MatrixQ> steps;        // W_m for m in [min_weight, max_weight]
  std::map<int, int> slopes;         // weight -> slope label of Gr_m (nonzero pieces)

  MatrixQ W(int m) const;
  std::map<int, Eigen::Index> graded() const;
};

/// Validates nesting, exhaustiveness and purity (Gr_m has slope m).
/// Throws ValidationFailed.
MixedTwistorStructure make_mts(Eigen::Index dimension, int min_weight, int max_weight, std::vector<MatrixQ> steps,
                               std::map<int, int> slopes);

struct GradedMapReport {
  int weight = 0;
  Eigen::Index source_dim = 0;
  Eigen::Index target_dim = 0;
  Eigen::Index rank = 0;
  bool injective = true;
  bool surjective = true;
};

struct MorphismReport {
  bool injective = false;
  bool surjective = false;
  bool strict = false;             // f(W_m) = f(V) ∩ W'_m for all m
  bool consequence_holds = true;   // injective => all Gr injective, same for surjective
  std::vector<GradedMapReport> graded;
};

/// f is target.dimension x source.dimension.  Throws NotFiltered when
/// f(W_m) is not inside W'_m.
MorphismReport mts_morphism_check(const MatrixQ& f, const MixedTwistorStructure& source,
                                  const MixedTwistorStructure& target);

// ---- cosimplicial totalization ------------------------------------------------------

struct CosimplicialFilteredComplex {
  std::vector<FilteredComplex> levels;
  /// cofaces[k][a][i - min_degree]: degree-i part of the a-th coface from
  /// level k to level k + 1 (k + 2 cofaces per level).
  std::vector<std::vector<std::vector<MatrixQ>>> cofaces;
};

/// Total complex with D = (-1)^k d + sum_a (-1)^a delta^a and filtration
/// W_m tot^j = (+)_{i+k=j} W_{m+k} G^i(k).  Slope tags are carried from the
/// levels and the output must classify as D-mixed.
/// Throws LevelNotDMixed, IncompatibleFaces.
FilteredComplex cosimplicial_total(const CosimplicialFilteredComplex& c);

/// Levels concentrated in degree 0 and weight w, tagged slope w.
CosimplicialFilteredComplex discrete_levels(const CosimplicialVectorSpace& v, int w);

struct WeightFiltrationResult {
  FilteredComplex total;
  std::vector<FilteredCohomology> induced;          // W on H^j, degrees 0..2
  std::vector<MixedTwistorStructure> structures;    // W^B_m H^j = W_{m-j} H^j
};

/// Weight filtration on total cohomology of a local system: each level is
/// concentrated in weight w; reports degrees 0..2.
WeightFiltrationResult weight_filtration_cohomology(const SimplicialSpace& space, const MatrixLocalSystem& system,
                                                    int w);

}  // namespace stackypi1

#endif  // STACKYPI1_TWISTOR_HPP
