#ifndef STACKYPI1_SPECTRAL_HPP
#define STACKYPI1_SPECTRAL_HPP

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "stackypi1/filtered_complex.hpp"

namespace stackypi1 {

// Indexing.  Internally a cell is (m, n): weight m, total degree n.  Reports
// also carry the usual bigrading (k, l) = (-m, n + m), so that
// E_1^{k,l} = H^{k+l}(Gr_{-k}) and d_r has bidegree (r, 1 - r).

struct PageCell {
  int weight = 0;
  int degree = 0;
  int k = 0;
  int l = 0;
  Eigen::Index dimension = 0;
};

struct PageDifferential {
  PageCell source;
  PageCell target;
  MatrixQ matrix;  // target.dimension x source.dimension
  bool zero = true;
};

struct PageReport {
  int r = 0;
  std::vector<PageCell> cells;               // nonzero cells, sorted by (degree, weight)
  std::vector<PageDifferential> differentials;  // between nonzero cells
  bool all_differentials_zero = true;
  /// True when E_r = E_infinity: every d_s with s >= r vanishes.
  bool stable = false;
  /// Sum over cells of total degree n.
  std::map<int, Eigen::Index> total_by_degree;
};

/// E_r page.  Cells are computed independently (on `threads` workers).
PageReport page(const FilteredComplex& fc, int r, int threads = 1);
/// Pages 0..r_stable, where r_stable is the first page equal to E_infinity.
std::vector<PageReport> pages(const FilteredComplex& fc, int threads = 1);
/// dim E_r at weight m, degree n.
Eigen::Index page_dimension(const FilteredComplex& fc, int r, int m, int n);
/// Smallest r for which d_s = 0 is forced for all s >= r by the weight bounds.
int bound_page(const FilteredComplex& fc);

/// Plain cohomology dimensions, degree -> dim H^n.
std::map<int, Eigen::Index> cohomology_dimensions(const FilteredComplex& fc);

/// The Dec filtration: W^B_m F^i = { x in W_{m-i} F^i : dx in W_{m-i-1} }.
/// Slope tags, if present, are transported from E_2 cells:
/// tag'(m, n) = tag(m - n, n).
FilteredComplex dec(const FilteredComplex& fc);

struct FilteredCohomology {
  int degree = 0;
  Eigen::Index dimension = 0;
  MatrixQ representatives;       // cocycles in F^degree, a basis of H
  int min_weight = 0;
  int max_weight = 0;
  std::vector<MatrixQ> steps;    // steps[m - min_weight]: W_m H in the coordinates of `representatives`
  std::map<int, Eigen::Index> graded;  // weight -> dim Gr_m H, nonzero only
};

/// Image filtration W_m H^i = im(H^i(W_m F) -> H^i(F)) for every degree.
std::vector<FilteredCohomology> induced_filtration(const FilteredComplex& fc);

/// Tensor product with d = d (x) 1 + (-1)^p 1 (x) d and the convolution
/// filtration.  Basis order: (a, b) lexicographic within each degree block,
/// blocks ordered by the degree of the left factor.
FilteredComplex tensor_product(const FilteredComplex& a, const FilteredComplex& b);

struct DecComparison {
  bool ok = true;
  /// Cells (m, n) of dec where dim E_1(dec) != dim E_2(fc) at (m - n, n).
  std::vector<std::pair<PageCell, Eigen::Index>> mismatches;
};
/// dim E_1^{k,l}(dec W) = dim E_2^{2k+l,-k}(W) over all cells.
DecComparison compare_dec_pages(const FilteredComplex& fc);

struct AcyclicityReport {
  bool acyclic = true;
  bool well_defined = true;
  bool sequence_exact = true;  // dim E_0(dec) = dim U + dim E_1(W) per cell
  Eigen::Index total_dimension = 0;
  std::vector<std::string> failures;
};
/// Builds, for every weight m of dec(fc), the complex
///   U^n = (W^B_m F^n ∩ (W_{m-n-1} F^n + d W_{m-n} F^{n-1})) / W^B_{m-1} F^n
/// (the kernel of E_0(W^B) -> E_1(W)) and checks it is exact.
AcyclicityReport check_u_acyclic(const FilteredComplex& fc);

// ---- random instances ---------------------------------------------------------

struct RandomComplexOptions {
  int degrees = 4;           // number of consecutive degrees starting at 0
  int max_dim = 6;           // per-degree dimension cap
  int min_weight = 0;
  int max_weight = 3;        // filtration length max_weight - min_weight + 1
  /// Allowed weight drops for two-term summands x -> y; 0 means an acyclic
  /// pair inside one graded piece.
  std::vector<int> drops = {0, 1, 2, 3};
  /// Chance that a new summand is a single vector with zero differential.
  double singleton_rate = 0.4;
  bool scramble = true;      // apply a random change of basis in each degree
};

/// Direct sum of elementary filtered complexes, twisted by filtered
/// automorphisms and (optionally) a general change of basis.  Every finite
/// filtered complex over a field is of this form.
FilteredComplex random_filtered_complex(std::mt19937_64& rng, const RandomComplexOptions& opt = {});

/// Random D-mixed complex: elementaries with weight drop 0 or 1 only, all
/// cells tagged slope m + n.
FilteredComplex random_d_mixed(std::mt19937_64& rng, RandomComplexOptions opt = {});
/// Random B-mixed complex: weight drop 0 only, all cells tagged slope m.
FilteredComplex random_b_mixed(std::mt19937_64& rng, RandomComplexOptions opt = {});

/// Tags every cell in range: D pattern (m + n) or B pattern (m).
void tag_all_cells(FilteredComplex& fc, bool deligne);

}  // namespace stackypi1

#endif  // STACKYPI1_SPECTRAL_HPP
