#ifndef STACKYPI1_FILTERED_COMPLEX_HPP
#define STACKYPI1_FILTERED_COMPLEX_HPP

#include <map>
#include <utility>
#include <vector>

#include "stackypi1/scalar.hpp"

namespace stackypi1 {

/// Weight/degree key (m, i) for slope tags: the slope carried by
/// H^i(W_m / W_{m-1}).
using Cell = std::pair<int, int>;

/// Input form: explicit filtration steps per degree.  W_m F^i is the span of
/// the step with the largest declared weight <= m (zero below the first
/// step).  Weights outside [min_weight, max_weight] are rejected.
struct RawFilteredComplex {
  int min_degree = 0;
  std::vector<Eigen::Index> dims;
  std::vector<MatrixQ> differentials;  // d^i : F^i -> F^{i+1}, dims.size() - 1 entries
  int min_weight = 0;
  int max_weight = 0;
  std::vector<std::map<int, MatrixQ>> filtration;  // per degree: weight -> spanning columns
  std::map<Cell, int> slopes;
};

/// Finite cochain complex of exact-rational spaces with a bounded increasing
/// filtration: W_{min_weight-1} = 0 and W_{max_weight} = everything.
class FilteredComplex {
 public:
  FilteredComplex() = default;

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
  int num_degrees() const { return static_cast<int>(dims_.size()); }
  int min_weight() const { return min_weight_; }
  int max_weight() const { return max_weight_; }

  /// Dimension of F^i (zero outside the degree range).
  Eigen::Index dim(int i) const;
  /// d^i : F^i -> F^{i+1} (an empty-shaped matrix at the ends).
  MatrixQ d(int i) const;
  /// Basis of W_m F^i as columns of a dim(i)-row matrix.
  MatrixQ W(int i, int m) const;

  const std::map<Cell, int>& slopes() const { return slopes_; }
  void set_slopes(std::map<Cell, int> s) { slopes_ = std::move(s); }

  friend FilteredComplex build_filtered_complex(const RawFilteredComplex& raw);
  /// Trusted assembly for derived complexes; validated like raw input.
  friend FilteredComplex assemble_filtered_complex(int min_degree, std::vector<Eigen::Index> dims,
                                                   std::vector<MatrixQ> d, int min_weight, int max_weight,
                                                   std::vector<std::vector<MatrixQ>> W, std::map<Cell, int> slopes);

 private:
  void validate() const;
  int min_degree_ = 0;
  std::vector<Eigen::Index> dims_;
  std::vector<MatrixQ> d_;                   // d_[i - min_degree]
  int min_weight_ = 0;
  int max_weight_ = 0;
  std::vector<std::vector<MatrixQ>> W_;      // W_[i - min_degree][m - min_weight]
  std::map<Cell, int> slopes_;
};

/// Validates shapes, d o d = 0, nesting, exhaustiveness and compatibility of
/// d with the filtration.  Errors: NotAComplex, NonExhaustive,
/// FiltrationNotPreserved, InvalidArgument (shapes).
FilteredComplex build_filtered_complex(const RawFilteredComplex& raw);

FilteredComplex assemble_filtered_complex(int min_degree, std::vector<Eigen::Index> dims, std::vector<MatrixQ> d,
                                          int min_weight, int max_weight, std::vector<std::vector<MatrixQ>> W,
                                          std::map<Cell, int> slopes = {});

}  // namespace stackypi1

#endif  // STACKYPI1_FILTERED_COMPLEX_HPP
