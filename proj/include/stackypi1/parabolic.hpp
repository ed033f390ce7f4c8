#ifndef STACKYPI1_PARABOLIC_HPP
#define STACKYPI1_PARABOLIC_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stackypi1/scalar.hpp"

namespace stackypi1 {

/// One graded piece gr_alpha of the parabolic structure along a divisor.
struct WeightPiece {
  Rational alpha;                  // in (-1, 0]
  int multiplicity = 0;
  std::vector<Rational> residues;  // eigenvalues of res(nabla) on gr_alpha, one per dimension
};

struct ParabolicDivisor {
  int n = 1;  // root multiplicity
  std::vector<WeightPiece> pieces;
};

struct ParabolicDescriptor {
  int rank = 0;
  Integer degree;
  Rational lambda;
  std::vector<ParabolicDivisor> divisors;
};

/// Throws InvalidArgument unless weights lie in (-1,0], multiplicities are
/// positive and sum to the rank on every divisor, and each residue list has
/// one entry per dimension.
void check_well_formed(const ParabolicDescriptor& p);

/// Bundle on the root stack: along each divisor, the mu_n-character j of each
/// isotypic piece (alpha = -j/n) and the scalar residue.
struct RootStackPiece {
  int character = 0;  // j in 0..n-1
  int multiplicity = 0;
  Rational residue;
};

struct RootStackDivisor {
  int n = 1;
  std::vector<RootStackPiece> pieces;
};

struct RootStackDescriptor {
  int rank = 0;
  Integer degree;
  Rational lambda;
  std::vector<RootStackDivisor> divisors;
};

struct ParabolicViolation {
  std::size_t divisor = 0;
  std::size_t piece = 0;
  int eigenvalue = -1;  // index into the residue list, -1 for weight violations
  std::string message;
};

struct TranslationResult {
  bool valid = false;
  std::optional<RootStackDescriptor> root;
  std::vector<ParabolicViolation> violations;
};

/// Weights must lie in (1/n)Z and residues on gr_alpha must all equal
/// lambda * alpha.  Violations are returned, not thrown.
TranslationResult parabolic_translate(const ParabolicDescriptor& p);

/// Inverse direction: alpha = -j/n, residue list constant.
ParabolicDescriptor to_parabolic(const RootStackDescriptor& r);

/// degree + sum over divisors and pieces of alpha * multiplicity.
Rational parabolic_degree(const ParabolicDescriptor& p);

bool operator==(const WeightPiece& a, const WeightPiece& b);
bool operator==(const ParabolicDivisor& a, const ParabolicDivisor& b);
bool operator==(const ParabolicDescriptor& a, const ParabolicDescriptor& b);

/// Random descriptor satisfying the residue rule (rank <= 4, <= 3 divisors, n <= 6).
ParabolicDescriptor random_valid_descriptor(std::mt19937_64& rng);

}  // namespace stackypi1

#endif  // STACKYPI1_PARABOLIC_HPP
