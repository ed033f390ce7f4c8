#ifndef STACKYPI1_ERROR_HPP
#define STACKYPI1_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stackypi1 {

enum class ErrorKind {
  // simplicial-core
  IdentityViolation,
  DanglingReference,
  NonSplit,
  Disconnected,
  BasepointMissing,
  // local-coefficients
  StructureMismatch,
  MissingTransport,
  ValidationFailed,
  UnsupportedDegree,
  // torsor-enumeration
  EmptyBasepoint,
  DegenerateSimplex,
  // pi1-realization
  NotSpanningTree,
  MapMismatch,
  // spectral-twistor
  NotAComplex,
  FiltrationNotPreserved,
  NonExhaustive,
  MissingSlopeTag,
  NotFiltered,
  LevelNotDMixed,
  IncompatibleFaces,
  // stack-group-calculators
  NonCommuting,
  NotAnAction,
  NotSurjective,
  // shared
  InvalidGroup,
  InvalidArgument,
  BudgetExceeded,
  // cli
  SchemaError,
  UnknownCommand,
};

const char* to_string(ErrorKind kind);

/// Domain error carrying a machine-readable kind.  `where` holds a JSON
/// pointer for schema errors and a free-form location otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string where = {})
      : std::runtime_error(message), kind_(kind), where_(std::move(where)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& where() const noexcept { return where_; }

 private:
  ErrorKind kind_;
  std::string where_;
};

/// Caps on potentially exponential work.  `charge` counts enumeration states.
struct Budget {
  std::uint64_t max_states = 200'000'000;
  std::int64_t max_matrix_dim = 4096;
  std::uint64_t used = 0;

  void charge(std::uint64_t states = 1) {
    used += states;
    if (used > max_states)
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration budget of " + std::to_string(max_states) + " states exceeded");
  }
  void check_dim(std::int64_t dim) const {
    if (dim > max_matrix_dim)
      throw Error(ErrorKind::BudgetExceeded,
                  "matrix dimension " + std::to_string(dim) + " exceeds budget " +
                      std::to_string(max_matrix_dim));
  }
};

}  // namespace stackypi1

#endif  // STACKYPI1_ERROR_HPP
