#include "stackypi1/error.hpp"

namespace stackypi1 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::NonSplit: return "NonSplit";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BasepointMissing: return "BasepointMissing";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::MissingTransport: return "MissingTransport";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::EmptyBasepoint: return "EmptyBasepoint";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::NotSpanningTree: return "NotSpanningTree";
    case ErrorKind::MapMismatch: return "MapMismatch";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::FiltrationNotPreserved: return "FiltrationNotPreserved";
    case ErrorKind::NonExhaustive: return "NonExhaustive";
    case ErrorKind::MissingSlopeTag: return "MissingSlopeTag";
    case ErrorKind::NotFiltered: return "NotFiltered";
    case ErrorKind::LevelNotDMixed: return "LevelNotDMixed";
    case ErrorKind::IncompatibleFaces: return "IncompatibleFaces";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace stackypi1
