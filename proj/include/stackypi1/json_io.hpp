#ifndef STACKYPI1_JSON_IO_HPP
#define STACKYPI1_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stackypi1/filtered_complex.hpp"
#include "stackypi1/finite_group.hpp"
#include "stackypi1/local_system.hpp"
#include "stackypi1/parabolic.hpp"
#include "stackypi1/presentation.hpp"
#include "stackypi1/realization.hpp"
#include "stackypi1/root_stack.hpp"
#include "stackypi1/simplicial.hpp"
#include "stackypi1/spectral.hpp"
#include "stackypi1/torsor.hpp"
#include "stackypi1/twistor.hpp"
#include "stackypi1/wreath.hpp"

namespace stackypi1::json_io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "stackypi1/1";

/// Parses text; malformed JSON is a SchemaError at "" (the document root).
Json parse_text(const std::string& text);
/// Throws SchemaError unless "format" equals kFormat.
void check_format(const Json& j);

// ---- scalars (integers accept numbers or decimal strings) ---------------------

int read_int(const Json& j, const std::string& ptr);
Integer read_integer(const Json& j, const std::string& ptr);
Rational read_rational(const Json& j, const std::string& ptr);
Word read_word(const Json& j, const std::string& ptr);
/// Array of rows of rationals, or {"rows": r, "cols": c, "entries": [...]}
/// (required when a dimension is zero).
MatrixQ read_matrix(const Json& j, const std::string& ptr);

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const MatrixQ& m);
Json to_json(const MatrixZ& m);
Json word_json(const Word& w);

// ---- inputs -------------------------------------------------------------------

GroupPresentation read_presentation(const Json& j, const std::string& ptr = "");
struct SpaceInput {
  RawSpace raw;
  std::optional<SimplicialBasepoint> basepoint;
};
SpaceInput read_space(const Json& j);
FiniteGroup read_group(const Json& j, const std::string& ptr = "");
LocalSystem read_local_system(const Json& j);
RawFilteredComplex read_filtered_complex(const Json& j);
ParabolicDescriptor read_parabolic(const Json& j);
/// {"kind": "trivial"} or {"maps": [[...] per element of Phi]}.
GroupAction read_action(const Json& j, const FiniteGroup& g, const FiniteGroup& phi, const std::string& ptr = "");

// ---- outputs ------------------------------------------------------------------

Json to_json(const GroupPresentation& p);
Json to_json(const Abelianization& a);
Json to_json(const FiniteGroup& g);
Json space_json(const RawSpace& raw);
Json space_summary(const SimplicialSpace& s);
Json to_json(const LocalSystemReport& r);
Json to_json(const CohomologyResult& r);
Json to_json(const FiniteLocalSystem& s);
Json to_json(const FramedEnumeration& e, bool list_objects);
Json to_json(const TorsorClassification& c);
Json to_json(const WeightEquivalence& w);
Json to_json(const SimplicialComplex2& a);
Json to_json(const RealizationPlan& p);
Json to_json(const FingerprintResult& f);
Json to_json(const PageReport& p);
Json filtered_complex_json(const FilteredComplex& fc);
Json to_json(const Classification& c);
Json to_json(const DegenerationCertificate& c);
Json to_json(const MixedTwistorStructure& m);
Json to_json(const FilteredCohomology& h);
Json to_json(const RootLiftResult& r);
Json to_json(const ParabolicDescriptor& p);
Json to_json(const RootStackDescriptor& r);
Json to_json(const TranslationResult& t);
Json to_json(const AxiomReport& a);
Json to_json(const GroupoidSummary& g);
Json to_json(const ChangeActionReport& r);
Json error_json(const Error& e);

// ---- run reports ----------------------------------------------------------------

struct InputDigest {
  std::string name;    // option that supplied the file
  std::string sha256;  // hex digest of the file bytes
  bool operator==(const InputDigest&) const = default;
};

struct RunReport {
  std::string command;
  std::vector<InputDigest> inputs;
  Json results = Json::object();
  std::vector<std::string> warnings;
  std::optional<Json> timing;
  bool operator==(const RunReport&) const = default;
};

Json to_json(const RunReport& r);
RunReport read_run_report(const Json& j);

}  // namespace stackypi1::json_io

#endif  // STACKYPI1_JSON_IO_HPP
