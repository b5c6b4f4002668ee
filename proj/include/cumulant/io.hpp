#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cumulant/closed_form.hpp"
#include "cumulant/graded_algebra.hpp"
#include "cumulant/morphisms.hpp"
#include "cumulant/probability.hpp"
#include "cumulant/report.hpp"
#include "cumulant/transfer.hpp"

namespace cumulant::io {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become SchemaError.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

/// {"generators":[{"name","degree"}], ...}. Other keys are ignored.
SpacePtr parse_space(const Json& doc, const std::string& label = {});

/// {"name"?, "generators":[...], "products":[{"left","right","value":[...]}]}.
/// An omitted pair defaults to the graded-commutative reflection of a stated
/// pair, else zero. Throws SchemaError or ValidationError.
Algebra parse_algebra(const Json& doc);

/// {"source","target","degree","entries":[{"gen","value":[...]}]}; source and
/// target names are labels only, the spaces come from the caller.
LinearMap parse_linear_map(const Json& doc, const SpacePtr& source, const SpacePtr& target);

/// {"degree", "arities":{"n":[{"monomial":[...],"value":[...]}]}}. Monomials
/// may list factors in any order; the Koszul sign is applied on normalisation.
TaylorFamily parse_taylor_family(const Json& doc, const SpacePtr& source, const SpacePtr& target);

/// {"algebra", "complex", "differential", "complex_differential",
///  "inclusion", "projection", "homotopy"}.
RetractData parse_retract(const Json& doc);

/// {"retract", "d_infinity", "iota"}.
TransferInput parse_transfer(const Json& doc);

/// {"moments":["1/2",...]}.
MomentSequence parse_moments(const Json& doc);

Scalar parse_coefficient(const Json& value);
Vector parse_vector(const Json& doc, const GradedSpace& space);
SElement parse_element(const Json& doc, const GradedSpace& space);

Json to_json(const Scalar& s);
Json to_json(const Vector& v, const GradedSpace& space);
Json to_json(const SElement& v, const GradedSpace& space);
Json to_json(const TaylorFamily& family);
Json to_json(const LinearMap& map);
Json to_json(const CheckReport& report);
Json to_json(const ClosedFormComparison& comparison, const GradedSpace& source, const GradedSpace& target);
Json space_to_json(const GradedSpace& space);
Json algebra_to_json(const Algebra& algebra);
/// [{"monomial":[...],"value":[...]}] over every nonzero table entry.
Json table_to_json(const TabulatedMap& map);

/// Canonical serialisation: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

}  // namespace cumulant::io
