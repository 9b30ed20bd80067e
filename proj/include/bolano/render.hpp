#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "bolano/lindblad.hpp"
#include "bolano/normal_poly.hpp"

namespace bolano {

enum class Format { Plain, Latex, Record };

/// Plain text re-parses to the same operator; LaTeX follows the
/// {b^\dagger_{k}} b_{k} convention; Record is the JSON interchange
/// document. Terms appear in canonical signature order.
std::string render(const NormalPoly& n, Format format);
std::string render(const EvolutionEquation& eq, Format format);
std::string render(const Scalar& s, Format format);

inline constexpr int kRecordSchemaVersion = 1;

nlohmann::json to_record(const NormalPoly& n);
nlohmann::json to_record(const EvolutionEquation& eq);

using RecordValue = std::variant<NormalPoly, EvolutionEquation>;

/// Strict reader for the interchange format: schema_version is mandatory
/// and unknown fields are rejected. Throws RecordError.
RecordValue read_record(const nlohmann::json& doc);
RecordValue parse_record(std::string_view text);

}  // namespace bolano
