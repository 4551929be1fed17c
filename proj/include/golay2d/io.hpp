#pragma once

// File formats. See docs/formats.md.
//
//   function spec   {"q":4,"n":2,"m":3,"terms":[{"coeff":2,"vars":[1]},...],"constant":0}
//   array CSV       one row per line, comma separated, no header
//   array JSON      {"q":2,"entries":[[...],...]} or a bare nested list
//   table CSV       rows u1 = -(L1-1)..L1-1, columns u2 = -(L2-1)..L2-1
//   table JSON      {"q":..,"l1":..,"l2":..,"cells":[[counts...],...]} row-major

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "golay2d/boolean_function.hpp"
#include "golay2d/constructions.hpp"
#include "golay2d/correlation.hpp"
#include "golay2d/papr.hpp"
#include "golay2d/qary_array.hpp"
#include "golay2d/verify.hpp"

namespace golay2d::io {

using nlohmann::json;

// All parse failures throw ParseError.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const GeneralizedBooleanFunction& f);
GeneralizedBooleanFunction function_from_json(const json& j);

json to_json(const GcapBasicSpec& s);
json to_json(const GcapGeneralSpec& s);
json to_json(const GcasSpec& s);
GcapBasicSpec basic_spec_from_json(const json& j);
GcapGeneralSpec general_spec_from_json(const json& j);
GcasSpec gcas_spec_from_json(const json& j);

// A spec file for papr: "pi1" selects the basic form, "pi" the general one.
ConstructionSpec construction_spec_from_json(const json& j);

json to_json(const QaryArray& a);
// Accepts the object form, or a bare nested list when q is given.
QaryArray array_from_json(const json& j, std::optional<int> q = std::nullopt);

std::string to_csv(const QaryArray& a);
QaryArray array_from_csv(const std::string& text, int q);

// Cell text: an integer, or a+bi with integer parts, when the value is exactly a
// (Gaussian) integer; otherwise 12 significant digits with the imaginary part
// omitted when it is exactly zero.
std::string format_cell(const CorrelationValue& v);
std::string to_csv(const CorrelationTable& t);
// Cells must be exact integers or Gaussian integers (q = 2 and q = 4 tables).
CorrelationTable table_from_csv(const std::string& text, int q);

json to_json(const CorrelationTable& t);
CorrelationTable table_from_json(const json& j);

json to_json(const VerificationResult& r);
json to_json(const PaprReport& r);
json to_json(const RunPartition& r);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);
json read_json(const std::filesystem::path& path);

// Reads an array from .json or .csv (by extension). CSV needs q.
QaryArray read_array(const std::filesystem::path& path, std::optional<int> q);

}  // namespace golay2d::io
