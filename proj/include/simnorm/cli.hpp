#ifndef SIMNORM_CLI_HPP_
#define SIMNORM_CLI_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "simnorm/error.hpp"
#include "simnorm/geometry.hpp"
#include "simnorm/triangle.hpp"

namespace simnorm::cli {

struct PointsInput {
  std::vector<Point> points;  // 3 or 4
};
struct SidesInput {
  std::array<double, 3> sides;
};
struct AnglesInput {
  std::array<double, 3> radians;
};
// A normal point of a one-vertex form; accepted by `convert` only.
struct NormalPointInput {
  Point point;
};

struct ShapeInput {
  std::variant<PointsInput, SidesInput, AnglesInput, NormalPointInput> value;
  std::string source;  // the record as given, for echoing

  // 3 for triangles (and sides/angles/normal points), 4 for quadrilaterals.
  int arity() const;
};

// Parses one record "tag n1 n2 ..." with tag in {points, sides, angles,
// normal}; numbers may be separated by whitespace or commas. Angles given in
// degrees are converted when `degrees` is set. Throws Error(kParseError).
ShapeInput parse_shape(std::string_view record, bool degrees = false);

// Records from a batch file: one per line, blank lines and '#' comments
// skipped. Throws Error(kIoError) if the file cannot be read.
std::vector<ShapeInput> read_shape_file(const std::filesystem::path& path, bool degrees = false);

// Parses a --kind value: a, b, c or circle.
FormKind parse_kind(std::string_view text);
std::string_view kind_flag(FormKind kind);

// Flat record of one computation; absent fields are omitted on output.
struct ReportRecord {
  std::string command;
  std::string input;
  std::optional<std::string> form_kind;
  std::optional<Point> normal_point;
  std::optional<bool> in_domain;
  std::optional<std::array<Point, 3>> circle_vertices;  // A, B, C
  std::optional<Point> quad_c;
  std::optional<Point> quad_d;
  std::optional<std::string> angle_class;
  std::optional<std::string> side_class;
  std::optional<std::array<double, 3>> angles;
  std::optional<std::array<double, 3>> side_ratios;
  std::optional<bool> similar;
  std::vector<std::vector<double>> keys;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

void to_json(nlohmann::json& j, const ReportRecord& r);
void from_json(const nlohmann::json& j, ReportRecord& r);

enum class OutputFormat { kText, kStructured };

// Text: "field: values" lines with 17 significant digits, then a blank line.
// Structured: one JSON object per line.
std::string format_record(const ReportRecord& r, OutputFormat format);

ReportRecord cmd_normalize(const ShapeInput& input, FormKind kind, Tolerance tol = {});
ReportRecord cmd_quad_normalize(const ShapeInput& input, Tolerance tol = {});
ReportRecord cmd_classify(const ShapeInput& input, Tolerance tol = {});
ReportRecord cmd_convert(const ShapeInput& input, FormKind kind, Tolerance tol = {});
// Throws Error(kArityMismatch) when one shape is a triangle and the other a
// quadrilateral.
ReportRecord cmd_similar(const ShapeInput& a, const ShapeInput& b, Tolerance tol = {});

// Writes one SVG. With no kind, `out` is a directory receiving one file per
// form. Returns the written paths. Throws Error(kIoError) with path context.
std::vector<std::filesystem::path> cmd_domains(std::optional<FormKind> kind,
                                               const std::filesystem::path& out);
std::filesystem::path cmd_plot(const ShapeInput& input, FormKind kind,
                               const std::filesystem::path& out, Tolerance tol = {});

// Exit status for an error code: 2 parse/validation, 3 domain, 4 I/O.
int exit_code_for(ErrorCode code);

}  // namespace simnorm::cli

#endif  // SIMNORM_CLI_HPP_
