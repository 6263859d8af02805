#include "simnorm/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "simnorm/conversions.hpp"
#include "simnorm/figures.hpp"
#include "simnorm/quad.hpp"

namespace simnorm::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_tokens(std::string_view record) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : record) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

double parse_number(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw Error(ErrorCode::kParseError, "not a finite number: '" + token + "'");
  }
  return v;
}

Triangle triangle_of(const PointsInput& in) {
  return Triangle(in.points[0], in.points[1], in.points[2]);
}

Quadrilateral quad_of(const ShapeInput& input) {
  const auto* pts = std::get_if<PointsInput>(&input.value);
  if (!pts || pts->points.size() != 4) {
    throw Error(ErrorCode::kArityMismatch, "a quadrilateral needs exactly 4 points");
  }
  return Quadrilateral(pts->points[0], pts->points[1], pts->points[2], pts->points[3]);
}

SideLengths sides_of(const SidesInput& in) {
  return SideLengths::from(in.sides[0], in.sides[1], in.sides[2]);
}

AngleTriple angles_of(const AnglesInput& in, Tolerance tol) {
  return AngleTriple::from(in.radians[0], in.radians[1], in.radians[2], tol);
}

void require_triangle(const ShapeInput& input) {
  if (input.arity() != 3) {
    throw Error(ErrorCode::kArityMismatch, "expected a triangle, got 4 points");
  }
  if (std::holds_alternative<NormalPointInput>(input.value)) {
    throw Error(ErrorCode::kParseError, "'normal' records are accepted by convert only");
  }
}

// C-normal point of any triangle-valued input; the canonical key.
Point c_point_of(const ShapeInput& input) {
  if (const auto* p = std::get_if<PointsInput>(&input.value)) return c_normal_point(triangle_of(*p));
  if (const auto* s = std::get_if<SidesInput>(&input.value)) {
    return normal_point_from_sides(FormKind::kCVertex, sides_of(*s));
  }
  if (const auto* a = std::get_if<AnglesInput>(&input.value)) {
    return normal_point_from_angles(FormKind::kCVertex, angles_of(*a, {}));
  }
  throw Error(ErrorCode::kParseError, "'normal' records are accepted by convert only");
}

Point one_vertex_point_of(const ShapeInput& input, FormKind kind, Tolerance tol) {
  if (const auto* p = std::get_if<PointsInput>(&input.value)) {
    return normal_point(kind, triangle_of(*p));
  }
  if (const auto* s = std::get_if<SidesInput>(&input.value)) {
    return normal_point_from_sides(kind, sides_of(*s));
  }
  if (const auto* a = std::get_if<AnglesInput>(&input.value)) {
    return normal_point_from_angles(kind, angles_of(*a, tol));
  }
  throw Error(ErrorCode::kParseError, "'normal' records are accepted by convert only");
}

AngleTriple circle_angles_of(const ShapeInput& input, Tolerance tol) {
  try {
    if (const auto* a = std::get_if<AnglesInput>(&input.value)) return angles_of(*a, tol);
    if (const auto* s = std::get_if<SidesInput>(&input.value)) {
      return angles_from_sides(sides_of(*s), tol);
    }
    if (const auto* p = std::get_if<PointsInput>(&input.value)) {
      return angles_from_sides(side_lengths(triangle_of(*p)), tol);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDegenerate || e.code() == ErrorCode::kDegenerateAngles) {
      throw Error(ErrorCode::kDegenerateAngles,
                  "the circle form needs a nondegenerate triangle");
    }
    throw;
  }
  throw Error(ErrorCode::kParseError, "'normal' records are accepted by convert only");
}

Triangle canonical_triangle(Point c_point) { return Triangle({0.0, 0.0}, {1.0, 0.0}, c_point); }

void add_classification(ReportRecord& r, Point c_point, Tolerance tol) {
  const TriangleClass cls = classify(canonical_triangle(c_point), tol);
  r.angle_class = std::string(to_string(cls.angle_class));
  r.side_class = std::string(to_string(cls.side_class));
}

std::array<double, 3> ratios(const SideLengths& s) {
  const SideLengths n = s.normalized();
  return {n.a(), n.b(), n.c()};
}

std::array<double, 3> as_array(const AngleTriple& a) { return {a.alpha(), a.beta(), a.gamma()}; }

ReportRecord base_record(std::string command, const ShapeInput& input) {
  ReportRecord r;
  r.command = std::move(command);
  r.input = input.source;
  return r;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "failed writing '" + path.string() + "'");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

}  // namespace

int ShapeInput::arity() const {
  if (const auto* p = std::get_if<PointsInput>(&value)) return static_cast<int>(p->points.size());
  return 3;
}

ShapeInput parse_shape(std::string_view record, bool degrees) {
  const std::vector<std::string> tokens = split_tokens(record);
  if (tokens.empty()) throw Error(ErrorCode::kParseError, "empty shape record");
  const std::string& tag = tokens[0];
  std::vector<double> nums;
  for (std::size_t i = 1; i < tokens.size(); ++i) nums.push_back(parse_number(tokens[i]));

  ShapeInput in;
  in.source = std::string(record);
  if (tag == "points") {
    if (nums.size() != 6 && nums.size() != 8) {
      throw Error(ErrorCode::kParseError, "points needs 3 or 4 coordinate pairs");
    }
    PointsInput p;
    for (std::size_t i = 0; i < nums.size(); i += 2) p.points.push_back({nums[i], nums[i + 1]});
    in.value = std::move(p);
  } else if (tag == "sides") {
    if (nums.size() != 3) throw Error(ErrorCode::kParseError, "sides needs 3 lengths");
    for (double v : nums) {
      if (v < 0.0) throw Error(ErrorCode::kParseError, "side lengths must be nonnegative");
    }
    in.value = SidesInput{{nums[0], nums[1], nums[2]}};
  } else if (tag == "angles") {
    if (nums.size() != 3) throw Error(ErrorCode::kParseError, "angles needs 3 values");
    for (double& v : nums) {
      if (!(v > 0.0)) throw Error(ErrorCode::kParseError, "angles must be positive");
      if (degrees) v *= kPi / 180.0;
    }
    in.value = AnglesInput{{nums[0], nums[1], nums[2]}};
  } else if (tag == "normal") {
    if (nums.size() != 2) throw Error(ErrorCode::kParseError, "normal needs 2 coordinates");
    in.value = NormalPointInput{{nums[0], nums[1]}};
  } else {
    throw Error(ErrorCode::kParseError,
                "unknown shape tag '" + tag + "' (expected points, sides, angles or normal)");
  }
  return in;
}

std::vector<ShapeInput> read_shape_file(const fs::path& path, bool degrees) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  std::vector<ShapeInput> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_shape(line.substr(first), degrees));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

FormKind parse_kind(std::string_view text) {
  if (text == "a") return FormKind::kAVertex;
  if (text == "b") return FormKind::kBVertex;
  if (text == "c") return FormKind::kCVertex;
  if (text == "circle") return FormKind::kCircle;
  throw Error(ErrorCode::kParseError, "unknown kind '" + std::string(text) + "'");
}

std::string_view kind_flag(FormKind kind) {
  switch (kind) {
    case FormKind::kAVertex: return "a";
    case FormKind::kBVertex: return "b";
    case FormKind::kCVertex: return "c";
    case FormKind::kCircle: return "circle";
  }
  return "?";
}

void to_json(nlohmann::json& j, const ReportRecord& r) {
  auto pt = [](Point p) { return nlohmann::json::array({p.x, p.y}); };
  j = nlohmann::json::object();
  j["command"] = r.command;
  j["input"] = r.input;
  if (r.form_kind) j["form_kind"] = *r.form_kind;
  if (r.normal_point) j["normal_point"] = pt(*r.normal_point);
  if (r.in_domain) j["in_domain"] = *r.in_domain;
  if (r.circle_vertices) {
    j["circle_vertices"] = {pt((*r.circle_vertices)[0]), pt((*r.circle_vertices)[1]),
                            pt((*r.circle_vertices)[2])};
  }
  if (r.quad_c) j["quad_c"] = pt(*r.quad_c);
  if (r.quad_d) j["quad_d"] = pt(*r.quad_d);
  if (r.angle_class) j["angle_class"] = *r.angle_class;
  if (r.side_class) j["side_class"] = *r.side_class;
  if (r.angles) j["angles"] = *r.angles;
  if (r.side_ratios) j["side_ratios"] = *r.side_ratios;
  if (r.similar) j["similar"] = *r.similar;
  if (!r.keys.empty()) j["keys"] = r.keys;
}

void from_json(const nlohmann::json& j, ReportRecord& r) {
  auto pt = [](const nlohmann::json& v) { return Point{v.at(0).get<double>(), v.at(1).get<double>()}; };
  r = ReportRecord{};
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").get<std::string>();
  if (j.contains("form_kind")) r.form_kind = j["form_kind"].get<std::string>();
  if (j.contains("normal_point")) r.normal_point = pt(j["normal_point"]);
  if (j.contains("in_domain")) r.in_domain = j["in_domain"].get<bool>();
  if (j.contains("circle_vertices")) {
    const auto& v = j["circle_vertices"];
    r.circle_vertices = std::array<Point, 3>{pt(v.at(0)), pt(v.at(1)), pt(v.at(2))};
  }
  if (j.contains("quad_c")) r.quad_c = pt(j["quad_c"]);
  if (j.contains("quad_d")) r.quad_d = pt(j["quad_d"]);
  if (j.contains("angle_class")) r.angle_class = j["angle_class"].get<std::string>();
  if (j.contains("side_class")) r.side_class = j["side_class"].get<std::string>();
  if (j.contains("angles")) r.angles = j["angles"].get<std::array<double, 3>>();
  if (j.contains("side_ratios")) r.side_ratios = j["side_ratios"].get<std::array<double, 3>>();
  if (j.contains("similar")) r.similar = j["similar"].get<bool>();
  if (j.contains("keys")) r.keys = j["keys"].get<std::vector<std::vector<double>>>();
}

std::string format_record(const ReportRecord& r, OutputFormat format) {
  if (format == OutputFormat::kStructured) {
    nlohmann::json j = r;
    return j.dump() + "\n";
  }
  std::ostringstream out;
  auto pt = [](Point p) { return fmt17(p.x) + " " + fmt17(p.y); };
  auto triple = [](const std::array<double, 3>& v) {
    return fmt17(v[0]) + " " + fmt17(v[1]) + " " + fmt17(v[2]);
  };
  out << "command: " << r.command << "\n";
  out << "input: " << r.input << "\n";
  if (r.form_kind) out << "form_kind: " << *r.form_kind << "\n";
  if (r.normal_point) out << "normal_point: " << pt(*r.normal_point) << "\n";
  if (r.in_domain) out << "in_domain: " << (*r.in_domain ? "true" : "false") << "\n";
  if (r.circle_vertices) {
    out << "circle_vertices: " << pt((*r.circle_vertices)[0]) << "  "
        << pt((*r.circle_vertices)[1]) << "  " << pt((*r.circle_vertices)[2]) << "\n";
  }
  if (r.quad_c) out << "quad_c: " << pt(*r.quad_c) << "\n";
  if (r.quad_d) out << "quad_d: " << pt(*r.quad_d) << "\n";
  if (r.angle_class) out << "angle_class: " << *r.angle_class << "\n";
  if (r.side_class) out << "side_class: " << *r.side_class << "\n";
  if (r.angles) out << "angles: " << triple(*r.angles) << "\n";
  if (r.side_ratios) out << "side_ratios: " << triple(*r.side_ratios) << "\n";
  if (r.similar) out << "similar: " << (*r.similar ? "true" : "false") << "\n";
  for (const auto& key : r.keys) {
    out << "key:";
    for (double v : key) out << " " << fmt17(v);
    out << "\n";
  }
  out << "\n";
  return out.str();
}

ReportRecord cmd_normalize(const ShapeInput& input, FormKind kind, Tolerance tol) {
  if (input.arity() == 4) return cmd_quad_normalize(input, tol);
  require_triangle(input);
  ReportRecord r = base_record("normalize", input);
  r.form_kind = std::string(to_string(kind));
  if (kind == FormKind::kCircle) {
    const AngleTriple angles = circle_angles_of(input, tol);
    const Triangle t = circle_normal_form(angles);
    r.circle_vertices = std::array<Point, 3>{t[0], t[1], t[2]};
    r.in_domain = is_normal_circle_triangle(t, tol);
    r.angles = as_array(angles);
    add_classification(r, normal_point_from_angles(FormKind::kCVertex, angles), tol);
    return r;
  }
  const Point p = one_vertex_point_of(input, kind, tol);
  r.normal_point = p;
  r.in_domain = in_domain(kind, p, tol);
  add_classification(r, kind == FormKind::kCVertex ? p : c_point_of(input), tol);
  return r;
}

ReportRecord cmd_quad_normalize(const ShapeInput& input, Tolerance tol) {
  const Quadrilateral q = quad_of(input);
  const QuadNormalForm f = normalize_quad(q, tol);
  ReportRecord r = base_record("quad-normalize", input);
  r.form_kind = "LongestDistance";
  r.quad_c = f.c;
  r.quad_d = f.d;
  r.in_domain = in_S_C(f.c, tol) && in_S_D(f.d, f.c, tol);
  return r;
}

ReportRecord cmd_classify(const ShapeInput& input, Tolerance tol) {
  require_triangle(input);
  ReportRecord r = base_record("classify", input);
  const Point p = c_point_of(input);
  r.form_kind = std::string(to_string(FormKind::kCVertex));
  r.normal_point = p;
  add_classification(r, p, tol);
  return r;
}

ReportRecord cmd_convert(const ShapeInput& input, FormKind kind, Tolerance tol) {
  if (kind == FormKind::kCircle) {
    throw Error(ErrorCode::kUnsupportedKind, "convert works with the a, b and c forms");
  }
  if (input.arity() != 3) throw Error(ErrorCode::kArityMismatch, "convert expects a triangle");
  ReportRecord r = base_record("convert", input);
  r.form_kind = std::string(to_string(kind));

  if (const auto* n = std::get_if<NormalPointInput>(&input.value)) {
    const std::optional<AngleTriple> angles = angles_from_normal_point(kind, n->point, tol);
    r.normal_point = n->point;
    r.in_domain = true;
    if (angles) r.angles = as_array(*angles);
    r.side_ratios = ratios(side_lengths(canonical_triangle(n->point)));
    return r;
  }
  if (const auto* a = std::get_if<AnglesInput>(&input.value)) {
    const AngleTriple angles = angles_of(*a, tol);
    r.normal_point = normal_point_from_angles(kind, angles);
    r.in_domain = in_domain(kind, *r.normal_point, tol);
    r.angles = as_array(angles);
    r.side_ratios = ratios(sides_from_angles(angles));
    return r;
  }
  const SideLengths s = std::holds_alternative<SidesInput>(input.value)
                            ? sides_of(std::get<SidesInput>(input.value))
                            : side_lengths(triangle_of(std::get<PointsInput>(input.value)));
  r.normal_point = normal_point_from_sides(kind, s);
  r.in_domain = in_domain(kind, *r.normal_point, tol);
  r.side_ratios = ratios(s);
  try {
    r.angles = as_array(angles_from_sides(s, tol));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerate) throw;
  }
  return r;
}

ReportRecord cmd_similar(const ShapeInput& a, const ShapeInput& b, Tolerance tol) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorCode::kArityMismatch, "cannot compare a triangle with a quadrilateral");
  }
  ReportRecord r = base_record("similar", a);
  r.input = a.source + " | " + b.source;
  if (a.arity() == 4) {
    const QuadNormalForm fa = normalize_quad(quad_of(a), tol);
    const QuadNormalForm fb = normalize_quad(quad_of(b), tol);
    r.form_kind = "LongestDistance";
    r.similar = quads_similar(quad_of(a), quad_of(b), tol);
    r.keys = {{fa.c.x, fa.c.y, fa.d.x, fa.d.y}, {fb.c.x, fb.c.y, fb.d.x, fb.d.y}};
    return r;
  }
  require_triangle(a);
  require_triangle(b);
  const Point pa = c_point_of(a);
  const Point pb = c_point_of(b);
  r.form_kind = std::string(to_string(FormKind::kCVertex));
  r.similar = triangles_similar(canonical_triangle(pa), canonical_triangle(pb), tol);
  r.keys = {{pa.x, pa.y}, {pb.x, pb.y}};
  return r;
}

std::vector<fs::path> cmd_domains(std::optional<FormKind> kind, const fs::path& out) {
  std::vector<fs::path> written;
  if (kind) {
    write_file(out, figures::domain_svg(*kind));
    written.push_back(out);
    return written;
  }
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create directory '" + out.string() + "'");
  for (FormKind k : {FormKind::kAVertex, FormKind::kBVertex, FormKind::kCVertex,
                     FormKind::kCircle}) {
    const fs::path path = out / figures::domain_file_name(k);
    write_file(path, figures::domain_svg(k));
    written.push_back(path);
  }
  return written;
}

fs::path cmd_plot(const ShapeInput& input, FormKind kind, const fs::path& out, Tolerance tol) {
  require_triangle(input);
  if (kind == FormKind::kCircle) {
    write_file(out, figures::circle_plot_svg(circle_angles_of(input, tol)));
  } else {
    write_file(out, figures::point_plot_svg(kind, one_vertex_point_of(input, kind, tol)));
  }
  return out;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
      return 4;
    case ErrorCode::kUnboundedType:
    case ErrorCode::kDegenerateAngles:
    case ErrorCode::kDegenerate:
    case ErrorCode::kDegenerateQuad:
    case ErrorCode::kDegenerateSegment:
    case ErrorCode::kOutOfDomain:
    case ErrorCode::kPreconditionViolated:
      return 3;
    default:
      return 2;
  }
}

}  // namespace simnorm::cli
