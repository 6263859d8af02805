// simnorm: normal forms of triangles and quadrilaterals up to similarity.
//
//   simnorm normalize --shape "sides 3 4 5" --kind c
//   simnorm similar --shape "sides 3 4 5" --shape "sides 6 8 10"
//   simnorm domains --kind all --out figures/

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simnorm/cli.hpp"
#include "simnorm/error.hpp"

namespace {

using namespace simnorm;
using namespace simnorm::cli;

struct Options {
  std::vector<std::string> shapes;
  std::string file;
  std::string kind = "c";
  double eps = Tolerance::kDefault;
  bool degrees = false;
  std::string out;
  std::string format = "text";
};

std::vector<ShapeInput> collect_shapes(const Options& o) {
  std::vector<ShapeInput> inputs;
  for (const std::string& s : o.shapes) inputs.push_back(parse_shape(s, o.degrees));
  if (!o.file.empty()) {
    for (ShapeInput& s : read_shape_file(o.file, o.degrees)) inputs.push_back(std::move(s));
  }
  if (inputs.empty()) throw Error(ErrorCode::kParseError, "no shape given (use --shape or --file)");
  return inputs;
}

int fail(ErrorCode code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return exit_code_for(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms of triangles and quadrilaterals up to similarity"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool with_kind) {
    sub->add_option("--shape", o.shapes,
                    "Shape record: 'points x1 y1 ...', 'sides a b c', 'angles a b c' "
                    "(repeatable)");
    sub->add_option("--file", o.file, "Batch file with one shape record per line");
    if (with_kind) {
      sub->add_option("--kind", o.kind, "Normal form: a, b, c or circle")
          ->check(CLI::IsMember({"a", "b", "c", "circle"}));
    }
    sub->add_option("--eps", o.eps, "Comparison tolerance (0 < eps < 1e-3)");
    sub->add_flag("--degrees", o.degrees, "Angles are given in degrees");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* normalize = app.add_subcommand("normalize", "Normal point(s) of a shape");
  add_common(normalize, true);
  CLI::App* quad = app.add_subcommand("quad-normalize", "Longest-distance quadrilateral form");
  add_common(quad, false);
  CLI::App* classify = app.add_subcommand("classify", "Angle and side class of a triangle");
  add_common(classify, false);
  CLI::App* convert = app.add_subcommand(
      "convert", "Convert between sides, angles and normal points ('normal x y' records too)");
  add_common(convert, true);
  CLI::App* similar = app.add_subcommand("similar", "Decide similarity of two shapes");
  add_common(similar, false);

  CLI::App* domains = app.add_subcommand("domains", "Render normal-form domains as SVG");
  std::string domain_kind = "all";
  domains->add_option("--kind", domain_kind, "a, b, c, circle or all")
      ->check(CLI::IsMember({"a", "b", "c", "circle", "all"}));
  domains->add_option("--out", o.out, "Output file (directory for --kind all)")->required();

  CLI::App* plot = app.add_subcommand("plot", "Render a shape's normal point on its domain");
  add_common(plot, true);
  plot->add_option("--out", o.out, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(ErrorCode::kParseError, "ParseError: " + std::string(e.what()));
  }

  try {
    const Tolerance tol(o.eps);
    const OutputFormat format =
        o.format == "structured" ? OutputFormat::kStructured : OutputFormat::kText;

    if (*domains) {
      std::optional<FormKind> kind;
      if (domain_kind != "all") kind = parse_kind(domain_kind);
      for (const auto& path : cmd_domains(kind, o.out)) std::cout << path.string() << "\n";
      return 0;
    }
    const std::vector<ShapeInput> inputs = collect_shapes(o);
    if (*similar) {
      if (inputs.size() != 2) {
        throw Error(ErrorCode::kParseError, "similar needs exactly two shapes");
      }
      std::cout << format_record(cmd_similar(inputs[0], inputs[1], tol), format);
      return 0;
    }
    if (*plot) {
      if (inputs.size() != 1) throw Error(ErrorCode::kParseError, "plot needs exactly one shape");
      std::cout << cmd_plot(inputs[0], parse_kind(o.kind), o.out, tol).string() << "\n";
      return 0;
    }
    for (const ShapeInput& in : inputs) {
      ReportRecord r;
      if (*normalize) {
        r = cmd_normalize(in, parse_kind(o.kind), tol);
      } else if (*quad) {
        r = cmd_quad_normalize(in, tol);
      } else if (*classify) {
        r = cmd_classify(in, tol);
      } else {
        r = cmd_convert(in, parse_kind(o.kind), tol);
      }
      std::cout << format_record(r, format);
    }
  } catch (const Error& e) {
    return fail(e.code(), e.what());
  }
  return 0;
}
