#pragma once

// Command-line driver. Exit codes: 0 success, 1 domain error (invalid Gmap,
// failed match, post-validation, ...), 2 usage or input parse error.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"
#include "gmapkit/io/gmap_format.hpp"
#include "gmapkit/io/mesh_format.hpp"
#include "gmapkit/io/rule_format.hpp"
#include "gmapkit/match.hpp"
#include "gmapkit/mesh.hpp"
#include "gmapkit/rewrite.hpp"
#include "gmapkit/scheme.hpp"

namespace gmapkit::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

namespace detail {

// Failures while reading inputs map to exit code 2.
struct InputError {
  std::string code;
  std::string message;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"E_IO", "cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename Parse>
auto load(const std::string& path, Parse parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw InputError{std::string(code_name(e.code())), path + ":" + e.what()};
  }
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::io, "cannot write '" + path + "'");
}

inline OrbitType parse_orbit_list(const std::string& text) {
  std::vector<Dim> dims;
  std::string s = text;
  if (!s.empty() && s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      std::size_t used = 0;
      int d = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      dims.push_back(d);
    } catch (const std::exception&) {
      throw InputError{"E_SYNTAX", "bad orbit type '" + text + "'"};
    }
  }
  try {
    return OrbitType(std::move(dims));
  } catch (const Error& e) {
    throw InputError{"E_SYNTAX", e.what()};
  }
}

inline bool use_color(std::ostream& s) {
  const char* env = std::getenv("GMAP_COLOR");
  if (env && std::string_view(env) == "0") return false;
  return &s == &std::cerr && ::isatty(2);
}

inline void report_error(std::ostream& err, std::string_view code, std::string_view message) {
  if (use_color(err)) {
    err << "\x1b[31m" << code << "\x1b[0m: " << message << "\n";
  } else {
    err << code << ": " << message << "\n";
  }
}

inline std::string join(const std::vector<Dart>& darts) {
  std::string s;
  for (const auto& d : darts) s += (s.empty() ? "" : " ") + d;
  return s;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"gmapkit: generalized maps and rule schemes"};
  app.require_subcommand(1, 1);

  std::string input, rule_path, dart, type_text, output, pos_layer = "pos";
  int dim = 0;
  std::vector<std::string> directives;

  auto* validate_cmd = app.add_subcommand("validate", "Check the Gmap constraints and embedding conditions");
  validate_cmd->add_option("file", input, "Gmap document (.gmap)")->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "List orbits of a given type");
  orbits_cmd->add_option("file", input, "Gmap document (.gmap)")->required();
  orbits_cmd->add_option("--type", type_text, "Orbit type, e.g. 0,2")->required();
  orbits_cmd->add_option("--dart", dart, "Only the orbit of this dart");

  auto* cells_cmd = app.add_subcommand("cells", "List the i-cells");
  cells_cmd->add_option("file", input, "Gmap document (.gmap)")->required();
  cells_cmd->add_option("--dim", dim, "Cell dimension")->required();

  auto* unify_cmd = app.add_subcommand("unify", "Build the 2-Gmap of an OFF mesh");
  unify_cmd->add_option("file", input, "OFF mesh")->required();
  unify_cmd->add_option("-o,--output", output, "Output .gmap (default stdout)");

  std::string outputs;
  auto* inst_cmd = app.add_subcommand("instantiate", "Instantiate a rule scheme at a dart");
  inst_cmd->add_option("rule", rule_path, "Rule scheme (.jrule)")->required();
  inst_cmd->add_option("file", input, "Gmap document (.gmap)")->required();
  inst_cmd->add_option("--dart", dart, "Hook dart")->required();
  inst_cmd->add_option("-o,--output", outputs, "left.gmap,right.gmap (default stdout)");

  auto* apply_cmd = app.add_subcommand("apply", "Apply a rule scheme at a dart");
  apply_cmd->add_option("rule", rule_path, "Rule scheme (.jrule)")->required();
  apply_cmd->add_option("file", input, "Gmap document (.gmap)")->required();
  apply_cmd->add_option("--dart", dart, "Hook dart")->required();
  apply_cmd->add_option("--ebd", directives, "Embedding directive layer:node=expr (repeatable)");
  apply_cmd->add_option("-o,--output", output, "Output .gmap (default stdout)");

  auto* obj_cmd = app.add_subcommand("export-obj", "Write an OBJ file from a 2-Gmap");
  obj_cmd->add_option("file", input, "Gmap document (.gmap)")->required();
  obj_cmd->add_option("--pos", pos_layer, "Point3d layer on <1,2>")->capture_default_str();
  obj_cmd->add_option("-o,--output", output, "Output .obj (default stdout)");

  auto* info_cmd = app.add_subcommand("info", "Summarize a Gmap document");
  info_cmd->add_option("file", input, "Gmap document (.gmap)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (validate_cmd->parsed()) {
      Gmap g = detail::load(input, io::parse_gmap);
      ValidationReport report = validate(g);
      if (report.ok()) {
        out << "valid " << g.dimension() << "-Gmap: " << g.dart_count() << " darts\n";
        return kOk;
      }
      out << report.to_string();
      out << "invalid: " << report.size() << " violations\n";
      return kDomainError;
    }

    if (orbits_cmd->parsed()) {
      Gmap g = detail::load(input, io::parse_gmap);
      OrbitType o = detail::parse_orbit_list(type_text);
      if (!o.fits(g.dimension())) throw Error(ErrorCode::graph, "orbit type " + o.to_string() + " exceeds the dimension");
      if (!dart.empty()) {
        out << detail::join(orbit_darts(g, o, dart)) << "\n";
        return kOk;
      }
      auto all = orbits(g, o);
      out << all.size() << " orbits of type " << o.to_string() << "\n";
      for (const auto& orb : all) out << "  " << detail::join(orb) << "\n";
      return kOk;
    }

    if (cells_cmd->parsed()) {
      Gmap g = detail::load(input, io::parse_gmap);
      auto all = cells(g, dim);
      out << all.size() << " " << dim << "-cells\n";
      for (const auto& c : all) out << "  " << detail::join(c) << "\n";
      return kOk;
    }

    if (unify_cmd->parsed()) {
      PolygonalMesh mesh = detail::load(input, io::import_off);
      Gmap g = unify(mesh);
      detail::write_output(output, io::serialize_gmap(g), out);
      return kOk;
    }

    if (inst_cmd->parsed()) {
      RuleScheme rule = detail::load(rule_path, io::parse_rule_scheme);
      Gmap g = detail::load(input, io::parse_gmap);
      InstantiatedRule inst = instantiate_rule(rule, g, dart);
      const std::string left = io::serialize_graph(inst.left);
      const std::string right = io::serialize_graph(inst.right);
      if (outputs.empty()) {
        out << left << right;
        return kOk;
      }
      auto comma = outputs.find(',');
      if (comma == std::string::npos) {
        detail::report_error(err, "E_USAGE", "-o expects left.gmap,right.gmap");
        return kUsageError;
      }
      detail::write_output(outputs.substr(0, comma), left, out);
      detail::write_output(outputs.substr(comma + 1), right, out);
      out << "left: " << inst.left.node_count() << " darts, " << inst.left.link_count() << " links\n";
      out << "right: " << inst.right.node_count() << " darts, " << inst.right.link_count() << " links\n";
      return kOk;
    }

    if (apply_cmd->parsed()) {
      RuleScheme rule = detail::load(rule_path, io::parse_rule_scheme);
      Gmap g = detail::load(input, io::parse_gmap);
      std::vector<EmbeddingDirective> parsed;
      try {
        for (const auto& d : directives) parsed.push_back(parse_directive(d));
      } catch (const Error& e) {
        throw detail::InputError{std::string(code_name(e.code())), e.what()};
      }
      InstantiatedRule inst = instantiate_rule(rule, g, dart);
      Match m = complete_match(inst, g, hook_seed(inst, dart));
      Gmap result = apply_rule(inst, g, m, parsed);
      detail::write_output(output, io::serialize_gmap(result), out);
      if (!output.empty() && output != "-") {
        out << "applied " << rule.name << " at " << dart << ": " << g.dart_count() << " -> " << result.dart_count()
            << " darts\n";
      }
      return kOk;
    }

    if (obj_cmd->parsed()) {
      Gmap g = detail::load(input, io::parse_gmap);
      detail::write_output(output, io::export_obj(g, pos_layer), out);
      return kOk;
    }

    if (info_cmd->parsed()) {
      Gmap g = detail::load(input, io::parse_gmap);
      ValidationReport report = validate(g);
      out << "dimension: " << g.dimension() << "\n";
      out << "darts: " << g.dart_count() << "\n";
      out << "links: " << g.graph().link_count() << "\n";
      for (const auto& [name, layer] : g.layers()) {
        out << "embedding: " << name << " " << layer.domain.to_string() << " " << type_name(layer.type) << "\n";
      }
      out << "valid: " << (report.ok() ? "yes" : "no (" + std::to_string(report.size()) + " violations)") << "\n";
      if (report.ok()) {
        out << "cells:";
        for (std::size_t c : cell_counts(g)) out << " " << c;
        out << "\n";
      }
      return kOk;
    }
  } catch (const detail::InputError& e) {
    detail::report_error(err, e.code, e.message);
    return kUsageError;
  } catch (const Error& e) {
    detail::report_error(err, code_name(e.code()), e.what());
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace gmapkit::cli
