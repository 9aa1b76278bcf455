// Command-line front end.  Everything goes through the C API; exit codes
// are 0 (ok / valid), 1 (domain error / invalid), 2 (parse or usage error).

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "semitoric/semitoric.h"

namespace {

struct ObjectDeleter {
  void operator()(st_object* o) const { st_object_free(o); }
};
using ObjectPtr = std::unique_ptr<st_object, ObjectDeleter>;

struct StringDeleter {
  void operator()(char* s) const { st_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail(int code, const std::string& context) {
  std::cerr << context << ": " << st_last_error() << "\n";
  return code;
}

int read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return 0;
}

int write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 1;
  }
  out << data;
  return 0;
}

int parse_object(const std::string& path, ObjectPtr* out) {
  std::string text;
  if (int rc = read_file(path, &text)) return rc;
  st_object* raw = nullptr;
  if (int rc = st_parse(text.c_str(), &raw)) return fail(rc, path);
  out->reset(raw);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric and semitoric fans: validation, normalization, "
               "enumeration, polygon metrics, connectivity paths"};
  app.require_subcommand(1);

  std::string in_a, in_b, out_path, trace_out;
  std::string measure = "expabsx";
  std::string caps = "geometric";
  double cap_b0 = 1.0, cap_ratio = 0.5;
  int steps = 100;
  int max_length = 6;
  long long bound = 3;
  bool verify = false;

  CLI::App* validate = app.add_subcommand("validate", "check an object file");
  validate->add_option("input", in_a, "fan or polygon JSON")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "toric fan to minimal model");
  reduce->add_option("input", in_a, "toric fan JSON")->required();
  reduce->add_option("--trace-out", trace_out, "write the move trace here");
  reduce->add_flag("--verify", verify, "replay the trace and cross-check");

  CLI::App* normalize =
      app.add_subcommand("normalize", "semitoric fan to standard fan");
  normalize->add_option("input", in_a, "semitoric fan JSON")->required();
  normalize->add_option("--trace-out", trace_out, "write the move trace here");
  normalize->add_flag("--verify", verify, "replay the trace and cross-check");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "census of kernel words");
  enumerate->add_option("--max-length", max_length, "largest word length")
      ->capture_default_str();
  enumerate->add_option("--bound", bound, "largest |a_i|")
      ->capture_default_str();
  enumerate->add_option("--out", out_path, "write CSV here");

  CLI::App* distance =
      app.add_subcommand("distance", "metric between two objects");
  distance->add_option("a", in_a, "polygon or ingredient JSON")->required();
  distance->add_option("b", in_b, "polygon or ingredient JSON")->required();
  distance->add_option("--measure", measure, "lebesgue or expabsx")
      ->check(CLI::IsMember({"lebesgue", "expabsx"}))
      ->capture_default_str();
  distance->add_option("--caps", caps, "cap sequence family")
      ->check(CLI::IsMember({"geometric"}))
      ->capture_default_str();
  distance->add_option("--cap-b0", cap_b0, "cap b_0")->capture_default_str();
  distance->add_option("--cap-ratio", cap_ratio, "cap ratio")
      ->capture_default_str();

  CLI::App* path =
      app.add_subcommand("path", "connectivity path between ingredient lists");
  path->add_option("a", in_a, "ingredient JSON")->required();
  path->add_option("b", in_b, "ingredient JSON")->required();
  path->add_option("--steps", steps, "number of path steps")
      ->capture_default_str();
  path->add_option("--out", out_path, "write the path here");

  CLI::App* render = app.add_subcommand("render", "SVG of an object");
  render->add_option("input", in_a, "fan or polygon JSON")->required();
  render->add_option("--out", out_path, "write the SVG here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (validate->parsed()) {
    ObjectPtr obj;
    if (int rc = parse_object(in_a, &obj)) return rc;
    char* report = nullptr;
    const int rc = st_validate(obj.get(), &report);
    StringPtr guard(report);
    std::cout << nlohmann::ordered_json{
                     {"valid", rc == ST_OK},
                     {"reason", report ? report : ""}}.dump()
              << "\n";
    return rc;
  }

  if (reduce->parsed() || normalize->parsed()) {
    ObjectPtr obj;
    if (int rc = parse_object(in_a, &obj)) return rc;
    char* result = nullptr;
    const int rc = reduce->parsed()
                       ? st_reduce(obj.get(), verify ? 1 : 0, &result)
                       : st_normalize(obj.get(), verify ? 1 : 0, &result);
    if (rc != ST_OK) return fail(rc, in_a);
    StringPtr guard(result);
    const std::string text = result;
    if (!trace_out.empty()) {
      const auto parsed = nlohmann::ordered_json::parse(text);
      if (int wrc = write_output(trace_out, parsed.at("trace").dump()))
        return wrc;
    }
    std::cout << text << "\n";
    return 0;
  }

  if (enumerate->parsed()) {
    char* csv = nullptr;
    if (int rc = st_enumerate(max_length, bound, &csv))
      return fail(rc, "enumerate");
    StringPtr guard(csv);
    return write_output(out_path, csv);
  }

  if (distance->parsed()) {
    ObjectPtr a, b;
    if (int rc = parse_object(in_a, &a)) return rc;
    if (int rc = parse_object(in_b, &b)) return rc;
    char* result = nullptr;
    if (int rc = st_distance(a.get(), b.get(), measure.c_str(), cap_b0,
                             cap_ratio, &result))
      return fail(rc, "distance");
    StringPtr guard(result);
    std::cout << result << "\n";
    return 0;
  }

  if (path->parsed()) {
    ObjectPtr a, b;
    if (int rc = parse_object(in_a, &a)) return rc;
    if (int rc = parse_object(in_b, &b)) return rc;
    char* result = nullptr;
    if (int rc = st_path(a.get(), b.get(), steps, &result))
      return fail(rc, "path");
    StringPtr guard(result);
    return write_output(out_path, result);
  }

  if (render->parsed()) {
    ObjectPtr obj;
    if (int rc = parse_object(in_a, &obj)) return rc;
    char* svg = nullptr;
    if (int rc = st_render(obj.get(), &svg)) return fail(rc, in_a);
    StringPtr guard(svg);
    return write_output(out_path, svg);
  }

  return 2;
}
