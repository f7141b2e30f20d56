#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "germlab/error.hpp"
#include "germlab/io.hpp"

using namespace germlab;

namespace {

struct Flags {
  std::string file;
  std::uint64_t seed = 1;
  unsigned max_degree = ComputeOptions{}.degree_cap;
  std::string json_path;
  bool no_cache = false;
  unsigned level = 0;
  unsigned samples = 2;
};

void add_common(CLI::App& cmd, Flags& flags) {
  cmd.add_option("file", flags.file, "germ or family file")->required();
  cmd.add_option("--seed", flags.seed, "master seed")->capture_default_str();
  cmd.add_option("--max-degree", flags.max_degree, "degree cap for standard bases")
      ->capture_default_str()
      ->check(CLI::Range(1u, 10000u));
  cmd.add_option("--json,--out", flags.json_path, "write the report here instead of stdout");
  cmd.add_flag("--no-cache", flags.no_cache, "bypass the standard basis cache");
}

ComputeOptions options_of(const Flags& flags) {
  ComputeOptions opts;
  opts.degree_cap = flags.max_degree;
  opts.use_cache = !flags.no_cache;
  return opts;
}

Json envelope(const std::string& command, const Flags& flags) {
  Json j;
  j["command"] = command;
  j["seed"] = flags.seed;
  j["max_degree"] = flags.max_degree;
  return j;
}

int emit(const Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cout << error_json(to_string(ErrorCode::IoError), "cannot write " + path).dump(2) << "\n";
    return 1;
  }
  return 0;
}

int report_error(ErrorCode code, const std::string& message, const std::string& path) {
  const int status = is_consistency_failure(code) ? 2 : 1;
  const Json doc = error_json(to_string(code), message);
  if (!path.empty()) emit(doc, path);
  std::cout << doc.dump(2) << "\n";
  return status;
}

int run_check(const Flags& flags) {
  const GermSpec f = to_germ(load_germ_file(flags.file));
  const auto structure = verify_multiple_point_structure(f, flags.seed, options_of(flags));
  Json doc = envelope("check", flags);
  doc["germ"] = to_json(f);
  doc["structure"] = to_json(structure);
  const int status = emit(doc, flags.json_path);
  return status != 0 ? status : (structure.consistent() ? 0 : 2);
}

int run_invariants(const Flags& flags) {
  const GermSpec f = to_germ(load_germ_file(flags.file));
  const auto report = compute_invariants(f, flags.seed, options_of(flags));
  Json doc = envelope("invariants", flags);
  doc["germ"] = to_json(f);
  doc["report"] = to_json(report);
  const int status = emit(doc, flags.json_path);
  return status != 0 ? status : (report.consistent() ? 0 : 2);
}

int run_slice(const Flags& flags) {
  const GermSpec f = to_germ(load_germ_file(flags.file));
  if (flags.level >= f.source_dim()) {
    throw Error(ErrorCode::UsageError, "--level must be below the source dimension " +
                                           std::to_string(f.source_dim()));
  }
  const auto chain = slice_chain(f, flags.seed, options_of(flags));
  const auto levels = to_json(chain);
  Json doc = envelope("slice", flags);
  doc["germ"] = to_json(f);
  doc["level"] = levels.at(flags.level);
  Json mu_star = Json::array();
  for (const auto& level : chain.levels) mu_star.push_back(level.image_milnor);
  doc["mu_star"] = std::move(mu_star);
  return emit(doc, flags.json_path);
}

int run_equising(const Flags& flags) {
  const FamilySpec family = to_family(load_germ_file(flags.file));
  const auto verdict = whitney_verdict(family, flags.samples, flags.seed, options_of(flags));
  Json doc = envelope("equising", flags);
  doc["samples"] = flags.samples;
  doc["result"] = to_json(verdict);
  return emit(doc, flags.json_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity invariants of corank-one map germs"};
  app.require_subcommand(1);
  Flags flags;

  auto* check = app.add_subcommand("check", "multiple point structure report");
  auto* invariants = app.add_subcommand("invariants", "full invariant report");
  auto* slice = app.add_subcommand("slice", "one level of the transverse slice chain");
  auto* equising = app.add_subcommand("equising", "Whitney equisingularity of a family");
  for (auto* cmd : {check, invariants, slice, equising}) add_common(*cmd, flags);
  slice->add_option("--level", flags.level, "slice level")->required();
  equising->add_option("--samples", flags.samples, "random parameter values besides t = 0")
      ->capture_default_str()
      ->check(CLI::Range(1u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json(to_string(ErrorCode::UsageError), e.what()).dump(2) << "\n";
    return 1;
  }

  try {
    if (check->parsed()) return run_check(flags);
    if (invariants->parsed()) return run_invariants(flags);
    if (slice->parsed()) return run_slice(flags);
    return run_equising(flags);
  } catch (const Error& e) {
    return report_error(e.code(), e.what(), flags.json_path);
  } catch (const std::bad_alloc&) {
    return report_error(ErrorCode::CapExceeded, "out of memory", flags.json_path);
  }
}
