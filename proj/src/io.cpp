#include "germlab/io.hpp"

#include <fstream>
#include <sstream>

#include "germlab/error.hpp"

namespace germlab {

namespace {

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(ErrorCode::SchemaViolation, message);
}

const Json& require(const Json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) schema_error(std::string("missing required property \"") + key + "\"");
  return *it;
}

std::string require_string(const Json& value, const std::string& where) {
  if (!value.is_string()) schema_error(where + " must be a string");
  const auto s = value.get<std::string>();
  if (s.empty()) schema_error(where + " must not be empty");
  return s;
}

Json strings(const std::vector<Poly>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json numbers(const std::vector<std::uint64_t>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

Json stratum_json(const StratumEntry& entry) {
  const auto& st = entry.stratum;
  Json j;
  j["branch_tuple"] = st.branch_tuple;
  j["weight"] = entry.weight;
  j["status"] = std::string(to_string(st.status));
  j["expected_dim"] = st.expected_dim;
  j["dim"] = st.dim;
  j["m0"] = st.m0;
  j["milnor"] = st.milnor;
  j["euler_characteristic"] = st.euler_characteristic();
  j["flagged"] = st.flagged;
  j["variables"] = st.variables.names();
  j["generators"] = strings(st.generators);
  return j;
}

Json levels_json(const StructureReport& report) {
  Json levels = Json::array();
  for (const auto& level : report.levels) {
    Json l;
    l["k"] = level.k;
    Json classes = Json::array();
    for (const auto& cls : level.classes) {
      Json c;
      c["gamma"] = cls.gamma.parts;
      c["marar_coefficient"] = to_string(marar_coefficient(cls.gamma));
      c["chi"] = cls.chi;
      Json strata = Json::array();
      for (const auto& e : cls.entries) strata.push_back(stratum_json(e));
      c["strata"] = std::move(strata);
      classes.push_back(std::move(c));
    }
    l["classes"] = std::move(classes);
    levels.push_back(std::move(l));
  }
  return levels;
}

Json slice_level_json(const SliceResult& level, std::size_t index) {
  Json j;
  j["level"] = index;
  j["germ"] = to_json(level.germ);
  Json form = Json::array();
  for (const auto& c : level.form) form.push_back(to_string(c));
  j["form"] = std::move(form);
  j["truncation"] = level.truncation;
  j["mu_I"] = level.image_milnor;
  j["samples"] = numbers(level.samples);
  j["flagged"] = level.flagged;
  return j;
}

}  // namespace

GermFile parse_germ_file(const Json& doc) {
  if (!doc.is_object()) schema_error("document must be an object");
  static const std::vector<std::string> allowed{"name", "source_dim", "params", "branches"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error("unknown property \"" + key + "\"");
    }
  }
  GermFile file;
  file.name = require_string(require(doc, "name"), "name");
  const Json& n = require(doc, "source_dim");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 8) {
    schema_error("source_dim must be an integer between 1 and 8");
  }
  file.source_dim = n.get<unsigned>();
  if (const auto it = doc.find("params"); it != doc.end()) {
    if (!it->is_array() || it->size() > 1) schema_error("params must be an array of at most one symbol");
    for (const auto& p : *it) file.params.push_back(require_string(p, "params entry"));
  }
  const Json& branches = require(doc, "branches");
  if (!branches.is_array() || branches.empty()) schema_error("branches must be a non-empty array");
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const Json& b = branches[i];
    const std::string where = "branches[" + std::to_string(i) + "]";
    if (!b.is_object()) schema_error(where + " must be an object");
    for (const auto& [key, value] : b.items()) {
      if (key != "base_point" && key != "components") {
        schema_error(where + ": unknown property \"" + key + "\"");
      }
    }
    const std::string label = require_string(require(b, "base_point"), where + ".base_point");
    const Json& comps = require(b, "components");
    if (!comps.is_array() || comps.size() != file.source_dim + 1) {
      schema_error(where + ".components must be an array of " + std::to_string(file.source_dim + 1) +
                   " polynomials");
    }
    std::vector<std::string> texts;
    for (const auto& c : comps) texts.push_back(require_string(c, where + ".components entry"));
    file.branches.push_back({label, std::move(texts)});
  }
  return file;
}

GermFile load_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    schema_error(path + " is not valid JSON: " + e.what());
  }
  return parse_germ_file(doc);
}

GermSpec to_germ(const GermFile& file) {
  if (file.is_family()) throw Error(ErrorCode::UsageError, file.name + " is a family, not a germ");
  return GermSpec::parse(file.name, file.source_dim, file.branches);
}

FamilySpec to_family(const GermFile& file) {
  if (!file.is_family()) throw Error(ErrorCode::UsageError, file.name + " is a germ, not a family");
  return FamilySpec::parse(file.name, file.source_dim, file.params.front(), file.branches);
}

Json to_json(const GermSpec& germ) {
  Json j;
  j["name"] = germ.name();
  j["source_dim"] = germ.source_dim();
  Json branches = Json::array();
  for (const auto& b : germ.branches()) {
    Json bj;
    bj["base_point"] = b.base_point;
    bj["components"] = strings(b.components);
    branches.push_back(std::move(bj));
  }
  j["branches"] = std::move(branches);
  return j;
}

Json to_json(const StructureReport& report) {
  Json j;
  j["n"] = report.n;
  j["s"] = report.s;
  j["d"] = report.d;
  j["consistent"] = report.consistent();
  j["violations"] = report.violations;
  j["flagged"] = report.flagged;
  j["levels"] = levels_json(report);
  return j;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["germ"] = r.name;
  j["seed"] = r.seed;
  j["status"] = r.consistent() ? "OK" : "INCONSISTENT";
  if (!r.consistent()) j["error"] = {{"code", *r.inconsistency_code}, {"message", *r.inconsistency}};
  j["flags"] = r.flags;
  j["n"] = r.n;
  j["s"] = r.s;
  j["d"] = r.d;
  j["mu_I"] = r.mu_i;
  j["mu_D"] = r.mu_d;
  j["mu_D2"] = r.mu_d2;
  j["mu_alt"] = numbers(r.mu_alt);
  j["stable"] = r.stable;
  Json counts = Json::object();
  if (r.counts.cross_caps) counts["C"] = *r.counts.cross_caps;
  if (r.counts.triple_points) counts["T"] = *r.counts.triple_points;
  if (r.counts.quadruple_points) counts["Q"] = *r.counts.quadruple_points;
  j["zero_stable"] = std::move(counts);
  Json checks = Json::array();
  for (const auto& c : r.checks.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  if (r.checks.mu3_trivial) j["mu3_T"] = *r.checks.mu3_trivial;
  if (r.le_greuel) {
    Json lg;
    lg["mu_I"] = r.le_greuel->image_milnor;
    if (r.le_greuel->slice_image_milnor) lg["mu_I_slice"] = *r.le_greuel->slice_image_milnor;
    if (r.le_greuel->multiplicity) lg["m0"] = *r.le_greuel->multiplicity;
    lg["critical_points"] = r.le_greuel->critical_points;
    j["le_greuel"] = std::move(lg);
  }
  if (r.mu_star) {
    j["mu_star"] = numbers(r.mu_star->mu_star);
    j["mu_tilde"] = numbers(r.mu_star->mu_tilde);
  }
  if (r.top_row) {
    const auto& t = *r.top_row;
    j["top_row"] = {{"s", t.s},
                    {"d", t.d},
                    {"corner_rank", t.corner_rank.get_str()},
                    {"direct_sum", t.direct_sum.get_str()},
                    {"closed_form", to_string(t.closed_form)},
                    {"stated_coefficient", to_string(t.stated_coefficient)},
                    {"stated_value", to_string(t.stated_value)},
                    {"closed_form_matches_sum", t.closed_form_matches_sum},
                    {"stated_matches_sum", t.stated_matches_sum}};
  }
  if (r.pair) {
    Json pair;
    pair["source_dim"] = r.pair->source_dim;
    pair["points"] = r.pair->point_count();
    pair["targets"] = r.pair->target_count();
    pair["milnor_sum"] = r.pair->milnor_sum();
    pair["verified"] = r.pair->verified;
    Json table = Json::array();
    for (const auto& e : r.pair->table) {
      table.push_back({{"k", e.k},
                       {"gamma", e.gamma.parts},
                       {"lifted", e.lifted.parts},
                       {"chi", e.chi},
                       {"verified", e.verified}});
    }
    pair["iteration"] = std::move(table);
    j["double_point_pair"] = std::move(pair);
  }
  Json table = Json::array();
  for (const auto& e : r.table.entries) {
    table.push_back({{"k", e.k},
                     {"gamma", e.gamma.parts},
                     {"branch_tuple", e.branch_tuple},
                     {"weight", e.weight},
                     {"status", std::string(to_string(e.status))},
                     {"expected_dim", e.expected_dim},
                     {"dim", e.dim},
                     {"milnor", e.milnor},
                     {"m0", e.m0},
                     {"beta0", e.beta0},
                     {"marar_coefficient", to_string(e.marar)},
                     {"chi", e.chi}});
  }
  j["table"] = std::move(table);
  return j;
}

Json to_json(const SliceChain& chain) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    levels.push_back(slice_level_json(chain.levels[i], i));
  }
  return levels;
}

Json to_json(const FamilyVerdict& v) {
  Json j;
  j["family"] = v.family;
  j["seed"] = v.seed;
  j["verdict"] = std::string(to_string(v.verdict));
  j["mu_star_constant"] = v.mu_star_constant;
  j["mu_tilde_constant"] = v.mu_tilde_constant;
  j["mu_D2_constant"] = v.mu_d2_constant;
  j["jumps"] = v.jumps;
  j["flags"] = v.flags;
  Json evidence = Json::array();
  for (const auto& s : v.samples) {
    evidence.push_back({{"t", to_string(s.t)},
                        {"seed", s.seed},
                        {"mu_star", numbers(s.mu_star)},
                        {"mu_tilde", numbers(s.mu_tilde)},
                        {"mu_D2", s.mu_d2},
                        {"mu_D", s.mu_d},
                        {"flagged", s.flagged}});
  }
  j["evidence"] = std::move(evidence);
  j["note"] = "constancy is tested at t = 0 and at the sampled values only";
  return j;
}

Json error_json(std::string_view code, const std::string& message) {
  Json j;
  j["error"] = {{"code", std::string(code)}, {"message", message}};
  return j;
}

}  // namespace germlab
