#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "corpus_germs.hpp"
#include "germlab/error.hpp"
#include "germlab/io.hpp"

using namespace germlab;

namespace {

Json s1_doc() {
  return Json::parse(R"({"name": "S1", "source_dim": 2,
    "branches": [{"base_point": "p0", "components": ["x1", "y^2", "y^3-x1^2*y"]}]})");
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

const std::filesystem::path corpus_dir = GERMLAB_CORPUS_DIR;

}  // namespace

TEST_CASE("germ files parse into germs") {
  const GermFile file = parse_germ_file(s1_doc());
  CHECK(file.name == "S1");
  CHECK(file.source_dim == 2);
  CHECK_FALSE(file.is_family());
  const GermSpec g = to_germ(file);
  CHECK(g.branch_count() == 1);
  CHECK(to_json(g) == to_json(corpus::s1()));
}

TEST_CASE("schema violations") {
  auto with = [](auto edit) {
    Json doc = s1_doc();
    edit(doc);
    return code_of([&] { parse_germ_file(doc); });
  };
  CHECK(with([](Json& d) { d.erase("name"); }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["name"] = ""; }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["source_dim"] = 0; }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["source_dim"] = "2"; }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["colour"] = "red"; }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["params"] = {"s", "t"}; }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["branches"] = Json::array(); }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["branches"][0]["components"].erase(2); }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["branches"][0]["components"][1] = 2; }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["branches"][0].erase("base_point"); }) == ErrorCode::SchemaViolation);
  CHECK(with([](Json& d) { d["branches"][0]["extra"] = 1; }) == ErrorCode::SchemaViolation);
  CHECK(code_of([] { parse_germ_file(Json::array()); }) == ErrorCode::SchemaViolation);
}

TEST_CASE("normal form and kind are enforced when building") {
  Json doc = s1_doc();
  doc["branches"][0]["components"][0] = "y";
  const GermFile bad = parse_germ_file(doc);
  CHECK(code_of([&] { to_germ(bad); }) == ErrorCode::NormalFormViolation);

  Json fam = s1_doc();
  fam["params"] = {"t"};
  const GermFile family = parse_germ_file(fam);
  CHECK(family.is_family());
  CHECK(code_of([&] { to_germ(family); }) == ErrorCode::UsageError);
  CHECK(code_of([&] { to_family(parse_germ_file(s1_doc())); }) == ErrorCode::UsageError);
  CHECK(to_family(family).name() == "S1");
}

TEST_CASE("file loading errors") {
  CHECK(code_of([] { load_germ_file((corpus_dir / "no-such.germ").string()); }) ==
        ErrorCode::IoError);
  const auto tmp = std::filesystem::temp_directory_path() / "germlab-io-test.germ";
  {
    std::ofstream out(tmp);
    out << "{ not json";
  }
  CHECK(code_of([&] { load_germ_file(tmp.string()); }) == ErrorCode::SchemaViolation);
  std::filesystem::remove(tmp);
}

TEST_CASE("every shipped corpus file loads") {
  std::size_t germs = 0;
  std::size_t families = 0;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
    CAPTURE(entry.path().string());
    const GermFile file = load_germ_file(entry.path().string());
    if (entry.path().stem() == "broken") {
      CHECK(code_of([&] { to_germ(file); }) == ErrorCode::NormalFormViolation);
    } else if (file.is_family()) {
      CHECK_NOTHROW(to_family(file));
      ++families;
    } else {
      CHECK_NOTHROW(to_germ(file));
      ++germs;
    }
  }
  CHECK(germs >= 6);
  CHECK(families == 3);
}

TEST_CASE("property: germ JSON round-trips") {
  for (const auto& g : {corpus::crosscap(), corpus::s1(), corpus::h2(), corpus::cusp_curve(),
                        corpus::s1_3d(), corpus::two_planes(), corpus::three_lines()}) {
    CAPTURE(g.name());
    const Json j = to_json(g);
    CHECK(to_json(to_germ(parse_germ_file(j))) == j);
  }
}

TEST_CASE("reports are deterministic and independent of the cache") {
  ComputeOptions cached;
  ComputeOptions uncached;
  uncached.use_cache = false;
  const std::string a = to_json(compute_invariants(corpus::h2(), 5, cached)).dump();
  const std::string b = to_json(compute_invariants(corpus::h2(), 5, cached)).dump();
  const std::string c = to_json(compute_invariants(corpus::h2(), 5, uncached)).dump();
  CHECK(a == b);
  CHECK(a == c);
  const Json r = Json::parse(a);
  CHECK(r["mu_I"] == 2);
  CHECK(r["mu_D"] == 4);
  CHECK(r["status"] == "OK");
  CHECK(r["seed"] == 5);
  CHECK(r["zero_stable"]["T"] == 1);
}

TEST_CASE("structure and error JSON") {
  const Json j = to_json(verify_multiple_point_structure(corpus::crosscap(), 1));
  CHECK(j["d"] == 2);
  CHECK(j["consistent"] == true);
  CHECK(j["levels"][0]["k"] == 2);
  const Json e = error_json("CHECK_FAILED", "boom");
  CHECK(e.dump() == R"({"error":{"code":"CHECK_FAILED","message":"boom"}})");
}
