#include <doctest.h>

#include <algorithm>

#include "corpus_germs.hpp"
#include "generators.hpp"
#include "germlab/error.hpp"
#include "germlab/multipoint.hpp"
#include "macaulay_oracle.hpp"

using namespace germlab;

namespace {

const StratumEntry& only_entry(const StructureReport& r, unsigned k, std::vector<unsigned> parts) {
  const LevelData* level = r.level(k);
  REQUIRE(level != nullptr);
  const auto& cls = level->by_parts(parts);
  REQUIRE(cls.entries.size() == 1);
  return cls.entries.front();
}

std::vector<GermSpec> all_corpus() {
  return {corpus::crosscap(), corpus::immersion(), corpus::s1(),         corpus::s2(),
          corpus::h2(),       corpus::cusp_curve(), corpus::s1_3d(),     corpus::two_planes(),
          corpus::three_lines()};
}

std::uint64_t oracle_length(const MultiplePointStratum& st) {
  const auto d = oracle::local_dimension(st.generators, st.variables.size(), 20);
  REQUIRE(d.has_value());
  return *d;
}

}  // namespace

TEST_CASE("cross-cap: smooth double point curve, one cross-cap point, no triple points") {
  const auto r = verify_multiple_point_structure(corpus::crosscap(), 1);
  CHECK(r.consistent());
  CHECK(r.d == 2);
  const auto& d2 = only_entry(r, 2, {1, 1}).stratum;
  CHECK(d2.status == StratumStatus::Icis);
  CHECK(d2.dim == 1);
  CHECK(d2.milnor == 0);
  CHECK(d2.m0 == 1);
  const auto& fixed = only_entry(r, 2, {2}).stratum;
  CHECK(fixed.status == StratumStatus::ZeroDim);
  CHECK(fixed.m0 == 1);
  const auto& d3 = only_entry(r, 3, {1, 1, 1}).stratum;
  CHECK(d3.status == StratumStatus::Empty);
}

TEST_CASE("S1: double point curve is a node and the fixed locus has length 2") {
  const auto r = verify_multiple_point_structure(corpus::s1(), 1);
  CHECK(r.consistent());
  CHECK(r.d == 2);
  CHECK(only_entry(r, 2, {1, 1}).stratum.milnor == 1);
  const auto& fixed = only_entry(r, 2, {2}).stratum;
  CHECK(fixed.status == StratumStatus::ZeroDim);
  CHECK(fixed.m0 == 2);
  CHECK(oracle_length(fixed) == 2);
  CHECK(r.chi(2, {1, 1}) == 0);
  CHECK(r.chi(2, {2}) == 2);
}

TEST_CASE("S2: cusp double point curve and length 3 fixed locus") {
  const auto r = verify_multiple_point_structure(corpus::s2(), 1);
  CHECK(only_entry(r, 2, {1, 1}).stratum.milnor == 2);
  const auto& fixed = only_entry(r, 2, {2}).stratum;
  CHECK(fixed.m0 == 3);
  CHECK(oracle_length(fixed) == 3);
}

TEST_CASE("H2: six ordered triple point tuples and negative-dimensional fixed loci") {
  const auto r = verify_multiple_point_structure(corpus::h2(), 1);
  CHECK(r.consistent());
  CHECK(r.d == 3);
  const auto& d3 = only_entry(r, 3, {1, 1, 1}).stratum;
  CHECK(d3.status == StratumStatus::ZeroDim);
  CHECK(d3.m0 == 6);
  CHECK(oracle_length(d3) == 6);
  for (const auto& parts : std::vector<std::vector<unsigned>>{{2, 1}, {3}}) {
    const auto& st = only_entry(r, 3, parts).stratum;
    CHECK(st.expected_dim < 0);
    CHECK(st.euler_characteristic() == 0);
  }
  CHECK(only_entry(r, 4, {1, 1, 1, 1}).stratum.euler_characteristic() == 0);
}

TEST_CASE("curve germs: the cusp has a fat double point on the diagonal only") {
  const auto r = verify_multiple_point_structure(corpus::cusp_curve(), 1);
  CHECK(r.d == 2);
  const auto& d2 = only_entry(r, 2, {1, 1}).stratum;
  CHECK(d2.status == StratumStatus::ZeroDim);
  CHECK(d2.m0 == 2);
  CHECK(only_entry(r, 2, {2}).stratum.status == StratumStatus::NegativeDim);
}

TEST_CASE("multi-germs enumerate branch tuples with weights") {
  const auto r = verify_multiple_point_structure(corpus::three_lines(), 1);
  CHECK(r.consistent());
  CHECK(r.d == 2);
  // Six ordered pairs of distinct lines, each a simple point.
  CHECK(r.chi(2, {1, 1}) == 6);
  CHECK(r.chi(2, {2}) == 0);
  const auto& triple = r.level(3)->identity();
  std::uint64_t distinct = 0;
  for (const auto& e : triple.entries) {
    if (e.stratum.status == StratumStatus::NegativeDim) distinct += e.weight;
  }
  CHECK(distinct == 6);

  const auto planes = verify_multiple_point_structure(corpus::two_planes(), 1);
  CHECK(planes.chi(2, {1, 1}) == 2);
  CHECK(planes.chi(2, {2}) == 0);
}

TEST_CASE("every classified stratum has its expected dimension") {
  for (const auto& f : all_corpus()) {
    CAPTURE(f.name());
    const auto r = verify_multiple_point_structure(f, 3);
    CHECK(r.consistent());
    for (const auto& level : r.levels) {
      Integer weights = 0;
      for (const auto& cls : level.classes) {
        for (const auto& e : cls.entries) {
          const auto& st = e.stratum;
          CAPTURE(st.label());
          if (st.status == StratumStatus::Icis || st.status == StratumStatus::ZeroDim) {
            CHECK(static_cast<int>(st.dim) == st.expected_dim);
          }
          if (st.expected_dim < 0) {
            CHECK((st.status == StratumStatus::Empty ||
                   st.status == StratumStatus::NegativeDim));
          }
          if (cls.gamma.num_parts() == level.k) weights += e.weight;
        }
      }
      // The identity class covers every ordered tuple exactly once.
      Integer all = 1;
      for (unsigned i = 0; i < level.k; ++i) all *= static_cast<unsigned long>(f.branch_count());
      CHECK(weights == all);
    }
  }
}

TEST_CASE("zero-dimensional lengths agree with the oracle on the corpus") {
  for (const auto& f : all_corpus()) {
    const auto r = verify_multiple_point_structure(f, 5);
    for (const auto& level : r.levels) {
      for (const auto& cls : level.classes) {
        for (const auto& e : cls.entries) {
          if (e.stratum.status != StratumStatus::ZeroDim) continue;
          CAPTURE(e.stratum.label());
          CHECK(oracle_length(e.stratum) == e.stratum.m0);
        }
      }
    }
  }
}

TEST_CASE("stratum labels") {
  const auto full = multiple_point_ideal(corpus::s1(), 3, {0, 0, 0});
  CHECK(full.label() == "k=3 (1,1,1) [0,0,0]");
  const auto fixed = fixed_point_stratum(full, make_partition({2, 1}));
  CHECK(fixed.label() == "k=3 (2,1) [0,0,0]");
  CHECK(fixed.variables.size() == 3);
  CHECK(fixed.expected_dim == 3 - 6 + 2);
  CHECK_THROWS_AS(multiple_point_ideal(corpus::s1(), 2, {0, 1}), Error);
}

TEST_CASE("property: multiple point ideals are invariant under permuting the points") {
  SeededSampler rng(2024);
  const VarList src = source_variables(2);
  for (int trial = 0; trial < 12; ++trial) {
    const Poly h1 = gen::small_poly_at_origin(rng, src, 4, 4);
    const Poly h2 = gen::small_poly_at_origin(rng, src, 4, 4);
    const GermSpec f("random", 2, {{"p0", {Poly::variable(src, 0), h1, h2}}});
    const auto st = multiple_point_ideal(f, 3, {0, 0, 0});
    const auto& vars = st.variables;
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}, {1, 3}}) {
      Assignment swap{{vars.name(a), Poly::variable(vars, b)}, {vars.name(b), Poly::variable(vars, a)}};
      std::vector<Poly> permuted;
      for (const auto& g : st.generators) permuted.push_back(substitute(g, swap, vars));
      CHECK(same_local_ideal(permuted, st.generators, vars));
    }
  }
}

TEST_CASE("property: divided differences restrict to scaled derivatives on the diagonal") {
  SeededSampler rng(77);
  const VarList src = source_variables(2);
  const VarList vars = multiple_point_variables(2, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const Poly h = gen::small_poly(rng, src, 5, 6);
    const auto diffs = divided_differences(h, vars, {1, 2, 3, 4});
    REQUIRE(diffs.size() == 3);
    Assignment diagonal;
    for (std::size_t i = 2; i <= 4; ++i) diagonal.emplace(vars.name(i), Poly::variable(src, 1));
    Poly derivative = h;
    for (unsigned j = 1; j <= 3; ++j) {
      derivative = derivative.derivative(1);
      const Rational scale(1, factorial(j).get_ui());
      Assignment rename = diagonal;
      rename.emplace(vars.name(1), Poly::variable(src, 1));
      CHECK(substitute(diffs[j - 1], rename, src) == derivative * scale);
    }
  }
}

TEST_CASE("double point projection reproduces the higher multiple point spaces") {
  for (const auto& f : all_corpus()) {
    CAPTURE(f.name());
    const auto r = verify_multiple_point_structure(f, 9);
    if (f.name() == "immersion") {
      CHECK_THROWS_AS(double_point_projection(f, r, 9), Error);
      continue;
    }
    const auto pair = double_point_projection(f, r, 9);
    CHECK(pair.verified);
    CHECK(pair.source_dim == f.source_dim() - 1);
    for (const auto& entry : pair.table) CHECK(entry.verified);
  }
}

TEST_CASE("double point projection counts target points per branch") {
  const auto lines = corpus::three_lines();
  const auto pl = double_point_projection(lines, verify_multiple_point_structure(lines, 1), 1);
  CHECK(pl.point_count() == 6);
  CHECK(pl.target_count() == 3);
  CHECK(pl.milnor_sum() == 0);

  const auto planes = corpus::two_planes();
  const auto pp = double_point_projection(planes, verify_multiple_point_structure(planes, 1), 1);
  CHECK(pp.point_count() == 2);
  CHECK(pp.target_count() == 2);

  const auto s1 = corpus::s1();
  const auto ps = double_point_projection(s1, verify_multiple_point_structure(s1, 1), 1);
  CHECK(ps.target_count() == 1);
  CHECK(ps.milnor_sum() == 1);

  const auto cusp = corpus::cusp_curve();
  const auto pc = double_point_projection(cusp, verify_multiple_point_structure(cusp, 1), 1);
  CHECK(pc.milnor_sum() == 1);
}
