#include <doctest.h>

#include <filesystem>

#include "generators.hpp"
#include "germlab/error.hpp"
#include "germlab/local_algebra.hpp"
#include "macaulay_oracle.hpp"

using namespace germlab;

namespace {

LocalIdeal ideal(std::initializer_list<const char*> texts, const VarList& vars) {
  std::vector<Poly> gens;
  for (const char* t : texts) gens.push_back(parse_polynomial(t, vars));
  return LocalIdeal(vars, std::move(gens));
}

std::uint64_t oracle_dim(std::vector<Poly> gens, std::size_t nvars) {
  const auto d = oracle::local_dimension(gens, nvars);
  REQUIRE(d.has_value());
  return *d;
}

const VarList xy{"x", "y"};

}  // namespace

TEST_CASE("local quotient dimensions agree with the oracle") {
  CHECK(local_quotient_dimension(ideal({"x", "y"}, xy)) == QuotientDimension::finite(1));
  const auto jac = ideal({"3*x^2", "2*y"}, xy);
  CHECK(local_quotient_dimension(jac) == QuotientDimension::finite(2));
  CHECK(oracle_dim(jac.generators(), 2) == 2);
  const VarList x{"x"};
  const auto nonglobal = ideal({"x^2-x^3"}, x);
  CHECK(local_quotient_dimension(nonglobal) == QuotientDimension::finite(2));
  CHECK(oracle_dim(nonglobal.generators(), 1) == 2);
  CHECK(local_quotient_dimension(LocalIdeal(xy, {})) == QuotientDimension::infinite());
}

TEST_CASE("cap exceeded is a value of the quotient dimension") {
  ComputeOptions tight;
  tight.degree_cap = 3;
  tight.use_cache = false;
  CHECK(local_quotient_dimension(ideal({"x^7+y^5", "x*y^4"}, xy), tight) ==
        QuotientDimension::cap_exceeded());
}

TEST_CASE("base points are translated to the origin") {
  const LocalIdeal shifted(xy, {parse_polynomial("(x-1)^2", xy), parse_polynomial("y-2", xy)},
                           {Rational(1), Rational(2)});
  CHECK(local_quotient_dimension(shifted) == QuotientDimension::finite(2));
  const LocalIdeal away(xy, {parse_polynomial("x-1", xy)});
  CHECK(away.is_unit());
  CHECK(local_quotient_dimension(away) == QuotientDimension::finite(0));
}

TEST_CASE("Milnor numbers of plane curves") {
  CHECK(milnor_icis(ideal({"y^2-x^3"}, xy), 1).milnor == 2);
  CHECK(milnor_icis(ideal({"x^4+y^3"}, xy), 1).milnor == 6);
  CHECK(milnor_icis(ideal({"x*y"}, xy), 1).milnor == 1);
  CHECK(milnor_icis(ideal({"x+y^2"}, xy), 1).milnor == 0);
}

TEST_CASE("Milnor number of a space curve ICIS") {
  const VarList v{"x", "y1", "y2"};
  const auto d2 = ideal({"y1+y2", "y1^2+y1*y2+y2^2-x^2"}, v);
  const auto m = milnor_icis(d2, 3);
  CHECK(m.milnor == 1);
  CHECK_FALSE(m.flagged);
}

TEST_CASE("Milnor number of a non-linear space curve") {
  // (x^2 + y^2 + z^2, x*y) is a curve with four lines, mu = 5.
  const VarList v{"x", "y", "z"};
  CHECK(milnor_icis(ideal({"x^2+y^2+z^2", "x*y"}, v), 1).milnor == 5);
}

TEST_CASE("Milnor numbers of trivial cases") {
  CHECK(milnor_icis(LocalIdeal(VarList{}, {}), 1).milnor == 0);
  CHECK(milnor_icis(LocalIdeal(xy, {}), 1).milnor == 0);
  const VarList x{"x"};
  CHECK(milnor_icis(ideal({"x^3"}, x), 1).milnor == 2);
}

TEST_CASE("non-isolated singularities are reported") {
  bool thrown = false;
  try {
    milnor_icis(ideal({"x^2*y^2"}, xy), 1);
  } catch (const Error& e) {
    thrown = e.code() == ErrorCode::NotIsolated;
  }
  CHECK(thrown);
}

TEST_CASE("Tjurina numbers") {
  CHECK(tjurina_icis(ideal({"y^2-x^3"}, xy)) == 2);
  CHECK(tjurina_icis(ideal({"x*y"}, xy)) == 1);
  CHECK(tjurina_icis(ideal({"x"}, xy)) == 0);
  // x^5 + y^5 + x^2*y^2 is not quasi-homogeneous: tau < mu.
  const auto nqh = ideal({"x^5+y^5+x^2*y^2"}, xy);
  const auto tau = tjurina_icis(nqh);
  const auto mu = hypersurface_milnor(nqh);
  CHECK(tau < mu);
  std::vector<Poly> tj{nqh.generators()[0], nqh.generators()[0].derivative(0),
                       nqh.generators()[0].derivative(1)};
  CHECK(tau == oracle_dim(tj, 2));
}

TEST_CASE("Tjurina number of a space curve ICIS") {
  // Weighted homogeneous complete intersection, so tau = mu.
  const VarList v{"x", "y", "z"};
  const auto curve = ideal({"x^2+y^2+z^2", "x*y"}, v);
  CHECK(tjurina_icis(curve) == 5);
}

TEST_CASE("mu equals tau on weighted homogeneous examples") {
  for (const auto& text : {"y^2-x^3", "x^4+y^3", "x*y", "x^2+y^2"}) {
    const auto I = ideal({text}, xy);
    CHECK(milnor_icis(I, 5).milnor == tjurina_icis(I));
  }
}

TEST_CASE("multiplicity of map germs") {
  const std::vector<Poly> crosscap{parse_polynomial("x", xy), parse_polynomial("y^2", xy),
                                   parse_polynomial("x*y", xy)};
  CHECK(germ_multiplicity(crosscap) == QuotientDimension::finite(2));
  CHECK(oracle_dim(crosscap, 2) == 2);
  const VarList t{"t"};
  const std::vector<Poly> cusp{parse_polynomial("t^2", t), parse_polynomial("t^3", t)};
  CHECK(germ_multiplicity(cusp) == QuotientDimension::finite(2));
  const std::vector<Poly> immersion{parse_polynomial("x", xy), parse_polynomial("y", xy),
                                    Poly(xy)};
  CHECK(germ_multiplicity(immersion) == QuotientDimension::finite(1));
  const std::vector<Poly> not_finite{parse_polynomial("x", xy), Poly(xy)};
  CHECK(germ_multiplicity(not_finite) == QuotientDimension::infinite());
}

TEST_CASE("ICIS profile") {
  const VarList v{"x", "y1", "y2"};
  const auto p = icis_profile(ideal({"y1+y2", "y1^2+y1*y2+y2^2-x^2"}, v), 1, true);
  CHECK(p.ambient_dim == 3);
  CHECK(p.codim == 2);
  CHECK(p.dim == 1);
  CHECK(p.milnor == 1);
  CHECK(p.tjurina == 1);
  CHECK(p.multiplicity == 2);
}

TEST_CASE("property: hypersurface recursion matches the Jacobian quotient") {
  SeededSampler rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = rng.uniform(2, 5);
    const auto b = rng.uniform(2, 5);
    Poly g = parse_polynomial("x^" + std::to_string(a) + "+y^" + std::to_string(b), xy);
    Poly extra = gen::small_poly_at_origin(rng, xy, 2, 6);
    // Keep only terms above the Newton diagonal so the singularity stays isolated.
    std::vector<Poly::Term> high;
    for (const auto& t : extra.terms()) {
      if (t.exponents[0] * b + t.exponents[1] * a > a * b) high.push_back(t);
    }
    g += Poly::from_terms(xy, std::move(high));
    const LocalIdeal I(xy, {g});
    CHECK(milnor_icis(I, static_cast<std::uint64_t>(trial)).milnor == hypersurface_milnor(I));
    CHECK(hypersurface_milnor(I) == static_cast<std::uint64_t>((a - 1) * (b - 1)));
  }
}

TEST_CASE("property: two seeds agree") {
  const VarList v{"x", "y", "z"};
  for (const auto& I : {ideal({"x^2+y^2+z^2", "x*y"}, v), ideal({"x^3+y^2+z^2"}, v),
                        ideal({"x*y", "x^2+y^2+z^3"}, v)}) {
    const auto a = milnor_icis(I, 1);
    const auto b = milnor_icis(I, 987654321);
    CHECK(a.milnor == b.milnor);
    CHECK_FALSE(a.flagged);
    CHECK_FALSE(b.flagged);
  }
}

TEST_CASE("disk cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "germlab-cache-test";
  std::filesystem::remove_all(dir);
  auto& cache = StandardBasisCache::instance();
  const std::string saved = cache.directory();
  cache.set_directory(dir.string());
  cache.clear_memory();
  const auto I = ideal({"x^3-y^2", "x*y^2"}, xy);
  const auto first = local_quotient_dimension(I);
  CHECK(std::distance(std::filesystem::directory_iterator(dir),
                      std::filesystem::directory_iterator{}) >= 1);
  cache.clear_memory();
  CHECK(local_quotient_dimension(I) == first);
  ComputeOptions off;
  off.use_cache = false;
  CHECK(local_quotient_dimension(I, off) == first);
  cache.set_directory(saved);
  std::filesystem::remove_all(dir);
}

TEST_CASE("property: non-generic forms never change the answer") {
  // Forms vanishing on one of the axes are drawn for some seeds; such draws
  // must be discarded rather than reported.
  const auto axes = ideal({"x*y"}, xy);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CAPTURE(seed);
    const auto m = milnor_icis(axes, seed);
    CHECK(m.milnor == 1);
    const auto len = generic_section_length(xy, axes.generators(), 1, seed);
    REQUIRE(len.has_value());
    CHECK(len->length == 2);
  }
  // The whole plane cut by one line is still a curve.
  CHECK_FALSE(generic_section_length(xy, {}, 1, 1).has_value());
}
