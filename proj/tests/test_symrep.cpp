#include <doctest.h>

#include "germlab/error.hpp"
#include "germlab/symrep.hpp"

using namespace germlab;

namespace {

Rational inner_product(unsigned k, Isotype a, Isotype b) {
  Rational total = 0;
  for (const auto& g : partitions_of(k)) {
    total += Rational(g.class_size * character_value(a, g) * character_value(b, g));
  }
  return total / Rational(factorial(k));
}

std::map<std::vector<unsigned>, Integer> counts(unsigned k,
                                                std::initializer_list<long> by_class) {
  std::map<std::vector<unsigned>, Integer> out;
  auto it = by_class.begin();
  for (const auto& g : partitions_of(k)) out[g.parts] = Integer(*it++);
  return out;
}

}  // namespace

TEST_CASE("partitions of small k") {
  const auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].label() == "(3)");
  CHECK(p3[1].label() == "(2,1)");
  CHECK(p3[2].label() == "(1,1,1)");
  CHECK(p3[0].class_size == 2);
  CHECK(p3[1].class_size == 3);
  CHECK(p3[2].class_size == 1);
  const auto p1 = partitions_of(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].label() == "(1)");
  const auto p5 = partitions_of(5);
  CHECK(p5.size() == 7);
  Integer sum = 0;
  for (const auto& g : p5) sum += g.class_size;
  CHECK(sum == 120);
}

TEST_CASE("Marar coefficients") {
  CHECK(marar_coefficient(make_partition({1, 1})) == make_rational(-1, 2));
  CHECK(marar_coefficient(make_partition({2})) == make_rational(1, 2));
  CHECK(marar_coefficient(make_partition({1, 1, 1})) == make_rational(1, 6));
  CHECK(marar_coefficient(make_partition({2, 1})) == make_rational(-1, 2));
  CHECK(marar_coefficient(make_partition({3})) == make_rational(1, 3));
  CHECK(marar_coefficient(make_partition({1})) == 1);
}

TEST_CASE("hook character on the symmetric group on three letters") {
  CHECK(hook_character(make_partition({1, 1, 1})) == 2);
  CHECK(hook_character(make_partition({2, 1})) == 0);
  CHECK(hook_character(make_partition({3})) == -1);
  CHECK_THROWS_AS(hook_character(make_partition({1})), Error);
}

TEST_CASE("isotype multiplicities in permutation modules") {
  // classes of S3 in order (3), (2,1), (1,1,1)
  CHECK(isotype_rank_points(counts(3, {0, 0, 6}), 3, Isotype::Alternating) == 1);
  CHECK(isotype_rank_points(counts(2, {2, 2}), 2, Isotype::Alternating) == 0);
  CHECK(isotype_rank_points(counts(2, {0, 2}), 2, Isotype::Alternating) == 1);
  CHECK(isotype_rank_points(counts(3, {0, 0, 6}), 3, Isotype::Hook) == 2);
  CHECK(isotype_rank_points(counts(3, {0, 1, 3}), 3, Isotype::Trivial) == 1);
  try {
    isotype_rank_points(counts(2, {0, 1}), 2, Isotype::Alternating);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegerMultiplicity);
  }
}

TEST_CASE("top row ranks") {
  auto r = top_row_ranks(4, 2);
  CHECK(r.corner_rank == 3);
  CHECK(r.weighted_rank == 8);
  r = top_row_ranks(3, 2);
  CHECK(r.corner_rank == 1);
  CHECK(r.weighted_rank == 3);
  r = top_row_ranks(2, 1);
  CHECK(r.corner_rank == 1);
  CHECK(r.weighted_rank == 2);
}

TEST_CASE("top row comparison keeps the printed coefficient visible") {
  const auto c = compare_top_row(4, 2);
  CHECK(c.direct_sum == 8);
  CHECK(c.closed_form == 8);
  CHECK(c.stated_value == 32);
  CHECK(c.closed_form_matches_sum);
  CHECK_FALSE(c.stated_matches_sum);
}

TEST_CASE("property: class sizes and signs") {
  for (unsigned k = 1; k <= 8; ++k) {
    Integer sizes = 0;
    Integer signed_sizes = 0;
    for (const auto& g : partitions_of(k)) {
      unsigned total = 0;
      unsigned weighted = 0;
      for (unsigned r : g.parts) total += r;
      for (unsigned i = 1; i <= k; ++i) weighted += i * g.alpha[i];
      CHECK(total == k);
      CHECK(weighted == k);
      sizes += g.class_size;
      signed_sizes += g.class_size * g.sign;
    }
    CHECK(sizes == factorial(k));
    if (k >= 2) CHECK(signed_sizes == 0);
  }
}

TEST_CASE("property: hook character orthogonality") {
  for (unsigned k = 2; k <= 7; ++k) {
    CHECK(inner_product(k, Isotype::Hook, Isotype::Hook) == 1);
    CHECK(inner_product(k, Isotype::Hook, Isotype::Alternating) == 0);
    // For k = 2 the hook shape (2) is the trivial representation itself.
    CHECK(inner_product(k, Isotype::Hook, Isotype::Trivial) == (k == 2 ? 1 : 0));
    CHECK(hook_character(make_partition(std::vector<unsigned>(k, 1))) ==
          static_cast<std::int64_t>(k) - 1);
  }
}

TEST_CASE("property: corner rank identity") {
  for (unsigned s = 2; s <= 12; ++s) {
    for (unsigned d = 1; d < s; ++d) {
      const auto r = top_row_ranks(s, d);
      CHECK(r.corner_rank == binomial(s - 1, d));
      const auto c = compare_top_row(s, d);
      CHECK(c.closed_form_matches_sum);
    }
  }
}

TEST_CASE("property: restriction of free orbits multiplies the alternating part") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (long orbits = 1; orbits <= 3; ++orbits) {
      std::map<std::vector<unsigned>, Integer> big, small;
      for (const auto& g : partitions_of(n + 1)) {
        big[g.parts] = g.parts.size() == n + 1 ? factorial(n + 1) * orbits : Integer(0);
      }
      for (const auto& g : partitions_of(n)) {
        small[g.parts] = g.parts.size() == n ? factorial(n + 1) * orbits : Integer(0);
      }
      const Integer upper = isotype_rank_points(big, n + 1, Isotype::Alternating);
      const Integer lower = isotype_rank_points(small, n, Isotype::Alternating);
      CHECK(upper * (n + 1) == lower);
    }
  }
}
