#include "germlab/symrep.hpp"

#include <algorithm>

#include "germlab/error.hpp"

namespace germlab {

std::string PartitionData::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ")";
}

PartitionData make_partition(std::vector<unsigned> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  PartitionData p;
  for (unsigned r : parts) {
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
    p.k += r;
  }
  p.parts = std::move(parts);
  p.alpha.assign(p.k + 1, 0);
  for (unsigned r : p.parts) ++p.alpha[r];
  Integer denominator = 1;
  for (unsigned i = 1; i <= p.k; ++i) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, p.alpha[i]);
    denominator *= power * factorial(p.alpha[i]);
  }
  p.class_size = factorial(p.k) / denominator;
  p.sign = (p.k - p.num_parts()) % 2 == 0 ? 1 : -1;
  return p;
}

std::vector<PartitionData> partitions_of(unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "partitions need k >= 1");
  std::vector<PartitionData> out;
  std::vector<unsigned> current;
  auto emit = [&](auto&& self, unsigned remaining, unsigned largest) -> void {
    if (remaining == 0) {
      out.push_back(make_partition(current));
      return;
    }
    for (unsigned r = std::min(remaining, largest); r >= 1; --r) {
      current.push_back(r);
      self(self, remaining - r, r);
      current.pop_back();
    }
  };
  emit(emit, k, k);
  return out;
}

Rational marar_coefficient(const PartitionData& gamma) {
  Integer denominator = 1;
  for (unsigned i = 1; i < gamma.alpha.size(); ++i) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, gamma.alpha[i]);
    denominator *= power * factorial(gamma.alpha[i]);
  }
  Rational a(Integer(1), denominator);
  a.canonicalize();
  return (gamma.num_parts() + 1) % 2 == 0 ? a : Rational(-a);
}

std::int64_t hook_character(const PartitionData& gamma) {
  if (gamma.k < 2) throw Error(ErrorCode::InvalidArgument, "hook character needs k >= 2");
  return gamma.sign * (static_cast<std::int64_t>(gamma.fixed_points()) - 1);
}

std::int64_t character_value(Isotype which, const PartitionData& gamma) {
  switch (which) {
    case Isotype::Alternating: return gamma.sign;
    case Isotype::Trivial: return 1;
    case Isotype::Hook: return hook_character(gamma);
  }
  return 0;
}

Integer isotype_rank_points(const std::map<std::vector<unsigned>, Integer>& fixcounts,
                            unsigned k, Isotype which) {
  Rational total = 0;
  for (const auto& gamma : partitions_of(k)) {
    const auto it = fixcounts.find(gamma.parts);
    if (it == fixcounts.end()) {
      throw Error(ErrorCode::InvalidArgument, "missing fixed-point count for class " +
                                                  gamma.label());
    }
    total += Rational(gamma.class_size * character_value(which, gamma) * it->second);
  }
  total /= Rational(factorial(k));
  if (!is_integer(total) || total < 0) {
    throw Error(ErrorCode::NonIntegerMultiplicity,
                "isotype multiplicity " + to_string(total) + " is not a non-negative integer");
  }
  return total.get_num();
}

TopRowRanks top_row_ranks(unsigned s, unsigned d) {
  if (d < 1 || d >= s) throw Error(ErrorCode::InvalidArgument, "top row ranks need 1 <= d < s");
  Integer corner = 0;
  Integer weighted = 0;
  for (unsigned l = d + 1; l <= s; ++l) {
    const Integer c = binomial(s, l);
    const Integer term = l % 2 == 0 ? c : Integer(-c);
    corner += term;
    weighted += term * l;
  }
  TopRowRanks r{abs(corner), abs(weighted)};
  if (r.corner_rank != binomial(s - 1, d)) {
    throw Error(ErrorCode::CheckFailed, "corner rank differs from C(s-1,d)");
  }
  return r;
}

TopRowComparison compare_top_row(unsigned s, unsigned d) {
  const TopRowRanks ranks = top_row_ranks(s, d);
  TopRowComparison c;
  c.s = s;
  c.d = d;
  c.corner_rank = ranks.corner_rank;
  c.direct_sum = ranks.weighted_rank;
  c.closed_form = Rational(Integer(d * (d + 1)) * binomial(s, d + 1), Integer(s - 1));
  c.closed_form.canonicalize();
  c.stated_coefficient = Rational(Integer(d) * s * s, Integer(s - 1));
  c.stated_coefficient.canonicalize();
  c.stated_value = c.stated_coefficient * Rational(ranks.corner_rank);
  c.closed_form_matches_sum = c.closed_form == Rational(c.direct_sum);
  c.stated_matches_sum = c.stated_value == Rational(c.direct_sum);
  return c;
}

}  // namespace germlab
