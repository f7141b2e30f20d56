#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

/// Partition of k, i.e. a conjugacy class of the symmetric group on k letters.
struct PartitionData {
  unsigned k = 0;
  /// Parts in decreasing order.
  std::vector<unsigned> parts;
  /// alpha[i] = number of parts equal to i, for i = 0..k (alpha[0] = 0).
  std::vector<unsigned> alpha;
  Integer class_size;
  /// (-1)^(k - number of parts).
  int sign = 1;

  unsigned num_parts() const { return static_cast<unsigned>(parts.size()); }
  unsigned fixed_points() const { return alpha.size() > 1 ? alpha[1] : 0; }
  /// "(2,1,1)".
  std::string label() const;
  bool operator==(const PartitionData& other) const { return parts == other.parts; }
};

PartitionData make_partition(std::vector<unsigned> parts);

/// All partitions of k in reverse lexicographic order: (k), (k-1,1), ...
std::vector<PartitionData> partitions_of(unsigned k);

/// (-1)^(num_parts + 1) / prod i^alpha_i alpha_i!.
Rational marar_coefficient(const PartitionData& gamma);

/// Character of the hook representation (2,1,...,1) on the class gamma:
/// sign * (fixed points - 1). Requires k >= 2.
std::int64_t hook_character(const PartitionData& gamma);

enum class Isotype { Alternating, Trivial, Hook };

std::int64_t character_value(Isotype which, const PartitionData& gamma);

/// Multiplicity of an irreducible in a permutation module, given for each
/// class (keyed by its parts) the number of points fixed by an element of
/// that class. Throws NonIntegerMultiplicity when the inner product is not a
/// non-negative integer.
Integer isotype_rank_points(const std::map<std::vector<unsigned>, Integer>& fixcounts,
                            unsigned k, Isotype which);

struct TopRowRanks {
  Integer corner_rank;
  Integer weighted_rank;
};

/// corner = |sum_{l=d+1}^{s} (-1)^l C(s,l)|,
/// weighted = |sum_{l=d+1}^{s} (-1)^l l C(s,l)|. Requires 1 <= d < s.
TopRowRanks top_row_ranks(unsigned s, unsigned d);

/// The top-row relation between a germ and its double point pair, evaluated
/// three ways. `stated_value` is d s^2/(s-1) * C(s-1,d), the coefficient as
/// printed for the top-row relation, applied to the corner rank; `closed_form` is
/// d(d+1)/(s-1) * C(s,d+1); `direct_sum` is the weighted rank.
struct TopRowComparison {
  unsigned s = 0;
  unsigned d = 0;
  Integer corner_rank;
  Integer direct_sum;
  Rational closed_form;
  Rational stated_coefficient;
  Rational stated_value;
  bool closed_form_matches_sum = false;
  bool stated_matches_sum = false;
};

TopRowComparison compare_top_row(unsigned s, unsigned d);

}  // namespace germlab
