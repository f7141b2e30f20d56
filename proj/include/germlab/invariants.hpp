#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germlab/equising.hpp"
#include "germlab/germ.hpp"
#include "germlab/multipoint.hpp"
#include "germlab/symrep.hpp"

namespace germlab {

/// One row of the equivariant Euler characteristic table: a stratum
/// D^k(f, gamma) for one canonical branch tuple.
struct EquivariantEntry {
  unsigned k = 0;
  PartitionData gamma;
  std::vector<std::size_t> branch_tuple;
  std::uint64_t weight = 1;
  StratumStatus status = StratumStatus::Empty;
  int expected_dim = 0;
  unsigned dim = 0;
  std::uint64_t milnor = 0;
  std::uint64_t m0 = 0;
  /// Connected components of the stable-fibre stratum: 1 for a non-empty
  /// positive-dimensional piece, m0 for points, 0 otherwise.
  std::uint64_t beta0 = 0;
  Rational marar;
  /// beta0 + (-1)^dim mu, or m0 for points; 0 for negative dimension.
  std::int64_t chi = 0;
};

struct EquivariantTable {
  StructureReport structure;
  std::vector<EquivariantEntry> entries;
};

/// Classifies every stratum and tabulates the Euler characteristic data.
/// Throws NotAFiniteOrBug when the structure check reports a violation.
EquivariantTable equivariant_euler_data(const GermSpec& f, std::uint64_t seed,
                                        const ComputeOptions& options = {});

/// Solves Marar's formula 1 + (-1)^n mu_I = #S + sum a_gamma chi(k, gamma).
/// Throws NonIntegerResult if the solution is not a non-negative integer.
std::uint64_t image_milnor_number(const StructureReport& structure);

/// Structure check followed by image_milnor_number. Throws NotAFiniteOrBug
/// when the structure is inconsistent.
std::uint64_t image_milnor_of(const GermSpec& f, std::uint64_t seed,
                              const ComputeOptions& options = {});

/// The same formula for the pair (D^2(f), pi), summed over the points of the
/// target multi-germ of pi:
/// s_D + (-1)^(n-1) mu_D = #S' + (-1)^(n-1) mu(D^2) + sum a_gamma chi_f(k+1, gamma+(1)).
std::uint64_t image_milnor_number(const DoublePointPair& pair);

/// mu_D(f); 0 when there are no double points.
std::uint64_t double_point_milnor(const GermSpec& f, const StructureReport& structure,
                                  std::uint64_t seed, const ComputeOptions& options = {});

/// Every stratum is smooth of the expected dimension or empty.
bool is_stable(const StructureReport& structure);

/// (1/k!) sum over classes of class_size * sign * chi(k, gamma).
Rational alternating_euler_characteristic(const StructureReport& structure, unsigned k);

/// Alternating multiplicity of H_0 of the multiple point space of a stable
/// unfolding, i.e. of the permutation module on non-empty ordered k-tuples.
Integer alternating_component_rank(const StructureReport& structure, unsigned k);

/// (mu_1^Alt, ..., mu_{d+1}^Alt). Throws HoustonSumViolation when an entry is
/// negative or non-integral, or when the sum differs from mu_I.
std::vector<std::uint64_t> alternating_milnor_numbers(const StructureReport& structure,
                                                      std::uint64_t image_milnor);

struct ZeroStableCounts {
  /// Cross-caps (n = 2 only).
  std::optional<std::uint64_t> cross_caps;
  /// Triple points (n = 2).
  std::optional<std::uint64_t> triple_points;
  /// Quadruple points (n = 3).
  std::optional<std::uint64_t> quadruple_points;
};

/// Requires n = 2 or 3. Throws NonIntegerOrbitCount when a point count is
/// not a multiple of the orbit size.
ZeroStableCounts zero_stable_counts(const StructureReport& structure);

/// Sum of weight * mu over the identity strata of level k (m0 - 1 for points).
std::int64_t multiple_point_milnor_sum(const StructureReport& structure, unsigned k);

struct FormulaCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SpecialChecks {
  std::vector<FormulaCheck> checks;
  /// mu(D^3) + mu_3^Alt - 2(mu_D - 4Q - mu(D^2)) for n = 3.
  std::optional<std::int64_t> mu3_trivial;

  bool passed() const;
};

SpecialChecks special_formula_checks(const StructureReport& structure, std::uint64_t mu_i,
                                     std::uint64_t mu_d, std::int64_t mu_d2,
                                     const std::vector<std::uint64_t>& alternating,
                                     const ZeroStableCounts& counts);

struct LeGreuelReport {
  std::uint64_t image_milnor = 0;
  /// mu_I of a transverse slice (n >= 2).
  std::optional<std::uint64_t> slice_image_milnor;
  /// m0(f) for curve germs.
  std::optional<std::uint64_t> multiplicity;
  /// Critical points of a generic linear function on the stable image.
  std::uint64_t critical_points = 0;
  bool flagged = false;
};

LeGreuelReport le_greuel_report(const GermSpec& f, std::uint64_t seed,
                                const ComputeOptions& options = {});

struct InvariantReport {
  std::string name;
  unsigned n = 0;
  std::size_t s = 0;
  unsigned d = 1;
  std::uint64_t seed = 0;
  /// Empty when every consistency check passed.
  std::optional<std::string> inconsistency;
  std::optional<std::string> inconsistency_code;

  EquivariantTable table;
  std::uint64_t mu_i = 0;
  std::uint64_t mu_d = 0;
  /// mu(D^2(f)) summed over the double point strata.
  std::int64_t mu_d2 = 0;
  std::optional<DoublePointPair> pair;
  std::vector<std::uint64_t> mu_alt;
  bool stable = false;
  ZeroStableCounts counts;
  SpecialChecks checks;
  std::optional<LeGreuelReport> le_greuel;
  std::optional<MuStarSequences> mu_star;
  std::optional<TopRowComparison> top_row;
  /// GENERICITY_FLAGGED, ASSUMED_CONNECTED.
  std::vector<std::string> flags;

  bool consistent() const { return !inconsistency.has_value(); }
};

/// Everything above for one germ. Consistency failures (Houston sum, formula
/// checks, non-integral solutions) are recorded in the report rather than
/// thrown; input and resource errors propagate.
InvariantReport compute_invariants(const GermSpec& f, std::uint64_t seed,
                                   const ComputeOptions& options = {});

}  // namespace germlab
