#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/germ.hpp"
#include "germlab/local_algebra.hpp"
#include "germlab/symrep.hpp"

namespace germlab {

enum class StratumStatus { Empty, ZeroDim, Icis, NegativeDim };

std::string_view to_string(StratumStatus status);

/// D^k(f) for one ordered branch tuple, or its fixed locus D^k(f, gamma)
/// under the canonical permutation of cycle type gamma.
struct MultiplePointStratum {
  unsigned k = 0;
  std::vector<std::size_t> branch_tuple;
  /// Unset for the full multiple point space.
  std::optional<PartitionData> gamma;
  /// x1..x_{n-1}, y1..y_m with m = k for the full space and m = number of
  /// cycles for a fixed locus.
  VarList variables;
  std::vector<Poly> generators;
  /// (n+1) - 2k + number of cycles.
  int expected_dim = 0;

  bool classified = false;
  StratumStatus status = StratumStatus::Empty;
  unsigned dim = 0;
  /// Length for 0-dimensional and negative-dimensional strata, multiplicity
  /// for ICIS strata.
  std::uint64_t m0 = 0;
  std::uint64_t milnor = 0;
  bool flagged = false;

  LocalIdeal ideal() const { return LocalIdeal(variables, generators); }
  /// Euler characteristic of the corresponding stratum of a stable
  /// perturbation: m0 for points, 1 + (-1)^dim mu for ICIS, 0 otherwise.
  std::int64_t euler_characteristic() const;
  /// "k=3 (2,1) [0,0,1]".
  std::string label() const;
};

/// Variables x1..x_{n-1}, y1..y_m.
VarList multiple_point_variables(unsigned n, unsigned m);

/// Positions of the canonical permutation's cycles: consecutive blocks of
/// lengths gamma.parts.
std::vector<std::vector<std::size_t>> canonical_cycles(const PartitionData& gamma);

/// Iterated divided differences f[y_{a1}, ..., y_{ai}] for i = 2..|positions|,
/// where f is given over (x, y) and the result over `vars`.
std::vector<Poly> divided_differences(const Poly& f, const VarList& vars,
                                      const std::vector<std::size_t>& y_indices);

/// Unclassified D^k(f) for an ordered branch tuple of length k.
MultiplePointStratum multiple_point_ideal(const GermSpec& f, unsigned k,
                                          const std::vector<std::size_t>& branch_tuple);

/// Unclassified fixed locus of the canonical permutation of type gamma. The
/// branch tuple must be constant on every cycle.
MultiplePointStratum fixed_point_stratum(const MultiplePointStratum& full,
                                         const PartitionData& gamma);

/// Computes status, dimension, m0 and mu. Throws NotAFiniteOrBug when the
/// computed structure contradicts the expected dimension.
void classify_stratum(MultiplePointStratum& stratum, std::uint64_t seed,
                      const ComputeOptions& options);

/// A classified stratum standing for `weight` ordered branch tuples fixed by
/// the canonical permutation (all isomorphic by relabelling equal cycles).
struct StratumEntry {
  MultiplePointStratum stratum;
  std::uint64_t weight = 1;
};

struct GammaStrata {
  PartitionData gamma;
  std::vector<StratumEntry> entries;
  /// Sum of weight * Euler characteristic.
  std::int64_t chi = 0;
};

struct LevelData {
  unsigned k = 0;
  /// Partitions in reverse lexicographic order; the identity class is last.
  std::vector<GammaStrata> classes;
  const GammaStrata& identity() const { return classes.back(); }
  const GammaStrata& by_parts(const std::vector<unsigned>& parts) const;
};

struct StructureReport {
  unsigned n = 0;
  std::size_t s = 0;
  /// Largest k with a non-empty full stratum of non-negative expected
  /// dimension (1 when there are no double points).
  unsigned d = 1;
  /// Levels k = 2 .. d+1.
  std::vector<LevelData> levels;
  std::vector<std::string> violations;
  bool flagged = false;

  bool consistent() const { return violations.empty(); }
  const LevelData* level(unsigned k) const;
  /// chi_f(k, gamma); zero for levels that were not needed.
  std::int64_t chi(unsigned k, const std::vector<unsigned>& parts) const;
};

/// Builds and classifies every stratum D^k(f, gamma) for k = 2..d(f)+1.
StructureReport verify_multiple_point_structure(const GermSpec& f, std::uint64_t seed,
                                                const ComputeOptions& options = {});

/// Entry of the iteration table: D^k(pi, gamma) for the double point
/// projection pi corresponds to D^{k+1}(f, gamma + (1)).
struct IterationEntry {
  unsigned k = 0;
  PartitionData gamma;
  PartitionData lifted;
  std::int64_t chi = 0;
  /// The directly constructed D^k(pi) agreed with D^{k+1}(f).
  bool verified = false;
};

/// The pair (D^2(f), pi) with pi forgetting the last point.
struct DoublePointPair {
  /// Source dimension of pi, n - 1.
  unsigned source_dim = 0;
  /// Non-empty double point strata (ordered tuples, via weights).
  std::vector<StratumEntry> double_points;
  std::vector<IterationEntry> table;
  bool verified = true;

  /// Number of points of S' (non-empty ordered double point tuples).
  std::uint64_t point_count() const;
  /// Sum of the Milnor numbers of D^2(f) over S' (m0 - 1 for points).
  std::int64_t milnor_sum() const;
  /// Number of branches carrying double points, i.e. the points of the
  /// multi-germ target of pi with non-empty fibre.
  std::size_t target_count() const;
};

/// Throws EmptyDoublePoints when D^2(f) is empty.
DoublePointPair double_point_projection(const GermSpec& f, const StructureReport& structure,
                                        std::uint64_t seed, const ComputeOptions& options = {});

/// Equations of D^k(pi) built directly from the double point equations
/// at (x, y1, w) with divided differences in the w variables, over
/// multiple_point_variables(n, k+1). `tuple` is (b0; c1..ck).
std::vector<Poly> projection_multiple_point_equations(const GermSpec& f,
                                                      const std::vector<std::size_t>& tuple);

/// Mutual containment of two ideals of the local ring at the origin.
bool same_local_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b,
                      const VarList& vars, const ComputeOptions& options = {});

}  // namespace germlab
