#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "germlab/poly.hpp"
#include "germlab/random.hpp"
#include "germlab/standard_basis.hpp"

namespace germlab {

struct ComputeOptions {
  unsigned degree_cap = 60;
  bool use_cache = true;
  /// Extra linear forms drawn when the first two disagree.
  unsigned genericity_retries = 4;
};

/// Ideal of the local ring at a rational base point. Generators are stored
/// translated so that the base point is the origin.
class LocalIdeal {
 public:
  LocalIdeal(VarList vars, std::vector<Poly> generators, std::vector<Rational> base_point = {});

  const VarList& variables() const { return vars_; }
  /// Generators in coordinates centred at the base point, zeros removed.
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Rational>& base_point() const { return base_point_; }
  /// Some generator is a unit of the local ring.
  bool is_unit() const;

  std::string canonical_key() const;
  std::shared_ptr<const StandardBasis> standard_basis(const ComputeOptions& options = {}) const;

 private:
  VarList vars_;
  std::vector<Poly> gens_;
  std::vector<Rational> base_point_;
};

/// Process-wide standard basis cache. Entries are keyed by the canonical
/// ideal text; when a directory is configured (GERMLAB_CACHE_DIR at first
/// use, or set_directory) entries are also persisted as hash-named files.
class StandardBasisCache {
 public:
  static StandardBasisCache& instance();

  std::shared_ptr<const StandardBasis> find(const std::string& key);
  void store(const std::string& key, std::shared_ptr<const StandardBasis> basis);
  void clear_memory();
  void set_directory(std::string dir);
  const std::string& directory() const { return dir_; }

  static std::string file_name(const std::string& key);

 private:
  StandardBasisCache();

  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::string dir_;
};

/// Standard basis of the ideal generated by `gens` at the origin, through
/// the cache when enabled.
std::shared_ptr<const StandardBasis> ideal_standard_basis(const std::vector<Poly>& gens,
                                                          const VarList& vars,
                                                          const ComputeOptions& options);

/// Length of O/I. CAP_EXCEEDED is reported as a value rather than thrown.
QuotientDimension local_quotient_dimension(const LocalIdeal& ideal,
                                           const ComputeOptions& options = {});

/// Length of O/(gens) at the origin; throws on CAP_EXCEEDED.
QuotientDimension quotient_dimension(const std::vector<Poly>& gens, const VarList& vars,
                                     const ComputeOptions& options = {});

struct Reduction {
  VarList vars;
  std::vector<Poly> gens;
};

/// Replaces generators of the form c*v + h (h free of v, c constant) by the
/// substitution v = -h/c. The local rings before and after are isomorphic.
Reduction eliminate_linear_variables(const VarList& vars, std::vector<Poly> gens);

/// Random integer linear form in [-40,40]^N, not identically zero.
Poly random_linear_form(const VarList& vars, SeededSampler& rng);

/// Intersects with the hyperplane p = 0 by eliminating the last variable
/// that p involves.
Reduction restrict_to_hyperplane(const VarList& vars, const std::vector<Poly>& gens,
                                 const Poly& p);

/// Intersects with `count` random hyperplanes through the origin.
Reduction generic_linear_section(const VarList& vars, const std::vector<Poly>& gens,
                                 unsigned count, std::uint64_t seed);

struct SectionLength {
  std::uint64_t length = 0;
  bool flagged = false;
};

/// Length of O/(gens) cut by `count` random hyperplanes through the origin,
/// with the two-draw agreement protocol of milnor_icis. Nullopt when every
/// draw has infinite length.
std::optional<SectionLength> generic_section_length(const VarList& vars,
                                                   const std::vector<Poly>& gens, unsigned count,
                                                   std::uint64_t seed,
                                                   const ComputeOptions& options = {});

struct MilnorResult {
  std::uint64_t milnor = 0;
  /// The two certification draws disagreed and the minimum was taken.
  bool flagged = false;
  /// Every value obtained, in draw order.
  std::vector<std::uint64_t> samples;
};

/// Milnor number of the ICIS defined by the generators via the Lê-Greuel
/// recursion with random linear forms. Throws NotIsolated when a quotient in
/// the chain is infinite.
MilnorResult milnor_icis(const LocalIdeal& ideal, std::uint64_t seed,
                         const ComputeOptions& options = {});

/// dim O/J(g) for a single hypersurface generator.
std::uint64_t hypersurface_milnor(const LocalIdeal& ideal, const ComputeOptions& options = {});

/// Length of O^r / (I O^r + columns of the Jacobian matrix).
std::uint64_t tjurina_icis(const LocalIdeal& ideal, const ComputeOptions& options = {});

/// dim O/f*m for the components of a map germ at a base point.
QuotientDimension germ_multiplicity(std::span<const Poly> components,
                                    const std::vector<Rational>& base_point = {},
                                    const ComputeOptions& options = {});

struct IcisProfile {
  std::size_t ambient_dim = 0;
  std::size_t codim = 0;
  std::size_t dim = 0;
  std::uint64_t milnor = 0;
  std::optional<std::uint64_t> tjurina;
  std::uint64_t multiplicity = 0;
  bool flagged = false;
};

IcisProfile icis_profile(const LocalIdeal& ideal, std::uint64_t seed, bool with_tjurina,
                         const ComputeOptions& options = {});

}  // namespace germlab
