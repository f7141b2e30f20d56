#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/germ.hpp"
#include "germlab/local_algebra.hpp"

namespace germlab {

/// First truncation order of the implicit function solved during slicing.
inline constexpr unsigned kInitialSliceTruncation = 12;
/// Step by which the truncation order is raised when the result moves.
inline constexpr unsigned kSliceTruncationStep = 6;

/// Intersects with the target hyperplane form . (X1..X_{n-1}, Y1, Y2) = 0 by
/// solving for x_{n-1} as a power series truncated at `truncation`. The
/// result is the germ (x1..x_{n-2}, y) -> (X1..X_{n-2}, Y1, Y2) in normal
/// form. Throws DegenerateForm when the hyperplane is tangent to a branch.
GermSpec slice_with_form(const GermSpec& f, const std::vector<Rational>& form,
                         unsigned truncation);

struct SliceResult {
  GermSpec germ;
  /// Coefficients of the target linear form that was used.
  std::vector<Rational> form;
  unsigned truncation = 0;
  /// mu_I of the slice.
  std::uint64_t image_milnor = 0;
  /// The certification draws disagreed and the minimum was taken.
  bool flagged = false;
  /// mu_I for every draw, in draw order.
  std::vector<std::uint64_t> samples;
};

/// Generic transverse slice of a germ with n >= 2. Two independent forms are
/// drawn and their slices compared through mu_I; on disagreement further
/// forms are drawn and the minimum is kept. The truncation order is raised
/// until mu_I no longer changes.
SliceResult transverse_slice(const GermSpec& f, std::uint64_t seed,
                             const ComputeOptions& options = {});

/// Levels 0..n-1; level 0 is f itself with empty form.
struct SliceChain {
  std::vector<SliceResult> levels;
};

SliceChain slice_chain(const GermSpec& f, std::uint64_t seed, const ComputeOptions& options = {});

struct MuStarSequences {
  /// mu_I of every level of the slice chain.
  std::vector<std::uint64_t> mu_star;
  /// mu_D of levels 1..n-2, i.e. mu_I of the double point pairs with the
  /// first entry dropped.
  std::vector<std::uint64_t> mu_tilde;
  bool flagged = false;
};

MuStarSequences mu_star_sequences(const GermSpec& f, std::uint64_t seed,
                                  const ComputeOptions& options = {});
MuStarSequences mu_star_sequences(const SliceChain& chain, std::uint64_t seed,
                                  const ComputeOptions& options = {});

enum class Verdict { WhitneyEquisingular, TargetOnly, NotEquisingular };

std::string_view to_string(Verdict verdict);

struct SampleEvidence {
  Rational t;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> mu_star;
  std::vector<std::uint64_t> mu_tilde;
  /// mu(D^2(f_t)) and mu_D(f_t).
  std::int64_t mu_d2 = 0;
  std::uint64_t mu_d = 0;
  bool flagged = false;
};

struct FamilyVerdict {
  std::string family;
  Verdict verdict = Verdict::NotEquisingular;
  std::uint64_t seed = 0;
  /// t = 0 first, then the random samples.
  std::vector<SampleEvidence> samples;
  bool mu_star_constant = true;
  bool mu_tilde_constant = true;
  bool mu_d2_constant = true;
  /// Entries that differ from their value at t = 0, e.g. "mu_star[1]".
  std::vector<std::string> jumps;
  std::vector<std::string> flags;
};

/// Compares mu_I* and the reduced double point sequence at t = 0 against
/// `t_samples` random rational values of t. Failures of a sampled member are
/// reported as UnstableGenericMember.
FamilyVerdict whitney_verdict(const FamilySpec& family, unsigned t_samples, std::uint64_t seed,
                              const ComputeOptions& options = {});

/// Random non-zero rational with numerator in [-40,40] and denominator in [1,9].
Rational random_parameter(SeededSampler& rng);

}  // namespace germlab
