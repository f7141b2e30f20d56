#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace germlab {

/// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t value);

/// Derives a child seed from a parent seed and a textual context key, so
/// that every stratum/level gets a seed independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view context);
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

/// Deterministic integer sampler. std::uniform_int_distribution is
/// implementation-defined, so bounded draws use rejection sampling on top of
/// mt19937_64 to keep outputs identical across standard libraries.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Uniform integer in [lo, hi] \ {0}.
  std::int64_t uniform_nonzero(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Coefficient range for generic linear forms.
inline constexpr std::int64_t kGenericCoefficientBound = 40;

}  // namespace germlab
