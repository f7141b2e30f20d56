#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "germlab/poly.hpp"

namespace oracle {

/// dim Q[x]/(I + m^N) by Gaussian elimination on the Macaulay matrix whose
/// rows are the products x^a * g (truncated at degree N).
std::uint64_t truncated_quotient_dimension(const std::vector<germlab::Poly>& gens,
                                           std::size_t nvars, unsigned n);

/// Local quotient dimension dim O/I at the origin, taken as the stable value
/// of the truncated dimension. Returns nullopt if no two consecutive
/// truncation orders up to max_order agree.
std::optional<std::uint64_t> local_dimension(const std::vector<germlab::Poly>& gens,
                                             std::size_t nvars, unsigned max_order = 16);

}  // namespace oracle
