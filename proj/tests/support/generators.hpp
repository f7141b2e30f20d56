#pragma once

#include <cstdint>
#include <vector>

#include "germlab/poly.hpp"
#include "germlab/random.hpp"

namespace gen {

/// Random sparse polynomial with small integer or half-integer coefficients.
inline germlab::Poly small_poly(germlab::SeededSampler& rng, const germlab::VarList& vars,
                                unsigned max_terms = 4, unsigned max_degree = 3) {
  std::vector<germlab::Poly::Term> terms;
  const auto count = rng.uniform(0, max_terms);
  for (std::int64_t i = 0; i < count; ++i) {
    germlab::Poly::Term t;
    unsigned budget = static_cast<unsigned>(rng.uniform(0, max_degree));
    for (std::size_t v = 0; v < vars.size() && budget > 0; ++v) {
      const auto e = static_cast<unsigned>(rng.uniform(0, budget));
      t.exponents[v] = static_cast<std::uint16_t>(e);
      budget -= e;
    }
    t.coefficient = germlab::make_rational(rng.uniform_nonzero(-5, 5), rng.uniform(1, 2));
    terms.push_back(t);
  }
  return germlab::Poly::from_terms(vars, std::move(terms));
}

/// Random polynomial vanishing at the origin.
inline germlab::Poly small_poly_at_origin(germlab::SeededSampler& rng,
                                          const germlab::VarList& vars, unsigned max_terms = 4,
                                          unsigned max_degree = 3) {
  germlab::Poly p = small_poly(rng, vars, max_terms, max_degree);
  return p - germlab::Poly::constant(vars, p.constant_term());
}

}  // namespace gen
