#include "germlab/equising.hpp"

#include <algorithm>

#include "germlab/error.hpp"
#include "germlab/invariants.hpp"
#include "germlab/random.hpp"

namespace germlab {

namespace {

/// Coefficient of the monomial var in p.
Rational linear_coefficient(const Poly& p, std::size_t var) {
  Exponents e{};
  e[var] = 1;
  return p.coefficient(e);
}

struct Certified {
  GermSpec germ;
  unsigned truncation = 0;
  std::uint64_t image_milnor = 0;
};

Certified certified_slice(const GermSpec& f, const std::vector<Rational>& form, std::uint64_t seed,
                          const ComputeOptions& options) {
  unsigned truncation = kInitialSliceTruncation;
  GermSpec current = slice_with_form(f, form, truncation);
  std::uint64_t mu = image_milnor_of(current, seed, options);
  while (true) {
    const unsigned next = truncation + kSliceTruncationStep;
    if (next > options.degree_cap) {
      throw Error(ErrorCode::CapExceeded, "slice truncation did not stabilise below the degree cap");
    }
    GermSpec refined = slice_with_form(f, form, next);
    const std::uint64_t refined_mu = image_milnor_of(refined, seed, options);
    if (refined_mu == mu) return {std::move(current), truncation, mu};
    current = std::move(refined);
    mu = refined_mu;
    truncation = next;
  }
}

bool is_non_generic(const Error& e) {
  switch (e.code()) {
    case ErrorCode::DegenerateForm:
    case ErrorCode::NotAFiniteOrBug:
    case ErrorCode::NotIsolated:
      return true;
    default:
      return false;
  }
}

}  // namespace

GermSpec slice_with_form(const GermSpec& f, const std::vector<Rational>& form,
                         unsigned truncation) {
  const unsigned n = f.source_dim();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "slicing needs a source of dimension >= 2");
  if (form.size() != n + 1) {
    throw Error(ErrorCode::DimensionMismatch, "linear form needs one coefficient per target coordinate");
  }
  const VarList sliced = source_variables(n - 1);
  const std::size_t solved = n - 2;
  const std::string solved_name = f.variables().name(solved);
  std::vector<Branch> branches;
  for (const auto& b : f.branches()) {
    Poly g(f.variables());
    for (std::size_t i = 0; i <= n; ++i) g += b.components[i] * form[i];
    const Rational lead = linear_coefficient(g, solved);
    if (lead == 0) {
      throw Error(ErrorCode::DegenerateForm, "hyperplane is not transverse to branch " + b.base_point);
    }
    const Rational inverse = 1 / lead;
    Poly phi(sliced);
    for (unsigned iter = 0; iter <= truncation + 1; ++iter) {
      const Poly value = substitute(g, {{solved_name, phi}}, sliced, truncation);
      if (value.is_zero()) break;
      phi = (phi - value * inverse).truncated(truncation);
    }
    Branch out;
    out.base_point = b.base_point;
    for (std::size_t i = 0; i < solved; ++i) out.components.push_back(b.components[i].rebased(sliced));
    for (std::size_t i = n - 1; i <= n; ++i) {
      out.components.push_back(substitute(b.components[i], {{solved_name, phi}}, sliced, truncation));
    }
    branches.push_back(std::move(out));
  }
  return GermSpec(f.name() + "/slice", n - 1, std::move(branches));
}

SliceResult transverse_slice(const GermSpec& f, std::uint64_t seed, const ComputeOptions& options) {
  const unsigned n = f.source_dim();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "slicing needs a source of dimension >= 2");
  const unsigned draws = 2 + options.genericity_retries;
  std::vector<SliceResult> found;
  SliceResult result;
  for (unsigned i = 0; i < draws; ++i) {
    SeededSampler rng(derive_seed(seed, i));
    std::vector<Rational> form;
    for (unsigned j = 0; j <= n; ++j) {
      form.emplace_back(rng.uniform_nonzero(-kGenericCoefficientBound, kGenericCoefficientBound));
    }
    try {
      Certified c = certified_slice(f, form, derive_seed(seed, "image"), options);
      result.samples.push_back(c.image_milnor);
      found.push_back({std::move(c.germ), form, c.truncation, c.image_milnor, false, {}});
    } catch (const Error& e) {
      if (!is_non_generic(e)) throw;
      continue;
    }
    if (found.size() == 2 && found[0].image_milnor == found[1].image_milnor) break;
  }
  if (found.empty()) {
    throw Error(ErrorCode::DegenerateForm, "no transverse slice found for " + f.name());
  }
  const auto best = std::min_element(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.image_milnor < b.image_milnor;
  });
  const auto samples = result.samples;
  result = std::move(*best);
  result.samples = samples;
  result.flagged = !(samples.size() == 2 && samples[0] == samples[1]);
  return result;
}

SliceChain slice_chain(const GermSpec& f, std::uint64_t seed, const ComputeOptions& options) {
  SliceChain chain;
  SliceResult top;
  top.germ = f;
  top.image_milnor = image_milnor_of(f, seed, options);
  top.samples = {top.image_milnor};
  chain.levels.push_back(std::move(top));
  for (unsigned i = 1; i < f.source_dim(); ++i) {
    chain.levels.push_back(transverse_slice(chain.levels.back().germ,
                                            derive_seed(seed, "level " + std::to_string(i)),
                                            options));
  }
  return chain;
}

MuStarSequences mu_star_sequences(const SliceChain& chain, std::uint64_t seed,
                                  const ComputeOptions& options) {
  MuStarSequences out;
  for (const auto& level : chain.levels) {
    out.mu_star.push_back(level.image_milnor);
    out.flagged = out.flagged || level.flagged;
  }
  const std::size_t n = chain.levels.front().germ.source_dim();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const GermSpec& g = chain.levels[i].germ;
    const std::uint64_t level_seed = derive_seed(seed, "pair level " + std::to_string(i));
    const auto structure = verify_multiple_point_structure(g, level_seed, options);
    if (!structure.consistent()) throw Error(ErrorCode::NotAFiniteOrBug, structure.violations.front());
    out.mu_tilde.push_back(double_point_milnor(g, structure, level_seed, options));
    out.flagged = out.flagged || structure.flagged;
  }
  return out;
}

MuStarSequences mu_star_sequences(const GermSpec& f, std::uint64_t seed,
                                  const ComputeOptions& options) {
  return mu_star_sequences(slice_chain(f, seed, options), seed, options);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::WhitneyEquisingular: return "WHITNEY_EQUISINGULAR";
    case Verdict::TargetOnly: return "TARGET_ONLY";
    case Verdict::NotEquisingular: return "NOT_EQUISINGULAR";
  }
  return "?";
}

Rational random_parameter(SeededSampler& rng) {
  Rational t(rng.uniform_nonzero(-kGenericCoefficientBound, kGenericCoefficientBound),
             rng.uniform(1, 9));
  t.canonicalize();
  return t;
}

namespace {

SampleEvidence evaluate_member(const FamilySpec& family, const Rational& t, std::uint64_t seed,
                               const ComputeOptions& options) {
  SampleEvidence ev;
  ev.t = t;
  ev.seed = seed;
  const GermSpec g = family.specialize(t);
  const SliceChain chain = slice_chain(g, seed, options);
  const MuStarSequences seqs = mu_star_sequences(chain, seed, options);
  ev.mu_star = seqs.mu_star;
  ev.mu_tilde = seqs.mu_tilde;
  const auto structure = verify_multiple_point_structure(g, seed, options);
  if (!structure.consistent()) throw Error(ErrorCode::NotAFiniteOrBug, structure.violations.front());
  ev.mu_d2 = multiple_point_milnor_sum(structure, 2);
  ev.mu_d = double_point_milnor(g, structure, derive_seed(seed, "pair"), options);
  ev.flagged = seqs.flagged || structure.flagged;
  return ev;
}

void compare(const std::vector<std::uint64_t>& base, const std::vector<std::uint64_t>& other,
             const std::string& name, bool& constant, std::vector<std::string>& jumps) {
  for (std::size_t i = 0; i < base.size() && i < other.size(); ++i) {
    if (base[i] != other[i]) {
      constant = false;
      const std::string label = name + "[" + std::to_string(i) + "]";
      if (std::find(jumps.begin(), jumps.end(), label) == jumps.end()) jumps.push_back(label);
    }
  }
}

}  // namespace

FamilyVerdict whitney_verdict(const FamilySpec& family, unsigned t_samples, std::uint64_t seed,
                              const ComputeOptions& options) {
  FamilyVerdict v;
  v.family = family.name();
  v.seed = seed;
  std::vector<Rational> values{Rational(0)};
  SeededSampler rng(derive_seed(seed, "parameter"));
  while (values.size() < t_samples + 1) {
    const Rational t = random_parameter(rng);
    if (std::find(values.begin(), values.end(), t) == values.end()) values.push_back(t);
  }
  for (const auto& t : values) {
    const std::uint64_t sample_seed = derive_seed(seed, "sample " + to_string(t));
    if (t == 0) {
      v.samples.push_back(evaluate_member(family, t, sample_seed, options));
      continue;
    }
    try {
      v.samples.push_back(evaluate_member(family, t, sample_seed, options));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded) throw;
      throw Error(ErrorCode::UnstableGenericMember,
                  "member t=" + to_string(t) + " of " + family.name() + ": " + e.what());
    }
  }
  const SampleEvidence& base = v.samples.front();
  for (std::size_t i = 1; i < v.samples.size(); ++i) {
    const SampleEvidence& other = v.samples[i];
    compare(base.mu_star, other.mu_star, "mu_star", v.mu_star_constant, v.jumps);
    compare(base.mu_tilde, other.mu_tilde, "mu_tilde", v.mu_tilde_constant, v.jumps);
    if (other.mu_d2 != base.mu_d2) v.mu_d2_constant = false;
  }
  if (!v.mu_star_constant) {
    v.verdict = Verdict::NotEquisingular;
  } else if (!v.mu_tilde_constant) {
    v.verdict = Verdict::TargetOnly;
  } else {
    v.verdict = Verdict::WhitneyEquisingular;
  }
  if (std::any_of(v.samples.begin(), v.samples.end(), [](const auto& s) { return s.flagged; })) {
    v.flags.push_back("GENERICITY_FLAGGED");
  }
  if (family.branches().size() > 1) v.flags.push_back("ASSUMED_CONNECTED");
  return v;
}

}  // namespace germlab
