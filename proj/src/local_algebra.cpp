#include "germlab/local_algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "germlab/error.hpp"

namespace germlab {

namespace {

std::vector<Poly> drop_zeros(std::vector<Poly> gens) {
  std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
  return gens;
}

bool has_unit(const std::vector<Poly>& gens) {
  return std::any_of(gens.begin(), gens.end(),
                     [](const Poly& g) { return g.constant_term() != 0; });
}

std::string join_names(const VarList& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars.name(i);
  return out;
}

std::string ideal_key(const std::vector<Poly>& gens, const VarList& vars, unsigned cap) {
  std::string key = "ideal cap=" + std::to_string(cap) + " vars=" + join_names(vars) + " gens=";
  for (std::size_t i = 0; i < gens.size(); ++i) key += (i ? ";" : "") + gens[i].to_string();
  return key;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::shared_ptr<const StandardBasis> cached_basis(const std::string& key,
                                                  const ComputeOptions& options,
                                                  auto&& compute) {
  auto& cache = StandardBasisCache::instance();
  if (options.use_cache) {
    if (auto hit = cache.find(key)) return hit;
  }
  auto basis = std::make_shared<const StandardBasis>(compute());
  if (options.use_cache) cache.store(key, basis);
  return basis;
}

QuotientDimension finite_or_throw(const QuotientDimension& q, const char* what) {
  if (!q.is_finite()) {
    throw Error(ErrorCode::NotIsolated, std::string(what) + " has an infinite local quotient");
  }
  return q;
}

}  // namespace

// ------------------------------------------------------------ LocalIdeal

LocalIdeal::LocalIdeal(VarList vars, std::vector<Poly> generators,
                       std::vector<Rational> base_point)
    : vars_(std::move(vars)), base_point_(std::move(base_point)) {
  if (!base_point_.empty() && base_point_.size() != vars_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "base point has the wrong number of coordinates");
  }
  const bool at_origin = std::all_of(base_point_.begin(), base_point_.end(),
                                     [](const Rational& c) { return c == 0; });
  Assignment shift;
  if (!at_origin) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      shift.emplace(vars_.name(i), Poly::variable(vars_, i) + Poly::constant(vars_, base_point_[i]));
    }
  }
  for (auto& g : generators) {
    Poly h = g.variables() == vars_ ? std::move(g) : g.rebased(vars_);
    if (!at_origin) h = substitute(h, shift, vars_);
    if (!h.is_zero()) gens_.push_back(std::move(h));
  }
}

bool LocalIdeal::is_unit() const { return has_unit(gens_); }

std::string LocalIdeal::canonical_key() const { return ideal_key(gens_, vars_, 0); }

std::shared_ptr<const StandardBasis> LocalIdeal::standard_basis(
    const ComputeOptions& options) const {
  return ideal_standard_basis(gens_, vars_, options);
}

// ----------------------------------------------------------------- cache

struct StandardBasisCache::Impl {
  std::mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const StandardBasis>> entries;
};

StandardBasisCache::StandardBasisCache() : impl_(std::make_shared<Impl>()) {
  if (const char* dir = std::getenv("GERMLAB_CACHE_DIR")) dir_ = dir;
}

StandardBasisCache& StandardBasisCache::instance() {
  static StandardBasisCache cache;
  return cache;
}

std::string StandardBasisCache::file_name(const std::string& key) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx.sb", static_cast<unsigned long long>(fnv1a(key)));
  return buf;
}

void StandardBasisCache::set_directory(std::string dir) {
  std::lock_guard lock(impl_->mutex);
  dir_ = std::move(dir);
}

void StandardBasisCache::clear_memory() {
  std::lock_guard lock(impl_->mutex);
  impl_->entries.clear();
}

std::shared_ptr<const StandardBasis> StandardBasisCache::find(const std::string& key) {
  std::string dir;
  {
    std::lock_guard lock(impl_->mutex);
    if (auto it = impl_->entries.find(key); it != impl_->entries.end()) return it->second;
    dir = dir_;
  }
  if (dir.empty()) return nullptr;
  std::ifstream in(std::filesystem::path(dir) / file_name(key));
  if (!in) return nullptr;
  std::size_t length = 0;
  in >> length;
  in.get();
  std::string stored(length, '\0');
  in.read(stored.data(), static_cast<std::streamsize>(length));
  if (!in || stored != key) return nullptr;
  std::ostringstream rest;
  rest << in.rdbuf();
  std::shared_ptr<const StandardBasis> basis;
  try {
    basis = std::make_shared<const StandardBasis>(StandardBasis::deserialize(rest.str()));
  } catch (const Error&) {
    return nullptr;
  }
  std::lock_guard lock(impl_->mutex);
  impl_->entries.emplace(key, basis);
  return basis;
}

void StandardBasisCache::store(const std::string& key,
                               std::shared_ptr<const StandardBasis> basis) {
  std::string dir;
  {
    std::lock_guard lock(impl_->mutex);
    impl_->entries.emplace(key, basis);
    dir = dir_;
  }
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto target = std::filesystem::path(dir) / file_name(key);
  const auto temp = target.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) return;
    out << key.size() << '\n' << key << basis->serialize();
  }
  std::filesystem::rename(temp, target, ec);
}

// ------------------------------------------------------ quotient lengths

std::shared_ptr<const StandardBasis> ideal_standard_basis(const std::vector<Poly>& gens,
                                                          const VarList& vars,
                                                          const ComputeOptions& options) {
  return cached_basis(ideal_key(gens, vars, options.degree_cap), options, [&] {
    std::vector<LocalPoly> local;
    local.reserve(gens.size());
    for (const auto& g : gens) local.push_back(to_local(g));
    return compute_standard_basis(std::move(local), vars.size(), 1, options.degree_cap);
  });
}

QuotientDimension quotient_dimension(const std::vector<Poly>& gens, const VarList& vars,
                                     const ComputeOptions& options) {
  const auto nonzero = drop_zeros(gens);
  if (has_unit(nonzero)) return QuotientDimension::finite(0);
  return ideal_standard_basis(nonzero, vars, options)->quotient_dimension();
}

QuotientDimension local_quotient_dimension(const LocalIdeal& ideal,
                                           const ComputeOptions& options) {
  try {
    return quotient_dimension(ideal.generators(), ideal.variables(), options);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CapExceeded) return QuotientDimension::cap_exceeded();
    throw;
  }
}

// ----------------------------------------------------- linear reductions

Reduction eliminate_linear_variables(const VarList& vars, std::vector<Poly> gens) {
  Reduction r{vars, drop_zeros(std::move(gens))};
  for (;;) {
    if (has_unit(r.gens)) return r;
    bool changed = false;
    for (std::size_t gi = 0; gi < r.gens.size() && !changed; ++gi) {
      const Poly& g = r.gens[gi];
      for (std::size_t v = r.vars.size(); v-- > 0;) {
        if (!g.involves(v)) continue;
        Rational c = 0;
        bool solvable = true;
        for (const auto& t : g.terms()) {
          if (t.exponents[v] == 0) continue;
          if (total_degree(t.exponents) != 1) {
            solvable = false;
            break;
          }
          c = t.coefficient;
        }
        if (!solvable) continue;
        Exponents e{};
        e[v] = 1;
        const Poly h = g - Poly::monomial(r.vars, e, c);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < r.vars.size(); ++i) {
          if (i != v) names.push_back(r.vars.name(i));
        }
        const VarList target(names);
        Assignment solve{{r.vars.name(v), (h * (Rational(-1) / c)).rebased(target)}};
        std::vector<Poly> next;
        for (std::size_t k = 0; k < r.gens.size(); ++k) {
          if (k == gi) continue;
          Poly s = substitute(r.gens[k], solve, target);
          if (!s.is_zero()) next.push_back(std::move(s));
        }
        r.vars = target;
        r.gens = std::move(next);
        changed = true;
        break;
      }
    }
    if (!changed) return r;
  }
}

Poly random_linear_form(const VarList& vars, SeededSampler& rng) {
  if (vars.size() == 0) throw Error(ErrorCode::InvalidArgument, "no variables to slice");
  for (;;) {
    std::vector<Poly::Term> terms;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      Poly::Term t;
      t.exponents[i] = 1;
      t.coefficient = Rational(rng.uniform(-kGenericCoefficientBound, kGenericCoefficientBound));
      terms.push_back(t);
    }
    Poly p = Poly::from_terms(vars, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

Reduction restrict_to_hyperplane(const VarList& vars, const std::vector<Poly>& gens,
                                 const Poly& p) {
  std::optional<std::size_t> pivot;
  for (std::size_t i = vars.size(); i-- > 0;) {
    if (p.involves(i)) {
      pivot = i;
      break;
    }
  }
  if (!pivot || p.degree() != 1 || p.constant_term() != 0) {
    throw Error(ErrorCode::DegenerateForm, "hyperplane form must be a non-zero linear form");
  }
  Exponents e{};
  e[*pivot] = 1;
  const Rational c = p.coefficient(e);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i != *pivot) names.push_back(vars.name(i));
  }
  const VarList target(names);
  const Poly rest = p - Poly::monomial(vars, e, c);
  Assignment solve{{vars.name(*pivot), (rest * (Rational(-1) / c)).rebased(target)}};
  Reduction r{target, {}};
  for (const auto& g : gens) r.gens.push_back(substitute(g, solve, target));
  return r;
}

Reduction generic_linear_section(const VarList& vars, const std::vector<Poly>& gens,
                                 unsigned count, std::uint64_t seed) {
  SeededSampler rng(seed);
  Reduction r{vars, gens};
  for (unsigned i = 0; i < count; ++i) {
    const Poly p = random_linear_form(r.vars, rng);
    r = restrict_to_hyperplane(r.vars, r.gens, p);
  }
  return r;
}

std::optional<SectionLength> generic_section_length(const VarList& vars,
                                                   const std::vector<Poly>& gens, unsigned count,
                                                   std::uint64_t seed,
                                                   const ComputeOptions& options) {
  std::vector<std::uint64_t> lengths;
  const unsigned total = 2 + options.genericity_retries;
  for (unsigned i = 0; i < total; ++i) {
    const Reduction section = generic_linear_section(vars, gens, count, derive_seed(seed, i));
    const auto q = quotient_dimension(section.gens, section.vars, options);
    if (q.is_finite()) lengths.push_back(q.value);
    if (i == 1 && lengths.size() == 2 && lengths[0] == lengths[1]) return SectionLength{lengths[0], false};
  }
  if (lengths.empty()) return std::nullopt;
  return SectionLength{*std::min_element(lengths.begin(), lengths.end()), true};
}

// --------------------------------------------------------- Milnor number

namespace {

/// One draw of the recursion. Returns nullopt for a non-generic form; sets
/// `infinite` when that was detected through an infinite quotient.
std::optional<std::uint64_t> milnor_chain(const VarList& vars, std::vector<Poly> gens,
                                          std::uint64_t seed, const ComputeOptions& options,
                                          bool top, bool& infinite) {
  const Reduction red = eliminate_linear_variables(vars, std::move(gens));
  if (has_unit(red.gens)) {
    throw Error(ErrorCode::InvalidArgument, "the ideal is the whole local ring");
  }
  const std::size_t n = red.vars.size();
  const std::size_t r = red.gens.size();
  if (r >= n) {
    const auto q = quotient_dimension(red.gens, red.vars, options);
    if (top) finite_or_throw(q, "ICIS");
    if (!q.is_finite()) {
      infinite = true;
      return std::nullopt;
    }
    return q.value - 1;
  }
  SeededSampler rng(seed);
  const Poly p = random_linear_form(red.vars, rng);
  const std::vector<Poly> extra{p};
  std::vector<Poly> polar = red.gens;
  for (auto& m : jacobian_minor_ideal(red.gens, extra)) polar.push_back(std::move(m));
  const auto a = quotient_dimension(polar, red.vars, options);
  if (!a.is_finite()) {
    infinite = true;
    return std::nullopt;
  }
  const Reduction section = restrict_to_hyperplane(red.vars, red.gens, p);
  if (std::any_of(section.gens.begin(), section.gens.end(),
                  [](const Poly& g) { return g.is_zero(); })) {
    return std::nullopt;
  }
  const auto b = milnor_chain(section.vars, section.gens, derive_seed(seed, "section"), options,
                              false, infinite);
  if (!b || *b > a.value) return std::nullopt;
  return a.value - *b;
}

}  // namespace

MilnorResult milnor_icis(const LocalIdeal& ideal, std::uint64_t seed,
                         const ComputeOptions& options) {
  MilnorResult result;
  std::vector<std::optional<std::uint64_t>> draws;
  const unsigned total = 2 + options.genericity_retries;
  bool infinite = false;
  for (unsigned i = 0; i < total; ++i) {
    draws.push_back(milnor_chain(ideal.variables(), ideal.generators(), derive_seed(seed, i),
                                 options, true, infinite));
    if (draws.back()) result.samples.push_back(*draws.back());
    if (i == 1 && draws[0] && draws[1] && *draws[0] == *draws[1]) {
      result.milnor = *draws[0];
      return result;
    }
  }
  if (result.samples.empty()) {
    if (infinite) throw Error(ErrorCode::NotIsolated, "polar quotient is infinite for every form");
    throw Error(ErrorCode::DegenerateForm, "no generic linear form found for the Milnor number");
  }
  result.flagged = true;
  result.milnor = *std::min_element(result.samples.begin(), result.samples.end());
  return result;
}

std::uint64_t hypersurface_milnor(const LocalIdeal& ideal, const ComputeOptions& options) {
  if (ideal.generators().size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "hypersurface Milnor number needs one generator");
  }
  const Poly& g = ideal.generators().front();
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < ideal.variables().size(); ++i) partials.push_back(g.derivative(i));
  return finite_or_throw(quotient_dimension(partials, ideal.variables(), options),
                         "Jacobian ideal")
      .value;
}

// ------------------------------------------------------- Tjurina number

std::uint64_t tjurina_icis(const LocalIdeal& ideal, const ComputeOptions& options) {
  const Reduction red = eliminate_linear_variables(ideal.variables(), ideal.generators());
  if (has_unit(red.gens)) {
    throw Error(ErrorCode::InvalidArgument, "the ideal is the whole local ring");
  }
  const std::size_t r = red.gens.size();
  const std::size_t n = red.vars.size();
  if (r == 0) return 0;

  std::vector<std::vector<Poly>> columns;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Poly> col(r, Poly(red.vars));
      col[j] = red.gens[i];
      columns.push_back(std::move(col));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Poly> col;
    for (std::size_t i = 0; i < r; ++i) col.push_back(red.gens[i].derivative(k));
    columns.push_back(std::move(col));
  }

  std::string key = "module cap=" + std::to_string(options.degree_cap) +
                    " vars=" + join_names(red.vars) + " rank=" + std::to_string(r) + " cols=";
  for (const auto& col : columns) {
    key += "[";
    for (std::size_t i = 0; i < r; ++i) key += (i ? "," : "") + col[i].to_string();
    key += "]";
  }
  const auto basis = cached_basis(key, options, [&] {
    std::vector<LocalPoly> local;
    for (const auto& col : columns) {
      std::vector<LocalTerm> terms;
      for (std::size_t i = 0; i < r; ++i) {
        const LocalPoly part = to_local(col[i], static_cast<std::uint16_t>(i));
        terms.insert(terms.end(), part.terms().begin(), part.terms().end());
      }
      if (!terms.empty()) local.emplace_back(std::move(terms));
    }
    return compute_standard_basis(std::move(local), n, r, options.degree_cap);
  });
  return finite_or_throw(basis->quotient_dimension(), "Tjurina module").value;
}

// ----------------------------------------------------------- multiplicity

QuotientDimension germ_multiplicity(std::span<const Poly> components,
                                    const std::vector<Rational>& base_point,
                                    const ComputeOptions& options) {
  if (components.empty()) throw Error(ErrorCode::InvalidArgument, "germ has no components");
  const VarList& vars = components.front().variables();
  std::vector<Poly> pulled_back;
  for (const auto& c : components) {
    Poly shifted = c;
    if (!base_point.empty()) {
      shifted -= Poly::constant(vars, c.evaluate(base_point));
    } else {
      shifted -= Poly::constant(vars, c.constant_term());
    }
    pulled_back.push_back(std::move(shifted));
  }
  const LocalIdeal ideal(vars, std::move(pulled_back), base_point);
  return quotient_dimension(ideal.generators(), ideal.variables(), options);
}

IcisProfile icis_profile(const LocalIdeal& ideal, std::uint64_t seed, bool with_tjurina,
                         const ComputeOptions& options) {
  IcisProfile profile;
  profile.ambient_dim = ideal.variables().size();
  const Reduction red = eliminate_linear_variables(ideal.variables(), ideal.generators());
  if (red.gens.size() > red.vars.size()) {
    throw Error(ErrorCode::InvalidArgument, "more equations than variables");
  }
  profile.dim = red.vars.size() - red.gens.size();
  profile.codim = profile.ambient_dim - profile.dim;
  const MilnorResult m = milnor_icis(ideal, derive_seed(seed, "milnor"), options);
  profile.milnor = m.milnor;
  profile.flagged = m.flagged;
  if (with_tjurina) profile.tjurina = tjurina_icis(ideal, options);
  const auto length = generic_section_length(red.vars, red.gens, static_cast<unsigned>(profile.dim),
                                             derive_seed(seed, "multiplicity"), options);
  if (!length) throw Error(ErrorCode::NotIsolated, "linear sections have infinite length");
  profile.multiplicity = length->length;
  profile.flagged = profile.flagged || length->flagged;
  return profile;
}

}  // namespace germlab
