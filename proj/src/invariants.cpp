#include "germlab/invariants.hpp"

#include <algorithm>
#include <map>

#include "germlab/error.hpp"
#include "germlab/random.hpp"

namespace germlab {

namespace {

Rational sign_power(unsigned e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

std::uint64_t non_negative_integer(const Rational& value, const std::string& what) {
  if (!is_integer(value) || value < 0) {
    throw Error(ErrorCode::NonIntegerResult,
                what + " solved to " + to_string(value) + ", not a non-negative integer");
  }
  return static_cast<std::uint64_t>(to_int64(value));
}

std::uint64_t beta0(const MultiplePointStratum& st) {
  switch (st.status) {
    case StratumStatus::ZeroDim: return st.m0;
    case StratumStatus::Icis: return 1;
    default: return 0;
  }
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out + ")";
}

}  // namespace

EquivariantTable equivariant_euler_data(const GermSpec& f, std::uint64_t seed,
                                        const ComputeOptions& options) {
  EquivariantTable table;
  table.structure = verify_multiple_point_structure(f, seed, options);
  if (!table.structure.consistent()) {
    throw Error(ErrorCode::NotAFiniteOrBug, table.structure.violations.front());
  }
  for (const auto& level : table.structure.levels) {
    for (const auto& cls : level.classes) {
      for (const auto& e : cls.entries) {
        const auto& st = e.stratum;
        EquivariantEntry row;
        row.k = level.k;
        row.gamma = cls.gamma;
        row.branch_tuple = st.branch_tuple;
        row.weight = e.weight;
        row.status = st.status;
        row.expected_dim = st.expected_dim;
        row.dim = st.dim;
        row.milnor = st.milnor;
        row.m0 = st.m0;
        row.beta0 = beta0(st);
        row.marar = marar_coefficient(cls.gamma);
        row.chi = st.euler_characteristic();
        table.entries.push_back(std::move(row));
      }
    }
  }
  return table;
}

std::uint64_t image_milnor_number(const StructureReport& structure) {
  Rational rhs(static_cast<unsigned long>(structure.s));
  for (const auto& level : structure.levels) {
    for (const auto& cls : level.classes) {
      rhs += marar_coefficient(cls.gamma) * Rational(static_cast<long>(cls.chi));
    }
  }
  return non_negative_integer((rhs - 1) * sign_power(structure.n), "image Milnor number");
}

std::uint64_t image_milnor_of(const GermSpec& f, std::uint64_t seed,
                              const ComputeOptions& options) {
  const auto structure = verify_multiple_point_structure(f, seed, options);
  if (!structure.consistent()) throw Error(ErrorCode::NotAFiniteOrBug, structure.violations.front());
  return image_milnor_number(structure);
}

std::uint64_t image_milnor_number(const DoublePointPair& pair) {
  Rational rhs(static_cast<long>(pair.point_count()) - static_cast<long>(pair.target_count()) + 1);
  rhs += sign_power(pair.source_dim) * Rational(static_cast<long>(pair.milnor_sum()));
  for (const auto& entry : pair.table) {
    rhs += marar_coefficient(entry.gamma) * Rational(static_cast<long>(entry.chi));
  }
  return non_negative_integer((rhs - 1) * sign_power(pair.source_dim),
                              "double point Milnor number");
}

std::uint64_t double_point_milnor(const GermSpec& f, const StructureReport& structure,
                                  std::uint64_t seed, const ComputeOptions& options) {
  const LevelData* two = structure.level(2);
  const bool empty = two == nullptr ||
                     std::all_of(two->identity().entries.begin(), two->identity().entries.end(),
                                 [](const StratumEntry& e) {
                                   return e.stratum.status == StratumStatus::Empty;
                                 });
  if (empty) return 0;
  const DoublePointPair pair = double_point_projection(f, structure, seed, options);
  if (!pair.verified) {
    throw Error(ErrorCode::CheckFailed,
                "multiple points of the double point projection differ from those of f");
  }
  return image_milnor_number(pair);
}

bool is_stable(const StructureReport& structure) {
  for (const auto& level : structure.levels) {
    for (const auto& cls : level.classes) {
      for (const auto& e : cls.entries) {
        const auto& st = e.stratum;
        switch (st.status) {
          case StratumStatus::Empty: break;
          case StratumStatus::ZeroDim:
            if (st.m0 != 1) return false;
            break;
          case StratumStatus::Icis:
            if (st.milnor != 0 || st.m0 != 1) return false;
            break;
          case StratumStatus::NegativeDim: return false;
        }
      }
    }
  }
  return true;
}

Rational alternating_euler_characteristic(const StructureReport& structure, unsigned k) {
  const LevelData* level = structure.level(k);
  if (level == nullptr) return Rational(0);
  Rational sum = 0;
  for (const auto& cls : level->classes) {
    sum += Rational(cls.gamma.class_size) * Rational(cls.gamma.sign) *
           Rational(static_cast<long>(cls.chi));
  }
  return sum / Rational(factorial(k));
}

Integer alternating_component_rank(const StructureReport& structure, unsigned k) {
  const LevelData* level = structure.level(k);
  if (level == nullptr) return 0;
  std::map<std::vector<std::size_t>, bool> nonempty;
  for (const auto& e : level->identity().entries) {
    nonempty[e.stratum.branch_tuple] = e.stratum.status != StratumStatus::Empty;
  }
  std::map<std::vector<unsigned>, Integer> fixcounts;
  for (const auto& cls : level->classes) {
    Integer count = 0;
    for (const auto& e : cls.entries) {
      auto sorted = e.stratum.branch_tuple;
      std::sort(sorted.begin(), sorted.end());
      const auto it = nonempty.find(sorted);
      if (it == nonempty.end()) {
        throw Error(ErrorCode::InvalidArgument, "missing identity stratum for " + e.stratum.label());
      }
      if (it->second) count += static_cast<unsigned long>(e.weight);
    }
    fixcounts[cls.gamma.parts] = count;
  }
  return isotype_rank_points(fixcounts, k, Isotype::Alternating);
}

std::vector<std::uint64_t> alternating_milnor_numbers(const StructureReport& structure,
                                                      std::uint64_t image_milnor) {
  std::vector<std::uint64_t> out{0};
  const unsigned n = structure.n;
  for (unsigned k = 2; k <= structure.d; ++k) {
    const Rational chi = alternating_euler_characteristic(structure, k);
    const Rational rank = Rational(alternating_component_rank(structure, k));
    const Rational value = sign_power(n + 1 - k) * (chi - rank);
    if (!is_integer(value) || value < 0) {
      throw Error(ErrorCode::HoustonSumViolation,
                  "alternating Milnor number at k=" + std::to_string(k) + " is " + to_string(value));
    }
    out.push_back(static_cast<std::uint64_t>(to_int64(value)));
  }
  const unsigned d = structure.d;
  out.push_back(structure.s > d ? binomial(structure.s - 1, d).get_ui() : 0);
  std::uint64_t sum = 0;
  for (auto v : out) sum += v;
  if (sum != image_milnor) {
    throw Error(ErrorCode::HoustonSumViolation,
                "alternating Milnor numbers " + join(out) + " sum to " + std::to_string(sum) +
                    ", image Milnor number is " + std::to_string(image_milnor));
  }
  return out;
}

namespace {

std::uint64_t zero_dim_points(const LevelData* level, const std::vector<unsigned>& parts) {
  if (level == nullptr) return 0;
  std::uint64_t total = 0;
  for (const auto& e : level->by_parts(parts).entries) {
    if (e.stratum.status == StratumStatus::ZeroDim) total += e.weight * e.stratum.m0;
  }
  return total;
}

std::uint64_t orbits(std::uint64_t points, std::uint64_t orbit_size, const char* what) {
  if (points % orbit_size != 0) {
    throw Error(ErrorCode::NonIntegerOrbitCount, std::string(what) + ": " +
                                                     std::to_string(points) +
                                                     " points is not a multiple of " +
                                                     std::to_string(orbit_size));
  }
  return points / orbit_size;
}

}  // namespace

ZeroStableCounts zero_stable_counts(const StructureReport& structure) {
  ZeroStableCounts counts;
  if (structure.n == 2) {
    counts.cross_caps = zero_dim_points(structure.level(2), {2});
    counts.triple_points = orbits(zero_dim_points(structure.level(3), {1, 1, 1}), 6, "triple points");
  } else if (structure.n == 3) {
    counts.quadruple_points =
        orbits(zero_dim_points(structure.level(4), {1, 1, 1, 1}), 24, "quadruple points");
  } else {
    throw Error(ErrorCode::InvalidArgument, "0-stable counts need n = 2 or n = 3");
  }
  return counts;
}

std::int64_t multiple_point_milnor_sum(const StructureReport& structure, unsigned k) {
  const LevelData* level = structure.level(k);
  if (level == nullptr) return 0;
  std::int64_t total = 0;
  for (const auto& e : level->identity().entries) {
    const auto& st = e.stratum;
    std::int64_t mu = 0;
    if (st.status == StratumStatus::Icis) mu = static_cast<std::int64_t>(st.milnor);
    if (st.status == StratumStatus::ZeroDim) mu = static_cast<std::int64_t>(st.m0) - 1;
    total += static_cast<std::int64_t>(e.weight) * mu;
  }
  return total;
}

bool SpecialChecks::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FormulaCheck& c) { return c.passed; });
}

SpecialChecks special_formula_checks(const StructureReport& structure, std::uint64_t mu_i,
                                     std::uint64_t mu_d, std::int64_t mu_d2,
                                     const std::vector<std::uint64_t>& alternating,
                                     const ZeroStableCounts& counts) {
  SpecialChecks out;
  const auto add = [&](std::string name, bool ok, std::string detail) {
    out.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const bool mono = structure.s == 1;
  if (structure.n == 2 && mono && counts.triple_points) {
    const auto t = static_cast<std::int64_t>(*counts.triple_points);
    const auto rhs = mu_d2 + 3 * t;
    add("mu_D = mu(D^2) + 3T", static_cast<std::int64_t>(mu_d) == rhs,
        std::to_string(mu_d) + " vs " + std::to_string(mu_d2) + " + 3*" + std::to_string(t));
  }
  if (structure.n == 3 && mono && counts.quadruple_points) {
    const auto q = static_cast<std::int64_t>(*counts.quadruple_points);
    const std::int64_t alt3 = alternating.size() > 2 ? static_cast<std::int64_t>(alternating[2]) : 0;
    const std::int64_t value = multiple_point_milnor_sum(structure, 3) + alt3 -
                               2 * (static_cast<std::int64_t>(mu_d) - 4 * q - mu_d2);
    out.mu3_trivial = value;
    add("mu_3^T >= 0", value >= 0, "mu_3^T = " + std::to_string(value));
  }
  add("mu_I <= mu_D", mu_i <= mu_d, std::to_string(mu_i) + " <= " + std::to_string(mu_d));
  const bool stable = is_stable(structure);
  const bool agree = (mu_i == 0) == stable && (mu_d == 0) == stable;
  add("mu_I = 0 iff mu_D = 0 iff stable", agree,
      "mu_I=" + std::to_string(mu_i) + " mu_D=" + std::to_string(mu_d) +
          " stable=" + (stable ? "true" : "false"));
  return out;
}

LeGreuelReport le_greuel_report(const GermSpec& f, std::uint64_t seed,
                                const ComputeOptions& options) {
  LeGreuelReport report;
  const auto structure = verify_multiple_point_structure(f, seed, options);
  if (!structure.consistent()) throw Error(ErrorCode::NotAFiniteOrBug, structure.violations.front());
  report.image_milnor = image_milnor_number(structure);
  report.flagged = structure.flagged;
  if (f.source_dim() == 1) {
    std::uint64_t m0 = 0;
    for (const auto& b : f.branches()) {
      const auto q = germ_multiplicity(b.components, {}, options);
      if (!q.is_finite()) throw Error(ErrorCode::NotAFiniteOrBug, "a branch is not finite");
      m0 += q.value;
    }
    report.multiplicity = m0;
    report.critical_points = report.image_milnor + m0 - 1;
    return report;
  }
  const SliceResult slice = transverse_slice(f, derive_seed(seed, "slice"), options);
  report.slice_image_milnor = slice.image_milnor;
  report.flagged = report.flagged || slice.flagged;
  report.critical_points = report.image_milnor + slice.image_milnor;
  return report;
}

InvariantReport compute_invariants(const GermSpec& f, std::uint64_t seed,
                                   const ComputeOptions& options) {
  InvariantReport r;
  r.name = f.name();
  r.n = f.source_dim();
  r.s = f.branch_count();
  r.seed = seed;
  if (r.s > 1) r.flags.push_back("ASSUMED_CONNECTED");
  try {
    r.table = equivariant_euler_data(f, seed, options);
    const StructureReport& st = r.table.structure;
    r.d = st.d;
    r.stable = is_stable(st);
    r.mu_i = image_milnor_number(st);
    r.mu_d2 = multiple_point_milnor_sum(st, 2);
    const LevelData* two = st.level(2);
    if (two != nullptr &&
        std::any_of(two->identity().entries.begin(), two->identity().entries.end(),
                    [](const StratumEntry& e) { return e.stratum.status != StratumStatus::Empty; })) {
      r.pair = double_point_projection(f, st, derive_seed(seed, "pair"), options);
    }
    if (r.pair) {
      if (!r.pair->verified) {
        throw Error(ErrorCode::CheckFailed,
                    "multiple points of the double point projection differ from those of f");
      }
      r.mu_d = image_milnor_number(*r.pair);
    }
    r.mu_alt = alternating_milnor_numbers(st, r.mu_i);
    if (r.n == 2 || r.n == 3) r.counts = zero_stable_counts(st);
    r.checks = special_formula_checks(st, r.mu_i, r.mu_d, r.mu_d2, r.mu_alt, r.counts);
    if (r.s > r.d) r.top_row = compare_top_row(static_cast<unsigned>(r.s), r.d);
    r.le_greuel = le_greuel_report(f, seed, options);
    r.mu_star = mu_star_sequences(f, seed, options);
    const bool flagged = st.flagged || r.le_greuel->flagged || r.mu_star->flagged;
    if (flagged) r.flags.insert(r.flags.begin(), "GENERICITY_FLAGGED");
    if (!r.checks.passed()) {
      for (const auto& c : r.checks.checks) {
        if (!c.passed) throw Error(ErrorCode::CheckFailed, c.name + ": " + c.detail);
      }
    }
  } catch (const Error& e) {
    if (!is_consistency_failure(e.code())) throw;
    r.inconsistency = e.what();
    r.inconsistency_code = std::string(to_string(e.code()));
  }
  return r;
}

}  // namespace germlab
