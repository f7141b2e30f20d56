#include "germlab/multipoint.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "germlab/error.hpp"
#include "germlab/random.hpp"

namespace germlab {

std::string_view to_string(StratumStatus status) {
  switch (status) {
    case StratumStatus::Empty: return "EMPTY";
    case StratumStatus::ZeroDim: return "ZERO_DIM";
    case StratumStatus::Icis: return "ICIS";
    case StratumStatus::NegativeDim: return "NEGATIVE_DIM";
  }
  return "?";
}

std::int64_t MultiplePointStratum::euler_characteristic() const {
  switch (status) {
    case StratumStatus::ZeroDim: return static_cast<std::int64_t>(m0);
    case StratumStatus::Icis: {
      const auto mu = static_cast<std::int64_t>(milnor);
      return dim % 2 == 0 ? 1 + mu : 1 - mu;
    }
    default: return 0;
  }
}

std::string MultiplePointStratum::label() const {
  std::string out = "k=" + std::to_string(k) + " ";
  out += gamma ? gamma->label() : make_partition(std::vector<unsigned>(k, 1)).label();
  out += " [";
  for (std::size_t i = 0; i < branch_tuple.size(); ++i) {
    out += (i ? "," : "") + std::to_string(branch_tuple[i]);
  }
  return out + "]";
}

VarList multiple_point_variables(unsigned n, unsigned m) {
  std::vector<std::string> names;
  for (unsigned i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (unsigned i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  return VarList(names);
}

std::vector<std::vector<std::size_t>> canonical_cycles(const PartitionData& gamma) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t next = 0;
  for (unsigned r : gamma.parts) {
    std::vector<std::size_t> c(r);
    std::iota(c.begin(), c.end(), next);
    next += r;
    cycles.push_back(std::move(c));
  }
  return cycles;
}

namespace {

/// f(x, y) lifted to (x, y_index) inside `vars`.
Poly at_point(const Poly& f, const VarList& vars, std::size_t y_index) {
  const std::size_t y = f.variables().size() - 1;
  return substitute(f, {{f.variables().name(y), Poly::variable(vars, y_index)}}, vars);
}

std::vector<Poly> chain_differences(Poly first, const std::vector<std::size_t>& y_indices,
                                    bool include_first) {
  std::vector<Poly> out;
  if (include_first) out.push_back(first);
  Poly current = std::move(first);
  for (std::size_t i = 1; i < y_indices.size(); ++i) {
    current = difference_quotient(current, y_indices[i - 1], y_indices[i]);
    out.push_back(current);
  }
  return out;
}

/// Groups positions by the branch they sit on, in order of first appearance.
std::vector<std::pair<std::size_t, std::vector<std::size_t>>> group_positions(
    const std::vector<std::size_t>& tuple) {
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> groups;
  for (std::size_t pos = 0; pos < tuple.size(); ++pos) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == tuple[pos]; });
    if (it == groups.end()) {
      groups.push_back({tuple[pos], {pos}});
    } else {
      it->second.push_back(pos);
    }
  }
  return groups;
}

/// Weighted assignments of branches to the cycles of gamma: cycles of equal
/// length receive non-decreasing labels, weighted by the number of
/// assignments they stand for.
std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> cycle_assignments(
    const PartitionData& gamma, std::size_t s) {
  std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> out{{{}, 1}};
  std::size_t start = 0;
  while (start < gamma.parts.size()) {
    std::size_t end = start;
    while (end < gamma.parts.size() && gamma.parts[end] == gamma.parts[start]) ++end;
    const std::size_t g = end - start;
    std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> blocks;
    std::vector<std::size_t> labels;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (labels.size() == g) {
        Integer w = factorial(g);
        for (std::size_t i = 0; i < labels.size();) {
          std::size_t j = i;
          while (j < labels.size() && labels[j] == labels[i]) ++j;
          w /= factorial(j - i);
          i = j;
        }
        blocks.push_back({labels, w.get_ui()});
        return;
      }
      for (std::size_t b = from; b < s; ++b) {
        labels.push_back(b);
        self(self, b);
        labels.pop_back();
      }
    };
    rec(rec, 0);
    std::vector<std::pair<std::vector<std::size_t>, std::uint64_t>> next;
    for (const auto& [prefix, w] : out) {
      for (const auto& [block, bw] : blocks) {
        auto combined = prefix;
        combined.insert(combined.end(), block.begin(), block.end());
        next.push_back({std::move(combined), w * bw});
      }
    }
    out = std::move(next);
    start = end;
  }
  return out;
}

std::vector<std::size_t> tuple_from_cycles(const PartitionData& gamma,
                                           const std::vector<std::size_t>& labels) {
  std::vector<std::size_t> tuple;
  for (std::size_t c = 0; c < gamma.parts.size(); ++c) {
    tuple.insert(tuple.end(), gamma.parts[c], labels[c]);
  }
  return tuple;
}

bool has_unit(const std::vector<Poly>& gens) {
  return std::any_of(gens.begin(), gens.end(),
                     [](const Poly& g) { return g.constant_term() != 0; });
}

}  // namespace

std::vector<Poly> divided_differences(const Poly& f, const VarList& vars,
                                      const std::vector<std::size_t>& y_indices) {
  if (y_indices.empty()) return {};
  return chain_differences(at_point(f, vars, y_indices.front()), y_indices, false);
}

MultiplePointStratum multiple_point_ideal(const GermSpec& f, unsigned k,
                                          const std::vector<std::size_t>& branch_tuple) {
  if (k < 2 || branch_tuple.size() != k) {
    throw Error(ErrorCode::InvalidArgument, "multiple point spaces need k >= 2 and k branches");
  }
  for (std::size_t b : branch_tuple) {
    if (b >= f.branch_count()) throw Error(ErrorCode::InvalidArgument, "branch index out of range");
  }
  const unsigned n = f.source_dim();
  MultiplePointStratum st;
  st.k = k;
  st.branch_tuple = branch_tuple;
  st.variables = multiple_point_variables(n, k);
  st.expected_dim = static_cast<int>(n + 1) - static_cast<int>(k);
  const std::size_t y0 = n - 1;

  const auto groups = group_positions(branch_tuple);
  for (const auto& [branch, positions] : groups) {
    std::vector<std::size_t> idx;
    for (std::size_t p : positions) idx.push_back(y0 + p);
    for (const Poly* comp : {&f.fn(branch), &f.fn1(branch)}) {
      for (auto& g : divided_differences(*comp, st.variables, idx)) {
        st.generators.push_back(std::move(g));
      }
    }
  }
  for (std::size_t g = 1; g < groups.size(); ++g) {
    const auto& [b0, p0] = groups[g - 1];
    const auto& [b1, p1] = groups[g];
    st.generators.push_back(at_point(f.fn(b0), st.variables, y0 + p0.front()) -
                            at_point(f.fn(b1), st.variables, y0 + p1.front()));
    st.generators.push_back(at_point(f.fn1(b0), st.variables, y0 + p0.front()) -
                            at_point(f.fn1(b1), st.variables, y0 + p1.front()));
  }
  return st;
}

MultiplePointStratum fixed_point_stratum(const MultiplePointStratum& full,
                                         const PartitionData& gamma) {
  if (full.gamma) throw Error(ErrorCode::InvalidArgument, "stratum is already a fixed locus");
  if (gamma.k != full.k) throw Error(ErrorCode::InvalidArgument, "partition of the wrong size");
  const auto cycles = canonical_cycles(gamma);
  for (const auto& c : cycles) {
    for (std::size_t p : c) {
      if (full.branch_tuple[p] != full.branch_tuple[c.front()]) {
        throw Error(ErrorCode::InvalidArgument,
                    "branch tuple is not fixed by the permutation of type " + gamma.label());
      }
    }
  }
  const std::size_t y0 = full.variables.size() - full.k;
  const unsigned n = static_cast<unsigned>(y0 + 1);
  MultiplePointStratum st;
  st.k = full.k;
  st.branch_tuple = full.branch_tuple;
  st.gamma = gamma;
  st.variables = multiple_point_variables(n, gamma.num_parts());
  st.expected_dim = static_cast<int>(n + 1) - 2 * static_cast<int>(full.k) +
                    static_cast<int>(gamma.num_parts());
  Assignment collapse;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t p : cycles[c]) {
      collapse.emplace(full.variables.name(y0 + p), Poly::variable(st.variables, y0 + c));
    }
  }
  for (const auto& g : full.generators) {
    Poly h = substitute(g, collapse, st.variables);
    st.generators.push_back(std::move(h));
  }
  return st;
}

void classify_stratum(MultiplePointStratum& st, std::uint64_t seed,
                      const ComputeOptions& options) {
  st.classified = true;
  st.flagged = false;
  st.milnor = 0;
  st.m0 = 0;
  st.dim = 0;
  const Reduction red = eliminate_linear_variables(st.variables, st.generators);
  if (has_unit(red.gens)) {
    st.status = StratumStatus::Empty;
    return;
  }
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::NotAFiniteOrBug, st.label() + ": " + why);
  };
  if (st.expected_dim <= 0) {
    const auto q = quotient_dimension(red.gens, red.vars, options);
    if (!q.is_finite()) {
      fail("expected dimension " + std::to_string(st.expected_dim) +
           " but the stratum is positive dimensional");
    }
    st.m0 = q.value;
    st.status = st.expected_dim == 0 ? StratumStatus::ZeroDim : StratumStatus::NegativeDim;
    return;
  }
  const auto e = static_cast<std::size_t>(st.expected_dim);
  if (red.gens.size() + e != red.vars.size()) {
    fail("not a complete intersection of dimension " + std::to_string(e));
  }
  const auto length = generic_section_length(red.vars, red.gens, static_cast<unsigned>(e),
                                             derive_seed(seed, "section"), options);
  if (!length) fail("dimension exceeds " + std::to_string(e));
  st.m0 = length->length;
  st.flagged = length->flagged;
  st.dim = static_cast<unsigned>(e);
  try {
    const MilnorResult m = milnor_icis(LocalIdeal(red.vars, red.gens), derive_seed(seed, "milnor"),
                                       options);
    st.milnor = m.milnor;
    st.flagged = st.flagged || m.flagged;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotIsolated) fail("singularity is not isolated");
    throw;
  }
  st.status = StratumStatus::Icis;
}

// ------------------------------------------------------- structure report

const GammaStrata& LevelData::by_parts(const std::vector<unsigned>& parts) const {
  for (const auto& c : classes) {
    if (c.gamma.parts == parts) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "no such partition at this level");
}

const LevelData* StructureReport::level(unsigned k) const {
  for (const auto& l : levels) {
    if (l.k == k) return &l;
  }
  return nullptr;
}

std::int64_t StructureReport::chi(unsigned k, const std::vector<unsigned>& parts) const {
  const LevelData* l = level(k);
  return l ? l->by_parts(parts).chi : 0;
}

StructureReport verify_multiple_point_structure(const GermSpec& f, std::uint64_t seed,
                                                const ComputeOptions& options) {
  StructureReport report;
  report.n = f.source_dim();
  report.s = f.branch_count();
  report.d = 1;
  for (unsigned k = 2;; ++k) {
    LevelData level;
    level.k = k;
    for (const auto& gamma : partitions_of(k)) {
      GammaStrata cls;
      cls.gamma = gamma;
      const bool identity = gamma.num_parts() == k;
      for (const auto& [labels, weight] : cycle_assignments(gamma, report.s)) {
        const auto tuple = tuple_from_cycles(gamma, labels);
        MultiplePointStratum full = multiple_point_ideal(f, k, tuple);
        MultiplePointStratum st = identity ? std::move(full) : fixed_point_stratum(full, gamma);
        try {
          classify_stratum(st, derive_seed(seed, st.label()), options);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotAFiniteOrBug) throw;
          report.violations.push_back(e.what());
          st.status = StratumStatus::Empty;
        }
        report.flagged = report.flagged || st.flagged;
        cls.chi += static_cast<std::int64_t>(weight) * st.euler_characteristic();
        cls.entries.push_back({std::move(st), weight});
      }
      level.classes.push_back(std::move(cls));
    }
    const bool alive = std::any_of(
        level.identity().entries.begin(), level.identity().entries.end(), [](const auto& e) {
          return e.stratum.status == StratumStatus::Icis ||
                 e.stratum.status == StratumStatus::ZeroDim;
        });
    report.levels.push_back(std::move(level));
    if (!alive) break;
    report.d = k;
  }
  return report;
}

// -------------------------------------------------------- double points

std::uint64_t DoublePointPair::point_count() const {
  std::uint64_t total = 0;
  for (const auto& e : double_points) total += e.weight;
  return total;
}

std::int64_t DoublePointPair::milnor_sum() const {
  std::int64_t total = 0;
  for (const auto& e : double_points) {
    const auto& st = e.stratum;
    const std::int64_t mu = st.status == StratumStatus::ZeroDim
                                ? static_cast<std::int64_t>(st.m0) - 1
                                : static_cast<std::int64_t>(st.milnor);
    total += static_cast<std::int64_t>(e.weight) * mu;
  }
  return total;
}

std::size_t DoublePointPair::target_count() const {
  std::set<std::size_t> branches;
  for (const auto& e : double_points) {
    branches.insert(e.stratum.branch_tuple.begin(), e.stratum.branch_tuple.end());
  }
  return branches.size();
}

std::vector<Poly> projection_multiple_point_equations(const GermSpec& f,
                                                      const std::vector<std::size_t>& tuple) {
  if (tuple.size() < 2) throw Error(ErrorCode::InvalidArgument, "tuple needs a base and a point");
  const unsigned n = f.source_dim();
  const auto k = static_cast<unsigned>(tuple.size() - 1);
  const VarList vars = multiple_point_variables(n, k + 1);
  const std::size_t y1 = n - 1;
  const std::size_t b0 = tuple.front();
  const std::vector<std::size_t> rest(tuple.begin() + 1, tuple.end());

  std::vector<Poly> out;
  for (const auto& [c, positions] : group_positions(rest)) {
    std::vector<std::size_t> w;
    for (std::size_t p : positions) w.push_back(y1 + 1 + p);
    for (int j = 0; j < 2; ++j) {
      const Poly& base = j == 0 ? f.fn(b0) : f.fn1(b0);
      const Poly& other = j == 0 ? f.fn(c) : f.fn1(c);
      // Double point equation of the pair (b0, c) at (x, y1, w).
      Poly h = c == b0 ? difference_quotient(at_point(base, vars, y1), y1, w.front())
                       : at_point(base, vars, y1) - at_point(other, vars, w.front());
      for (auto& g : chain_differences(std::move(h), w, true)) out.push_back(std::move(g));
    }
  }
  return out;
}

bool same_local_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b,
                      const VarList& vars, const ComputeOptions& options) {
  const auto contains_all = [&](const std::vector<Poly>& big, const std::vector<Poly>& small) {
    if (has_unit(big)) return true;
    std::vector<Poly> nonzero;
    for (const auto& p : big) {
      if (!p.is_zero()) nonzero.push_back(p);
    }
    const auto sb = ideal_standard_basis(nonzero, vars, options);
    return std::all_of(small.begin(), small.end(),
                       [&](const Poly& p) { return sb->contains(to_local(p)); });
  };
  return contains_all(a, b) && contains_all(b, a);
}

DoublePointPair double_point_projection(const GermSpec& f, const StructureReport& structure,
                                        std::uint64_t seed, const ComputeOptions& options) {
  const LevelData* two = structure.level(2);
  DoublePointPair pair;
  pair.source_dim = f.source_dim() - 1;
  if (two != nullptr) {
    for (const auto& e : two->identity().entries) {
      if (e.stratum.status != StratumStatus::Empty) pair.double_points.push_back(e);
    }
  }
  if (pair.double_points.empty()) {
    throw Error(ErrorCode::EmptyDoublePoints, "the germ has no double points");
  }
  const std::size_t s = f.branch_count();
  for (unsigned k = 2; k <= structure.d; ++k) {
    for (const auto& gamma : partitions_of(k)) {
      IterationEntry entry;
      entry.k = k;
      entry.gamma = gamma;
      std::vector<unsigned> lifted_parts = gamma.parts;
      lifted_parts.push_back(1);
      entry.lifted = make_partition(lifted_parts);
      entry.chi = structure.chi(k + 1, entry.lifted.parts);
      entry.verified = true;
      const bool identity = gamma.num_parts() == k;
      std::int64_t direct_chi = 0;
      for (std::size_t b0 = 0; b0 < s; ++b0) {
        for (const auto& [labels, weight] : cycle_assignments(gamma, s)) {
          std::vector<std::size_t> tuple{b0};
          const auto rest = tuple_from_cycles(gamma, labels);
          tuple.insert(tuple.end(), rest.begin(), rest.end());
          const auto direct = projection_multiple_point_equations(f, tuple);
          const MultiplePointStratum from_f = multiple_point_ideal(f, k + 1, tuple);
          if (identity) {
            if (!same_local_ideal(direct, from_f.generators, from_f.variables, options)) {
              entry.verified = false;
            }
          }
          // D^k(pi, gamma): identify the w variables along the cycles of gamma.
          MultiplePointStratum st;
          st.k = k + 1;
          st.branch_tuple = tuple;
          st.gamma = entry.lifted;
          st.variables = multiple_point_variables(f.source_dim(), 1 + gamma.num_parts());
          st.expected_dim = static_cast<int>(f.source_dim() + 1) - 2 * static_cast<int>(k + 1) +
                            static_cast<int>(entry.lifted.num_parts());
          const std::size_t y1 = f.source_dim() - 1;
          Assignment collapse;
          const auto cycles = canonical_cycles(gamma);
          for (std::size_t c = 0; c < cycles.size(); ++c) {
            for (std::size_t p : cycles[c]) {
              collapse.emplace(from_f.variables.name(y1 + 1 + p),
                               Poly::variable(st.variables, y1 + 1 + c));
            }
          }
          for (const auto& g : direct) st.generators.push_back(substitute(g, collapse, st.variables));
          try {
            classify_stratum(st, derive_seed(seed, "pi " + st.label()), options);
            direct_chi += static_cast<std::int64_t>(weight) * st.euler_characteristic();
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NotAFiniteOrBug) throw;
            entry.verified = false;
          }
        }
      }
      if (direct_chi != entry.chi) entry.verified = false;
      pair.verified = pair.verified && entry.verified;
      pair.table.push_back(std::move(entry));
    }
  }
  return pair;
}

}  // namespace germlab
