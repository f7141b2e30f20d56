#include "germlab/standard_basis.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "germlab/error.hpp"

namespace germlab {

bool local_greater(const LocalTerm& a, const LocalTerm& b, std::size_t nvars) {
  if (a.component != b.component) return a.component < b.component;
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
  }
  return false;
}

namespace {

bool divides(const Exponents& d, const Exponents& m, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b, std::size_t nvars) {
  Exponents l{};
  for (std::size_t i = 0; i < nvars; ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Exponents quotient(const Exponents& m, const Exponents& d, std::size_t nvars) {
  Exponents q{};
  for (std::size_t i = 0; i < nvars; ++i) q[i] = m[i] - d[i];
  return q;
}

bool coprime(const Exponents& a, const Exponents& b, std::size_t nvars) {
  for (std::size_t i = 0; i < nvars; ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace

// -------------------------------------------------------------- LocalPoly

LocalPoly::LocalPoly(std::vector<LocalTerm> sorted_terms) : terms_(std::move(sorted_terms)) {
  refresh();
}

void LocalPoly::refresh() {
  max_degree_ = 0;
  for (const auto& t : terms_) max_degree_ = std::max<unsigned>(max_degree_, t.degree);
}

void LocalPoly::make_monic() {
  if (terms_.empty() || terms_.front().coefficient == 1) return;
  const Rational inv = 1 / terms_.front().coefficient;
  for (auto& t : terms_) t.coefficient *= inv;
}

void LocalPoly::truncate(unsigned bound) {
  std::erase_if(terms_, [bound](const LocalTerm& t) { return t.degree >= bound; });
  refresh();
}

LocalPoly LocalPoly::minus_scaled(const Rational& c, const Exponents& shift,
                                  const LocalPoly& other, std::size_t nvars,
                                  unsigned bound) const {
  unsigned shift_degree = 0;
  for (std::size_t i = 0; i < nvars; ++i) shift_degree += shift[i];

  std::vector<LocalTerm> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  LocalTerm shifted;
  bool have_shifted = false;
  auto load = [&]() {
    while (j < other.terms_.size()) {
      const LocalTerm& t = other.terms_[j];
      const unsigned deg = t.degree + shift_degree;
      if (bound > 0 && deg >= bound) {
        ++j;
        continue;
      }
      shifted.component = t.component;
      shifted.degree = static_cast<std::uint16_t>(deg);
      for (std::size_t v = 0; v < nvars; ++v) shifted.exponents[v] = t.exponents[v] + shift[v];
      shifted.coefficient = -c * t.coefficient;
      have_shifted = true;
      ++j;
      return;
    }
    have_shifted = false;
  };
  load();
  while (i < terms_.size() || have_shifted) {
    if (!have_shifted || (i < terms_.size() && local_greater(terms_[i], shifted, nvars))) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || local_greater(shifted, terms_[i], nvars)) {
      out.push_back(shifted);
      load();
    } else {
      Rational sum = terms_[i].coefficient + shifted.coefficient;
      if (sum != 0) {
        out.push_back(terms_[i]);
        out.back().coefficient = std::move(sum);
      }
      ++i;
      load();
    }
  }
  return LocalPoly(std::move(out));
}

LocalPoly to_local(const Poly& p, std::uint16_t component) {
  std::vector<LocalTerm> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    LocalTerm lt;
    lt.exponents = t.exponents;
    lt.degree = static_cast<std::uint16_t>(total_degree(t.exponents));
    lt.component = component;
    lt.coefficient = t.coefficient;
    terms.push_back(std::move(lt));
  }
  const std::size_t n = p.variables().size();
  std::sort(terms.begin(), terms.end(),
            [n](const LocalTerm& a, const LocalTerm& b) { return local_greater(a, b, n); });
  return LocalPoly(std::move(terms));
}

Poly from_local(const LocalPoly& f, const VarList& vars, std::uint16_t component) {
  std::vector<Poly::Term> terms;
  for (const auto& t : f.terms()) {
    if (t.component == component) terms.push_back({t.exponents, t.coefficient});
  }
  return Poly::from_terms(vars, std::move(terms));
}

std::string to_string(const QuotientDimension& q) {
  switch (q.kind) {
    case QuotientDimension::Kind::Finite: return std::to_string(q.value);
    case QuotientDimension::Kind::Infinite: return "INFINITE";
    case QuotientDimension::Kind::CapExceeded: return "CAP_EXCEEDED";
  }
  return "?";
}

// ------------------------------------------------------ monomial counting

std::optional<std::uint64_t> count_standard_monomials(const std::vector<Exponents>& leads,
                                                      std::size_t nvars,
                                                      std::optional<unsigned> bound,
                                                      unsigned* max_degree) {
  if (!bound) {
    for (std::size_t v = 0; v < nvars; ++v) {
      const bool has_pure_power = std::any_of(leads.begin(), leads.end(), [&](const Exponents& e) {
        if (e[v] == 0) return false;
        for (std::size_t w = 0; w < nvars; ++w) {
          if (w != v && e[w] != 0) return false;
        }
        return true;
      });
      if (!has_pure_power) return std::nullopt;
    }
  }
  std::uint64_t count = 0;
  unsigned best = 0;
  Exponents m{};
  auto in_ideal = [&](const Exponents& mono) {
    return std::any_of(leads.begin(), leads.end(),
                       [&](const Exponents& d) { return divides(d, mono, nvars); });
  };
  // Standard monomials form an order ideal: once a prefix is divisible, so
  // is every extension of it.
  auto walk = [&](auto&& self, std::size_t var, unsigned deg) -> void {
    if (var == nvars) {
      ++count;
      best = std::max(best, deg);
      return;
    }
    for (unsigned e = 0;; ++e) {
      if (bound && deg + e >= *bound) break;
      m[var] = static_cast<std::uint16_t>(e);
      if (in_ideal(m)) break;
      self(self, var + 1, deg + e);
    }
    m[var] = 0;
  };
  if (bound && *bound == 0) return 0;
  walk(walk, 0, 0);
  if (max_degree) *max_degree = best;
  return count;
}

// --------------------------------------------------------- StandardBasis

LocalPoly StandardBasis::normal_form(LocalPoly h, unsigned degree_cap) const {
  if (unit) return LocalPoly();
  if (noether_degree) h.truncate(*noether_degree);
  const unsigned bound = noether_degree.value_or(0);
  std::vector<LocalPoly> extra;
  while (!h.is_zero()) {
    const LocalTerm& lead = h.lead();
    if (degree_cap > 0 && lead.degree > degree_cap) {
      throw Error(ErrorCode::CapExceeded, "standard basis degree cap " +
                                              std::to_string(degree_cap) + " exceeded");
    }
    const LocalPoly* best = nullptr;
    auto consider = [&](const LocalPoly& g) {
      if (g.is_zero()) return;
      const LocalTerm& gl = g.lead();
      if (gl.component != lead.component || !divides(gl.exponents, lead.exponents, nvars)) return;
      if (best == nullptr || g.ecart() < best->ecart()) best = &g;
    };
    for (const auto& g : elements) consider(g);
    for (const auto& g : extra) consider(g);
    if (best == nullptr) break;
    const LocalPoly* reducer = best;
    LocalPoly keep;
    if (reducer->ecart() > h.ecart()) {
      keep = h;
    }
    const Rational c = lead.coefficient / reducer->lead().coefficient;
    const Exponents shift = quotient(lead.exponents, reducer->lead().exponents, nvars);
    LocalPoly next = h.minus_scaled(c, shift, *reducer, nvars, bound);
    if (!keep.is_zero()) extra.push_back(std::move(keep));
    h = std::move(next);
  }
  h.make_monic();
  return h;
}

std::vector<std::vector<Exponents>> StandardBasis::leading_monomials() const {
  std::vector<std::vector<Exponents>> leads(ncomponents);
  for (const auto& g : elements) {
    if (g.is_zero()) continue;
    auto& bucket = leads[g.lead().component];
    const Exponents& e = g.lead().exponents;
    if (std::any_of(bucket.begin(), bucket.end(),
                    [&](const Exponents& d) { return divides(d, e, nvars); })) {
      continue;
    }
    std::erase_if(bucket, [&](const Exponents& d) { return divides(e, d, nvars); });
    bucket.push_back(e);
  }
  for (auto& bucket : leads) std::sort(bucket.begin(), bucket.end());
  return leads;
}

QuotientDimension StandardBasis::quotient_dimension() const {
  if (unit) return QuotientDimension::finite(0);
  std::uint64_t total = 0;
  const auto leads = leading_monomials();
  for (std::size_t c = 0; c < ncomponents; ++c) {
    const auto n = count_standard_monomials(leads[c], nvars,
                                            ncomponents == 1 ? noether_degree : std::nullopt);
    if (!n) return QuotientDimension::infinite();
    total += *n;
  }
  return QuotientDimension::finite(total);
}

std::string StandardBasis::serialize() const {
  std::ostringstream out;
  out << "germlab-standard-basis 1\n";
  out << "nvars " << nvars << "\ncomponents " << ncomponents << "\nunit " << (unit ? 1 : 0)
      << "\nnoether " << (noether_degree ? std::to_string(*noether_degree) : "-") << "\n";
  out << "elements " << elements.size() << "\n";
  for (const auto& g : elements) {
    out << g.terms().size();
    for (const auto& t : g.terms()) {
      out << ' ' << t.component << ':';
      for (std::size_t v = 0; v < nvars; ++v) out << (v ? "," : "") << t.exponents[v];
      out << ':' << germlab::to_string(t.coefficient);
    }
    out << '\n';
  }
  return out.str();
}

StandardBasis StandardBasis::deserialize(const std::string& text) {
  std::istringstream in(text);
  StandardBasis sb;
  std::string word, noether;
  int version = 0, unit = 0;
  std::size_t count = 0;
  in >> word >> version;
  if (word != "germlab-standard-basis" || version != 1) {
    throw Error(ErrorCode::IoError, "unrecognized standard basis cache entry");
  }
  in >> word >> sb.nvars >> word >> sb.ncomponents >> word >> unit >> word >> noether >> word >>
      count;
  if (!in) throw Error(ErrorCode::IoError, "truncated standard basis cache entry");
  sb.unit = unit != 0;
  if (noether != "-") sb.noether_degree = static_cast<unsigned>(std::stoul(noether));
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t nterms = 0;
    in >> nterms;
    std::vector<LocalTerm> terms;
    for (std::size_t t = 0; t < nterms; ++t) {
      std::string token;
      in >> token;
      const auto a = token.find(':');
      const auto b = token.find(':', a + 1);
      if (a == std::string::npos || b == std::string::npos) {
        throw Error(ErrorCode::IoError, "malformed standard basis term");
      }
      LocalTerm lt;
      lt.component = static_cast<std::uint16_t>(std::stoul(token.substr(0, a)));
      std::istringstream exps(token.substr(a + 1, b - a - 1));
      std::string e;
      std::size_t v = 0;
      unsigned deg = 0;
      while (std::getline(exps, e, ',') && v < kMaxVariables) {
        lt.exponents[v] = static_cast<std::uint16_t>(std::stoul(e));
        deg += lt.exponents[v++];
      }
      lt.degree = static_cast<std::uint16_t>(deg);
      lt.coefficient = parse_rational(token.substr(b + 1));
      terms.push_back(std::move(lt));
    }
    sb.elements.emplace_back(std::move(terms));
  }
  if (!in) throw Error(ErrorCode::IoError, "truncated standard basis cache entry");
  return sb;
}

// ------------------------------------------------------------- algorithm

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  unsigned lcm_degree;
  std::uint64_t serial;
};

struct PairAfter {
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree > b.lcm_degree;
    return a.serial > b.serial;
  }
};

class Builder {
 public:
  Builder(std::size_t nvars, std::size_t ncomponents, unsigned cap) : cap_(cap) {
    sb_.nvars = nvars;
    sb_.ncomponents = ncomponents;
  }

  StandardBasis run(std::vector<LocalPoly> generators) {
    const bool ideal = sb_.ncomponents == 1;
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      if (ideal && g.lead().degree == 0) {
        sb_.unit = true;
        sb_.elements.clear();
        return std::move(sb_);
      }
    }
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      insert(sb_.normal_form(std::move(g), cap_));
      if (sb_.unit) return std::move(sb_);
    }
    while (!pairs_.empty()) {
      const CriticalPair pair = pairs_.top();
      pairs_.pop();
      const LocalPoly& f = sb_.elements[pair.i];
      const LocalPoly& g = sb_.elements[pair.j];
      if (f.is_zero() || g.is_zero()) continue;
      if (sb_.noether_degree && pair.lcm_degree >= *sb_.noether_degree) continue;
      insert(sb_.normal_form(s_poly(f, g), cap_));
      if (sb_.unit) return std::move(sb_);
    }
    std::erase_if(sb_.elements, [](const LocalPoly& p) { return p.is_zero(); });
    return std::move(sb_);
  }

 private:
  LocalPoly s_poly(const LocalPoly& f, const LocalPoly& g) const {
    const std::size_t n = sb_.nvars;
    const Exponents l = lcm(f.lead().exponents, g.lead().exponents, n);
    const Exponents sf = quotient(l, f.lead().exponents, n);
    const Exponents sg = quotient(l, g.lead().exponents, n);
    const LocalPoly lifted =
        LocalPoly().minus_scaled(Rational(-1) / f.lead().coefficient, sf, f, n,
                                 sb_.noether_degree.value_or(0));
    return lifted.minus_scaled(Rational(1) / g.lead().coefficient, sg, g, n,
                               sb_.noether_degree.value_or(0));
  }

  void insert(LocalPoly h) {
    if (h.is_zero()) return;
    h.make_monic();
    const bool ideal = sb_.ncomponents == 1;
    if (ideal && h.lead().degree == 0) {
      sb_.unit = true;
      sb_.elements.clear();
      return;
    }
    const std::size_t n = sb_.nvars;
    const std::size_t idx = sb_.elements.size();
    for (std::size_t k = 0; k < idx; ++k) {
      const LocalPoly& g = sb_.elements[k];
      if (g.is_zero() || g.lead().component != h.lead().component) continue;
      if (ideal && coprime(g.lead().exponents, h.lead().exponents, n)) continue;
      const Exponents l = lcm(g.lead().exponents, h.lead().exponents, n);
      pairs_.push({k, idx, total_degree(l), serial_++});
    }
    sb_.elements.push_back(std::move(h));
    if (ideal) update_noether();
  }

  void update_noether() {
    std::vector<Exponents> leads;
    for (const auto& g : sb_.elements) {
      if (!g.is_zero()) leads.push_back(g.lead().exponents);
    }
    // Skip the scan while the leading ideal is far from m-primary.
    const std::size_t n = sb_.nvars;
    double volume = 1;
    for (std::size_t v = 0; v < n; ++v) {
      unsigned pure = 0;
      for (const auto& e : leads) {
        bool only_v = e[v] != 0;
        for (std::size_t w = 0; w < n && only_v; ++w) only_v = (w == v) || e[w] == 0;
        if (only_v && (pure == 0 || e[v] < pure)) pure = e[v];
      }
      if (pure == 0) return;
      volume *= pure;
    }
    if (volume > 4e6) return;
    unsigned max_degree = 0;
    const auto count = count_standard_monomials(leads, n, std::nullopt, &max_degree);
    if (!count) return;
    const unsigned bound = max_degree + 1;
    if (sb_.noether_degree && *sb_.noether_degree <= bound) return;
    sb_.noether_degree = bound;
    for (auto& g : sb_.elements) {
      if (!g.is_zero()) g.truncate(bound);
    }
  }

  StandardBasis sb_;
  unsigned cap_;
  std::priority_queue<CriticalPair, std::vector<CriticalPair>, PairAfter> pairs_;
  std::uint64_t serial_ = 0;
};

}  // namespace

StandardBasis compute_standard_basis(std::vector<LocalPoly> generators, std::size_t nvars,
                                     std::size_t ncomponents, unsigned degree_cap) {
  if (nvars > kMaxVariables) throw Error(ErrorCode::TooManyVariables, "too many variables");
  return Builder(nvars, ncomponents, degree_cap).run(std::move(generators));
}

}  // namespace germlab
