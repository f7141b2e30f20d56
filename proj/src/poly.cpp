#include "germlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "germlab/error.hpp"

namespace germlab {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool degrevlex_greater(const Exponents& a, const Exponents& b, std::size_t nvars) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------- VarList

VarList::VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarList::VarList(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw Error(ErrorCode::TooManyVariables,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw Error(ErrorCode::VariableConflict, "variable '" + n + "' listed twice");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList::VarList(std::initializer_list<std::string> names)
    : VarList(std::vector<std::string>(names)) {}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

bool VarList::operator==(const VarList& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

// ------------------------------------------------------------------- Poly

Poly Poly::constant(VarList vars, const Rational& c) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

Poly Poly::variable(VarList vars, std::size_t index) {
  if (index >= vars.size()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(std::move(vars), e, Rational(1));
}

Poly Poly::variable(VarList vars, std::string_view name) {
  const auto idx = vars.index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *idx);
}

Poly Poly::monomial(VarList vars, const Exponents& e, const Rational& c) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

Poly Poly::from_terms(VarList vars, std::vector<Term> terms) {
  const std::size_t n = vars.size();
  std::sort(terms.begin(), terms.end(), [n](const Term& a, const Term& b) {
    return degrevlex_greater(a.exponents, b.exponents, n);
  });
  Poly p(std::move(vars));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponents) == 0);
}

int Poly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.front().exponents));
}

int Poly::order() const {
  return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.back().exponents));
}

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exponents[var]));
  return d;
}

bool Poly::involves(std::size_t var) const { return degree_in(var) > 0; }

Rational Poly::coefficient(const Exponents& e) const {
  for (const auto& t : terms_) {
    if (t.exponents == e) return t.coefficient;
  }
  return Rational(0);
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && total_degree(terms_.back().exponents) == 0) {
    return terms_.back().coefficient;
  }
  return Rational(0);
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong dimension");
  }
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned k = 0; k < t.exponents[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

void Poly::require_same_vars(const Poly& other) const {
  if (vars_ != other.vars_) {
    throw Error(ErrorCode::VariableMismatch, "polynomials live over different variable lists");
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

template <typename Combine>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, std::size_t n,
                                    Combine combine_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && degrevlex_greater(a[i].exponents, b[j].exponents, n))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || degrevlex_greater(b[j].exponents, a[i].exponents, n)) {
      out.push_back({b[j].exponents, combine_b(b[j].coefficient)});
      ++j;
    } else {
      Rational c = a[i].coefficient + combine_b(b[j].coefficient);
      if (c != 0) out.push_back({a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  require_same_vars(other);
  terms_ = merge_terms(terms_, other.terms_, vars_.size(), [](const Rational& c) { return c; });
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_vars(other);
  terms_ = merge_terms(terms_, other.terms_, vars_.size(),
                       [](const Rational& c) { return Rational(-c); });
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_vars(b);
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = s.exponents[i] + t.exponents[i];
      terms.push_back({e, s.coefficient * t.coefficient});
    }
  }
  return Poly::from_terms(a.vars_, std::move(terms));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

bool Poly::operator==(const Poly& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(vars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d = t;
    d.coefficient *= t.exponents[var];
    d.exponents[var] -= 1;
    terms.push_back(std::move(d));
  }
  return from_terms(vars_, std::move(terms));
}

Poly Poly::truncated(unsigned max_degree) const {
  Poly r(vars_);
  for (const auto& t : terms_) {
    if (total_degree(t.exponents) <= max_degree) r.terms_.push_back(t);
  }
  return r;
}

Poly Poly::truncated_product(const Poly& other, unsigned max_degree) const {
  require_same_vars(other);
  std::vector<Term> terms;
  for (const auto& s : terms_) {
    const unsigned ds = total_degree(s.exponents);
    if (ds > max_degree) continue;
    for (const auto& t : other.terms_) {
      if (ds + total_degree(t.exponents) > max_degree) continue;
      Exponents e;
      for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = s.exponents[i] + t.exponents[i];
      terms.push_back({e, s.coefficient * t.coefficient});
    }
  }
  return from_terms(vars_, std::move(terms));
}

Poly Poly::divide_exact(const Poly& divisor) const {
  require_same_vars(divisor);
  if (divisor.is_zero()) throw Error(ErrorCode::NotExactDivision, "division by zero polynomial");
  const Term& lead = divisor.terms_.front();
  Poly remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& r = remainder.terms_.front();
    Exponents e{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (r.exponents[i] < lead.exponents[i]) {
        throw Error(ErrorCode::NotExactDivision,
                    to_string() + " is not divisible by " + divisor.to_string());
      }
      e[i] = r.exponents[i] - lead.exponents[i];
    }
    Term q{e, r.coefficient / lead.coefficient};
    remainder -= monomial(vars_, q.exponents, q.coefficient) * divisor;
    quotient.push_back(std::move(q));
  }
  return from_terms(vars_, std::move(quotient));
}

Poly Poly::rebased(const VarList& target) const {
  if (target == vars_) return *this;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto idx = target.index_of(vars_.name(i));
    if (!idx) {
      if (degree_in(i) > 0) {
        throw Error(ErrorCode::UnknownVariable,
                    "variable '" + vars_.name(i) + "' missing from target list");
      }
      map[i] = kMaxVariables;
    } else {
      map[i] = *idx;
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e{};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exponents[i] != 0) e[map[i]] = t.exponents[i];
    }
    terms.push_back({e, t.coefficient});
  }
  return from_terms(target, std::move(terms));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const Rational magnitude = abs(t.coefficient);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool has_vars = total_degree(t.exponents) > 0;
    bool need_star = false;
    if (!has_vars || magnitude != 1) {
      out << germlab::to_string(magnitude);
      need_star = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (need_star) out << '*';
      out << vars_.name(i);
      if (t.exponents[i] > 1) out << '^' << t.exponents[i];
      need_star = true;
    }
  }
  return out.str();
}

// ----------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expression() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '-') {
        throw Error(ErrorCode::NegativeExponent,
                    "negative exponent at position " + std::to_string(pos_));
      }
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = read_digits();
      const std::size_t save = pos_;
      if (accept('/')) {
        const std::string den = read_digits();
        if (den.empty()) {
          pos_ = save;
          fail("expected denominator after '/'");
        }
        literal += "/" + den;
      }
      return Poly::constant(vars_, parse_rational(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto idx = vars_.index_of(name);
      if (!idx) {
        throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) +
                                                    "' at position " + std::to_string(start));
      }
      return Poly::variable(vars_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_polynomial(std::string_view text, const VarList& vars) {
  return Parser(text, vars).parse();
}

// ----------------------------------------------------------- substitution

namespace {

Poly value_as_poly(const SubstitutionValue& v, const VarList& target) {
  if (const auto* q = std::get_if<Rational>(&v)) return Poly::constant(target, *q);
  return std::get<Poly>(v).rebased(target);
}

}  // namespace

Poly substitute(const Poly& p, const Assignment& assignment, const VarList& target,
                unsigned truncate_above) {
  const VarList& source = p.variables();
  std::vector<Poly> images;
  images.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto it = assignment.find(source.name(i));
    if (it != assignment.end()) {
      images.push_back(value_as_poly(it->second, target));
    } else if (const auto idx = target.index_of(source.name(i))) {
      images.push_back(Poly::variable(target, *idx));
    } else if (p.involves(i)) {
      throw Error(ErrorCode::VariableConflict,
                  "unassigned variable '" + source.name(i) + "' has no slot in the result");
    } else {
      images.push_back(Poly(target));
    }
  }

  const bool truncate = truncate_above > 0;
  std::vector<std::vector<Poly>> powers(source.size());
  auto power = [&](std::size_t var, unsigned e) -> const Poly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Poly::constant(target, Rational(1)));
    while (cache.size() <= e) {
      cache.push_back(truncate ? cache.back().truncated_product(images[var], truncate_above)
                               : cache.back() * images[var]);
    }
    return cache[e];
  };

  std::vector<Poly::Term> collected;
  for (const auto& t : p.terms()) {
    Poly acc = Poly::constant(target, t.coefficient);
    for (std::size_t i = 0; i < source.size() && !acc.is_zero(); ++i) {
      if (t.exponents[i] == 0) continue;
      const Poly& f = power(i, t.exponents[i]);
      acc = truncate ? acc.truncated_product(f, truncate_above) : acc * f;
    }
    for (const auto& term : acc.terms()) collected.push_back(term);
  }
  return Poly::from_terms(target, std::move(collected));
}

Poly substitute(const Poly& p, const Assignment& assignment) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (!assignment.contains(p.variables().name(i))) names.push_back(p.variables().name(i));
  }
  for (const auto& [name, value] : assignment) {
    if (!p.variables().index_of(name)) continue;
    if (const auto* q = std::get_if<Poly>(&value)) {
      for (const auto& n : q->variables().names()) {
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
      }
    }
  }
  return substitute(p, assignment, VarList(std::move(names)));
}

Poly difference_quotient(const Poly& p, std::size_t var_a, std::size_t var_b) {
  if (var_a == var_b || var_a >= p.variables().size() || var_b >= p.variables().size()) {
    throw Error(ErrorCode::InvalidArgument, "difference quotient needs two distinct variables");
  }
  std::vector<Poly::Term> swapped;
  swapped.reserve(p.size());
  for (const auto& t : p.terms()) {
    Poly::Term s = t;
    s.exponents[var_b] += s.exponents[var_a];
    s.exponents[var_a] = 0;
    swapped.push_back(std::move(s));
  }
  const Poly numerator = p - Poly::from_terms(p.variables(), std::move(swapped));
  const Poly denominator =
      Poly::variable(p.variables(), var_a) - Poly::variable(p.variables(), var_b);
  return numerator.divide_exact(denominator);
}

// --------------------------------------------------------------- Jacobian

Poly determinant(const std::vector<std::vector<Poly>>& matrix, const VarList& vars) {
  const std::size_t n = matrix.size();
  if (n == 0) return Poly::constant(vars, Rational(1));
  if (n == 1) return matrix[0][0];
  if (n == 2) return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
  Poly det(vars);
  for (std::size_t col = 0; col < n; ++col) {
    if (matrix[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(matrix[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = matrix[0][col] * determinant(minor, vars);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

std::vector<Poly> jacobian_minor_ideal(std::span<const Poly> gens,
                                       std::span<const Poly> extra_linear) {
  std::vector<Poly> rows(gens.begin(), gens.end());
  rows.insert(rows.end(), extra_linear.begin(), extra_linear.end());
  if (rows.empty()) return {};
  const VarList vars = rows.front().variables();
  for (const auto& r : rows) {
    if (r.variables() != vars) {
      throw Error(ErrorCode::VariableMismatch, "Jacobian rows over different variable lists");
    }
  }
  const std::size_t nrows = rows.size();
  const std::size_t ncols = vars.size();
  if (nrows > ncols) {
    throw Error(ErrorCode::DimensionMismatch,
                "more equations than variables in Jacobian minor ideal");
  }
  std::vector<std::vector<Poly>> jac(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) jac[r].push_back(rows[r].derivative(c));
  }

  std::vector<Poly> minors;
  std::vector<std::size_t> cols(nrows);
  std::iota(cols.begin(), cols.end(), 0);
  while (true) {
    std::vector<std::vector<Poly>> sub(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
      for (std::size_t c : cols) sub[r].push_back(jac[r][c]);
    }
    Poly m = determinant(sub, vars);
    if (!m.is_zero()) minors.push_back(std::move(m));
    // next combination
    std::size_t i = nrows;
    while (i > 0 && cols[i - 1] == ncols - nrows + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < nrows; ++j) cols[j] = cols[j - 1] + 1;
  }
  return minors;
}

}  // namespace germlab
