#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector; slots beyond the owning variable list stay zero.
using Exponents = std::array<std::uint16_t, kMaxVariables>;

unsigned total_degree(const Exponents& e);

/// True when `a` precedes `b` in degree-reverse-lexicographic order
/// (the canonical serialization order) over the first `nvars` slots.
bool degrevlex_greater(const Exponents& a, const Exponents& b, std::size_t nvars);

/// Ordered, immutable list of variable names. Copies share storage.
class VarList {
 public:
  VarList();
  explicit VarList(std::vector<std::string> names);
  VarList(std::initializer_list<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarList& other) const;
  bool operator!=(const VarList& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are stored without zero coefficients and sorted in decreasing
/// degrevlex order, so two equal polynomials have identical term vectors.
class Poly {
 public:
  struct Term {
    Exponents exponents{};
    Rational coefficient;

    bool operator==(const Term& other) const = default;
  };

  Poly() = default;
  explicit Poly(VarList vars) : vars_(std::move(vars)) {}

  static Poly constant(VarList vars, const Rational& c);
  static Poly variable(VarList vars, std::size_t index);
  static Poly variable(VarList vars, std::string_view name);
  static Poly monomial(VarList vars, const Exponents& e, const Rational& c);
  /// Sorts, merges equal exponents and drops zeros.
  static Poly from_terms(VarList vars, std::vector<Term> terms);

  const VarList& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree of a term (the order at the origin); -1 for zero.
  int order() const;
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;
  Rational evaluate(std::span<const Rational> point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;
  /// Drops every term of total degree greater than `max_degree`.
  Poly truncated(unsigned max_degree) const;
  /// Product truncated at `max_degree` without forming higher terms.
  Poly truncated_product(const Poly& other, unsigned max_degree) const;
  /// Exact quotient by `divisor`; throws NotExactDivision on a remainder.
  Poly divide_exact(const Poly& divisor) const;
  /// Same polynomial re-expressed over `target`, mapping variables by name.
  Poly rebased(const VarList& target) const;

  /// Canonical text form, e.g. "-x^2*y + y^3", "1/2*x", "0".
  std::string to_string() const;

 private:
  void require_same_vars(const Poly& other) const;

  VarList vars_;
  std::vector<Term> terms_;
};

/// Parses the textual polynomial grammar (integers, rationals a/b, declared
/// variables, + - * ^ and parentheses; no implicit multiplication).
Poly parse_polynomial(std::string_view text, const VarList& vars);

using SubstitutionValue = std::variant<Poly, Rational>;
using Assignment = std::map<std::string, SubstitutionValue>;

/// Exact composition. Assigned symbols absent from `p` are ignored. The
/// result lives on the unassigned variables of `p` (in order) followed by any
/// new variables introduced by the assigned polynomials.
Poly substitute(const Poly& p, const Assignment& assignment);

/// As above with an explicit result variable list; every unassigned variable
/// of `p` must appear in `target` and `target` must not repeat a name.
/// A non-zero `truncate_above` drops terms of degree greater than it while
/// composing.
Poly substitute(const Poly& p, const Assignment& assignment, const VarList& target,
                unsigned truncate_above = 0);

/// (p - p|_{var_a := var_b}) / (var_a - var_b), computed by exact division.
Poly difference_quotient(const Poly& p, std::size_t var_a, std::size_t var_b);

/// The non-zero maximal minors of the Jacobian matrix of (gens, extra_linear)
/// with respect to every variable, in lexicographic order of column subsets.
std::vector<Poly> jacobian_minor_ideal(std::span<const Poly> gens,
                                       std::span<const Poly> extra_linear);

/// Determinant of a square polynomial matrix (cofactor expansion).
Poly determinant(const std::vector<std::vector<Poly>>& matrix, const VarList& vars);

}  // namespace germlab
