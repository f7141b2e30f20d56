#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germlab/poly.hpp"

namespace germlab {

/// Term of an element of the free module O^r over the local ring at the
/// origin. Ideals are the r = 1 case (component always 0).
struct LocalTerm {
  Exponents exponents{};
  std::uint16_t degree = 0;
  std::uint16_t component = 0;
  Rational coefficient;
};

/// Negative-degree reverse lexicographic order, position over term:
/// lower component first, then lower total degree, then revlex.
bool local_greater(const LocalTerm& a, const LocalTerm& b, std::size_t nvars);

/// Module element with terms sorted decreasingly in the local order, so the
/// leading term is the first one.
class LocalPoly {
 public:
  LocalPoly() = default;
  explicit LocalPoly(std::vector<LocalTerm> sorted_terms);

  bool is_zero() const { return terms_.empty(); }
  const LocalTerm& lead() const { return terms_.front(); }
  const std::vector<LocalTerm>& terms() const { return terms_; }
  /// deg(f) - deg(LM(f)).
  unsigned ecart() const { return max_degree_ - lead().degree; }
  unsigned max_degree() const { return max_degree_; }

  void make_monic();
  /// Drops all terms of total degree >= bound.
  void truncate(unsigned bound);

  /// this - c * x^shift * other, dropping terms of degree >= bound when
  /// bound > 0.
  LocalPoly minus_scaled(const Rational& c, const Exponents& shift, const LocalPoly& other,
                         std::size_t nvars, unsigned bound) const;

 private:
  void refresh();

  std::vector<LocalTerm> terms_;
  unsigned max_degree_ = 0;
};

LocalPoly to_local(const Poly& p, std::uint16_t component = 0);
/// Component `component` of a module element as an ordinary polynomial.
Poly from_local(const LocalPoly& f, const VarList& vars, std::uint16_t component = 0);

/// Length of a quotient O/I (or O^r/M). Infinite signals a positive
/// dimensional support through the origin.
struct QuotientDimension {
  enum class Kind { Finite, Infinite, CapExceeded };

  Kind kind = Kind::Finite;
  std::uint64_t value = 0;

  static QuotientDimension finite(std::uint64_t v) { return {Kind::Finite, v}; }
  static QuotientDimension infinite() { return {Kind::Infinite, 0}; }
  static QuotientDimension cap_exceeded() { return {Kind::CapExceeded, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool operator==(const QuotientDimension&) const = default;
};

std::string to_string(const QuotientDimension& q);

/// Standard basis of an ideal (or submodule) of the local ring with respect
/// to the local order above.
class StandardBasis {
 public:
  std::size_t nvars = 0;
  std::size_t ncomponents = 1;
  /// The ideal is the whole local ring.
  bool unit = false;
  /// When set, every monomial of degree >= noether_degree lies in the
  /// leading ideal, hence m^noether_degree is contained in the ideal.
  std::optional<unsigned> noether_degree;
  std::vector<LocalPoly> elements;

  /// Mora weak normal form; zero exactly when f lies in the local ideal.
  LocalPoly normal_form(LocalPoly f, unsigned degree_cap = 0) const;
  bool contains(const LocalPoly& f) const { return unit || normal_form(f).is_zero(); }
  /// Minimal generators of the leading module, per component.
  std::vector<std::vector<Exponents>> leading_monomials() const;
  QuotientDimension quotient_dimension() const;

  std::string serialize() const;
  static StandardBasis deserialize(const std::string& text);
};

/// Computes a standard basis by Buchberger's algorithm with Mora's normal
/// form (ecart-minimal reducer selection). Throws Error(CapExceeded) when a
/// leading monomial of degree above `degree_cap` appears.
StandardBasis compute_standard_basis(std::vector<LocalPoly> generators, std::size_t nvars,
                                     std::size_t ncomponents, unsigned degree_cap);

/// Counts monomials in `nvars` variables outside the monomial ideal spanned
/// by `leads` (and of degree < bound when given). Returns nullopt when the
/// count is infinite. `max_degree` receives the largest standard degree.
std::optional<std::uint64_t> count_standard_monomials(const std::vector<Exponents>& leads,
                                                      std::size_t nvars,
                                                      std::optional<unsigned> bound,
                                                      unsigned* max_degree = nullptr);

}  // namespace germlab
