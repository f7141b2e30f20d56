#include "germlab/germ.hpp"

#include "germlab/error.hpp"

namespace germlab {

VarList source_variables(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "source dimension must be positive");
  std::vector<std::string> names;
  for (unsigned i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("y");
  return VarList(names);
}

namespace {

/// Normal form check over the first `source_count` variables of `vars`.
void validate_branches(unsigned n, const VarList& vars, std::size_t source_count,
                       const std::vector<Branch>& branches) {
  if (branches.empty()) throw Error(ErrorCode::NormalFormViolation, "germ has no branches");
  for (const auto& b : branches) {
    const std::string where = "branch '" + b.base_point + "'";
    if (b.components.size() != n + 1) {
      throw Error(ErrorCode::NormalFormViolation,
                  where + " needs " + std::to_string(n + 1) + " components");
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
      if (b.components[i] != Poly::variable(vars, i)) {
        throw Error(ErrorCode::NormalFormViolation,
                    where + ": component " + std::to_string(i + 1) + " must be " + vars.name(i));
      }
    }
    for (const auto& c : b.components) {
      if (c.variables() != vars) {
        throw Error(ErrorCode::VariableMismatch, where + ": components use other variables");
      }
      for (const auto& t : c.terms()) {
        unsigned source_degree = 0;
        for (std::size_t v = 0; v < source_count; ++v) source_degree += t.exponents[v];
        if (source_degree == 0) {
          throw Error(ErrorCode::NormalFormViolation,
                      where + ": component " + c.to_string() + " does not vanish at the base point");
        }
      }
    }
  }
}

std::vector<Branch> parse_branches(
    const VarList& vars,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& branches) {
  std::vector<Branch> out;
  for (const auto& [label, texts] : branches) {
    Branch b;
    b.base_point = label;
    for (const auto& t : texts) b.components.push_back(parse_polynomial(t, vars));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

GermSpec::GermSpec(std::string name, unsigned n, std::vector<Branch> branches)
    : name_(std::move(name)), n_(n), vars_(source_variables(n)), branches_(std::move(branches)) {
  validate_branches(n_, vars_, vars_.size(), branches_);
}

GermSpec GermSpec::parse(
    std::string name, unsigned n,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& branches) {
  return GermSpec(std::move(name), n, parse_branches(source_variables(n), branches));
}

FamilySpec::FamilySpec(std::string name, unsigned n, std::string parameter,
                       std::vector<Branch> branches)
    : name_(std::move(name)), n_(n), parameter_(std::move(parameter)), branches_(std::move(branches)) {
  std::vector<std::string> names = source_variables(n).names();
  names.push_back(parameter_);
  vars_ = VarList(names);
  validate_branches(n_, vars_, n_, branches_);
}

FamilySpec FamilySpec::parse(
    std::string name, unsigned n, std::string parameter,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& branches) {
  std::vector<std::string> names = source_variables(n).names();
  names.push_back(parameter);
  return FamilySpec(std::move(name), n, std::move(parameter),
                    parse_branches(VarList(names), branches));
}

GermSpec FamilySpec::specialize(const Rational& t) const {
  const VarList source = source_variables(n_);
  std::vector<Branch> out;
  for (const auto& b : branches_) {
    Branch s;
    s.base_point = b.base_point;
    for (const auto& c : b.components) {
      s.components.push_back(substitute(c, {{parameter_, t}}, source));
    }
    out.push_back(std::move(s));
  }
  return GermSpec(name_ + "[" + parameter_ + "=" + to_string(t) + "]", n_, std::move(out));
}

}  // namespace germlab
