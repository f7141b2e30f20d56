#pragma once

#include <string>
#include <vector>

#include "germlab/poly.hpp"

namespace germlab {

/// One branch of a multi-germ, centred at its base point. Components are
/// (x1, ..., x_{n-1}, f_n, f_{n+1}).
struct Branch {
  std::string base_point;
  std::vector<Poly> components;
};

/// Source variable names x1, ..., x_{n-1}, y.
VarList source_variables(unsigned n);

/// Corank-one multi-germ (C^n, S) -> (C^{n+1}, 0) in normal form.
class GermSpec {
 public:
  GermSpec() = default;
  GermSpec(std::string name, unsigned n, std::vector<Branch> branches);

  /// Parses the component strings of each branch over the source variables.
  static GermSpec parse(std::string name, unsigned n,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& branches);

  const std::string& name() const { return name_; }
  unsigned source_dim() const { return n_; }
  const VarList& variables() const { return vars_; }
  const std::vector<Branch>& branches() const { return branches_; }
  std::size_t branch_count() const { return branches_.size(); }
  const Poly& fn(std::size_t branch) const { return branches_[branch].components[n_ - 1]; }
  const Poly& fn1(std::size_t branch) const { return branches_[branch].components[n_]; }

 private:
  std::string name_;
  unsigned n_ = 0;
  VarList vars_;
  std::vector<Branch> branches_;
};

/// One-parameter family of germs; components live over the source variables
/// followed by the parameter.
class FamilySpec {
 public:
  FamilySpec() = default;
  FamilySpec(std::string name, unsigned n, std::string parameter, std::vector<Branch> branches);

  static FamilySpec parse(std::string name, unsigned n, std::string parameter,
                          const std::vector<std::pair<std::string, std::vector<std::string>>>& branches);

  const std::string& name() const { return name_; }
  unsigned source_dim() const { return n_; }
  const std::string& parameter() const { return parameter_; }
  const VarList& variables() const { return vars_; }
  const std::vector<Branch>& branches() const { return branches_; }

  GermSpec specialize(const Rational& t) const;

 private:
  std::string name_;
  unsigned n_ = 0;
  std::string parameter_;
  VarList vars_;
  std::vector<Branch> branches_;
};

}  // namespace germlab
