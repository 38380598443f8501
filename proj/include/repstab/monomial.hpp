#pragma once

#include <map>
#include <vector>

#include "repstab/symfunc.hpp"

namespace repstab {

/// Polynomial in a fixed number of variables; keys are exponent vectors.
/// Used only as an independent check of symmetric-function arithmetic.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int variables = 0) : variables_(variables) {}

  int variables() const { return variables_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  void add(const Exponent& exponent, const Rational& coeff);
  Rational coefficient(const Exponent& exponent) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int variables_;
  std::map<Exponent, Rational> terms_;
};

/// f(x_1, ..., x_v). Schur functions are expanded through semistandard
/// tableaux, power sums directly. Throws std::invalid_argument when v is
/// below the degree of f, since the expansion would then lose information.
Polynomial monomial_expand(const SymmetricFunction& f, int variables);

/// f[g](x_1..x_v) computed by substituting the monomials of g (g must be
/// Schur-positive integral, so its monomials form an alphabet with
/// multiplicity) into the Schur expansion of f.
Polynomial monomial_plethysm(const SymmetricFunction& f,
                             const SymmetricFunction& g, int variables);

}  // namespace repstab
