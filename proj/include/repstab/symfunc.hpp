#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "repstab/partition.hpp"
#include "repstab/rational.hpp"

namespace repstab {

enum class Basis { Schur, Power };

/// Finitely supported linear combination of Schur functions s_λ or power sums
/// p_μ with exact rational coefficients. May be inhomogeneous. Zero
/// coefficients are never stored.
class SymmetricFunction {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymmetricFunction(Basis basis = Basis::Schur) : basis_(basis) {}
  SymmetricFunction(Basis basis, Terms terms);

  static SymmetricFunction basis_element(Basis basis, Partition key,
                                         const Rational& coeff = 1);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Rational coefficient(const Partition& key) const;
  /// Adds `coeff` to the coefficient of `key`, erasing it if it cancels.
  void add(const Partition& key, const Rational& coeff);

  /// -1 for the zero function.
  int max_degree() const;
  int min_degree() const;
  /// The zero function counts as homogeneous.
  bool is_homogeneous() const;

  SymmetricFunction& operator+=(const SymmetricFunction& other);
  SymmetricFunction& operator-=(const SymmetricFunction& other);
  SymmetricFunction& operator*=(const Rational& scalar);

  friend SymmetricFunction operator+(SymmetricFunction a,
                                     const SymmetricFunction& b) {
    return a += b;
  }
  friend SymmetricFunction operator-(SymmetricFunction a,
                                     const SymmetricFunction& b) {
    return a -= b;
  }
  friend SymmetricFunction operator-(SymmetricFunction a) {
    return a *= Rational(-1);
  }
  friend SymmetricFunction operator*(const Rational& s, SymmetricFunction a) {
    return a *= s;
  }

  /// Equality as symmetric functions; compares across bases by converting.
  friend bool operator==(const SymmetricFunction& a, const SymmetricFunction& b);

 private:
  Basis basis_;
  Terms terms_;
};

SymmetricFunction schur(const Partition& lambda);
SymmetricFunction h(int n);
SymmetricFunction e(int n);
SymmetricFunction p(const Partition& mu);

/// χ^λ(μ), the irreducible S_n character at cycle type μ (Murnaghan–Nakayama).
/// Memoized; safe to call concurrently.
Integer character_value(const Partition& lambda, const Partition& mu);

/// z_μ = Π i^{m_i} m_i!, the centralizer order of cycle type μ.
Integer z_coefficient(const Partition& mu);

SymmetricFunction to_power(const SymmetricFunction& f);
SymmetricFunction to_schur(const SymmetricFunction& f);
SymmetricFunction to_basis(const SymmetricFunction& f, Basis basis);

/// Product in the basis of `f`. Schur products go through LR enumeration
/// unless the support pair count exceeds `lr_pair_limit`, in which case they
/// are routed through the power-sum basis.
SymmetricFunction mul(const SymmetricFunction& f, const SymmetricFunction& g,
                      std::size_t lr_pair_limit = 4096);
SymmetricFunction operator*(const SymmetricFunction& f,
                            const SymmetricFunction& g);

/// Schur-basis product using only LR coefficients.
SymmetricFunction mul_lr(const SymmetricFunction& f, const SymmetricFunction& g);
/// Schur-basis product computed through power sums.
SymmetricFunction mul_via_power(const SymmetricFunction& f,
                                const SymmetricFunction& g);

/// Product in the power-sum basis keeping only degrees ≤ max_degree.
SymmetricFunction mul_power_truncated(const SymmetricFunction& f,
                                      const SymmetricFunction& g,
                                      int max_degree);

SymmetricFunction omega(const SymmetricFunction& f);

/// f[g] with the Adams convention p_n[c·g] = c·p_n[g]. Terms of degree above
/// `max_degree` are discarded (-1: keep everything). The result is in the
/// basis of `f`.
SymmetricFunction plethysm(const SymmetricFunction& f, const SymmetricFunction& g,
                           int max_degree = -1);

SymmetricFunction homogeneous_part(const SymmetricFunction& f, int degree);
SymmetricFunction truncate_degree(const SymmetricFunction& f, int max_degree);

/// l_n = (1/n) Σ_{d|n} μ(d) p_d^{n/d}, in the Schur basis.
SymmetricFunction lie_l(int n);
/// π_n = ω(l_n).
SymmetricFunction pi_char(int n);
/// Σ_{j=1}^{D} l_j.
SymmetricFunction lie_series(int max_degree);
/// Σ_{j=1}^{D} (−1)^j π_j.
SymmetricFunction pi_signed_series(int max_degree);
/// U_k truncated: Σ_{j=k}^{D} s_{(j−k+1, 1^{k−1})}.
SymmetricFunction u_series(int k, int max_degree);

/// Replaces each s_λ by s_{λ+□}. Throws std::invalid_argument for
/// inhomogeneous input.
SymmetricFunction add_box_sf(const SymmetricFunction& f);

/// True if every Schur coefficient is a nonnegative integer.
bool is_schur_positive_integral(const SymmetricFunction& f);

int moebius(int n);

}  // namespace repstab
