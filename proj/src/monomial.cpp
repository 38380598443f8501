#include "repstab/monomial.hpp"

#include <stdexcept>

namespace repstab {

void Polynomial::add(const Exponent& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [x, c] : other.terms_) add(x, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.variables_);
  Polynomial::Exponent x(static_cast<std::size_t>(a.variables_));
  for (const auto& [xa, ca] : a.terms_)
    for (const auto& [xb, cb] : b.terms_) {
      for (int v = 0; v < a.variables_; ++v) x[v] = xa[v] + xb[v];
      out.add(x, ca * cb);
    }
  return out;
}

namespace {

using Alphabet = std::vector<Polynomial::Exponent>;

// Sum over semistandard fillings of `shape` with letters from `alphabet`.
Polynomial schur_in_alphabet(const Partition& shape, const Alphabet& alphabet,
                             int variables) {
  Polynomial out(variables);
  std::vector<std::vector<int>> filling;
  for (int part : shape.parts()) filling.emplace_back(part, -1);
  Polynomial::Exponent x(static_cast<std::size_t>(variables), 0);
  int letters = static_cast<int>(alphabet.size());

  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      out.add(x, 1);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 0;
    if (c > 0) lo = filling[r][c - 1];
    if (r > 0) lo = std::max(lo, filling[r - 1][c] + 1);
    for (int a = lo; a < letters; ++a) {
      filling[r][c] = a;
      for (int v = 0; v < variables; ++v) x[v] += alphabet[a][v];
      self(self, idx + 1);
      for (int v = 0; v < variables; ++v) x[v] -= alphabet[a][v];
    }
    filling[r][c] = -1;
  };
  rec(rec, 0);
  return out;
}

Polynomial power_in_alphabet(const Partition& mu, const Alphabet& alphabet,
                             int variables) {
  Polynomial out(variables);
  out.add(Polynomial::Exponent(static_cast<std::size_t>(variables), 0), 1);
  for (int m : mu.parts()) {
    Polynomial ps(variables);
    for (const auto& letter : alphabet) {
      Polynomial::Exponent x = letter;
      for (int& e : x) e *= m;
      ps.add(x, 1);
    }
    out = out * ps;
  }
  return out;
}

Alphabet variables_alphabet(int variables) {
  Alphabet alphabet;
  for (int v = 0; v < variables; ++v) {
    Polynomial::Exponent x(static_cast<std::size_t>(variables), 0);
    x[v] = 1;
    alphabet.push_back(x);
  }
  return alphabet;
}

Polynomial expand_in_alphabet(const SymmetricFunction& f,
                              const Alphabet& alphabet, int variables) {
  Polynomial out(variables);
  for (const auto& [key, c] : f.terms()) {
    Polynomial term = f.basis() == Basis::Schur
                          ? schur_in_alphabet(key, alphabet, variables)
                          : power_in_alphabet(key, alphabet, variables);
    Polynomial scaled(variables);
    scaled.add(Polynomial::Exponent(static_cast<std::size_t>(variables), 0), c);
    out += scaled * term;
  }
  return out;
}

}  // namespace

Polynomial monomial_expand(const SymmetricFunction& f, int variables) {
  if (variables < f.max_degree())
    throw std::invalid_argument("monomial_expand: too few variables");
  return expand_in_alphabet(f, variables_alphabet(variables), variables);
}

Polynomial monomial_plethysm(const SymmetricFunction& f,
                             const SymmetricFunction& g, int variables) {
  if (variables < std::max(0, f.max_degree()) * std::max(0, g.max_degree()))
    throw std::invalid_argument("monomial_plethysm: too few variables");
  if (!is_schur_positive_integral(g))
    throw std::invalid_argument("monomial_plethysm: g must be Schur-positive");
  Polynomial gx = monomial_expand(g, variables);
  Alphabet alphabet;
  for (const auto& [x, c] : gx.terms())
    for (Integer k = 0; k < c; ++k) alphabet.push_back(x);
  SymmetricFunction fs = f.basis() == Basis::Schur ? f : to_schur(f);
  return expand_in_alphabet(fs, alphabet, variables);
}

}  // namespace repstab
