#include "repstab/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "repstab/lr.hpp"

namespace repstab {

SymmetricFunction::SymmetricFunction(Basis basis, Terms terms)
    : basis_(basis), terms_(std::move(terms)) {
  for (auto& [key, c] : terms_) c.canonicalize();
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

SymmetricFunction SymmetricFunction::basis_element(Basis basis, Partition key,
                                                   const Rational& coeff) {
  SymmetricFunction f(basis);
  f.add(key, coeff);
  return f;
}

Rational SymmetricFunction::coefficient(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymmetricFunction::add(const Partition& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) it->second.canonicalize();
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int SymmetricFunction::max_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.size());
  return d;
}

int SymmetricFunction::min_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.size();
  for (const auto& [key, c] : terms_) d = std::min(d, key.size());
  return d;
}

bool SymmetricFunction::is_homogeneous() const {
  return max_degree() == min_degree();
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& other) {
  if (other.basis_ != basis_) return *this += to_basis(other, basis_);
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

SymmetricFunction& SymmetricFunction::operator-=(const SymmetricFunction& other) {
  if (other.basis_ != basis_) return *this -= to_basis(other, basis_);
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

SymmetricFunction& SymmetricFunction::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const SymmetricFunction& a, const SymmetricFunction& b) {
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return a.terms_ == to_basis(b, a.basis_).terms_;
}

SymmetricFunction schur(const Partition& lambda) {
  return SymmetricFunction::basis_element(Basis::Schur, lambda);
}

SymmetricFunction h(int n) {
  if (n < 0) return SymmetricFunction(Basis::Schur);
  return schur(n == 0 ? Partition() : Partition{n});
}

SymmetricFunction e(int n) {
  if (n < 0) return SymmetricFunction(Basis::Schur);
  return schur(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

SymmetricFunction p(const Partition& mu) {
  return SymmetricFunction::basis_element(Basis::Power, mu);
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    PartitionHash hp;
    return hp(k.first) * 0x9e3779b97f4a7c15ULL ^ hp(k.second);
  }
};

class CharacterCache {
 public:
  Integer value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    if (mu.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Integer result = compute(lambda, mu);
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Border strips of size r correspond to moves β → β−r on the beta-set; the
  // height is the number of beta numbers jumped over.
  Integer compute(const Partition& lambda, const Partition& mu) {
    int r = mu[0];
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    int len = lambda.length();
    std::vector<int> beta(len);
    for (int j = 0; j < len; ++j) beta[j] = lambda[j] + (len - 1 - j);
    Integer total = 0;
    for (int j = 0; j < len; ++j) {
      int target = beta[j] - r;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta)
        if (b > target && b < beta[j]) ++jumped;
      std::vector<int> moved = beta;
      moved[j] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> parts(len);
      for (int s = 0; s < len; ++s) parts[s] = moved[s] - (len - 1 - s);
      Integer sub = value(Partition::from_unsorted(std::move(parts)), rest);
      if (jumped % 2) total -= sub;
      else total += sub;
    }
    return total;
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::pair<Partition, Partition>, Integer, PairHash> table_;
};

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Partition scale_parts(const Partition& mu, int m) {
  auto parts = mu.parts();
  for (int& x : parts) x *= m;
  return Partition(std::move(parts));
}

}  // namespace

Integer character_value(const Partition& lambda, const Partition& mu) {
  return character_cache().value(lambda, mu);
}

Integer z_coefficient(const Partition& mu) {
  Integer z = 1;
  int i = 0;
  while (i < mu.length()) {
    int part = mu[i];
    int m = 0;
    while (i < mu.length() && mu[i] == part) {
      ++m;
      ++i;
      z *= part;
      z *= m;
    }
  }
  return z;
}

SymmetricFunction to_power(const SymmetricFunction& f) {
  if (f.basis() == Basis::Power) return f;
  std::map<int, std::vector<std::pair<Partition, Rational>>> by_degree;
  for (const auto& [lambda, c] : f.terms())
    by_degree[lambda.size()].emplace_back(lambda, c);
  SymmetricFunction::Terms out;
  for (const auto& [n, terms] : by_degree) {
    for (const auto& mu : partitions_of(n)) {
      Rational acc = 0;
      for (const auto& [lambda, c] : terms) {
        Integer chi = character_value(lambda, mu);
        if (chi != 0) acc += c * chi;
      }
      if (acc != 0) out.emplace(mu, acc / z_coefficient(mu));
    }
  }
  return SymmetricFunction(Basis::Power, std::move(out));
}

SymmetricFunction to_schur(const SymmetricFunction& f) {
  if (f.basis() == Basis::Schur) return f;
  std::map<int, std::vector<std::pair<Partition, Rational>>> by_degree;
  for (const auto& [mu, c] : f.terms()) by_degree[mu.size()].emplace_back(mu, c);
  SymmetricFunction::Terms out;
  for (const auto& [n, terms] : by_degree) {
    for (const auto& lambda : partitions_of(n)) {
      Rational acc = 0;
      for (const auto& [mu, c] : terms) {
        Integer chi = character_value(lambda, mu);
        if (chi != 0) acc += c * chi;
      }
      if (acc != 0) out.emplace(lambda, acc);
    }
  }
  return SymmetricFunction(Basis::Schur, std::move(out));
}

SymmetricFunction to_basis(const SymmetricFunction& f, Basis basis) {
  return basis == Basis::Schur ? to_schur(f) : to_power(f);
}

SymmetricFunction mul_lr(const SymmetricFunction& f, const SymmetricFunction& g) {
  SymmetricFunction a = to_schur(f);
  SymmetricFunction b = to_schur(g);
  std::unordered_map<Partition, Rational, PartitionHash> acc;
  for (const auto& [lambda, ca] : a.terms()) {
    for (const auto& [mu, cb] : b.terms()) {
      Rational c = ca * cb;
      const Partition& inner = lambda.size() >= mu.size() ? lambda : mu;
      const Partition& weight = lambda.size() >= mu.size() ? mu : lambda;
      for_each_lr_product_term(inner, weight,
                               [&](const Partition& nu, long long mult) {
                                 acc[nu] += c * Rational(static_cast<long>(mult));
                               });
    }
  }
  SymmetricFunction::Terms terms(acc.begin(), acc.end());
  return SymmetricFunction(Basis::Schur, std::move(terms));
}

SymmetricFunction mul_power_truncated(const SymmetricFunction& f,
                                      const SymmetricFunction& g,
                                      int max_degree) {
  SymmetricFunction a = to_power(f);
  SymmetricFunction b = to_power(g);
  if (max_degree < 0) max_degree = a.max_degree() + b.max_degree();
  std::map<int, std::vector<const std::pair<const Partition, Rational>*>> b_by_degree;
  for (const auto& term : b.terms()) b_by_degree[term.first.size()].push_back(&term);
  std::unordered_map<Partition, Rational, PartitionHash> acc;
  for (const auto& [mu, ca] : a.terms()) {
    int room = max_degree - mu.size();
    for (const auto& [deg, terms] : b_by_degree) {
      if (deg > room) break;
      for (const auto* term : terms)
        acc[merge_parts(mu, term->first)] += ca * term->second;
    }
  }
  SymmetricFunction::Terms terms(acc.begin(), acc.end());
  return SymmetricFunction(Basis::Power, std::move(terms));
}

SymmetricFunction mul_via_power(const SymmetricFunction& f,
                                const SymmetricFunction& g) {
  return to_schur(mul_power_truncated(f, g, -1));
}

SymmetricFunction mul(const SymmetricFunction& f, const SymmetricFunction& g,
                      std::size_t lr_pair_limit) {
  if (f.basis() == Basis::Power) return mul_power_truncated(f, g, -1);
  if (g.basis() == Basis::Schur &&
      f.support_size() * g.support_size() <= lr_pair_limit)
    return mul_lr(f, g);
  return mul_via_power(f, g);
}

SymmetricFunction operator*(const SymmetricFunction& f,
                            const SymmetricFunction& g) {
  return mul(f, g);
}

SymmetricFunction omega(const SymmetricFunction& f) {
  SymmetricFunction::Terms out;
  if (f.basis() == Basis::Schur) {
    for (const auto& [lambda, c] : f.terms()) out.emplace(conjugate(lambda), c);
  } else {
    for (const auto& [mu, c] : f.terms())
      out.emplace(mu, rank(mu) % 2 ? Rational(-c) : c);
  }
  return SymmetricFunction(f.basis(), std::move(out));
}

SymmetricFunction plethysm(const SymmetricFunction& f, const SymmetricFunction& g,
                           int max_degree) {
  SymmetricFunction outer = to_power(f);
  SymmetricFunction inner = to_power(g);
  if (max_degree < 0)
    max_degree = std::max(0, outer.max_degree()) * std::max(0, inner.max_degree());
  int inner_min = std::max(0, inner.min_degree());

  // p_m[g]: every power-sum index of g scaled by m, truncated.
  std::map<int, SymmetricFunction> adams;
  auto adams_of = [&](int m) -> const SymmetricFunction& {
    auto it = adams.find(m);
    if (it != adams.end()) return it->second;
    SymmetricFunction::Terms terms;
    for (const auto& [mu, c] : inner.terms())
      if (mu.size() * m <= max_degree) terms.emplace(scale_parts(mu, m), c);
    return adams.emplace(m, SymmetricFunction(Basis::Power, std::move(terms)))
        .first->second;
  };

  SymmetricFunction result(Basis::Power);
  for (const auto& [mu, c] : outer.terms()) {
    int pending_min = mu.size() * inner_min;
    if (pending_min > max_degree) continue;
    SymmetricFunction product =
        SymmetricFunction::basis_element(Basis::Power, Partition());
    for (int m : mu.parts()) {
      pending_min -= m * inner_min;
      product = mul_power_truncated(product, adams_of(m), max_degree - pending_min);
      if (product.is_zero()) break;
    }
    result += c * product;
  }
  return to_basis(result, f.basis());
}

SymmetricFunction homogeneous_part(const SymmetricFunction& f, int degree) {
  SymmetricFunction::Terms out;
  for (const auto& [key, c] : f.terms())
    if (key.size() == degree) out.emplace(key, c);
  return SymmetricFunction(f.basis(), std::move(out));
}

SymmetricFunction truncate_degree(const SymmetricFunction& f, int max_degree) {
  SymmetricFunction::Terms out;
  for (const auto& [key, c] : f.terms())
    if (key.size() <= max_degree) out.emplace(key, c);
  return SymmetricFunction(f.basis(), std::move(out));
}

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be positive");
  int result = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    n /= q;
    if (n % q == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

SymmetricFunction lie_l(int n) {
  if (n < 1) throw std::invalid_argument("lie_l: n must be positive");
  SymmetricFunction f(Basis::Power);
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    f.add(Partition(std::vector<int>(static_cast<std::size_t>(n / d), d)),
          make_rational(mu, n));
  }
  return to_schur(f);
}

SymmetricFunction pi_char(int n) { return omega(lie_l(n)); }

SymmetricFunction lie_series(int max_degree) {
  SymmetricFunction f(Basis::Schur);
  for (int j = 1; j <= max_degree; ++j) f += lie_l(j);
  return f;
}

SymmetricFunction pi_signed_series(int max_degree) {
  SymmetricFunction f(Basis::Schur);
  for (int j = 1; j <= max_degree; ++j) {
    if (j % 2)
      f -= pi_char(j);
    else
      f += pi_char(j);
  }
  return f;
}

SymmetricFunction u_series(int k, int max_degree) {
  if (k < 1) throw std::invalid_argument("u_series: k must be positive");
  SymmetricFunction f(Basis::Schur);
  for (int j = k; j <= max_degree; ++j) {
    std::vector<int> hook(static_cast<std::size_t>(k), 1);
    hook[0] = j - k + 1;
    f.add(Partition(std::move(hook)), 1);
  }
  return f;
}

SymmetricFunction add_box_sf(const SymmetricFunction& f) {
  if (!f.is_homogeneous())
    throw std::invalid_argument("add_box_sf: input must be homogeneous");
  SymmetricFunction s = to_schur(f);
  SymmetricFunction::Terms out;
  for (const auto& [lambda, c] : s.terms()) out.emplace(add_box(lambda), c);
  return SymmetricFunction(Basis::Schur, std::move(out));
}

bool is_schur_positive_integral(const SymmetricFunction& f) {
  SymmetricFunction s = to_schur(f);
  for (const auto& [lambda, c] : s.terms())
    if (c < 0 || !is_integer(c)) return false;
  return true;
}

}  // namespace repstab
