#pragma once

#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "repstab/oracle.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/symfunc.hpp"

namespace repstab {

/// Index of one summand ψ_{n,q,r,t} of the k-equal characteristic.
struct PsiParams {
  int n = 1;
  int q = 0;
  int r = 1;
  int t = 1;
  int d = 2;
  int k = 3;

  /// i = (d−1)(n−r−q) + t(k−2).
  int i() const { return (d - 1) * (n - r - q) + t * (k - 2); }
  /// Throws std::invalid_argument unless n,r,t ≥ 1, q ≥ 0, d ≥ 2, k ≥ d+1.
  void validate() const;
};

/// Which of the three parity cases of ψ applies. Only the parities of d and k
/// matter.
enum class PsiCase { DEven, DOddKEven, DKOdd };
PsiCase psi_case(int d, int k);

/// Evaluates ψ and the k-equal characteristic with memoization. The degree-D
/// factor in front of h_q depends on (case, k, r, t, D) only, so a sweep over
/// n reuses it and only the Pieri product changes. Safe to share between
/// threads.
class PsiEngine {
 public:
  /// f_t: the degree-t truncation of the outer series before plethysm with U_k.
  SymmetricFunction outer_factor(PsiCase c, int k, int r, int t);
  /// The factor of degree D with ψ = factor · h_q, in the Schur basis.
  SymmetricFunction inner_factor(PsiCase c, int k, int r, int t, int degree);

  SymmetricFunction psi(const PsiParams& p);
  SymmetricFunction kequal_char(int n, int i, int d, int k);

 private:
  using OuterKey = std::tuple<int, int, int, int>;
  using InnerKey = std::tuple<int, int, int, int, int>;

  template <class Key, class Compute>
  SymmetricFunction memo(std::map<Key, std::shared_future<SymmetricFunction>>& cache,
                         const Key& key, Compute compute);

  std::mutex mutex_;
  std::map<OuterKey, std::shared_future<SymmetricFunction>> outer_;
  std::map<InnerKey, std::shared_future<SymmetricFunction>> inner_;
};

/// Process-wide engine used by the free functions below.
PsiEngine& shared_psi_engine();

SymmetricFunction psi(const PsiParams& p);

/// ch H̃^i of the complement of the k-equal arrangement in (ℝ^d)^n.
/// Throws std::invalid_argument unless d ≥ 2, k ≥ d+1, n ≥ 1, i ≥ 0.
SymmetricFunction kequal_char(int n, int i, int d, int k);

/// V_n = V_{n−1} + □. Throws std::invalid_argument when a nonzero input has
/// the wrong degree.
bool is_stable_step(const SymmetricFunction& current, const SymmetricFunction& previous);

/// Bounds m after which the k-equal sequence is known to be stable: 2i/(d−1),
/// and ki/(k−d−1) when d is even and k ≥ d+2.
std::vector<Rational> theorem_bounds(int d, int k, int i);

/// 4(i+1−rank Λ)/(d−1).
Rational general_bound(const LambdaSet& lambda, int i, int d);

/// Floor of the smallest bound, clamped at 0: every n past it is covered.
int certification_horizon(const std::vector<Rational>& bounds);

enum class BoundStatus {
  Certified,      ///< sharp bound found and proved by the theorem horizon
  Vacuous,        ///< sequence identically zero up to the horizon
  HorizonLimited  ///< computation stopped below the theorem horizon
};

std::string to_string(BoundStatus s);

struct StabilityReport {
  int d = 2;
  int k = 0;  ///< 0 when the context is a general Λ
  std::string lambda;  ///< text of Λ, empty for k-equal runs
  int i = 0;
  int first_n = 1;
  int horizon = 0;        ///< last n computed
  int theorem_horizon = 0;  ///< floor of the smallest applicable theorem bound
  std::vector<Rational> bounds;
  std::map<int, SymmetricFunction> chars;
  std::map<int, bool> stable_steps;
  BoundStatus status = BoundStatus::HorizonLimited;
  /// Sharp bound: the largest n with a failing step, or first_n if none fail.
  std::optional<int> sharp_bound;
};

nlohmann::json to_json(const StabilityReport& report);
StabilityReport report_from_json(const nlohmann::json& j);

struct SharpBoundOptions {
  /// Compute up to this n instead of the theorem horizon.
  std::optional<int> horizon;
  /// Refuse to compute beyond this degree; the report is then horizon-limited.
  std::optional<int> max_degree;
  int jobs = 1;
  /// Called from worker threads after each n finishes.
  std::function<void(int n, std::size_t support)> progress;
};

/// Computes the k-equal sequence up to the certification horizon and reads off
/// the sharp stability bound. Throws std::logic_error if a computed
/// characteristic is not a nonnegative integral Schur combination.
StabilityReport sharp_bound_certified(int d, int k, int i,
                                      const SharpBoundOptions& options = {});

/// Fills stable_steps, status and sharp_bound from chars, first_n, horizon and
/// theorem_horizon.
void assess_stability(StabilityReport& report);

/// ch H̃^i of the complement of the arrangement of type Λ^{(n)} from the
/// oracle. Throws OracleLimitExceeded above the limit.
SymmetricFunction lambda_char_smalln(int n, int d, const LambdaSet& lambda, int i,
                                     int limit = kDefaultOracleLimit);

/// The same characteristic assembled as Σ h_{n−|μ̃|} f_μ̃ over reduced orbit
/// types with 1+(i+1)/d ≤ |μ̃| ≤ 2(i+1−rank Λ)/(d−1). The f_μ̃ are read off
/// the oracle at the smallest n carrying the orbit.
SymmetricFunction lambda_char_decomposed(int n, int d, const LambdaSet& lambda, int i,
                                         int limit = kDefaultOracleLimit);

/// Oracle sequence for Λ from n0 to n_max, assessed against the general bound.
StabilityReport lambda_report(const LambdaSet& lambda, int d, int i, int n_max,
                              int limit = kDefaultOracleLimit);

}  // namespace repstab
