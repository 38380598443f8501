#include "repstab/stability.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include "repstab/serialize.hpp"

namespace repstab {

void PsiParams::validate() const {
  if (n < 1 || q < 0 || r < 1 || t < 1)
    throw std::invalid_argument("PsiParams: need n,r,t >= 1 and q >= 0");
  if (d < 2 || k < d + 1)
    throw std::invalid_argument("PsiParams: need d >= 2 and k >= d+1");
}

PsiCase psi_case(int d, int k) {
  if (d % 2 == 0) return PsiCase::DEven;
  return k % 2 == 0 ? PsiCase::DOddKEven : PsiCase::DKOdd;
}

template <class Key, class Compute>
SymmetricFunction PsiEngine::memo(
    std::map<Key, std::shared_future<SymmetricFunction>>& cache, const Key& key,
    Compute compute) {
  std::promise<SymmetricFunction> promise;
  std::shared_future<SymmetricFunction> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = cache.find(key);
    if (it == cache.end()) {
      future = promise.get_future().share();
      cache.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(compute());
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(mutex_);
      cache.erase(key);
    }
  }
  return future.get();
}

SymmetricFunction PsiEngine::outer_factor(PsiCase c, int k, int r, int t) {
  // Only the parity of k enters, through ω^k.
  OuterKey key{static_cast<int>(c), k % 2, r, t};
  return memo(outer_, key, [=] {
    SymmetricFunction series(Basis::Schur);
    switch (c) {
      case PsiCase::DEven: {
        series = plethysm(e(r), lie_series(t), t);
        if (k % 2 == 1) series = omega(series);
        break;
      }
      case PsiCase::DOddKEven:
        series = plethysm(h(r), lie_series(t), t);
        break;
      case PsiCase::DKOdd:
        series = plethysm(h(r), pi_signed_series(t), t);
        if (t % 2 == 1) series = -series;
        break;
    }
    return to_schur(homogeneous_part(series, t));
  });
}

SymmetricFunction PsiEngine::inner_factor(PsiCase c, int k, int r, int t, int degree) {
  InnerKey key{static_cast<int>(c), k, r, t, degree};
  return memo(inner_, key, [=, this] {
    if (degree < 0) return SymmetricFunction(Basis::Schur);
    SymmetricFunction f = outer_factor(c, k, r, t);
    if (f.is_zero()) return SymmetricFunction(Basis::Schur);
    SymmetricFunction composed =
        plethysm(to_power(f), u_series(k, degree), degree);
    SymmetricFunction part = to_schur(homogeneous_part(composed, degree));
    return c == PsiCase::DEven ? omega(part) : part;
  });
}

SymmetricFunction PsiEngine::psi(const PsiParams& p) {
  p.validate();
  int degree = p.n - p.q;
  if (degree < 0) return SymmetricFunction(Basis::Schur);
  SymmetricFunction factor = inner_factor(psi_case(p.d, p.k), p.k, p.r, p.t, degree);
  if (factor.is_zero()) return factor;
  return mul(factor, h(p.q));
}

SymmetricFunction PsiEngine::kequal_char(int n, int i, int d, int k) {
  if (d < 2 || k < d + 1 || n < 1 || i < 0)
    throw std::invalid_argument("kequal_char: need d >= 2, k >= d+1, n >= 1, i >= 0");
  SymmetricFunction total(Basis::Schur);
  // r > t and tk > n give zero summands, so both loops are finite.
  for (int t = 1; t * k <= n; ++t) {
    int s = i - t * (k - 2);
    if (s < 0 || s % (d - 1) != 0) continue;
    for (int r = 1; r <= t; ++r) {
      int q = n - r - s / (d - 1);
      if (q < 0) continue;
      total += psi(PsiParams{n, q, r, t, d, k});
    }
  }
  return total;
}

PsiEngine& shared_psi_engine() {
  static PsiEngine engine;
  return engine;
}

SymmetricFunction psi(const PsiParams& p) { return shared_psi_engine().psi(p); }

SymmetricFunction kequal_char(int n, int i, int d, int k) {
  return shared_psi_engine().kequal_char(n, i, d, k);
}

bool is_stable_step(const SymmetricFunction& current, const SymmetricFunction& previous) {
  SymmetricFunction now = to_schur(current);
  SymmetricFunction before = to_schur(previous);
  if (!now.is_zero() && !before.is_zero() &&
      (!now.is_homogeneous() || !before.is_homogeneous() ||
       now.max_degree() != before.max_degree() + 1))
    throw std::invalid_argument("is_stable_step: degrees are not consecutive");
  if (before.is_zero()) return now.is_zero();
  return add_box_sf(before) == now;
}

std::vector<Rational> theorem_bounds(int d, int k, int i) {
  if (d < 2 || k < d + 1) throw std::invalid_argument("theorem_bounds: need k >= d+1 >= 3");
  std::vector<Rational> bounds{make_rational(2L * i, d - 1)};
  if (d % 2 == 0 && k >= d + 2)
    bounds.push_back(make_rational(static_cast<long>(k) * i, k - d - 1));
  return bounds;
}

Rational general_bound(const LambdaSet& lambda, int i, int d) {
  if (d < 2) throw std::invalid_argument("general_bound: need d >= 2");
  return make_rational(4L * (i + 1 - lambda.rank()), d - 1);
}

int certification_horizon(const std::vector<Rational>& bounds) {
  if (bounds.empty()) throw std::invalid_argument("certification_horizon: no bounds");
  Rational low = *std::min_element(bounds.begin(), bounds.end());
  Integer floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), low.get_num_mpz_t(), low.get_den_mpz_t());
  return std::max(0, static_cast<int>(floor_value.get_si()));
}

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Certified: return "certified";
    case BoundStatus::Vacuous: return "vacuous";
    case BoundStatus::HorizonLimited: return "horizon-limited";
  }
  return "unknown";
}

namespace {

BoundStatus parse_status(const std::string& s) {
  if (s == "certified") return BoundStatus::Certified;
  if (s == "vacuous") return BoundStatus::Vacuous;
  if (s == "horizon-limited") return BoundStatus::HorizonLimited;
  throw std::invalid_argument("unknown bound status: " + s);
}

void require_character(const SymmetricFunction& f, int n) {
  if (!is_schur_positive_integral(f))
    throw std::logic_error("characteristic at n=" + std::to_string(n) +
                           " is not a nonnegative integral Schur combination: " +
                           to_text(f));
}

}  // namespace

void assess_stability(StabilityReport& report) {
  report.stable_steps.clear();
  std::optional<int> last_failure;
  bool all_zero = true;
  for (const auto& [n, chi] : report.chars) {
    if (!chi.is_zero()) all_zero = false;
    auto prev = report.chars.find(n - 1);
    if (prev == report.chars.end()) continue;
    bool stable = is_stable_step(chi, prev->second);
    report.stable_steps[n] = stable;
    if (!stable) last_failure = n;
  }
  bool complete = report.horizon >= report.theorem_horizon;
  report.sharp_bound.reset();
  if (all_zero) {
    report.status = complete ? BoundStatus::Vacuous : BoundStatus::HorizonLimited;
    return;
  }
  report.sharp_bound = last_failure.value_or(report.first_n);
  report.status = complete ? BoundStatus::Certified : BoundStatus::HorizonLimited;
}

nlohmann::json to_json(const StabilityReport& report) {
  nlohmann::json j;
  j["d"] = report.d;
  if (report.k > 0) j["k"] = report.k;
  if (!report.lambda.empty()) j["lambda"] = report.lambda;
  j["i"] = report.i;
  j["first_n"] = report.first_n;
  j["horizon"] = report.horizon;
  j["theorem_horizon"] = report.theorem_horizon;
  j["theorem_bounds"] = nlohmann::json::array();
  for (const auto& b : report.bounds) j["theorem_bounds"].push_back(to_fraction_string(b));
  j["chars"] = nlohmann::json::object();
  for (const auto& [n, chi] : report.chars) j["chars"][std::to_string(n)] = to_json(chi);
  j["stable_steps"] = nlohmann::json::object();
  for (const auto& [n, ok] : report.stable_steps) j["stable_steps"][std::to_string(n)] = ok;
  j["status"] = to_string(report.status);
  if (report.sharp_bound)
    j["sharp_bound"] = *report.sharp_bound;
  else if (report.status == BoundStatus::Vacuous)
    j["sharp_bound"] = "vacuous";
  else
    j["sharp_bound"] = nullptr;
  return j;
}

StabilityReport report_from_json(const nlohmann::json& j) {
  StabilityReport r;
  r.d = j.at("d").get<int>();
  r.k = j.value("k", 0);
  r.lambda = j.value("lambda", std::string());
  r.i = j.at("i").get<int>();
  r.first_n = j.at("first_n").get<int>();
  r.horizon = j.at("horizon").get<int>();
  r.theorem_horizon = j.at("theorem_horizon").get<int>();
  for (const auto& b : j.at("theorem_bounds")) r.bounds.push_back(parse_rational(b.get<std::string>()));
  for (const auto& [n, chi] : j.at("chars").items()) r.chars.emplace(std::stoi(n), from_json(chi));
  for (const auto& [n, ok] : j.at("stable_steps").items())
    r.stable_steps.emplace(std::stoi(n), ok.get<bool>());
  r.status = parse_status(j.at("status").get<std::string>());
  const auto& sharp = j.at("sharp_bound");
  if (sharp.is_number_integer()) r.sharp_bound = sharp.get<int>();
  return r;
}

StabilityReport sharp_bound_certified(int d, int k, int i, const SharpBoundOptions& options) {
  StabilityReport report;
  report.d = d;
  report.k = k;
  report.i = i;
  report.bounds = theorem_bounds(d, k, i);
  report.theorem_horizon = certification_horizon(report.bounds);
  int horizon = options.horizon.value_or(report.theorem_horizon);
  if (horizon < 1) horizon = 1;
  if (options.max_degree) horizon = std::min(horizon, *options.max_degree);
  report.horizon = horizon;

  std::vector<SymmetricFunction> chars(horizon + 1, SymmetricFunction(Basis::Schur));
  std::atomic<int> next{horizon};
  std::vector<std::exception_ptr> errors;
  std::mutex error_mutex;
  // Largest degrees first: they dominate the running time.
  auto worker = [&] {
    for (int n = next--; n >= 1; n = next--) {
      try {
        chars[n] = kequal_char(n, i, d, k);
        if (options.progress) options.progress(n, chars[n].terms().size());
      } catch (...) {
        std::lock_guard lock(error_mutex);
        errors.push_back(std::current_exception());
      }
    }
  };
  int jobs = std::max(1, std::min(options.jobs, horizon));
  std::vector<std::thread> pool;
  for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (!errors.empty()) std::rethrow_exception(errors.front());

  for (int n = 1; n <= horizon; ++n) {
    require_character(chars[n], n);
    report.chars.emplace(n, std::move(chars[n]));
  }
  assess_stability(report);
  return report;
}

namespace {

std::shared_ptr<ArrangementOracle> cached_oracle(int n, const LambdaSet& lambda, int limit) {
  using Key = std::tuple<int, std::vector<Partition>, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<ArrangementOracle>> cache;
  Key key{n, extend_lambda_set(lambda, n), limit};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<ArrangementOracle>(n, std::get<1>(key), limit))
             .first;
  return it->second;
}

}  // namespace

SymmetricFunction lambda_char_smalln(int n, int d, const LambdaSet& lambda, int i, int limit) {
  if (n > limit)
    throw OracleLimitExceeded("n=" + std::to_string(n) + " exceeds the oracle limit " +
                              std::to_string(limit));
  return cached_oracle(n, lambda, limit)->complement_char(d, i);
}

SymmetricFunction lambda_char_decomposed(int n, int d, const LambdaSet& lambda, int i,
                                         int limit) {
  if (n > limit)
    throw OracleLimitExceeded("n=" + std::to_string(n) + " exceeds the oracle limit " +
                              std::to_string(limit));
  Rational low = 1 + make_rational(i + 1, d);
  Rational high = make_rational(2L * (i + 1 - lambda.rank()), d - 1);
  std::set<Partition> reduced;
  for (const auto& type : cached_oracle(n, lambda, limit)->orbit_types())
    reduced.insert(strip_ones(type));
  SymmetricFunction total(Basis::Schur);
  for (const auto& mu : reduced) {
    int size = mu.size();
    if (Rational(size) < low || Rational(size) > high) continue;
    for (int m = std::max(size, lambda.n0()); m <= n; ++m) {
      auto oracle = cached_oracle(m, lambda, limit);
      Partition padded = pad_with_ones(mu, m);
      auto types = oracle->orbit_types();
      if (std::find(types.begin(), types.end(), padded) == types.end()) continue;
      total += mul(oracle->reduced_orbit_char(d, i, padded), h(n - size));
      break;
    }
  }
  return total;
}

StabilityReport lambda_report(const LambdaSet& lambda, int d, int i, int n_max, int limit) {
  StabilityReport report;
  report.d = d;
  report.lambda = to_string(lambda);
  report.i = i;
  report.first_n = lambda.n0();
  report.bounds = {general_bound(lambda, i, d)};
  report.theorem_horizon = certification_horizon(report.bounds);
  report.horizon = std::max(n_max, lambda.n0());
  for (int n = lambda.n0(); n <= report.horizon; ++n) {
    auto chi = lambda_char_smalln(n, d, lambda, i, limit);
    require_character(chi, n);
    report.chars.emplace(n, std::move(chi));
  }
  assess_stability(report);
  return report;
}

}  // namespace repstab
