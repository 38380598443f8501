// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "random_sf.hpp"
#include "repstab/lr.hpp"
#include "repstab/monomial.hpp"
#include "repstab/oracle.hpp"
#include "repstab/serialize.hpp"
#include "repstab/stability.hpp"

using namespace repstab;
using repstab::testing::random_function;
using repstab::testing::random_homogeneous;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  long checks = 0;

  // Records one check; keeps the first failure message.
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// Every characteristic from criteria 1 to 4 passes through here.
struct PositivityLedger {
  long seen = 0;
  std::string first_failure;

  void record(const SymmetricFunction& f, const std::string& where) {
    ++seen;
    if (first_failure.empty() && !is_schur_positive_integral(f))
      first_failure = where + ": " + to_text(f).substr(0, 200);
  }
} positivity;

std::vector<Partition> kequal_types(int n, int k) {
  std::vector<int> parts(static_cast<std::size_t>(n - k + 1), 1);
  parts[0] = k;
  return {Partition(parts)};
}

std::string cli_output(std::vector<std::string> args) {
  args.insert(args.begin(), "repstab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return code == 0 ? out.str() : "exit " + std::to_string(code) + ": " + err.str();
}

struct TableCase {
  int k, i, bound;
};
const std::vector<TableCase> kTableCases{{3, 3, 6},  {3, 4, 7},  {3, 5, 8},  {3, 6, 11},
                                         {4, 5, 8},  {4, 6, 9},  {4, 7, 10}, {4, 8, 11}};

Outcome table_reproduction() {
  Outcome o;
  std::string k3 = cli_output({"table", "--d", "2", "--k", "3", "--i", "3..6", "--format", "csv", "--quiet"});
  std::string k4 = cli_output({"table", "--d", "2", "--k", "4", "--i", "5..8", "--format", "csv", "--quiet"});
  o.expect(k3 == "k,i,bound\n3,3,6\n3,4,7\n3,5,8\n3,6,11\n", "k=3 table printed:\n" + k3);
  o.expect(k4 == "k,i,bound\n4,5,8\n4,6,9\n4,7,10\n4,8,11\n", "k=4 table printed:\n" + k4);
  for (const auto& c : kTableCases) {
    auto report = sharp_bound_certified(2, c.k, c.i);
    for (const auto& [n, chi] : report.chars)
      positivity.record(chi, "k=" + std::to_string(c.k) + " i=" + std::to_string(c.i) +
                                 " n=" + std::to_string(n));
    o.expect(report.status == BoundStatus::Certified && report.sharp_bound == c.bound,
             "k=" + std::to_string(c.k) + " i=" + std::to_string(c.i) + " not certified at " +
                 std::to_string(c.bound));
  }
  o.detail = o.pass ? "k=3 i=3..6 -> 6,7,8,11; k=4 i=5..8 -> 8,9,10,11" : o.detail;
  return o;
}

Outcome sharpness() {
  Outcome o;
  for (const auto& c : kTableCases) {
    int horizon = certification_horizon(theorem_bounds(2, c.k, c.i));
    std::string tag = "k=" + std::to_string(c.k) + " i=" + std::to_string(c.i);
    o.expect(horizon >= c.bound, tag + ": horizon below the bound");
    SymmetricFunction previous = kequal_char(c.bound - 1, c.i, 2, c.k);
    for (int n = c.bound; n <= horizon; ++n) {
      SymmetricFunction current = kequal_char(n, c.i, 2, c.k);
      bool stable = is_stable_step(current, previous);
      o.expect(stable == (n > c.bound), tag + " n=" + std::to_string(n) +
                                            (stable ? " unexpectedly stable" : " unstable"));
      previous = std::move(current);
    }
  }
  if (o.pass)
    o.detail = "step fails at each bound, holds up to floor(min theorem bound); the k-equal "
               "stability theorem covers every larger n";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  bool odd_case_seen = false;
  for (int d : {2, 3})
    for (int k : {d + 1, d + 2})
      for (int n = 1; n <= 6; ++n) {
        std::optional<ArrangementOracle> oracle;
        if (n >= k) oracle.emplace(n, kequal_types(n, k));
        for (int i = 0; i <= d * n; ++i) {
          std::string tag = "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                            " n=" + std::to_string(n) + " i=" + std::to_string(i);
          SymmetricFunction formula = kequal_char(n, i, d, k);
          // Below n = k the arrangement is empty and the complement contractible.
          SymmetricFunction truth =
              oracle ? oracle->complement_char(d, i) : SymmetricFunction(Basis::Schur);
          positivity.record(formula, tag + " formula");
          positivity.record(truth, tag + " oracle");
          o.expect(formula == truth, tag + ": formula " + to_text(formula) + " oracle " + to_text(truth));
          if (d == 3 && k == 5 && n == 5 && !truth.is_zero()) odd_case_seen = true;
        }
      }
  o.expect(odd_case_seen, "no nonzero d=3 k=5 n=5 case was compared");
  if (o.pass)
    o.detail = std::to_string(o.checks - 1) +
               " (d,k,n,i) cases equal, including nonzero d=3 k=5 n=5";
  return o;
}

Outcome general_stabilization() {
  Outcome o;
  long steps = 0;
  for (const auto& lambda : {LambdaSet({Partition{2}}), LambdaSet({Partition{3}}),
                             LambdaSet({Partition{2, 2}})})
    for (int d : {2, 3})
      for (int i = 0; i <= d * 5; ++i) {
        auto report = lambda_report(lambda, d, i, kDefaultOracleLimit);
        for (const auto& [n, chi] : report.chars)
          positivity.record(chi, to_string(lambda) + " d=" + std::to_string(d) +
                                     " i=" + std::to_string(i) + " n=" + std::to_string(n));
        Rational bound = general_bound(lambda, i, d);
        for (const auto& [n, stable] : report.stable_steps) {
          if (Rational(n) <= bound) continue;
          ++steps;
          o.expect(stable, to_string(lambda) + " d=" + std::to_string(d) + " i=" +
                               std::to_string(i) + " n=" + std::to_string(n) + " not stable");
        }
      }
  o.expect(steps > 0, "no step beyond the bound was computable");
  if (o.pass) o.detail = std::to_string(steps) + " steps beyond 4(i+1-rank)/(d-1) are stable";
  return o;
}

Partition prepend(int n, const Partition& alpha) {
  auto parts = alpha.parts();
  parts.insert(parts.begin(), n);
  return Partition::from_unsorted(parts);
}

Outcome product_sharpness() {
  Outcome o;
  long products = 0, tableaux = 0;
  for (int la = 0; la <= 6; ++la)
    for (const auto& lambda : partitions_of(la))
      for (int aa = 0; aa <= 4; ++aa)
        for (const auto& alpha : partitions_of(aa)) {
          int edge = lambda[0] + alpha[0];
          for (int n = alpha[0] + 1; n <= edge + 3; ++n) {
            auto upper = mul(schur(prepend(n, alpha)), schur(lambda));
            auto lower = mul(schur(prepend(n - 1, alpha)), schur(lambda));
            bool stable = upper == add_box_sf(lower);
            ++products;
            o.expect(stable == (n > edge), "lambda=" + to_string(lambda) + " alpha=" +
                                               to_string(alpha) + " n=" + std::to_string(n));
            if (n <= edge) continue;
            // φ: LR tableaux over (n, α) onto those over (n−1, α), same content.
            std::set<LRTableau> image, target;
            std::size_t source = 0;
            for_each_lr_tableau(prepend(n, alpha), lambda, nullptr, [&](const LRTableau& t) {
              ++source;
              LRTableau s = phi_shift(t);
              o.expect(phi_unshift(s) == t, "phi not invertible");
              image.insert(std::move(s));
            });
            for_each_lr_tableau(prepend(n - 1, alpha), lambda, nullptr,
                                [&](const LRTableau& t) { target.insert(t); });
            tableaux += static_cast<long>(source);
            o.expect(image.size() == source && image == target,
                     "phi not bijective for lambda=" + to_string(lambda) + " alpha=" +
                         to_string(alpha) + " n=" + std::to_string(n));
          }
        }
  if (o.pass)
    o.detail = std::to_string(products) + " products, " + std::to_string(tableaux) +
               " tableaux through phi";
  return o;
}

Outcome psi_suite() {
  Outcome o;
  auto& engine = shared_psi_engine();
  long evaluated = 0;
  for (int d : {2, 3})
    for (int k = d + 1; k <= 6; ++k)
      for (int n = 1; n <= 12; ++n)
        for (int q = 0; q <= n; ++q)
          for (int t = 1; t <= n / k + 1; ++t)
            for (int r = 1; r <= t + 1; ++r) {
              PsiParams p{n, q, r, t, d, k};
              int i = p.i();
              if (i < 0) continue;
              ++evaluated;
              std::ostringstream tag;
              tag << "d=" << d << " k=" << k << " n=" << n << " q=" << q << " r=" << r
                  << " t=" << t << ": ";
              auto value = engine.psi(p);
              o.expect(is_schur_positive_integral(value), tag.str() + "not a character");
              if (n >= 2 && q >= 1 && 2 * q > n)
                o.expect(value == add_box_sf(engine.psi({n - 1, q - 1, r, t, d, k})),
                         tag.str() + "(i) fails");
              if (n >= 2 && q >= 1 && d % 2 == 0 && q > t * k)
                o.expect(value == add_box_sf(engine.psi({n - 1, q - 1, r, t, d, k})),
                         tag.str() + "(ii) fails");
              if (r > t || t * k > n) o.expect(value.is_zero(), tag.str() + "(iii) fails");
              if (2 * q <= n && (d - 1) * n > 2 * i)
                o.expect(value.is_zero(), tag.str() + "(iv) fails");
              if (k >= d + 2 && q <= t * k && (k - d - 1) * n > k * i)
                o.expect(value.is_zero(), tag.str() + "(v) fails");
              if (d % 2 == 0) {
                auto factor = engine.inner_factor(PsiCase::DEven, k, r, t, n - q);
                for (const auto& [lam, c] : factor.terms())
                  o.expect(lam[0] <= t * k, tag.str() + "first row " + to_string(lam));
              }
            }
  if (o.pass) o.detail = std::to_string(evaluated) + " parameter tuples, (i)-(v) and first-row bound";
  return o;
}

Outcome kernel_properties() {
  Outcome o;
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_function(rng, 0, 10, 3);
    o.expect(omega(omega(f)) == f, "omega is not an involution");
    o.expect(omega(f) == to_schur(omega(to_power(f))), "omega routes disagree");
    o.expect(to_schur(to_power(f)) == f, "basis round trip");
  }
  for (int n = 0; n <= 10; ++n) {
    o.expect(omega(h(n)) == e(n), "omega(h_n) != e_n");
    for (const auto& lam : partitions_of(n))
      o.expect(omega(schur(lam)) == schur(conjugate(lam)), "omega(s) at " + to_string(lam));
  }
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> deg(0, 5);
    int da = deg(rng), db = deg(rng);
    auto f = random_homogeneous(rng, da, 2);
    auto g = random_homogeneous(rng, db, 2);
    o.expect(mul_lr(f, g) == mul_lr(g, f), "LR product not commutative");
    o.expect(mul_lr(f, g) == mul_via_power(f, g), "LR and power products disagree");
  }
  for (int la = 0; la <= 4; ++la)
    for (const auto& a : partitions_of(la))
      for (int lb = 0; lb <= 4; ++lb)
        for (const auto& b : partitions_of(lb))
          for (const auto& c : partitions_of(la + lb))
            o.expect(lr_coeff(a, b, c) == lr_coeff(b, a, c), "LR symmetry");
  for (int trial = 0; trial < 12; ++trial) {
    std::uniform_int_distribution<int> deg(1, 4);
    int da = deg(rng), db = deg(rng);
    auto f = random_homogeneous(rng, da, 2);
    auto g = random_homogeneous(rng, db, 2);
    int v = da + db;
    o.expect(monomial_expand(mul(f, g), v) == monomial_expand(f, v) * monomial_expand(g, v),
             "product disagrees with monomial expansion");
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_function(rng, 1, 3, 2);
    auto g = random_function(rng, 1, 3, 2);
    auto k = random_function(rng, 1, 2, 2);
    o.expect(plethysm(f + g, k) == plethysm(f, k) + plethysm(g, k), "plethysm additivity");
    o.expect(plethysm(f * g, k) == plethysm(f, k) * plethysm(g, k), "plethysm multiplicativity");
  }
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      o.expect(plethysm(p(Partition{m}), p(Partition{n})) == p(Partition{m * n}), "p_m[p_n]");
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> deg(1, 4);
    int da = deg(rng);
    int db = da <= 2 ? 2 : 1;
    auto f = random_homogeneous(rng, da, 2);
    auto g = random_homogeneous(rng, db, 1, false);
    o.expect(monomial_expand(plethysm(f, g), da * db) == monomial_plethysm(f, g, da * db),
             "plethysm disagrees with monomial substitution");
  }
  if (o.pass) o.detail = std::to_string(o.checks) + " checks";
  return o;
}

Outcome positivity_outcome() {
  Outcome o;
  o.expect(positivity.seen > 0, "nothing recorded");
  o.expect(positivity.first_failure.empty(), positivity.first_failure);
  if (o.pass)
    o.detail = std::to_string(positivity.seen) +
               " characteristics from criteria 1-4 are nonnegative integral";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "table reproduction", table_reproduction},
      {2, "sharpness certification", sharpness},
      {3, "formula equals oracle", oracle_equivalence},
      {4, "general stabilization", general_stabilization},
      {5, "product sharpness and phi", product_sharpness},
      {6, "psi properties", psi_suite},
      {7, "kernel properties", kernel_properties},
      {8, "positivity and integrality", positivity_outcome},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %d (%s): %s  [%.1fs] %s\n", c.number, c.name, o.pass ? "PASS" : "FAIL",
                seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
