// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every assertion is exact; runtime limits are asserted where the
// criterion states one. argv[1] is the path of the command-line binary
// (needed for the byte-identical-output criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trigdef/report.hpp"

using namespace trigdef;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// 1. Lattice suite: generator intersections, H^2 = g-2, K^2 = 8, and
//    chi/duality audits on 200 random classes. Runtime < 1 s.
void criterion_lattice() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;

  for (int n = 0; n <= 6 && ok; ++n) {
    const DivisorClass B{n, 1, 0}, R{n, 0, 1};
    ok = ok && intersect(B, B) == -n && intersect(B, R) == 1 && intersect(R, R) == 0 &&
         intersect(canonical_class(n), canonical_class(n)) == 8;
  }
  // Contexts with n = 0..6 all appear for g <= 16.
  for (int g = 6; g <= 16 && ok; ++g) {
    for (int k : maroni_range(g)) {
      const auto s = standard_classes(SurfaceContext(g, k));
      ok = ok && intersect(s.H, s.H) == g - 2;
    }
  }
  SplitMix64 rng(1001);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(0, 6));
    const DivisorClass d{n, rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
    const auto h = h012(d);
    ok = ok && (h.h0 - h.h1 + h.h2 == chi(d)) && (h.h2 == h012(canonical_class(n) - d).h0);
    if (!ok) detail = "chi/duality audit failed";
  }
  const double secs = seconds_since(start);
  ok = ok && secs < 1.0;
  report(1, "lattice suite", ok, "elapsed " + std::to_string(secs) + " s");
}

// ---------------------------------------------------------------------------
// 2. Vanishing and multiplication: h1(-M) = 0 for big-and-nef M (n <= 5,
//    coefficients <= 8); pencil multiplication surjective over the stated
//    sweep; the (7,1) surjectivity with rank 11. Runtime < 5 s.
void criterion_vanishing() {
  const auto start = Clock::now();
  bool ok = true;

  for (int n = 0; n <= 5 && ok; ++n) {
    for (long a = 0; a <= 8 && ok; ++a) {
      for (long b = 0; b <= 8 && ok; ++b) {
        const DivisorClass m{n, a, b};
        if (!positivity(m).big_and_nef) continue;
        ok = h012(-m).h1 == 0;
      }
    }
  }
  for (int n = 0; n <= 5 && ok; ++n) {
    for (int m = 0; m <= 3 && ok; ++m) {
      for (int s = n * (m + 1) + 1; s <= n * (m + 1) + 3 && ok; ++s) {
        ok = mult_map({n, m, s}, {n, 0, 1}).rank() == h0({n, m, s + 1});
      }
    }
  }
  ok = ok && mult_map({3, 1, 5}, {3, 0, 1}).rank() == 11;
  const double secs = seconds_since(start);
  ok = ok && secs < 5.0;
  report(2, "vanishing and multiplication", ok, "elapsed " + std::to_string(secs) + " s");
}

// ---------------------------------------------------------------------------
// 3/4/5. Per-curve suite over 5 seeds per admissible (g,k), g = 6..12, and the
// two base-locus dichotomy reproductions driven by those runs.
void criteria_curves() {
  bool suite_ok = true;            // criterion 3
  bool trivial_fixed_ok = true;    // criterion 4
  bool gamma_fixed_ok = true;      // criterion 5
  std::string detail3, detail4, detail5;
  double worst_g12 = 0.0;

  for (int g = 6; g <= 12; ++g) {
    for (int k : maroni_range(g)) {
      const SurfaceContext ctx(g, k);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto start = Clock::now();
        const auto r = verify_theorem(g, k, seed);
        const double secs = seconds_since(start);
        if (g == 12) worst_g12 = std::max(worst_g12, secs);

        auto check_is = [&](const char* name, bool want_present = true) {
          const Check* c = r.find(name);
          if (!c) return !want_present;
          return c->pass;
        };
        bool cell_ok = r.pass;
        cell_ok = cell_ok && check_is("discriminant") && check_is("euler_identity") &&
                  check_is("maroni") && check_is("gaussian_corollary") && check_is("dim_I2") &&
                  check_is("dim_lambda") && check_is("dim_T") && check_is("rank_one") &&
                  check_is("unique_qv") && check_is("ci_degree");
        if (ctx.n > 0) cell_ok = cell_ok && check_is("lambda_prime_dim");
        if (secs >= 10.0) cell_ok = false;
        if (!cell_ok && suite_ok) {
          suite_ok = false;
          detail3 = "first failure at g=" + std::to_string(g) + " k=" + std::to_string(k) +
                    " seed=" + std::to_string(seed);
        }

        const Check* fixed = r.find("fixed_part");
        const bool fixed_ok = fixed && fixed->pass;
        if (g >= 8 || k >= 2) {
          if (!(fixed_ok && fixed->computed.substr(0, 5) == "(0,0)")) {
            trivial_fixed_ok = false;
            detail4 = "nontrivial fixed part at g=" + std::to_string(g) +
                      " k=" + std::to_string(k) + " seed=" + std::to_string(seed);
          }
          const Check* ci = r.find("ci_degree");
          if (!(ci && ci->pass)) trivial_fixed_ok = false;
        } else {
          const std::string want = k == 1 && g == 7 ? "(2,6)" : "(2,5)";
          if (!(fixed_ok && fixed->computed.substr(0, 5) == want)) {
            gamma_fixed_ok = false;
            detail5 = "fixed part mismatch at g=" + std::to_string(g) +
                      " seed=" + std::to_string(seed);
          }
          const Check* gi = r.find("gamma_irreducible");
          const Check* gs = r.find("gamma_smooth");
          if (!(gi && gi->pass && gs && gs->pass)) {
            gamma_fixed_ok = false;
            detail5 = "gamma structure at g=" + std::to_string(g) + " seed=" + std::to_string(seed);
          }
        }
      }
      // P1 x P1 cells: the pencil self-intersection equals the ramification degree.
      if (ctx.n == 0) {
        const long gsq = intersect(qv_class(ctx), qv_class(ctx));
        if (gsq != 4L * k + 8 || gsq != 2L * g + 4) {
          trivial_fixed_ok = false;
          detail4 = "G^2 mismatch at g=" + std::to_string(g);
        }
      }
    }
  }

  // Criterion 3 names the Maroni jump value at (7,1) explicitly.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const TrigonalCurve curve = random_curve(7, 1, seed);
    if (restriction_model(curve, {3, 0, 3}).dim != 5) {
      suite_ok = false;
      detail3 = "h0(3L) != 5 at (7,1) seed " + std::to_string(seed);
    }
  }

  // Criterion 5 also pins the k=1 annihilator systems and the constructed
  // reducible curve.
  for (int g : {6, 7}) {
    const TrigonalCurve curve = random_curve(g, 1, 1);
    const auto lambda = lambda_space(curve);
    bool exact = lambda.span_matches_oracle &&
                 static_cast<int>(lambda.generators.size()) == g - 4;
    for (const auto& gen : lambda.generators) {
      exact = exact && exact_div(gen, curve.fx1).has_value();
    }
    exact = exact && is_associate(lambda.fixed.gcd, curve.fx1);
    if (!exact) {
      gamma_fixed_ok = false;
      detail5 = "annihilator structure at g=" + std::to_string(g);
    }
  }
  {
    SplitMix64 rng(2718);
    const Poly t0 = Poly::variable(kT0), t1 = Poly::variable(kT1);
    auto form = [&](int degree) {
      Poly p;
      for (int j = 0; j <= degree; ++j) {
        Monomial m;
        m.e[kT0] = degree - j;
        m.e[kT1] = j;
        p.set_term(m, make_rational(rng.uniform_int(-9, 9)));
      }
      return p;
    };
    const Poly a2 = form(3), gamma = form(3), a0 = form(9);
    const Poly a1 = gamma * (Rational(2) * a2 - Rational(3) * gamma);
    const TrigonalCurve curve = curve_from_alpha(7, 1, 0, {a0, a1, a2, Poly::constant(1)});
    const auto res = gamma_analysis(curve);
    const DivisorClass taut{3, 1, 3};
    const bool split_ok = !res.irreducible && res.split_classes.size() == 2 &&
                          res.split_classes[0] == taut && res.split_classes[1] == taut;
    if (!split_ok) {
      gamma_fixed_ok = false;
      detail5 = "constructed reducible curve did not split into two |A| components";
    }
  }

  report(3, "per-curve suite, 5 seeds per (g,k), g = 6..12", suite_ok,
         detail3.empty() ? "slowest g=12 cell " + std::to_string(worst_g12) + " s" : detail3);
  report(4, "trivial fixed part on the high-genus set, complete-intersection degrees",
         trivial_fixed_ok, detail4);
  report(5, "fixed ramification quadric at (7,1) and (6,1), gamma structure", gamma_fixed_ok,
         detail5);
}

// ---------------------------------------------------------------------------
// 6. Determinism: the sweep CLI run twice produces byte-identical aggregates.
void criterion_determinism(const char* cli_path) {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  if (!cli_path) {
    report(6, "determinism", false, "CLI path not supplied");
    return;
  }
  const std::string out1 = "acceptance_sweep_1.json";
  const std::string out2 = "acceptance_sweep_2.json";
  for (const auto& [out, log] :
       std::vector<std::pair<std::string, std::string>>{{out1, "acceptance_sweep_1.log"},
                                                        {out2, "acceptance_sweep_2.log"}}) {
    const std::string cmd = std::string(cli_path) +
                            " sweep --g-min 6 --g-max 12 --seeds 1..5 --json-out " + out + " > " +
                            log + " 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) {
      ok = false;
      detail = "sweep exited nonzero";
    }
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp(out1), b = slurp(out2);
  if (a.empty() || a != b) {
    ok = false;
    detail = "aggregate JSON differs between runs";
  }
  const double secs = seconds_since(start);
  ok = ok && secs < 900.0;
  report(6, "byte-identical sweep aggregates, full sweep < 15 min", ok,
         detail.empty() ? "two sweeps in " + std::to_string(secs) + " s" : detail);
}

}  // namespace

int main(int argc, char** argv) {
  criterion_lattice();
  criterion_vanishing();
  criteria_curves();
  criterion_determinism(argc > 1 ? argv[1] : nullptr);
  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed" << std::endl;
  return 1;
}
