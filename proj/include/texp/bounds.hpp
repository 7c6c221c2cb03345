#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "instance.hpp"
#include "integer.hpp"
#include "interval.hpp"

namespace texp {

// Natural logarithm of an integer > 0, enclosed.
inline Interval log_of(const Int& v, Precision prec = default_precision) {
  return log(Interval::integer(v, prec));
}

// Cap on max{x, y, z} over all solutions: floor of an upward enclosure of
// 6500 (log max{a,b,c})^3.
struct BoundReport {
  Int bound;
  Int max_base;
  Interval log_max;
  Interval formula_value;
};

inline BoundReport solution_bound(const Instance& inst, Precision prec = default_precision) {
  BoundReport r{0, inst.max_base(), Interval(prec), Interval(prec)};
  r.log_max = log_of(r.max_base, prec);
  r.formula_value = Interval::integer(6500, prec) * pow(r.log_max, 3);
  r.bound = r.formula_value.upper().floor();
  if (r.bound < 1) r.bound = 1;
  return r;
}

// floor(4663 (log max{a,b,c})^2), rounded up. Valid only for solutions with
// min{a^{2x}, b^{2y}} < c^z.
inline Int conditional_quadratic_bound(const Instance& inst, Precision prec = default_precision) {
  Interval v = Interval::integer(4663, prec) * pow(log_of(inst.max_base(), prec), 2);
  return v.upper().floor();
}

// Lambda = beta1 log alpha1 - beta2 log alpha2 with positive integers.
struct LinearFormQuery {
  Int alpha1;
  Int alpha2;
  Int beta1;
  Int beta2;
};

// Enclosure of -32.31 (log a1)(log a2) (max{10, 0.18 + log(b1/log a2 + b2/log a1)})^2.
inline Interval lmn_log_lower_bound_enclosure(const LinearFormQuery& q, Precision prec = default_precision) {
  if (q.alpha1 < 2 || q.alpha2 < 2) throw invalid_input("linear form needs min{alpha1, alpha2} >= 2");
  if (q.beta1 < 1 || q.beta2 < 1) throw invalid_input("linear form needs positive beta1, beta2");
  const Interval l1 = log_of(q.alpha1, prec);
  const Interval l2 = log_of(q.alpha2, prec);
  const Interval inner = Interval::decimal("0.18", prec) +
                         log(Interval::integer(q.beta1, prec) / l2 + Interval::integer(q.beta2, prec) / l1);
  const Interval clamp = max(Interval::integer(10, prec), inner);
  return -(Interval::decimal("32.31", prec) * l1 * l2 * pow(clamp, 2));
}

// Valid lower bound for log|Lambda| whenever Lambda != 0 (rounded down).
inline Real lmn_log_lower_bound(const LinearFormQuery& q, Precision prec = default_precision) {
  return lmn_log_lower_bound_enclosure(q, prec).lower();
}

// Lambda' = alpha1^beta1 - alpha2^beta2 with odd alpha_i = 1 (mod 4), |alpha_i| >= 3.
struct PadicQuery {
  Int alpha1;
  Int alpha2;
  Int beta1;
  Int beta2;
};

inline void validate_padic_alpha(const Int& alpha, const char* name) {
  if (abs(alpha) < 3) throw invalid_input(std::string(name) + " must satisfy |alpha| >= 3");
  if (mod_floor(alpha, 2) == 0) throw invalid_input(std::string(name) + " must be odd");
  if (mod_floor(alpha, 4) != 1) throw invalid_input(std::string(name) + " must be 1 mod 4");
}

inline Interval padic_ord2_upper_bound_enclosure(const PadicQuery& q, Precision prec = default_precision) {
  validate_padic_alpha(q.alpha1, "alpha1");
  validate_padic_alpha(q.alpha2, "alpha2");
  if (q.beta1 < 1 || q.beta2 < 1) throw invalid_input("p-adic query needs positive beta1, beta2");
  const Interval l1 = log_of(abs(q.alpha1), prec);
  const Interval l2 = log_of(abs(q.alpha2), prec);
  const Interval ln2 = Interval::ln2(prec);
  const Interval inner = Interval::decimal("0.4", prec) + log(Interval::integer(2, prec) * ln2) +
                         log(Interval::integer(q.beta1, prec) / l2 + Interval::integer(q.beta2, prec) / l1);
  const Interval clamp = max(Interval::integer(12, prec) * ln2, inner);
  return Interval::decimal("19.57", prec) * l1 * l2 * pow(clamp, 2);
}

// Valid upper bound for ord_2 Lambda' whenever Lambda' != 0 (rounded up).
inline Real padic_ord2_upper_bound(const PadicQuery& q, Precision prec = default_precision) {
  return padic_ord2_upper_bound_enclosure(q, prec).upper();
}

// ---------------------------------------------------------------------------
// Threshold functions F(t) whose positivity on [t0, inf) closes the bound
// arguments.
//
//   quadratic_log: F(t) = t - K (c1 + log t)^2 - c0
//   nonic_log:     F(t) = t - K (log t)^9
// ---------------------------------------------------------------------------

enum class ThresholdFamily { quadratic_log, nonic_log };

// A real parameter evaluated on demand at the working precision, so the same
// spec can be re-checked at higher precision.
using RealRecipe = std::function<Interval(Precision)>;

inline RealRecipe constant(std::string literal) {
  return [lit = std::move(literal)](Precision p) { return Interval::decimal(lit, p); };
}

struct ThresholdSpec {
  std::string label;
  ThresholdFamily family = ThresholdFamily::quadratic_log;
  RealRecipe K;
  RealRecipe c1 = constant("0");
  RealRecipe c0 = constant("0");
  RealRecipe t0;
};

struct ThresholdTrace {
  std::string label;
  Precision precision = default_precision;
  Interval t0;
  Interval F_at_t0;
  Interval dF_at_t0;
  // F' stays positive past this point once it is positive at t0.
  Interval monotone_from;
  bool F_positive = false;
  bool dF_positive = false;
  bool monotone_ok = false;
  bool holds = false;
  std::string reason;
};

inline ThresholdTrace verify_threshold(const ThresholdSpec& spec, Precision prec = default_precision) {
  ThresholdTrace tr{spec.label, prec, Interval(prec), Interval(prec), Interval(prec), Interval(prec), false, false, false, false, {}};
  const Interval K = spec.K(prec);
  tr.t0 = spec.t0(prec);
  if (!K.certainly_positive()) throw invalid_input(spec.label + ": K must be positive");
  if (!Interval::integer(1, prec).certainly_below(tr.t0)) throw invalid_input(spec.label + ": t0 must exceed 1");

  const Interval one = Interval::integer(1, prec);
  const Interval L = log(tr.t0);
  if (spec.family == ThresholdFamily::quadratic_log) {
    const Interval c1 = spec.c1(prec);
    const Interval s = c1 + L;
    tr.F_at_t0 = tr.t0 - K * pow(s, 2) - spec.c0(prec);
    tr.dF_at_t0 = one - Interval::integer(2, prec) * K * s / tr.t0;
    // (c1 + log t)/t is decreasing for log t >= 1 - c1.
    tr.monotone_from = exp(one - c1);
  } else {
    tr.F_at_t0 = tr.t0 - K * pow(L, 9);
    tr.dF_at_t0 = one - Interval::integer(9, prec) * K * pow(L, 8) / tr.t0;
    // (log t)^8 / t is decreasing for log t >= 8.
    tr.monotone_from = exp(Interval::integer(8, prec));
  }
  tr.F_positive = tr.F_at_t0.certainly_positive();
  tr.dF_positive = tr.dF_at_t0.certainly_positive();
  tr.monotone_ok = tr.monotone_from.upper() <= tr.t0.lower();
  tr.holds = tr.F_positive && tr.dF_positive && tr.monotone_ok;
  if (!tr.monotone_ok) {
    tr.reason = "t0 is below the point where F' is known to be monotone; cannot certify";
  } else if (!tr.F_positive) {
    tr.reason = "F(t0) is not certainly positive";
  } else if (!tr.dF_positive) {
    tr.reason = "F'(t0) is not certainly positive";
  } else {
    tr.reason = "F(t0) > 0, F'(t0) > 0, F' nondecreasing on [t0, inf)";
  }
  return tr;
}

// One positivity claim from the bound proofs; some claims quantify over
// several parameter values and carry one spec per value.
struct ThresholdClaim {
  std::string name;
  std::string statement;
  std::vector<ThresholdSpec> specs;
};

inline std::vector<ThresholdClaim> published_threshold_claims() {
  std::vector<ThresholdClaim> claims;

  claims.push_back({"conditional", "F(t) = t - 64.62(0.88 + log t)^2 - 2, F(6000) > 0",
                    {{"K=64.62, t0=6000", ThresholdFamily::quadratic_log, constant("64.62"), constant("0.88"),
                      constant("2"), constant("6000")}}});

  auto log_of_small = [](long v) { return [v](Precision p) { return log_of(Int(v), p); }; };
  {
    auto la = log_of_small(2);
    claims.push_back({"even-a", "F(t) = t - 39.14 log(a) (1.44 + log t)^2, F(6500 (log a)^2) > 0, a = 2",
                      {{"a=2", ThresholdFamily::quadratic_log,
                        [la](Precision p) { return Interval::decimal("39.14", p) * la(p); }, constant("1.44"),
                        constant("0"),
                        [la](Precision p) { return Interval::integer(6500, p) * pow(la(p), 2); }}}});
  }
  {
    ThresholdClaim claim{"even-c", "F(t) = t - 19.57 log(c) (1.44 + log t)^2, F(3000 (log c)^2) > 0", {}};
    for (long c : {2L, 3L, 5L, 1000000L}) {
      auto lc = log_of_small(c);
      claim.specs.push_back({"c=" + std::to_string(c), ThresholdFamily::quadratic_log,
                             [lc](Precision p) { return Interval::decimal("19.57", p) * lc(p); }, constant("1.44"),
                             constant("0"),
                             [lc](Precision p) { return Interval::integer(3000, p) * pow(lc(p), 2); }});
    }
    claims.push_back(std::move(claim));
  }
  claims.push_back({"three-solutions", "F(t) = t - 6500^3 (log t)^9, F(5 x 10^27) > 0",
                    {{"K=6500^3, t0=5e27", ThresholdFamily::nonic_log,
                      [](Precision p) { return pow(Interval::integer(6500, p), 3); }, constant("0"), constant("0"),
                      constant("5e27")}}});
  return claims;
}

}  // namespace texp
