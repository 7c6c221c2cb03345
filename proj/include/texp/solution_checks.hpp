#pragma once

#include <string>
#include <vector>

#include "bounds.hpp"
#include "instance.hpp"
#include "integer.hpp"
#include "interval.hpp"

namespace texp {

// Outcome of one bound inequality evaluated on a concrete solution.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

struct SolutionBoundReport {
  Solution solution;
  std::vector<BoundCheck> checks;

  bool all_hold() const {
    for (const auto& c : checks) {
      if (c.applicable && !c.holds) return false;
    }
    return true;
  }
  const BoundCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

namespace detail {

// exponent < value, decided on the lower end of the enclosure
inline bool below(std::uint64_t exponent, const Interval& value) {
  return Interval::integer(Int(static_cast<unsigned long>(exponent)), value.precision()).certainly_below(value);
}

inline Int u(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

// +v if v = 1 (mod 4), -v otherwise; v odd.
inline Int unit_normalized(const Int& v) { return mod_floor(v, 4) == 1 ? Int(v) : Int(-v); }

}  // namespace detail

// Evaluates every bound from the effective-bound argument that applies to the
// given solution. Comparisons of powers are exact; real-valued caps are
// compared against the conservative end of their enclosures.
inline SolutionBoundReport check_solution_bounds(const Instance& inst, const Solution& s,
                                                 Precision prec = default_precision) {
  using detail::below;
  using detail::u;
  SolutionBoundReport rep{s, {}};
  const Int ax = ipow(inst.a(), s.x), by = ipow(inst.b(), s.y), cz = ipow(inst.c(), s.z);
  const Interval la = log_of(inst.a(), prec), lb = log_of(inst.b(), prec), lc = log_of(inst.c(), prec);
  const Interval lmax = log_of(inst.max_base(), prec);
  const bool a_small = ax * ax < cz;  // a^{2x} < c^z
  const bool b_small = by * by < cz;
  const bool conditional = a_small || b_small;
  const bool big_case = !conditional && s.min_exponent() > 1;

  rep.checks.push_back({"order", true, ax < cz && by < cz, "max{x log a, y log b} < z log c"});

  {
    BoundReport br = solution_bound(inst, prec);
    rep.checks.push_back({"total", true, u(s.max_exponent()) <= br.bound, "max{x,y,z} <= " + to_dec(br.bound)});
  }

  {
    Interval cap = Interval::integer(4663, prec) * pow(lmax, 2);
    rep.checks.push_back({"conditional", conditional, !conditional || below(s.max_exponent(), cap),
                          "max{x,y,z} < 4663 (log max)^2 = " + cap.lower().to_string(3, MPFR_RNDD)});
  }

  // Archimedean linear form: if a^{2x} < c^z, Lambda = z log c - y log b = log(1 + a^x/b^y).
  {
    BoundCheck chk{"linear_form", conditional, true, ""};
    auto test = [&](const Int& small_pow, const Int& other_pow, const Int& other_base, std::uint64_t other_exp) {
      const Interval lambda = log1p(Interval::ratio(small_pow, other_pow, prec));
      const Interval log_lambda = log(lambda);
      const Real lower = lmn_log_lower_bound({inst.c(), other_base, u(s.z), u(other_exp)}, prec);
      const bool ok = log_lambda.lower() >= lower;
      chk.holds = chk.holds && ok;
      chk.detail += "log Lambda in " + log_lambda.lower().to_string(4, MPFR_RNDD) + ".. >= " +
                    lower.to_string(4, MPFR_RNDD) + "; ";
    };
    if (a_small) test(ax, by, inst.b(), s.y);
    if (b_small) test(by, ax, inst.a(), s.x);
    rep.checks.push_back(std::move(chk));
  }

  // Non-archimedean: one base even, its exponent > 1.
  {
    BoundCheck chk{"two_adic", false, true, ""};
    auto test = [&](const Int& base1, std::uint64_t e1, const Int& base2, std::uint64_t e2, std::uint64_t floor_ord) {
      chk.applicable = true;
      const Int alpha1 = detail::unit_normalized(base1), alpha2 = detail::unit_normalized(base2);
      const Int lambda = ipow(alpha1, e1) - ipow(alpha2, e2);
      const std::uint64_t ord = ord2(lambda);
      const Real cap = padic_ord2_upper_bound({alpha1, alpha2, u(e1), u(e2)}, prec);
      const bool ok = ord >= floor_ord && compare(cap, u(ord)) >= 0;
      chk.holds = chk.holds && ok;
      chk.detail += "ord2 = " + std::to_string(ord) + " (>= " + std::to_string(floor_ord) +
                    "), bound " + cap.to_string(3, MPFR_RNDU) + "; ";
    };
    if (mod_floor(inst.a(), 2) == 0 && s.x > 1) test(inst.c(), s.z, inst.b(), s.y, s.x);
    if (mod_floor(inst.b(), 2) == 0 && s.y > 1) test(inst.c(), s.z, inst.a(), s.x, s.y);
    if (mod_floor(inst.c(), 2) == 0 && s.z > 1) test(inst.a(), s.x, inst.b(), s.y, s.z);
    rep.checks.push_back(std::move(chk));
  }

  const Interval k6500 = Interval::integer(6500, prec), k3000 = Interval::integer(3000, prec);
  {
    const bool app = big_case && mod_floor(inst.a(), 2) == 0;
    bool ok = true;
    if (app) {
      ok = below(s.z, k6500 * la * la * lb) && below(s.x, k6500 * la * lb * lc) && below(s.y, k6500 * la * la * lc);
    }
    rep.checks.push_back({"even_a", app, ok, "z < 6500 log^2 a log b, x < 6500 log a log b log c, y < 6500 log^2 a log c"});
  }
  {
    const bool app = big_case && mod_floor(inst.b(), 2) == 0;
    bool ok = true;
    if (app) {
      ok = below(s.z, k6500 * lb * lb * la) && below(s.y, k6500 * la * lb * lc) && below(s.x, k6500 * lb * lb * lc);
    }
    rep.checks.push_back({"even_b", app, ok, "z < 6500 log^2 b log a, y < 6500 log a log b log c, x < 6500 log^2 b log c"});
  }
  {
    const bool app = big_case && mod_floor(inst.c(), 2) == 0;
    bool ok = true;
    if (app) {
      ok = below(s.z, k3000 * la * lb * lc) && below(s.x, k3000 * lb * lc * lc) && below(s.y, k3000 * la * lc * lc);
    }
    rep.checks.push_back({"even_c", app, ok, "z < 3000 log a log b log c, x < 3000 log b log^2 c, y < 3000 log a log^2 c"});
  }
  return rep;
}

}  // namespace texp
