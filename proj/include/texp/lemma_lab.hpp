#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "integer.hpp"

namespace texp {

// ---------------------------------------------------------------------------
// Canonical form A^X + lambda B^Y = C^Z with C = max{a, b, c}
// ---------------------------------------------------------------------------

// Which member of {(a,b,c,+1), (c,a,b,-1), (c,b,a,-1)} was chosen.
enum class Perm { abc, cab, cba };

inline const char* to_string(Perm p) {
  switch (p) {
    case Perm::abc: return "abc";
    case Perm::cab: return "cab";
    case Perm::cba: return "cba";
  }
  return "?";
}

struct CanonicalForm {
  Int A;
  Int B;
  Int C;
  int lambda = 1;
  Perm perm = Perm::abc;
};

struct CanonicalSolution {
  std::uint64_t X = 0;
  std::uint64_t Y = 0;
  std::uint64_t Z = 0;

  friend bool operator==(const CanonicalSolution&, const CanonicalSolution&) = default;
  friend auto operator<=>(const CanonicalSolution& l, const CanonicalSolution& r) {
    return std::tie(l.Z, l.X, l.Y) <=> std::tie(r.Z, r.X, r.Y);
  }
  friend std::ostream& operator<<(std::ostream& os, const CanonicalSolution& s) {
    return os << '(' << s.X << ',' << s.Y << ',' << s.Z << ')';
  }
};

inline CanonicalForm canonicalize(const Instance& inst) {
  const Int& m = inst.max_base();
  if (m == inst.c()) return {inst.a(), inst.b(), inst.c(), 1, Perm::abc};
  if (m == inst.b()) return {inst.c(), inst.a(), inst.b(), -1, Perm::cab};
  return {inst.c(), inst.b(), inst.a(), -1, Perm::cba};
}

// A^X + lambda B^Y == C^Z, exactly.
inline bool satisfies(const CanonicalForm& f, const CanonicalSolution& s) {
  return ipow(f.A, s.X) + f.lambda * ipow(f.B, s.Y) == ipow(f.C, s.Z);
}

inline CanonicalSolution permute_to_canonical(Perm p, const Solution& s) {
  switch (p) {
    case Perm::abc: return {s.x, s.y, s.z};
    case Perm::cab: return {s.z, s.x, s.y};
    case Perm::cba: return {s.z, s.y, s.x};
  }
  return {};
}

inline Solution from_canonical_solution(const CanonicalForm& f, const CanonicalSolution& s) {
  switch (f.perm) {
    case Perm::abc: return {s.X, s.Y, s.Z};
    case Perm::cab: return {s.Y, s.Z, s.X};
    case Perm::cba: return {s.Z, s.Y, s.X};
  }
  return {};
}

inline CanonicalSolution to_canonical_solution(const CanonicalForm& f, const Solution& s) {
  const CanonicalSolution cs = permute_to_canonical(f.perm, s);
  if (!satisfies(f, cs)) {
    std::ostringstream os;
    os << "mapped triple " << cs << " does not satisfy the canonical equation for solution " << s;
    throw precondition_error(os.str());
  }
  return cs;
}

// ---------------------------------------------------------------------------
// Least n with r^n = +-1 (mod m)
// ---------------------------------------------------------------------------

struct PmOrder {
  std::uint64_t n1 = 0;
  int delta1 = 1;
};

inline void require_unit(const Int& r, const Int& m) {
  if (m <= 1) throw invalid_input("modulus must exceed 1");
  if (gcd(r, m) != 1) throw invalid_input("gcd(" + to_dec(r) + ", " + to_dec(m) + ") != 1");
}

// r^n mod m mapped to +1 / -1, or 0 if it is neither.
inline int pm_residue(const Int& power_mod_m, const Int& m) {
  if (power_mod_m == 1 % m) return 1;
  if (power_mod_m == m - 1) return -1;
  return 0;
}

inline PmOrder least_pm_order(const Int& r, const Int& m) {
  require_unit(r, m);
  const Int base = mod_floor(r, m);
  Int t = base;
  std::uint64_t n = 1;
  // n1 divides ord_m(r) or is half of it, and ord_m(r) < m.
  while (pm_residue(t, m) == 0) {
    t = t * base % m;
    ++n;
  }
  return {n, pm_residue(t, m)};
}

struct OrderDivisibilityCheck {
  PmOrder order;
  std::uint64_t n = 0;
  int delta = 0;                       // r^n mod m as +-1, or 0
  bool n1_divides_n = false;
  bool iff_holds = false;              // (delta != 0) == (n1 | n)
  bool divisibility_applicable = false;
  bool divisibility_holds = true;      // r^n1 - delta1 | r^n - delta
  bool holds() const { return iff_holds && divisibility_holds; }
};

inline OrderDivisibilityCheck check_order_divisibility(const Int& r, const Int& m, std::uint64_t n,
                                                       const PmOrder& order) {
  if (n < 1) throw invalid_input("n must be positive");
  OrderDivisibilityCheck out;
  out.order = order;
  out.n = n;
  const Int rn = ipow(r, n);
  out.delta = pm_residue(mod_floor(rn, m), m);
  out.n1_divides_n = n % order.n1 == 0;
  out.iff_holds = (out.delta != 0) == out.n1_divides_n;
  const Int head = ipow(r, order.n1) - order.delta1;
  if (out.n1_divides_n && out.delta != 0 && head != 0) {
    out.divisibility_applicable = true;
    out.divisibility_holds = divides(head, rn - out.delta);
  }
  return out;
}

inline OrderDivisibilityCheck check_order_divisibility(const Int& r, const Int& m, std::uint64_t n) {
  return check_order_divisibility(r, m, n, least_pm_order(r, m));
}

// ---------------------------------------------------------------------------
// Order data (Z1, n1, delta1, f): A^n1 = C^Z1 f + delta1
// ---------------------------------------------------------------------------

struct OrderData {
  std::uint64_t Z1 = 0;
  std::uint64_t n1 = 0;
  int delta1 = 1;
  Int f;
};

inline OrderData order_data(const CanonicalForm& form, const std::vector<CanonicalSolution>& sols) {
  if (sols.empty()) throw precondition_error("order_data needs at least one solution");
  std::uint64_t z1 = sols.front().Z;
  for (const auto& s : sols) z1 = std::min(z1, s.Z);
  const Int modulus = ipow(form.C, z1);
  const PmOrder ord = least_pm_order(form.A, modulus);
  const auto f = exact_div(ipow(form.A, ord.n1) - ord.delta1, modulus);
  if (!f || *f < 1) throw std::logic_error("A^n1 - delta1 is not a positive multiple of C^Z1");
  return {z1, ord.n1, ord.delta1, *f};
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct Clause {
  std::string name;
  bool holds = false;
  std::string statement;
};

// Every recomputed intermediate of one lemma application, as decimal strings,
// plus a verdict per clause. A failing clause is data, never an exception.
struct LemmaCertificate {
  std::string lemma;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> recomputed;
  std::vector<Clause> clauses;

  bool verdict() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.holds; });
  }
  const Clause* clause(const std::string& name) const {
    for (const auto& c : clauses) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  std::optional<std::string> value(const std::string& name) const {
    for (const auto& [k, v] : recomputed) {
      if (k == name) return v;
    }
    return std::nullopt;
  }

  void input(std::string k, const Int& v) { inputs.emplace_back(std::move(k), to_dec(v)); }
  void input(std::string k, const CanonicalSolution& s) {
    std::ostringstream os;
    os << s;
    inputs.emplace_back(std::move(k), os.str());
  }
  void record(std::string k, const Int& v) { recomputed.emplace_back(std::move(k), to_dec(v)); }
  void check(std::string name, bool holds, std::string statement) {
    clauses.push_back({std::move(name), holds, std::move(statement)});
  }
};

namespace detail {

inline Int U(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

inline void echo_form(LemmaCertificate& cert, const CanonicalForm& f) {
  cert.input("A", f.A);
  cert.input("B", f.B);
  cert.input("C", f.C);
  cert.input("lambda", Int(f.lambda));
}

inline void echo_order(LemmaCertificate& cert, const OrderData& od) {
  cert.input("Z1", U(od.Z1));
  cert.input("n1", U(od.n1));
  cert.input("delta1", Int(od.delta1));
  cert.input("f", od.f);
}

// |p - q| for unsigned products
inline std::uint64_t absdiff(std::uint64_t p, std::uint64_t q) { return p > q ? p - q : q - p; }

}  // namespace detail

// A^{|XY' - X'Y|} = (-lambda)^{Y+Y'} (mod C^Z) for solutions with Z <= Z'.
inline LemmaCertificate verify_lemma_3_5(const CanonicalForm& form, const CanonicalSolution& s,
                                         const CanonicalSolution& t) {
  if (s.Z > t.Z) throw precondition_error("verify_lemma_3_5 needs Z <= Z'");
  LemmaCertificate cert{"3.5", {}, {}, {}};
  detail::echo_form(cert, form);
  cert.input("s", s);
  cert.input("s'", t);

  const Int xy = detail::U(s.X) * detail::U(t.Y), yx = detail::U(t.X) * detail::U(s.Y);
  const Int cross = abs(xy - yx);
  const Int modulus = ipow(form.C, s.Z);
  const Int lhs = powm(form.A, cross, modulus);
  const Int rhs = mod_floor(Int(sign_pow(-form.lambda, s.Y + t.Y)), modulus);
  cert.record("|XY'-X'Y|", cross);
  cert.record("C^Z", modulus);
  cert.record("A^|XY'-X'Y| mod C^Z", lhs);
  cert.record("(-lambda)^(Y+Y') mod C^Z", rhs);
  cert.check("cross_term_nonzero", cross != 0, "XY' - X'Y != 0");
  cert.check("congruence", lhs == rhs, "A^|XY'-X'Y| = (-lambda)^(Y+Y') (mod C^Z)");
  return cert;
}

// At most two solutions share the minimal Z.
inline LemmaCertificate verify_lemma_3_6(const CanonicalForm& form, const std::vector<CanonicalSolution>& sols) {
  LemmaCertificate cert{"3.6", {}, {}, {}};
  detail::echo_form(cert, form);
  cert.input("solutions", detail::U(sols.size()));
  if (sols.empty()) {
    cert.check("count_at_Z1", true, "no solutions: vacuous");
    return cert;
  }
  std::map<std::uint64_t, std::uint64_t> by_z;
  for (const auto& s : sols) ++by_z[s.Z];
  const auto [z1, count] = *by_z.begin();
  cert.record("Z1", detail::U(z1));
  cert.record("count_at_Z1", detail::U(count));
  cert.check("count_at_Z1", count <= 2, "#{solutions with Z = Z1} <= 2");
  return cert;
}

// gcd(C, f) <= Y2 for solutions s1 (Z = Z1) and s2 (Z > Z1), recomputing
// every congruence of the argument.
inline LemmaCertificate verify_lemma_3_7(const CanonicalForm& form, const OrderData& od, const CanonicalSolution& s1,
                                         const CanonicalSolution& s2) {
  if (s1.Z != od.Z1) throw precondition_error("verify_lemma_3_7 needs Z(s1) = Z1");
  if (!(s1.Z < s2.Z)) throw precondition_error("verify_lemma_3_7 needs Z1 < Z2");
  using detail::U;
  LemmaCertificate cert{"3.7", {}, {}, {}};
  detail::echo_form(cert, form);
  detail::echo_order(cert, od);
  cert.input("s1", s1);
  cert.input("s2", s2);

  const CanonicalForm& F = form;
  const int ml = -F.lambda;
  const std::uint64_t x1y2 = s1.X * s2.Y, x2y1 = s2.X * s1.Y;
  const std::uint64_t cross = detail::absdiff(x1y2, x2y1);
  const std::uint64_t low = std::min(x1y2, x2y1);
  const Int cz1 = ipow(F.C, s1.Z);
  const Int m1 = cz1 * F.C;  // C^{Z1+1}
  const Int sign_term(sign_pow(ml, s1.Y + s2.Y));
  const Int b_part = ipow(F.B, s1.Y * (s2.Y - 1));  // B^{Y1(Y2-1)}
  cert.record("|X1Y2-X2Y1|", U(cross));
  cert.check("cross_term_nonzero", cross != 0, "X1Y2 - X2Y1 != 0");

  // both powers of A modulo C^{Z1+1}
  {
    const Int lhs_a = powm(F.A, U(x1y2), m1);
    const Int rhs_a = mod_floor(sign_pow(ml, s2.Y) * ipow(F.B, s1.Y * s2.Y) +
                                    sign_pow(ml, s2.Y - 1) * b_part * cz1 * U(s2.Y),
                                m1);
    const Int lhs_b = powm(F.A, U(x2y1), m1);
    const Int rhs_b = mod_floor(sign_pow(ml, s1.Y) * ipow(F.B, s1.Y * s2.Y), m1);
    cert.check("expansion_first", lhs_a == rhs_a,
               "A^{X1Y2} = (-l)^Y2 B^{Y1Y2} + (-l)^{Y2-1} B^{Y1(Y2-1)} C^Z1 Y2 (mod C^{Z1+1})");
    cert.check("expansion_second", lhs_b == rhs_b, "A^{X2Y1} = (-l)^Y1 B^{Y1Y2} (mod C^{Z1+1})");
  }

  const int lambda_prime = x1y2 > x2y1 ? sign_pow(ml, s2.Y - 1) : -sign_pow(ml, s1.Y - 1);
  cert.record("lambda'", Int(lambda_prime));

  const Int numerator = ipow(F.A, cross) - sign_term;
  {
    const Int lhs = mod_floor(ipow(F.A, low) * numerator, m1);
    const Int rhs = mod_floor(lambda_prime * b_part * cz1 * U(s2.Y), m1);
    cert.check("eliminated", lhs == rhs,
               "A^min (A^|X1Y2-X2Y1| - (-l)^{Y1+Y2}) = l' B^{Y1(Y2-1)} C^Z1 Y2 (mod C^{Z1+1})");
  }

  const auto g = exact_div(numerator, cz1);
  cert.check("g_exact", g.has_value() && *g >= 1, "A^|X1Y2-X2Y1| - (-l)^{Y1+Y2} = C^Z1 g, g >= 1");
  const Int gv = g.value_or(Int(0));
  cert.record("g", gv);

  const auto abar = mod_inverse(F.A, m1);
  cert.check("inverse", abar.has_value() && gcd(*abar, F.C) == 1, "A Abar = 1 (mod C^{Z1+1}), gcd(Abar, C) = 1");
  const Int abar_v = abar.value_or(Int(0));
  cert.record("Abar", abar_v);

  {
    const Int rhs = mod_floor(lambda_prime * powm(abar_v, U(low), F.C) * b_part * U(s2.Y), F.C);
    cert.record("g mod C", mod_floor(gv, F.C));
    cert.record("l' Abar^min B^{Y1(Y2-1)} Y2 mod C", rhs);
    cert.check("g_congruence", mod_floor(gv, F.C) == rhs, "g = l' Abar^min B^{Y1(Y2-1)} Y2 (mod C)");
  }

  const Int gcd_cg = gcd(F.C, gv), gcd_cy = gcd(F.C, U(s2.Y)), gcd_cf = gcd(F.C, od.f);
  cert.record("gcd(C,g)", gcd_cg);
  cert.record("gcd(C,Y2)", gcd_cy);
  cert.record("gcd(C,f)", gcd_cf);
  cert.check("gcd_equality", gcd_cg == gcd_cy, "gcd(C, g) = gcd(C, Y2)");
  cert.check("n1_divides", cross % od.n1 == 0, "n1 | X1Y2 - X2Y1");
  cert.check("f_divides_g", g.has_value() && divides(od.f, gv), "f | g");
  cert.check("gcd_divides", divides(gcd_cf, gcd_cg), "gcd(C, f) | gcd(C, g)");
  cert.check("conclusion", gcd_cf <= U(s2.Y), "gcd(C, f) <= Y2");
  return cert;
}

// Three solutions with Z1 < Z2 <= Z3 force C < Y2 max{X2Y3, X3Y2}.
inline LemmaCertificate verify_lemma_3_8(const CanonicalForm& form, const OrderData& od, const CanonicalSolution& s1,
                                         const CanonicalSolution& s2, const CanonicalSolution& s3) {
  if (s1 == s2 || s2 == s3 || s1 == s3) throw precondition_error("verify_lemma_3_8 needs three distinct solutions");
  if (s1.Z != od.Z1) throw precondition_error("verify_lemma_3_8 needs Z(s1) = Z1");
  if (!(s1.Z < s2.Z && s2.Z <= s3.Z)) throw precondition_error("verify_lemma_3_8 needs Z1 < Z2 <= Z3");
  using detail::U;
  LemmaCertificate cert{"3.8", {}, {}, {}};
  detail::echo_form(cert, form);
  detail::echo_order(cert, od);
  cert.input("s1", s1);
  cert.input("s2", s2);
  cert.input("s3", s3);

  const CanonicalForm& F = form;
  const int ml = -F.lambda;
  const std::uint64_t x2y3 = s2.X * s3.Y, x3y2 = s3.X * s2.Y;
  const std::uint64_t cross = detail::absdiff(x2y3, x3y2);
  const std::uint64_t top = std::max(x2y3, x3y2);
  const int sign_term = sign_pow(ml, s2.Y + s3.Y);
  const Int cz1 = ipow(F.C, od.Z1);
  const Int m1 = cz1 * F.C;
  cert.record("|X2Y3-X3Y2|", U(cross));
  cert.check("cross_term_nonzero", cross != 0, "X2Y3 - X3Y2 != 0");

  const Int numerator = ipow(F.A, cross) - sign_term;
  cert.check("congruence", mod_floor(numerator, m1) == 0, "A^|X2Y3-X3Y2| = (-l)^{Y2+Y3} (mod C^{Z1+1})");
  const auto h = exact_div(numerator, m1);
  cert.check("h_exact", h.has_value() && *h >= 1, "A^|X2Y3-X3Y2| - (-l)^{Y2+Y3} = C^{Z1+1} h, h >= 1");
  const Int hv = h.value_or(Int(0));
  cert.record("h", hv);

  const bool n1_div = cross % od.n1 == 0;
  const std::uint64_t n2 = cross / od.n1;
  cert.check("n1_divides", n1_div, "|X2Y3 - X3Y2| = n1 n2");
  cert.record("n2", U(n2));

  const int d1n2 = sign_pow(od.delta1, n2);
  cert.record("delta1^n2", Int(d1n2));
  cert.record("(-lambda)^(Y2+Y3)", Int(sign_term));
  cert.check("sign_identity", n1_div && d1n2 == sign_term, "delta1^n2 = (-l)^{Y2+Y3}");

  {
    // C h = f sum_{i=1}^{n2} binom(n2, i) delta1^{n2-i} (C^Z1 f)^{i-1}
    const Int q = cz1 * od.f;
    Int sum = 0, binom = 1, qpow = 1;
    for (std::uint64_t i = 1; i <= n2; ++i) {
      binom = binom * U(n2 - i + 1) / U(i);
      sum += binom * sign_pow(od.delta1, n2 - i) * qpow;
      qpow *= q;
    }
    const Int rhs = od.f * sum;
    cert.record("C h", F.C * hv);
    cert.record("f sum", rhs);
    cert.check("expansion", n1_div && F.C * hv == rhs,
               "C h = f sum_{i=1}^{n2} binom(n2,i) delta1^{n2-i} (C^Z1 f)^{i-1}");
  }

  const Int gcd_cf = gcd(F.C, od.f);
  cert.record("f n2 mod C", mod_floor(od.f * U(n2), F.C));
  cert.record("gcd(C,f)", gcd_cf);
  cert.check("f_n2_divisible", n1_div && mod_floor(od.f * U(n2), F.C) == 0, "f n2 = 0 (mod C)");
  cert.check("n2_gcd_lower", U(n2) * gcd_cf >= F.C, "n2 gcd(C, f) >= C");
  cert.check("gcd_bound", gcd_cf <= U(s2.Y), "gcd(C, f) <= Y2");
  cert.check("n2_upper", U(n2) < U(top), "n2 <= |X2Y3 - X3Y2| < max{X2Y3, X3Y2}");

  const Int chain = U(s2.Y) * U(top);
  const Int cube = ipow(U(std::max({s2.X, s3.Y, s3.X, s2.Y})), 3);
  cert.record("Y2 max{X2Y3,X3Y2}", chain);
  cert.record("max{X2,Y3,X3,Y2}^3", cube);
  cert.check("base_bound", F.C < chain && chain <= cube, "C < Y2 max{X2Y3, X3Y2} <= max{X2,Y3,X3,Y2}^3");
  cert.check("conclusion", F.C < Int("5000000000000000000000000000"), "max{a,b,c} < 5 x 10^27");
  return cert;
}

// ---------------------------------------------------------------------------
// Pillai equations A^m + sign B^n = k
// ---------------------------------------------------------------------------

struct PillaiResult {
  std::uint64_t count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> solutions;  // (m, n), sorted
};

inline void validate_pillai(const Int& A, const Int& B, int sign) {
  if (A <= 1 || B <= 1) throw invalid_input("Pillai bases must exceed 1");
  if (gcd(A, B) != 1) throw invalid_input("Pillai bases must be coprime");
  if (sign != 1 && sign != -1) throw invalid_input("sign must be +1 or -1");
}

// All (m, n) with 1 <= m, n <= cap and A^m + sign B^n = k.
inline PillaiResult pillai_count(const Int& A, const Int& B, const Int& k, int sign, std::uint64_t cap) {
  validate_pillai(A, B, sign);
  if (k < 1) throw invalid_input("Pillai k must be positive");
  PillaiResult out;
  Int am = 1;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    am *= A;
    if (sign > 0 && am >= k) break;
    Int bn = 1;
    for (std::uint64_t n = 1; n <= cap; ++n) {
      bn *= B;
      const Int v = sign > 0 ? Int(am + bn) : Int(am - bn);
      if (v == k) out.solutions.emplace_back(m, n);
      if (v <= k && sign < 0) break;  // A^m - B^n only decreases in n
      if (v >= k && sign > 0) break;
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  out.count = out.solutions.size();
  return out;
}

// Every k in [k_min, k_max] with at least one solution, with its (m, n) list;
// one pass over incremental power tables.
inline std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> pillai_scan(
    const Int& A, const Int& B, int sign, std::uint64_t cap, std::uint64_t k_min, std::uint64_t k_max) {
  validate_pillai(A, B, sign);
  std::vector<Int> ap(cap + 1), bp(cap + 1);
  ap[0] = bp[0] = 1;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    ap[e] = ap[e - 1] * A;
    bp[e] = bp[e - 1] * B;
  }
  const Int lo = detail::U(k_min), hi = detail::U(k_max);
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> out;
  Int v;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    for (std::uint64_t n = 1; n <= cap; ++n) {
      v = sign > 0 ? Int(ap[m] + bp[n]) : Int(ap[m] - bp[n]);
      if (v >= lo && v <= hi) out[to_u64(v)].emplace_back(m, n);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole-instance certification
// ---------------------------------------------------------------------------

struct CertificationReport {
  CanonicalForm form;
  std::vector<CanonicalSolution> solutions;  // sorted by (Z, X, Y)
  std::optional<OrderData> order;
  std::vector<LemmaCertificate> certificates;

  bool all_pass() const {
    return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.verdict(); });
  }
};

// Maps the solutions to canonical form and runs every applicable lemma check:
// 3.5 on all pairs, 3.6 once, 3.7 on pairs (Z1, Z > Z1), 3.8 on triples
// Z1 < Z2 <= Z3 whose first member sits at Z1.
inline CertificationReport certify(const Instance& inst, const std::vector<Solution>& sols) {
  CertificationReport rep;
  rep.form = canonicalize(inst);
  for (const auto& s : sols) rep.solutions.push_back(to_canonical_solution(rep.form, s));
  std::sort(rep.solutions.begin(), rep.solutions.end());
  const auto& cs = rep.solutions;
  if (cs.empty()) {
    rep.certificates.push_back(verify_lemma_3_6(rep.form, cs));
    return rep;
  }
  rep.order = order_data(rep.form, cs);
  const OrderData& od = *rep.order;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) rep.certificates.push_back(verify_lemma_3_5(rep.form, cs[i], cs[j]));
  }
  rep.certificates.push_back(verify_lemma_3_6(rep.form, cs));
  for (const auto& s1 : cs) {
    if (s1.Z != od.Z1) continue;
    for (const auto& s2 : cs) {
      if (s2.Z > od.Z1) rep.certificates.push_back(verify_lemma_3_7(rep.form, od, s1, s2));
    }
  }
  for (const auto& s1 : cs) {
    if (s1.Z != od.Z1) continue;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      for (std::size_t k = j + 1; k < cs.size(); ++k) {
        if (cs[j].Z > od.Z1) rep.certificates.push_back(verify_lemma_3_8(rep.form, od, s1, cs[j], cs[k]));
      }
    }
  }
  return rep;
}

}  // namespace texp
