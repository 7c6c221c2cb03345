#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace texp {

using Int = mpz_class;

// Parses an optionally signed decimal integer of any length.
inline Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw invalid_input("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw invalid_input("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

inline std::string to_dec(const Int& v) { return v.get_str(10); }

inline Int ipow(const Int& base, std::uint64_t e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Int ipow(long base, std::uint64_t e) { return ipow(Int(base), e); }

// (+1 or -1)^e
constexpr int sign_pow(int s, std::uint64_t e) { return (s < 0 && (e & 1U)) ? -1 : 1; }

// Exponent of 2 in |v|; v must be nonzero.
inline std::uint64_t ord2(const Int& v) {
  if (sgn(v) == 0) throw precondition_error("ord2 of zero is undefined");
  return mpz_scan1(v.get_mpz_t(), 0);
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Least non-negative residue of v modulo m (m > 0).
inline Int mod_floor(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::uint64_t mod_small(const Int& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

inline Int powm(const Int& base, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a modulo m, if gcd(a, m) = 1. The result lies in [1, m).
inline std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  if (sgn(d) == 0) return sgn(n) == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient n / d, or nullopt when d does not divide n.
inline std::optional<Int> exact_div(const Int& n, const Int& d) {
  if (sgn(d) == 0 || !divides(d, n)) return std::nullopt;
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline bool fits_u64(const Int& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline bool fits_i64(const Int& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= 63; }

inline std::uint64_t to_u64(const Int& v) {
  if (!fits_u64(v)) throw invalid_input("value does not fit in 64 bits: " + to_dec(v));
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

}  // namespace texp
