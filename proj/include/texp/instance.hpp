#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <tuple>

#include "errors.hpp"
#include "integer.hpp"

namespace texp {

// Bases of a^x + b^y = c^z. Construction validates min{a,b,c} > 1 and
// pairwise coprimality, so a live Instance is always valid.
class Instance {
 public:
  Instance(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ <= 1 || b_ <= 1 || c_ <= 1) {
      throw invalid_input("bases must all exceed 1, got " + str());
    }
    if (gcd(a_, b_) != 1 || gcd(b_, c_) != 1 || gcd(a_, c_) != 1) {
      throw invalid_input("bases must be pairwise coprime, got " + str() + " (gcd(a,b)=" +
                          to_dec(gcd(a_, b_)) + ", gcd(b,c)=" + to_dec(gcd(b_, c_)) +
                          ", gcd(a,c)=" + to_dec(gcd(a_, c_)) + ")");
    }
  }
  Instance(long a, long b, long c) : Instance(Int(a), Int(b), Int(c)) {}

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& max_base() const {
    const Int& ab = a_ > b_ ? a_ : b_;
    return ab > c_ ? ab : c_;
  }

  std::string str() const { return "(" + to_dec(a_) + "," + to_dec(b_) + "," + to_dec(c_) + ")"; }

  friend bool operator==(const Instance& l, const Instance& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }

 private:
  Int a_;
  Int b_;
  Int c_;
};

// Positive exponent triple (x, y, z). Ordered lexicographically by (z, x, y).
struct Solution {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;

  std::uint64_t max_exponent() const { return std::max({x, y, z}); }
  std::uint64_t min_exponent() const { return std::min({x, y, z}); }

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution& l, const Solution& r) {
    return std::tie(l.z, l.x, l.y) <=> std::tie(r.z, r.x, r.y);
  }
  friend std::ostream& operator<<(std::ostream& os, const Solution& s) {
    return os << '(' << s.x << ',' << s.y << ',' << s.z << ')';
  }
};

// a^x + b^y == c^z, exactly.
inline bool satisfies(const Instance& inst, const Solution& s) {
  return ipow(inst.a(), s.x) + ipow(inst.b(), s.y) == ipow(inst.c(), s.z);
}

}  // namespace texp
