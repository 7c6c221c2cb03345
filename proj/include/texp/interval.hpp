#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"
#include "integer.hpp"

namespace texp {

using Precision = mpfr_prec_t;

inline constexpr Precision default_precision = 128;

// Owning wrapper around an mpfr_t. Every producing operation takes an explicit
// rounding direction; there is no implicit "nearest" anywhere in the bound code.
class Real {
 public:
  explicit Real(Precision prec = default_precision) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);  // same precision, exact
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  Precision precision() const { return mpfr_get_prec(v_); }

  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(v_, rnd); }
  bool is_positive() const { return mpfr_sgn(v_) > 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }

  // Largest integer <= value.
  Int floor() const {
    Int r;
    mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDD);
    return r;
  }
  Int ceil() const {
    Int r;
    mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDU);
    return r;
  }

  // Fixed-point rendering with `digits` fractional digits, rounded in `rnd`.
  std::string to_string(int digits = 6, mpfr_rnd_t rnd = MPFR_RNDN) const {
    char* buf = nullptr;
    const char* fmt = rnd == MPFR_RNDD ? "%.*RDf" : rnd == MPFR_RNDU ? "%.*RUf" : "%.*RNf";
    mpfr_asprintf(&buf, fmt, digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend int compare(const Real& a, const Int& b) { return mpfr_cmp_z(a.v_, b.get_mpz_t()); }
  friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding. Every operation returns an
// interval guaranteed to contain the exact real result of applying the
// operation to any points of the operands.
class Interval {
 public:
  explicit Interval(Precision prec = default_precision) : lo_(prec), hi_(prec) {}

  static Interval integer(const Int& v, Precision prec = default_precision) {
    Interval r(prec);
    mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
    return r;
  }
  static Interval integer(long v, Precision prec = default_precision) { return integer(Int(v), prec); }

  // Encloses a decimal literal such as "32.31" that may not be representable in binary.
  static Interval decimal(std::string_view literal, Precision prec = default_precision) {
    Interval r(prec);
    std::string s(literal);
    if (mpfr_set_str(r.lo_.get(), s.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_.get(), s.c_str(), 10, MPFR_RNDU) != 0) {
      throw invalid_input("bad decimal literal: " + s);
    }
    return r;
  }

  static Interval ratio(const Int& num, const Int& den, Precision prec = default_precision) {
    return integer(num, prec) / integer(den, prec);
  }

  static Interval ln2(Precision prec = default_precision) {
    Interval r(prec);
    mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
    mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
    return r;
  }

  const Real& lower() const { return lo_; }
  const Real& upper() const { return hi_; }
  Precision precision() const { return std::max(lo_.precision(), hi_.precision()); }

  bool certainly_positive() const { return lo_.is_positive(); }
  bool certainly_negative() const { return hi_.is_negative(); }
  // Every point of *this is strictly below every point of o.
  bool certainly_below(const Interval& o) const { return hi_ < o.lo_; }

  Real width() const {
    Real w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
  }

  Interval operator-() const {
    Interval r(precision());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    return a.corners(b, [](mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
      mpfr_mul(out, x, y, rnd);
    });
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    if (!b.certainly_positive() && !b.certainly_negative()) {
      throw precondition_error("interval division by an interval containing zero");
    }
    return a.corners(b, [](mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
      mpfr_div(out, x, y, rnd);
    });
  }

  friend Interval log(const Interval& a) {
    if (!a.certainly_positive()) throw precondition_error("log of an interval not bounded away from zero");
    Interval r(a.precision());
    mpfr_log(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval log1p(const Interval& a) {
    Interval r(a.precision());
    Real lo1(a.precision());
    mpfr_add_si(lo1.get(), a.lo_.get(), 1, MPFR_RNDD);
    if (!lo1.is_positive()) throw precondition_error("log1p argument not above -1");
    mpfr_log1p(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log1p(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval exp(const Interval& a) {
    Interval r(a.precision());
    mpfr_exp(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval pow(const Interval& a, unsigned long n) {
    Interval r(a.precision());
    if (n == 0) return integer(1, a.precision());
    if (n % 2 == 1 || !a.lo_.is_negative()) {
      mpfr_pow_ui(r.lo_.get(), a.lo_.get(), n, MPFR_RNDD);
      mpfr_pow_ui(r.hi_.get(), a.hi_.get(), n, MPFR_RNDU);
    } else if (!a.hi_.is_positive()) {
      mpfr_pow_ui(r.lo_.get(), a.hi_.get(), n, MPFR_RNDD);
      mpfr_pow_ui(r.hi_.get(), a.lo_.get(), n, MPFR_RNDU);
    } else {
      Real t(a.precision());
      mpfr_pow_ui(r.hi_.get(), a.lo_.get(), n, MPFR_RNDU);
      mpfr_pow_ui(t.get(), a.hi_.get(), n, MPFR_RNDU);
      mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
      mpfr_set_zero(r.lo_.get(), 1);
    }
    return r;
  }

  friend Interval max(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_max(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& v) {
    return os << '[' << v.lo_.to_string(9, MPFR_RNDD) << ", " << v.hi_.to_string(9, MPFR_RNDU) << ']';
  }

 private:
  template <typename Op>
  Interval corners(const Interval& b, Op op) const {
    const Precision prec = std::max(precision(), b.precision());
    Interval r(prec);
    Real t(prec);
    const mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
    const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
    bool first = true;
    for (auto x : xs) {
      for (auto y : ys) {
        if (first) {
          op(r.lo_.get(), x, y, MPFR_RNDD);
          op(r.hi_.get(), x, y, MPFR_RNDU);
          first = false;
          continue;
        }
        op(t.get(), x, y, MPFR_RNDD);
        mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
        op(t.get(), x, y, MPFR_RNDU);
        mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
      }
    }
    return r;
  }

  Real lo_;
  Real hi_;
};

inline Interval operator*(long k, const Interval& a) { return Interval::integer(k, a.precision()) * a; }

}  // namespace texp
