#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "integer.hpp"
#include "interval.hpp"

namespace texp {

struct SieveConfig {
  std::uint32_t prime_cap = 64;    // largest filter prime considered
  std::uint32_t prime_count = 12;  // 0 disables the sieve
  Precision verify_precision = 96;
  unsigned threads = 0;            // 0: hardware concurrency
};

struct EnumerationStats {
  std::uint64_t candidates_examined = 0;
  std::uint64_t candidates_surviving_sieve = 0;
  std::uint64_t exact_checks = 0;

  EnumerationStats& operator+=(const EnumerationStats& o) {
    candidates_examined += o.candidates_examined;
    candidates_surviving_sieve += o.candidates_surviving_sieve;
    exact_checks += o.exact_checks;
    return *this;
  }
  friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

struct SolutionSet {
  Instance instance;
  std::uint64_t cap = 0;
  std::vector<Solution> solutions;  // sorted by (z, x, y), no duplicates
  EnumerationStats stats;
};

namespace detail {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t q = kMersenne61;
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & q) + static_cast<std::uint64_t>(p >> 61);
  return r >= q ? r - q : r;
}

inline std::uint64_t powmod61(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod61(r, base);
    base = mulmod61(base, base);
    e >>= 1;
  }
  return r;
}

inline std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

inline std::uint32_t powmod_small(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = base % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace detail

// Returns y >= 1 with b^y == n, if any. A log-based guess at `prec` bits picks
// the candidate; confirmation is exact.
inline std::optional<std::uint64_t> is_power_of(const Int& n, const Int& b, Precision prec = 96) {
  if (n < 1) throw precondition_error("is_power_of needs n >= 1");
  if (b < 2) throw precondition_error("is_power_of needs b >= 2");
  if (n < b) return std::nullopt;
  Real ln_n(prec), ln_b(prec), ratio(prec);
  mpfr_set_z(ln_n.get(), n.get_mpz_t(), MPFR_RNDN);
  mpfr_log(ln_n.get(), ln_n.get(), MPFR_RNDN);
  mpfr_set_z(ln_b.get(), b.get_mpz_t(), MPFR_RNDN);
  mpfr_log(ln_b.get(), ln_b.get(), MPFR_RNDN);
  mpfr_div(ratio.get(), ln_n.get(), ln_b.get(), MPFR_RNDN);
  mpfr_round(ratio.get(), ratio.get());
  const std::uint64_t guess = mpfr_get_ui(ratio.get(), MPFR_RNDN);

  constexpr std::uint64_t q = detail::kMersenne61;
  const std::uint64_t n_res = mod_small(n, q), b_res = mod_small(b, q);
  for (std::uint64_t y : {guess, guess + 1, guess - 1}) {
    if (y < 1 || y > guess + 1) continue;
    if (detail::powmod61(b_res, y) != n_res) continue;
    if (ipow(b, y) == n) return y;
  }
  return std::nullopt;
}

namespace detail {

// Tables for one filter prime p. For each residue r = c^z mod p, x_masks
// holds a bitset over x in [0, x_max] with bit x set iff r - u^x is a nonzero
// element of <v> modulo p, so one z needs only word-wide ANDs.
struct FilterPrime {
  std::uint32_t p = 0;
  std::uint32_t c_res = 0;
  std::size_t subgroup_size = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> x_masks;  // p rows of `words` words

  const std::uint64_t* row(std::uint32_t residue) const { return x_masks.data() + residue * words; }
};

struct Plan {
  Int u, v, c;
  bool swapped = false;  // true if u is b (so solutions come out as (y, x, z))
  std::uint64_t cap = 0;
  double log_ratio = 0;  // log c / log u
  std::vector<FilterPrime> primes;
  Precision prec = 96;
  std::uint64_t c_q = 0;                // c mod 2^61 - 1
  std::vector<std::uint64_t> u_pow_q;   // u^x mod 2^61 - 1, x = 0..x_max
  std::vector<std::uint64_t> v_pow_q;   // v^y mod 2^61 - 1, y = 0..cap

  std::uint64_t x_limit(std::uint64_t z) const {
    const double bound = std::floor(static_cast<double>(z) * log_ratio * (1 + 1e-12)) + 1;
    return bound >= static_cast<double>(cap) ? cap : static_cast<std::uint64_t>(bound);
  }
};

inline double log_of_int(const Int& v) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

inline Plan make_plan(const Instance& inst, std::uint64_t cap, const SieveConfig& cfg) {
  Plan plan;
  plan.swapped = inst.b() > inst.a();
  plan.u = plan.swapped ? inst.b() : inst.a();
  plan.v = plan.swapped ? inst.a() : inst.b();
  plan.c = inst.c();
  plan.cap = cap;
  plan.prec = cfg.verify_precision;
  plan.log_ratio = log_of_int(plan.c) / log_of_int(plan.u);

  const std::uint64_t x_max = plan.x_limit(cap);
  const Int abc = inst.a() * inst.b() * inst.c();
  for (std::uint32_t p : small_primes(cfg.prime_cap)) {
    if (plan.primes.size() >= cfg.prime_count) break;
    if (p > 65535 || mod_small(abc, p) == 0) continue;
    FilterPrime fp;
    fp.p = p;
    fp.c_res = static_cast<std::uint32_t>(mod_small(plan.c, p));
    const auto u_res = static_cast<std::uint32_t>(mod_small(plan.u, p));
    const auto v_res = static_cast<std::uint32_t>(mod_small(plan.v, p));
    std::vector<bool> in_subgroup(p, false);
    std::uint32_t r = 1;
    do {
      in_subgroup[r] = true;
      ++fp.subgroup_size;
      r = static_cast<std::uint32_t>(std::uint64_t{r} * v_res % p);
    } while (r != 1);
    fp.words = static_cast<std::size_t>(x_max / 64 + 1);
    fp.x_masks.assign(std::size_t{p} * fp.words, 0);
    std::uint32_t w = 1 % p;
    for (std::uint64_t x = 0; x <= x_max; ++x) {
      for (std::uint32_t res = 0; res < p; ++res) {
        if (in_subgroup[(res + p - w) % p]) fp.x_masks[res * fp.words + x / 64] |= std::uint64_t{1} << (x % 64);
      }
      w = static_cast<std::uint32_t>(std::uint64_t{w} * u_res % p);
    }
    plan.primes.push_back(std::move(fp));
  }
  // Strongest rejectors first: smallest fraction of residues allowed.
  std::stable_sort(plan.primes.begin(), plan.primes.end(), [](const FilterPrime& l, const FilterPrime& r) {
    return l.subgroup_size * r.p < r.subgroup_size * l.p;
  });

  plan.c_q = mod_small(plan.c, kMersenne61);
  const std::uint64_t u_q = mod_small(plan.u, kMersenne61), v_q = mod_small(plan.v, kMersenne61);
  plan.u_pow_q.resize(x_max + 1);
  plan.v_pow_q.resize(cap + 1);
  plan.u_pow_q[0] = plan.v_pow_q[0] = 1;
  for (std::uint64_t e = 1; e <= x_max; ++e) plan.u_pow_q[e] = mulmod61(plan.u_pow_q[e - 1], u_q);
  for (std::uint64_t e = 1; e <= cap; ++e) plan.v_pow_q[e] = mulmod61(plan.v_pow_q[e - 1], v_q);
  return plan;
}

struct SliceResult {
  std::vector<Solution> solutions;
  EnumerationStats stats;
};

// Locates the only possible y for a sieve survivor without forming
// c^z - u^x. With d = z log c - x log u > 0,
//   log(c^z - u^x) = z log c + log(1 - exp(-d)),
// enclosed with directed rounding; each integer y in the enclosure of
// log(c^z - u^x) / log v is tested against the residue of c^z - u^x modulo
// 2^61 - 1. When d >= kFar the correction term lies in [log(1 - e^-kFar), 0],
// so the y-window depends on z alone and is computed once per z.
class ExponentLocator {
 public:
  static constexpr long kFar = 40;

  explicit ExponentLocator(const Plan& plan)
      : plan_(plan), lnc_lo_(plan.prec), lnc_hi_(plan.prec), lnu_lo_(plan.prec), lnu_hi_(plan.prec),
        lnv_lo_(plan.prec), lnv_hi_(plan.prec), far_corr_(plan.prec), d_lo_(plan.prec), d_hi_(plan.prec),
        t_(plan.prec), y_lo_(plan.prec), y_hi_(plan.prec) {
    set_log(lnc_lo_, lnc_hi_, plan.c);
    set_log(lnu_lo_, lnu_hi_, plan.u);
    set_log(lnv_lo_, lnv_hi_, plan.v);
    mpfr_set_si(far_corr_.get(), -kFar, MPFR_RNDN);
    mpfr_expm1(far_corr_.get(), far_corr_.get(), MPFR_RNDU);
    mpfr_neg(far_corr_.get(), far_corr_.get(), MPFR_RNDN);
    mpfr_log(far_corr_.get(), far_corr_.get(), MPFR_RNDD);
  }

  struct Verdict {
    bool ambiguous = false;
    std::optional<std::uint64_t> y;  // residue-consistent exponent, to be confirmed exactly
  };

  // Prepares the shared y-window for every x with d >= kFar.
  void begin_z(std::uint64_t z) {
    // x_far = floor((z log c - kFar) / log u), rounded down
    mpfr_mul_ui(t_.get(), lnc_lo_.get(), z, MPFR_RNDD);
    mpfr_sub_si(t_.get(), t_.get(), kFar, MPFR_RNDD);
    if (mpfr_sgn(t_.get()) <= 0) {
      x_far_ = 0;
    } else {
      mpfr_div(t_.get(), t_.get(), lnu_hi_.get(), MPFR_RNDD);
      mpfr_floor(t_.get(), t_.get());
      x_far_ = mpfr_get_ui(t_.get(), MPFR_RNDD);
    }
    mpfr_mul_ui(y_lo_.get(), lnc_lo_.get(), z, MPFR_RNDD);
    mpfr_add(y_lo_.get(), y_lo_.get(), far_corr_.get(), MPFR_RNDD);
    mpfr_div(y_lo_.get(), y_lo_.get(), lnv_hi_.get(), MPFR_RNDD);
    mpfr_mul_ui(y_hi_.get(), lnc_hi_.get(), z, MPFR_RNDU);
    mpfr_div(y_hi_.get(), y_hi_.get(), lnv_lo_.get(), MPFR_RNDU);
    far_window_ = window();
  }

  Verdict locate(std::uint64_t x, std::uint64_t z, std::uint64_t n_res) {
    if (x <= x_far_) return match(far_window_, n_res);

    // d = z log c - x log u
    mpfr_mul_ui(d_lo_.get(), lnc_lo_.get(), z, MPFR_RNDD);
    mpfr_mul_ui(t_.get(), lnu_hi_.get(), x, MPFR_RNDU);
    mpfr_sub(d_lo_.get(), d_lo_.get(), t_.get(), MPFR_RNDD);
    mpfr_mul_ui(d_hi_.get(), lnc_hi_.get(), z, MPFR_RNDU);
    mpfr_mul_ui(t_.get(), lnu_lo_.get(), x, MPFR_RNDD);
    mpfr_sub(d_hi_.get(), d_hi_.get(), t_.get(), MPFR_RNDU);
    if (mpfr_sgn(d_lo_.get()) <= 0) return {true, {}};

    // lower end: log(-expm1(-d_lo)) + z log c, all rounded down
    mpfr_neg(t_.get(), d_lo_.get(), MPFR_RNDN);
    mpfr_expm1(t_.get(), t_.get(), MPFR_RNDU);
    mpfr_neg(t_.get(), t_.get(), MPFR_RNDN);
    mpfr_log(t_.get(), t_.get(), MPFR_RNDD);
    mpfr_mul_ui(y_lo_.get(), lnc_lo_.get(), z, MPFR_RNDD);
    mpfr_add(y_lo_.get(), y_lo_.get(), t_.get(), MPFR_RNDD);
    if (mpfr_sgn(y_lo_.get()) <= 0) return {true, {}};
    mpfr_div(y_lo_.get(), y_lo_.get(), lnv_hi_.get(), MPFR_RNDD);

    mpfr_neg(t_.get(), d_hi_.get(), MPFR_RNDN);
    mpfr_expm1(t_.get(), t_.get(), MPFR_RNDD);
    mpfr_neg(t_.get(), t_.get(), MPFR_RNDN);
    mpfr_log(t_.get(), t_.get(), MPFR_RNDU);
    mpfr_mul_ui(y_hi_.get(), lnc_hi_.get(), z, MPFR_RNDU);
    mpfr_add(y_hi_.get(), y_hi_.get(), t_.get(), MPFR_RNDU);
    mpfr_div(y_hi_.get(), y_hi_.get(), lnv_lo_.get(), MPFR_RNDU);
    return match(window(), n_res);
  }

 private:
  struct Window {
    std::uint64_t first = 1;
    std::uint64_t last = 0;  // empty when first > last
    bool too_wide = false;
  };

  // Integers in [y_lo_, y_hi_] intersected with [1, cap].
  Window window() {
    Window w;
    if (mpfr_sgn(y_hi_.get()) <= 0) return w;
    mpfr_ceil(y_lo_.get(), y_lo_.get());
    mpfr_floor(y_hi_.get(), y_hi_.get());
    if (mpfr_cmp(y_lo_.get(), y_hi_.get()) > 0) return w;
    w.first = mpfr_sgn(y_lo_.get()) > 0 ? std::max<std::uint64_t>(1, mpfr_get_ui(y_lo_.get(), MPFR_RNDN)) : 1;
    w.last = std::min<std::uint64_t>(plan_.cap, mpfr_get_ui(y_hi_.get(), MPFR_RNDN));
    w.too_wide = w.first <= w.last && w.last - w.first > 3;
    return w;
  }

  Verdict match(const Window& w, std::uint64_t n_res) const {
    if (w.too_wide) return {true, {}};
    for (std::uint64_t y = w.first; y <= w.last; ++y) {
      if (plan_.v_pow_q[y] == n_res) return {false, y};
    }
    return {};
  }

  static void set_log(Real& lo, Real& hi, const Int& v) {
    mpfr_set_z(lo.get(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_z(hi.get(), v.get_mpz_t(), MPFR_RNDU);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  }

  const Plan& plan_;
  Real lnc_lo_, lnc_hi_, lnu_lo_, lnu_hi_, lnv_lo_, lnv_hi_;
  Real far_corr_;  // log(1 - e^-kFar), rounded down
  Real d_lo_, d_hi_, t_, y_lo_, y_hi_;
  std::uint64_t x_far_ = 0;
  Window far_window_;
};

inline SliceResult run_slice(const Plan& plan, std::uint64_t z_begin, std::uint64_t z_end) {
  SliceResult out;
  const std::size_t np = plan.primes.size();
  std::vector<std::uint32_t> cz_res(np);
  std::vector<const std::uint64_t*> rows(np);
  for (std::size_t i = 0; i < np; ++i) cz_res[i] = powmod_small(plan.primes[i].c_res, z_begin, plan.primes[i].p);
  std::uint64_t cz_q = powmod61(plan.c_q, z_begin);
  ExponentLocator locator(plan);
  Int cz = ipow(plan.c, z_begin);
  Int ux, diff;

  auto examine = [&](std::uint64_t x, std::uint64_t z) {
    ++out.stats.candidates_surviving_sieve;
    const std::uint64_t uq = plan.u_pow_q[x];
    const std::uint64_t n_res = cz_q >= uq ? cz_q - uq : cz_q + kMersenne61 - uq;
    const auto located = locator.locate(x, z, n_res);
    if (!located.ambiguous && !located.y) return;

    ++out.stats.exact_checks;
    mpz_pow_ui(ux.get_mpz_t(), plan.u.get_mpz_t(), static_cast<unsigned long>(x));
    if (ux >= cz) return;
    diff = cz - ux;
    std::optional<std::uint64_t> y;
    if (located.ambiguous) {
      y = is_power_of(diff, plan.v, plan.prec);
    } else if (ipow(plan.v, *located.y) == diff) {
      y = located.y;
    }
    if (!y || *y > plan.cap) return;
    out.solutions.push_back(plan.swapped ? Solution{*y, x, z} : Solution{x, *y, z});
  };

  for (std::uint64_t z = z_begin; z < z_end; ++z) {
    const std::uint64_t x_hi = plan.x_limit(z);
    out.stats.candidates_examined += x_hi;
    locator.begin_z(z);
    for (std::size_t i = 0; i < np; ++i) rows[i] = plan.primes[i].row(cz_res[i]);
    const std::uint64_t last_word = x_hi / 64;
    for (std::uint64_t wi = 0; wi <= last_word; ++wi) {
      std::uint64_t bits = ~std::uint64_t{0};
      for (std::size_t i = 0; i < np && bits; ++i) bits &= rows[i][wi];
      if (wi == 0) bits &= ~std::uint64_t{1};  // x >= 1
      if (wi == last_word) {
        const unsigned keep = static_cast<unsigned>(x_hi % 64) + 1;
        if (keep < 64) bits &= (std::uint64_t{1} << keep) - 1;
      }
      while (bits) {
        const unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        examine(wi * 64 + b, z);
      }
    }
    cz *= plan.c;
    cz_q = mulmod61(cz_q, plan.c_q);
    for (std::size_t i = 0; i < np; ++i) {
      cz_res[i] = static_cast<std::uint32_t>(std::uint64_t{cz_res[i]} * plan.primes[i].c_res % plan.primes[i].p);
    }
  }
  return out;
}

}  // namespace detail

// All (x, y, z) with a^x + b^y = c^z and 1 <= x, y, z <= cap.
//
// z runs over [1, cap]; the larger of a, b is iterated with x log u < z log c;
// the remaining exponent is recovered with is_power_of. Candidates are first
// filtered modulo small primes not dividing abc: c^z - u^x must be a nonzero
// element of the subgroup generated by v. The filter only ever rejects
// candidates whose difference cannot be a power of v.
inline SolutionSet enumerate_solutions(const Instance& inst, std::uint64_t cap, const SieveConfig& cfg = {}) {
  if (cap < 1) throw invalid_input("cap must be at least 1");
  if (cfg.prime_cap < 3 && cfg.prime_count > 0) throw invalid_input("prime_cap must be at least 3");
  const detail::Plan plan = detail::make_plan(inst, cap, cfg);

  // Work grows with z, so slices are small and handed out dynamically.
  const std::uint64_t slice = std::max<std::uint64_t>(1, std::min<std::uint64_t>(64, cap / 16 + 1));
  const std::uint64_t n_slices = (cap + slice - 1) / slice;
  std::vector<detail::SliceResult> results(n_slices);
  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_slices));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t k; (k = next.fetch_add(1)) < n_slices;) {
      const std::uint64_t z0 = 1 + k * slice;
      results[k] = detail::run_slice(plan, z0, std::min(cap + 1, z0 + slice));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SolutionSet set{inst, cap, {}, {}};
  for (auto& r : results) {
    set.solutions.insert(set.solutions.end(), r.solutions.begin(), r.solutions.end());
    set.stats += r.stats;
  }
  std::sort(set.solutions.begin(), set.solutions.end());
  set.solutions.erase(std::unique(set.solutions.begin(), set.solutions.end()), set.solutions.end());
  return set;
}

// Independent reference: plain triple loop over exact powers, no filtering.
inline SolutionSet brute_force_oracle(const Instance& inst, std::uint64_t cap) {
  if (cap < 1) throw invalid_input("cap must be at least 1");
  if (cap > 500) throw invalid_input("brute_force_oracle is limited to cap <= 500");
  std::vector<Int> ap(cap + 1), bp(cap + 1), cp(cap + 1);
  ap[0] = bp[0] = cp[0] = 1;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    ap[e] = ap[e - 1] * inst.a();
    bp[e] = bp[e - 1] * inst.b();
    cp[e] = cp[e - 1] * inst.c();
  }
  SolutionSet set{inst, cap, {}, {}};
  Int sum;
  for (std::uint64_t x = 1; x <= cap; ++x) {
    for (std::uint64_t y = 1; y <= cap; ++y) {
      sum = ap[x] + bp[y];
      for (std::uint64_t z = 1; z <= cap; ++z) {
        ++set.stats.exact_checks;
        const int cmp = ::cmp(cp[z], sum);
        if (cmp == 0) set.solutions.push_back({x, y, z});
        if (cmp >= 0) break;
      }
    }
  }
  set.stats.candidates_examined = set.stats.exact_checks;
  set.stats.candidates_surviving_sieve = set.stats.exact_checks;
  std::sort(set.solutions.begin(), set.solutions.end());
  return set;
}

struct CountOptions {
  double volume_limit = 1e9;
  SieveConfig sieve{};
  Precision bound_precision = default_precision;
};

struct CountResult {
  std::uint64_t count = 0;
  SolutionSet set;
  BoundReport report;
};

// Candidate volume cap * (number of x per z) for a given cap.
inline double search_volume(const Instance& inst, std::uint64_t cap) {
  const Int& u = inst.a() > inst.b() ? inst.a() : inst.b();
  const double per_z = std::min(static_cast<double>(cap),
                                static_cast<double>(cap) * detail::log_of_int(inst.c()) / detail::log_of_int(u));
  return static_cast<double>(cap) * per_z;
}

// Unconditional N(a, b, c): enumerates up to the effective solution bound.
inline CountResult count_solutions(const Instance& inst, const CountOptions& opt = {}) {
  BoundReport report = solution_bound(inst, opt.bound_precision);
  if (!fits_u64(report.bound)) {
    throw resource_limit("solution bound " + to_dec(report.bound) + " does not fit a 64-bit exponent");
  }
  const std::uint64_t cap = to_u64(report.bound);
  const double volume = search_volume(inst, cap);
  if (volume > opt.volume_limit) {
    throw resource_limit("search volume " + std::to_string(volume) + " for " + inst.str() + " with cap " +
                         std::to_string(cap) + " exceeds the limit " + std::to_string(opt.volume_limit));
  }
  SolutionSet set = enumerate_solutions(inst, cap, opt.sieve);
  const std::uint64_t n = set.solutions.size();
  return {n, std::move(set), std::move(report)};
}

}  // namespace texp
