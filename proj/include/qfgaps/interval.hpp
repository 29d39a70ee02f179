// Directed-rounding interval arithmetic over MPFR.
//
// Every real-valued quantity in this project is carried as an enclosure
// [lo, hi]: lo is computed rounding down, hi rounding up, so the true value
// is always inside and the radius is a conservative rounding bound.
// Comparisons are three-valued; callers that need a definite answer use
// decide() below, which doubles the working precision up to four times
// before giving up.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "qfgaps/errors.hpp"

namespace qfgaps {

// Working precision in bits. 128 bits is just over 38 decimal digits,
// comfortably above the 30-digit floor the bound comparisons need.
inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr int kMaxEscalations = 4;

mpfr_prec_t digits_to_bits(unsigned decimal_digits);

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    // Exact point intervals (widened only if the value is not representable).
    static Interval of(long v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval of(unsigned long v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval of(double v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval of(const mpz_class& v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval of(const mpq_class& v, mpfr_prec_t prec = kDefaultPrecision);

    static Interval pi(mpfr_prec_t prec = kDefaultPrecision);
    static Interval euler_gamma(mpfr_prec_t prec = kDefaultPrecision);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // o must not contain 0
    Interval operator-() const;

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    // Adds 1/k in place; the workhorse of the harmonic accumulators.
    void add_reciprocal(unsigned long k);

    Interval log() const;   // requires lo > 0
    Interval exp() const;
    Interval sqrt() const;  // requires lo >= 0
    Interval abs() const;
    Interval recip() const { return of(1L, prec_) / *this; }

    bool certainly_less(const Interval& o) const;      // hi <  o.lo
    bool certainly_greater(const Interval& o) const;   // lo >  o.hi
    bool certainly_positive() const;
    bool certainly_negative() const;
    bool contains_zero() const;

    // Exact comparisons of the endpoints against a rational.
    bool hi_le(const mpq_class& q) const;  // hi <= q
    bool hi_lt(const mpq_class& q) const;
    bool lo_ge(const mpq_class& q) const;  // lo >= q
    bool lo_gt(const mpq_class& q) const;

    double mid() const;
    // Radius as an upper bound on the rounding error, as a double (rounded up).
    double radius() const;
    bool is_point() const;

    // Decimal rendering of the midpoint with the given significant digits.
    std::string str(size_t digits = 15) const;

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

// Runs check(prec) at increasing precision until it returns a definite
// answer. check returns nullopt when the comparison is still ambiguous.
template <typename F>
bool decide(F&& check, mpfr_prec_t start = kDefaultPrecision,
            const char* what = "interval comparison") {
    mpfr_prec_t prec = start;
    for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
        std::optional<bool> r = check(prec);
        if (r.has_value()) return *r;
        prec *= 2;
    }
    throw indeterminate_error(std::string(what) +
                              " undecidable after max precision escalation");
}

}  // namespace qfgaps
