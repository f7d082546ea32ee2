// Outward-rounded interval arithmetic on MPFR. A comparison certified by an
// Interval holds for every real in the enclosure, so a PASS verdict is
// rigorous; when an enclosure is too wide to decide, callers escalate the
// working precision and retry (see certify()).
#pragma once

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>
#include <functional>
#include <string>

namespace hamsphere {

using BigCount = boost::multiprecision::mpz_int;
using ExactRatio = boost::multiprecision::mpq_rational;

class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    mpfr_prec_t precision() const { return prec_; }

    static Interval from_long(long v, mpfr_prec_t prec);
    static Interval from_ratio(const ExactRatio& q, mpfr_prec_t prec);
    static Interval from_big(const BigCount& z, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);

    Interval add(const Interval& o) const;
    Interval sub(const Interval& o) const;
    Interval mul(const Interval& o) const;
    Interval div(const Interval& o) const;  // requires o strictly nonzero
    Interval sqrt() const;                  // requires lower bound >= 0
    Interval exp() const;
    Interval pow_int(long e) const;  // requires positive interval when e < 0

    bool positive() const;                      // whole interval > 0
    bool less_than(const ExactRatio& q) const;  // certified: hi < q
    bool greater_than(const ExactRatio& q) const;
    bool less_than(const Interval& o) const;  // certified: hi < o.lo
    bool less_equal(const Interval& o) const;

    double lo_double() const;
    double hi_double() const;
    double mid() const;
    std::string str(int digits = 20) const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

// Runs check at doubling precisions from start_prec up to max_prec until it
// returns a definite Pass/Fail.
Verdict certify(const std::function<Verdict(mpfr_prec_t)>& check,
                mpfr_prec_t start_prec = 128, mpfr_prec_t max_prec = 1024);

}  // namespace hamsphere
