#include "hamsphere/interval.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace hamsphere {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_ratio(const ExactRatio& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
    return r;
}

Interval Interval::from_big(const BigCount& z, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, z.backend().data(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.backend().data(), MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::add(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sub(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

// General interval multiply: min/max over the four endpoint products.
Interval Interval::mul(const Interval& o) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::div(const Interval& o) const {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        throw std::domain_error("interval division by interval containing zero");
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_div(r.hi_, hi_, o.hi_, MPFR_RNDU);
    mpfr_div(t, lo_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("interval sqrt of negative");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pow_int(long e) const {
    if (e == 0) return from_long(1, prec_);
    if (e < 0) {
        if (!positive()) throw std::domain_error("negative power of non-positive interval");
        return from_long(1, prec_).div(pow_int(-e));
    }
    // positive base assumed by every call site; monotone, so endpoints suffice
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("pow_int expects nonnegative interval");
    Interval r(prec_);
    mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::less_than(const ExactRatio& q) const {
    return mpfr_cmp_q(hi_, q.backend().data()) < 0;
}

bool Interval::greater_than(const ExactRatio& q) const {
    return mpfr_cmp_q(lo_, q.backend().data()) > 0;
}

bool Interval::less_than(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }

bool Interval::less_equal(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid() const { return 0.5 * (lo_double() + hi_double()); }

std::string Interval::str(int digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "[%.*Rg, %.*Rg]", digits, lo_, digits, hi_);
    return buf;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Verdict certify(const std::function<Verdict(mpfr_prec_t)>& check, mpfr_prec_t start_prec,
                mpfr_prec_t max_prec) {
    for (mpfr_prec_t p = start_prec; p <= max_prec; p *= 2) {
        Verdict v = check(p);
        if (v != Verdict::Inconclusive) return v;
    }
    return Verdict::Inconclusive;
}

}  // namespace hamsphere
