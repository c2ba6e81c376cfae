#include "gmub/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gmub {

std::string BigFloat::to_string(int digits) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v_);
    return buf;
}

RealInterval RealInterval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_int(long v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
    RealInterval r(prec());
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
    RealInterval r(prec());
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
    RealInterval r(prec());
    mpfr_t t;
    mpfr_init2(t, prec());
    const mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
    const mpfr_srcptr ys[2] = {o.lo_.get(), o.hi_.get()};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

// |f(x) - f(a)| <= |x - a| for f in {sin, cos}, so evaluating at the
// endpoints and padding by the width gives a rigorous enclosure
RealInterval RealInterval::lipschitz(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) const {
    RealInterval r(prec());
    mpfr_t t;
    mpfr_init2(t, prec());
    f(r.lo_.get(), lo_.get(), MPFR_RNDD);
    f(t, hi_.get(), MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t, MPFR_RNDD);
    f(r.hi_.get(), lo_.get(), MPFR_RNDU);
    f(t, hi_.get(), MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t, MPFR_RNDU);
    mpfr_sub(t, hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_sub(r.lo_.get(), r.lo_.get(), t, MPFR_RNDD);
    mpfr_add(r.hi_.get(), r.hi_.get(), t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::cos() const { return lipschitz(mpfr_cos); }
RealInterval RealInterval::sin() const { return lipschitz(mpfr_sin); }

RealInterval RealInterval::log2() const {
    if (mpfr_sgn(lo_.get()) <= 0)
        throw std::domain_error("log2 of an interval touching zero");
    RealInterval r(prec());
    mpfr_log2(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log2(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_.get()) < 0)
        throw std::domain_error("sqrt of an interval below zero");
    RealInterval r(prec());
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RealInterval::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool RealInterval::intersects(const RealInterval& o) const {
    return !(mpfr_cmp(hi_.get(), o.lo_.get()) < 0 || mpfr_cmp(o.hi_.get(), lo_.get()) < 0);
}

bool RealInterval::certainly_less(const RealInterval& o) const {
    return mpfr_cmp(hi_.get(), o.lo_.get()) < 0;
}

BigFloat RealInterval::midpoint() const {
    BigFloat m(prec());
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

BigFloat RealInterval::width() const {
    BigFloat w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

std::string RealInterval::to_string(int digits) const {
    return midpoint().to_string(digits);
}

}  // namespace gmub
