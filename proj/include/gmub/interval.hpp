#ifndef GMUB_INTERVAL_HPP
#define GMUB_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace gmub {

/// Thin RAII wrapper over an mpfr_t at a fixed precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }

private:
    mpfr_t v_;
};

/// Closed interval [lo, hi] maintained with outward (directed) rounding, so
/// the true value of the represented quantity is always contained.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}

    static RealInterval from_rational(const mpq_class& q, mpfr_prec_t prec);
    static RealInterval from_int(long v, mpfr_prec_t prec);
    static RealInterval pi(mpfr_prec_t prec);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    RealInterval operator+(const RealInterval& o) const;
    RealInterval operator-(const RealInterval& o) const;
    RealInterval operator*(const RealInterval& o) const;
    RealInterval operator-() const;

    // rigorous enclosures; cos/sin pad by the interval width, log2 and sqrt
    // use monotonicity (argument must be positive resp. nonnegative)
    RealInterval cos() const;
    RealInterval sin() const;
    RealInterval log2() const;
    RealInterval sqrt() const;

    bool contains_zero() const;
    bool contains(const mpq_class& q) const;
    bool intersects(const RealInterval& o) const;
    // true when the whole interval is strictly below / not above the other
    bool certainly_less(const RealInterval& o) const;

    BigFloat midpoint() const;
    BigFloat width() const;
    std::string to_string(int digits = 20) const;

private:
    RealInterval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
    RealInterval lipschitz(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) const;

    BigFloat lo_, hi_;
};

struct ComplexInterval {
    RealInterval re, im;

    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    ComplexInterval operator-(const ComplexInterval& o) const { return {re - o.re, im - o.im}; }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    RealInterval abs_squared() const { return re * re + im * im; }
    bool intersects(const ComplexInterval& o) const {
        return re.intersects(o.re) && im.intersects(o.im);
    }
    bool contains(const mpq_class& real_value) const {
        return re.contains(real_value) && im.contains_zero();
    }
    std::string to_string(int digits = 20) const {
        return re.to_string(digits) + " + i*" + im.to_string(digits);
    }
};

}  // namespace gmub

#endif
