#ifndef GMUB_CYCLOTOMIC_HPP
#define GMUB_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmub/interval.hpp"

namespace gmub {

/// Automorphism of Q(omega_p) determined by omega -> omega^k, 1 <= k <= p-1.
/// These form a cyclic group of order p-1; k = p-1 is complex conjugation.
struct GaloisAuto {
    std::int64_t p = 0;
    std::int64_t k = 1;

    GaloisAuto() = default;
    GaloisAuto(std::int64_t p_, std::int64_t k_);

    bool is_identity() const { return k == 1; }
    bool is_conjugation() const { return k == p - 1; }
    GaloisAuto compose(const GaloisAuto& o) const;  // this after o
    GaloisAuto inverse() const;
    GaloisAuto pow(std::int64_t e) const;
    bool operator==(const GaloisAuto& o) const { return p == o.p && k == o.k; }
};

/// Element of the cyclotomic field Q(omega_p), omega_p = exp(2*pi*i/p), as an
/// exact rational vector over the power basis {1, omega, ..., omega^{p-2}}.
/// The representation is unique, so equality is coefficient-wise.
class CycNumber {
public:
    CycNumber() = default;  // detached zero, usable only as a container filler

    static CycNumber zero(std::int64_t p);
    static CycNumber one(std::int64_t p);
    static CycNumber rational(std::int64_t p, const mpq_class& q);
    static CycNumber integer(std::int64_t p, long v);
    // omega^e with e taken mod p (the slot p-1 is reduced via the minimal
    // polynomial 1 + x + ... + x^{p-1})
    static CycNumber omega_pow(std::int64_t p, std::int64_t e);

    std::int64_t prime() const { return p_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_real() const;
    std::optional<mpq_class> rational_value() const;

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator/(const CycNumber& o) const;
    CycNumber operator-() const;
    CycNumber& operator+=(const CycNumber& o);
    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }
    // total order by coefficient vectors; used for canonical multiset tests
    bool operator<(const CycNumber& o) const;

    CycNumber inverse() const;
    CycNumber conj() const;
    CycNumber apply(const GaloisAuto& g) const;
    CycNumber pow(std::uint64_t e) const;

    std::string to_string() const;

private:
    CycNumber(std::int64_t p, std::vector<mpq_class> c) : p_(p), c_(std::move(c)) {}

    std::int64_t p_ = 0;
    std::vector<mpq_class> c_;
};

// quadratic Gauss sum: sum over residues minus sum over non-residues of
// omega^x; squares to +p for p = 1 mod 4 and to -p for p = 3 mod 4, giving
// an exact model of sqrt(p) (resp. i*sqrt(p)) inside the field
CycNumber gauss_sum(std::int64_t p);

// evaluation at omega = exp(2*pi*i/p) as a certified complex enclosure
ComplexInterval embed(const CycNumber& x, mpfr_prec_t precision);

}  // namespace gmub

#endif
