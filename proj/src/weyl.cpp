#include "gmub/weyl.hpp"

#include <stdexcept>

namespace gmub {
namespace {

// l~(-beta)/sqrt(d) as an exact field element.  sqrt(d) = p^{n/2} is rational
// for even n; for odd n it is p^{(n-1)/2} sqrt(p) and sqrt(p) is the Gauss
// sum g (p = 1 mod 4) or i^3 g (p = 3 mod 4).  The accumulated power of i
// always reduces to a sign here, which is what keeps U_G inside Q(omega_p).
CycNumber beta_prefactor(const FieldSpecPtr& spec, const FieldElement& beta) {
    const std::int64_t p = spec->p();
    const int n = spec->n();
    const int l = quadratic_character(-beta);

    std::int64_t i_exp = (-(static_cast<std::int64_t>(n) * ((p + 3) / 2))) % 4;
    if (i_exp < 0) i_exp += 4;
    const bool odd_n = n % 2 == 1;
    if (odd_n && p % 4 == 3) i_exp = (i_exp + 3) % 4;
    if (i_exp % 2 != 0)
        throw std::logic_error("metaplectic prefactor left the cyclotomic field");

    int sign = -l;  // leading minus of l~ times the character
    if (i_exp == 2) sign = -sign;

    mpz_class denom = 1;
    const int half_power = odd_n ? (n + 1) / 2 : n / 2;
    for (int i = 0; i < half_power; ++i) denom *= p;
    mpq_class coeff(sign, denom);
    coeff.canonicalize();

    CycNumber c = CycNumber::rational(p, coeff);
    if (odd_n) c = c * gauss_sum(p);
    return c;
}

}  // namespace

PhasePoint apply_gl2(const GL2Mat& g, const PhasePoint& u) {
    return {g.a * u.u1 + g.b * u.u2, g.c * u.u1 + g.d * u.u2};
}

FieldElement symplectic_form(const PhasePoint& u, const PhasePoint& v) {
    return u.u2 * v.u1 - u.u1 * v.u2;
}

CycNumber symplectic_phase(const PhasePoint& u, const PhasePoint& v) {
    const auto& spec = u.u1.spec();
    return CycNumber::omega_pow(spec->p(), field_trace(symplectic_form(u, v)));
}

CycMatrix displacement(const PhasePoint& u) {
    const auto& spec = u.u1.spec();
    const std::int64_t d = spec->order();
    FieldElement half = spec->from_int(2).inverse();
    CycMatrix m(d, spec->p());
    FieldElement base_phase = half * u.u1 * u.u2;
    for (std::int64_t xi = 0; xi < d; ++xi) {
        FieldElement x = spec->element(xi);
        std::int64_t e = field_trace(base_phase + u.u2 * x);
        m.at((x + u.u1).index(), xi) = CycNumber::omega_pow(spec->p(), e);
    }
    return m;
}

CycMatrix metaplectic(const GL2Mat& g) {
    const auto& spec = g.spec();
    if (!g.det().is_one())
        throw std::invalid_argument("metaplectic representation needs determinant 1");
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();
    FieldElement half = spec->from_int(2).inverse();
    CycMatrix m(d, p);

    if (g.b.is_zero()) {
        // l(a) sum_x w^{tr(a c x^2 / 2)} |a x><x|
        CycNumber l_a = CycNumber::integer(p, quadratic_character(g.a));
        FieldElement coef = half * g.a * g.c;
        for (std::int64_t xi = 0; xi < d; ++xi) {
            FieldElement x = spec->element(xi);
            std::int64_t e = field_trace(coef * x * x);
            m.at((g.a * x).index(), xi) = l_a * CycNumber::omega_pow(p, e);
        }
        return m;
    }

    CycNumber pref = beta_prefactor(spec, g.b);
    FieldElement inv2b = (spec->from_int(2) * g.b).inverse();
    FieldElement two = spec->from_int(2);
    for (std::int64_t xi = 0; xi < d; ++xi) {
        FieldElement x = spec->element(xi);
        for (std::int64_t yi = 0; yi < d; ++yi) {
            FieldElement y = spec->element(yi);
            FieldElement arg = inv2b * (g.a * y * y - two * x * y + g.d * x * x);
            m.at(xi, yi) = pref * CycNumber::omega_pow(p, field_trace(arg));
        }
    }
    return m;
}

CycMatrix parity(const FieldSpecPtr& spec) {
    const std::int64_t d = spec->order();
    CycMatrix m(d, spec->p());
    for (std::int64_t xi = 0; xi < d; ++xi)
        m.at((-spec->element(xi)).index(), xi) = CycNumber::one(spec->p());
    return m;
}

CycNumber trace_of_metaplectic(const GL2Mat& s) {
    CycNumber tr = metaplectic(s).trace();
    FieldElement t = s.trace();
    const auto& spec = s.spec();
    if (t != spec->from_int(2)) {
        CycNumber expected = CycNumber::integer(
            spec->p(), quadratic_character(t - spec->from_int(2)));
        if (tr != expected)
            throw std::logic_error("trace of U_S differs from l(t - 2)");
    }
    return tr;
}

}  // namespace gmub
