#include "gmub/verify.hpp"

#include <numeric>
#include <sstream>

#include "gmub/gunitary.hpp"
#include "gmub/polytope.hpp"

namespace gmub::verify {
namespace {

std::string dim_tag(const FieldSpecPtr& spec) {
    std::ostringstream os;
    os << "d=" << spec->order();
    return os.str();
}

}  // namespace

FieldElement random_element(const FieldSpecPtr& spec, Rng& rng) {
    return spec->element(static_cast<std::int64_t>(rng() % spec->order()));
}

GL2Mat random_sl(const FieldSpecPtr& spec, Rng& rng) {
    for (;;) {
        FieldElement a = random_element(spec, rng);
        FieldElement b = random_element(spec, rng);
        FieldElement c = random_element(spec, rng);
        FieldElement d = random_element(spec, rng);
        if ((a * d - b * c).is_one()) return {a, b, c, d};
    }
}

GL2Mat random_glp(const FieldSpecPtr& spec, Rng& rng) {
    for (;;) {
        FieldElement a = random_element(spec, rng);
        FieldElement b = random_element(spec, rng);
        FieldElement c = random_element(spec, rng);
        FieldElement d = random_element(spec, rng);
        FieldElement det = a * d - b * c;
        auto res = det.as_prime_residue();
        if (res && *res != 0) return {a, b, c, d};
    }
}

GL2Mat random_nonsplit(const FieldSpecPtr& spec, Rng& rng) {
    for (;;) {
        FieldElement a = random_element(spec, rng);
        FieldElement b = random_element(spec, rng);
        FieldElement c = random_element(spec, rng);
        FieldElement d = random_element(spec, rng);
        if ((a * d - b * c).is_zero()) continue;
        GL2Mat g{a, b, c, d};
        FieldElement t = g.trace();
        FieldElement disc = t * t - spec->from_int(4) * g.det();
        if (!disc.is_zero() && quadratic_character(disc) == -1) return g;
    }
}

GL2Mat random_cycler(const FieldSpecPtr& spec, const EtaElement& eta, Rng& rng) {
    GL2Mat g0 = cycler_generator(eta);
    const std::int64_t d = spec->order();
    std::int64_t r;
    do {
        r = 1 + static_cast<std::int64_t>(rng() % (eta.order - 1));
    } while (std::gcd(r, d + 1) != 1);
    GL2Mat s = random_sl(spec, rng);
    return s * g0.pow(static_cast<std::uint64_t>(r)) * s.inverse();
}

CheckResult gauss_sum_square(std::int64_t p) {
    CycNumber g = gauss_sum(p);
    long expected = p % 4 == 1 ? p : -p;
    bool ok = g * g == CycNumber::integer(p, expected);
    std::ostringstream os;
    os << "p=" << p << " square=" << (p % 4 == 1 ? "+p" : "-p");
    return {"gauss-sum-square", ok, os.str()};
}

CheckResult sl_faithfulness(const FieldSpecPtr& spec, int pairs, Rng& rng) {
    bool ok = true;
    for (int i = 0; i < pairs && ok; ++i) {
        GL2Mat g1 = random_sl(spec, rng);
        GL2Mat g2 = random_sl(spec, rng);
        ok = metaplectic(g1) * metaplectic(g2) == metaplectic(g1 * g2);
    }
    return {"sl-faithfulness", ok, dim_tag(spec)};
}

CheckResult glp_faithfulness(const FieldSpecPtr& spec, int pairs, Rng& rng) {
    bool ok = true;
    for (int i = 0; i < pairs && ok; ++i) {
        GUnitary g1 = GUnitary::make(random_glp(spec, rng));
        GUnitary g2 = GUnitary::make(random_glp(spec, rng));
        ok = composition_sign(g1, g2) == 1;
        // compose re-derives the product and asserts the twist identity
        GUnitary prod = compose(g1, g2);
        ok = ok && prod.source() == g1.source() * g2.source();
    }
    return {"glp-faithfulness", ok, dim_tag(spec)};
}

CheckResult sign_census(const FieldSpecPtr& spec, int pairs, Rng& rng) {
    int plus = 0, minus = 0;
    bool ok = true;
    for (int i = 0; i < pairs && ok; ++i) {
        GUnitary g1 = GUnitary::make(random_glp(spec, rng));
        GUnitary g2 = GUnitary::make(random_glp(spec, rng));
        int s = composition_sign(g1, g2);  // throws if not a sign at all
        (s == 1 ? plus : minus)++;
    }
    std::ostringstream os;
    os << dim_tag(spec) << " signs +" << plus << "/-" << minus;
    return {"sign-census", ok, os.str()};
}

CheckResult weyl_covariance(const FieldSpecPtr& spec, int samples, Rng& rng) {
    bool ok = true;
    for (int i = 0; i < samples && ok; ++i) {
        GL2Mat g = random_sl(spec, rng);
        PhasePoint u{random_element(spec, rng), random_element(spec, rng)};
        CycMatrix ug = metaplectic(g);
        ok = ug * displacement(u) * ug.conj_transpose() == displacement(apply_gl2(g, u));
    }
    return {"weyl-covariance", ok, dim_tag(spec)};
}

CheckResult mub_grid(const MUBSet& mub) {
    const std::int64_t d = mub.d();
    const std::int64_t p = mub.spec()->p();
    CycNumber inv_d = CycNumber::rational(p, mpq_class(1, d));
    CycNumber one = CycNumber::one(p);
    CycNumber zero = CycNumber::zero(p);
    bool ok = true;
    for (std::int64_t zi = 0; zi <= d && ok; ++zi)
        for (std::int64_t r = 0; r < d && ok; ++r)
            for (std::int64_t zj = zi; zj <= d && ok; ++zj)
                for (std::int64_t s = 0; s < d && ok; ++s) {
                    if (zi == zj && s < r) continue;
                    CycNumber amp = inner_product(mub.vec(zi, r), mub.vec(zj, s));
                    CycNumber overlap = amp.conj() * amp;
                    const CycNumber& expect =
                        zi != zj ? inv_d : (r == s ? one : zero);
                    ok = overlap == expect;
                }
    return {"mub-grid", ok, dim_tag(mub.spec())};
}

CheckResult power_recurrence(const FieldSpecPtr& spec, int samples, Rng& rng) {
    const std::int64_t d = spec->order();
    bool ok = true;
    for (int i = 0; i < samples && ok; ++i) {
        // any 2x2 matrix, singular ones included
        GL2Mat a{random_element(spec, rng), random_element(spec, rng),
                 random_element(spec, rng), random_element(spec, rng)};
        std::int64_t m = 1 + static_cast<std::int64_t>(rng() % (2 * (d + 1)));
        auto s = suborder_sequence(a, m);
        // s_m A - s_{m-1} det(A) I against the honest power
        GL2Mat pw = a.pow(static_cast<std::uint64_t>(m));
        FieldElement sm = s[m];
        FieldElement c = s[m - 1] * a.det();
        ok = pw.a == sm * a.a - c && pw.b == sm * a.b && pw.c == sm * a.c &&
             pw.d == sm * a.d - c;
    }
    return {"power-recurrence", ok, dim_tag(spec)};
}

CheckResult nonsplit_power_identity(const FieldSpecPtr& spec, int samples, Rng& rng) {
    const std::int64_t d = spec->order();
    bool ok = true;
    for (int i = 0; i < samples && ok; ++i) {
        GL2Mat g = random_nonsplit(spec, rng);
        GL2Mat pw = g.pow(static_cast<std::uint64_t>(d + 1));
        FieldElement delta = g.det();
        ok = pw.a == delta && pw.b.is_zero() && pw.c.is_zero() && pw.d == delta;
    }
    return {"nonsplit-power-identity", ok, dim_tag(spec)};
}

CheckResult companion_suborder_scan(const FieldSpecPtr& spec, const EtaElement& eta) {
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();
    const bool odd_n = spec->n() % 2 == 1;
    bool ok = true;
    std::int64_t cyclers = 0;
    for (std::int64_t ti = 0; ti < d && ok; ++ti)
        for (std::int64_t dp = 1; dp < p && ok; ++dp) {
            GL2Mat g = GL2Mat::companion(spec->element(ti), spec->from_int(dp));
            auto cls = classify(g, eta);
            if (cls.cls != GL2Class::NonSplit) continue;
            std::int64_t sub = suborder(g);
            if (odd_n) {
                bool coprime = std::gcd(*cls.eta_exponent, d + 1) == 1;
                ok = (sub == d + 1) == coprime && is_mub_cycler(g, eta) == coprime;
                if (coprime) ++cyclers;
            } else {
                ok = sub <= (d + 1) / 2 && !is_mub_cycler(g, eta);
            }
        }
    std::ostringstream os;
    os << dim_tag(spec) << (odd_n ? " cycler-classes=" : " none-allowed=")
       << cyclers;
    return {"companion-suborder-scan", ok, os.str()};
}

CheckResult antisymplectic_existence(const EtaElement& eta) {
    const auto& spec = eta.ext.base();
    bool exist = antisymplectic_cyclers_exist(eta);  // throws on disagreement
    std::ostringstream os;
    os << dim_tag(spec) << " expected=" << (spec->order() % 4 == 3);
    auto witness = antisymplectic_cycler_exponent(eta);
    if (witness) os << " witness-r=" << *witness;
    return {"antisymplectic-existence", exist == (spec->order() % 4 == 3), os.str()};
}

CheckResult projector_identities(const EtaElement& eta) {
    const auto& spec = eta.ext.base();
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();
    GL2Mat g0 = cycler_generator(eta);
    GUnitary gu = GUnitary::make(g0);
    CycMatrix p1 = invariant_projector(gu, eta);
    bool ok = p1.trace() == CycNumber::one(p);
    ok = ok && p1 * p1 == p1;
    // term traces: d at u = 0, then alternating -1, +1, ...
    std::int64_t two_m0 = delta_order(gu);
    GL2Mat step = g0.pow(static_cast<std::uint64_t>(two_m0));
    GL2Mat power = step;
    for (std::int64_t u = 1; u <= d && ok; ++u) {
        CycNumber tr = metaplectic(power).trace();
        long expect = (u % 2 == 1) ? 1 : -1;  // (-1)^{u+1}
        ok = tr == CycNumber::integer(p, expect);
        power = power * step;
    }
    return {"projector-identities", ok, dim_tag(spec)};
}

CheckResult invariant_vector_checks(const EtaElement& eta) {
    const auto& spec = eta.ext.base();
    const std::int64_t p = spec->p();
    GL2Mat g0 = cycler_generator(eta);
    GUnitary gu = GUnitary::make(g0);
    EigenResult res = invariant_vector(gu, eta);
    bool ok = gu.apply(res.psi) == res.psi && !res.psi.is_zero();
    // uniqueness of the line
    ok = ok && eigenvector_uniqueness_check(gu, eta,
                                            res.psi.scaled(CycNumber::integer(p, 3)));
    CycVector perturbed = res.psi;
    perturbed[0] += CycNumber::one(p);
    ok = ok && !eigenvector_uniqueness_check(gu, eta, perturbed);
    // parity eigenvalue (-1)^{(p-1)/2}
    CycVector par = parity(spec) * res.psi;
    long sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    ok = ok && par == res.psi.scaled(CycNumber::integer(p, sign));
    return {"invariant-vector", ok, dim_tag(spec)};
}

CheckResult balanced_verdict(const MUBSet& mub, const EtaElement& eta) {
    const auto& spec = mub.spec();
    GUnitary gu = GUnitary::make(cycler_generator(eta));
    EigenResult res = invariant_vector(gu, eta);
    bool balanced = is_mub_balanced(mub, res.psi).balanced;
    bool mus = is_minimum_uncertainty(mub, res.psi);
    std::ostringstream os;
    os << dim_tag(spec) << " balanced=" << balanced << " min-uncertainty=" << mus;
    bool ok;
    if (spec->order() % 4 == 3)
        ok = balanced && mus;
    else
        ok = true;  // open case: the verdict itself is the result
    return {"balanced-verdict", ok, os.str()};
}

CheckResult amburg_crosscheck(const EtaElement& eta) {
    AmburgResult res = amburg_wigner(eta);
    bool ok = res.table.sum() == CycNumber::one(res.table.spec->p());
    std::ostringstream os;
    os << dim_tag(eta.ext.base()) << (res.direct_match ? " direct" : " via-projector");
    return {"amburg-crosscheck", ok, os.str()};
}

CheckResult polytope_identities(const MUBSet& mub) {
    const auto& spec = mub.spec();
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();
    bool ok = true;

    // simplex relations of the phase-point operators
    std::vector<CycMatrix> pts;
    pts.reserve(d * d);
    CycMatrix total(d, p);
    for (std::int64_t i = 0; i < d && ok; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            PhasePoint u{spec->element(i), spec->element(j)};
            pts.push_back(phase_point_operator(u));
            total = total + pts.back();
        }
    ok = ok && total == CycMatrix::identity(d, p).scaled(CycNumber::integer(p, d));
    for (size_t i = 0; i < pts.size() && ok; ++i)
        for (size_t j = i; j < pts.size() && ok; ++j) {
            CycNumber tr = (pts[i] * pts[j]).trace();
            ok = tr == (i == j ? CycNumber::integer(p, d) : CycNumber::zero(p));
        }

    // line operators agree with basis projectors (throws on mismatch), the
    // point reconstruction holds, and the pairwise trace table is {1, 0, 1/d}
    std::vector<std::vector<CycMatrix>> lines(d + 1);
    for (std::int64_t zi = 0; zi <= d && ok; ++zi)
        for (std::int64_t r = 0; r < d; ++r)
            lines[zi].push_back(line_operator(mub, mub.label_of(zi), r));
    for (std::int64_t i = 0; i < d && ok; ++i)
        for (std::int64_t j = 0; j < d && ok; ++j) {
            PhasePoint u{spec->element(i), spec->element(j)};
            CycMatrix acc(d, p);
            for (std::int64_t zi = 0; zi <= d; ++zi) {
                // the unique line of pencil z through u
                FieldElement r = zi == d ? u.u2 : u.u1 - spec->element(zi) * u.u2;
                acc = acc + lines[zi][r.index()];
            }
            acc = acc - CycMatrix::identity(d, p);
            ok = acc == pts[i * d + j];
        }
    CycNumber inv_d = CycNumber::rational(p, mpq_class(1, d));
    for (std::int64_t zi = 0; zi <= d && ok; ++zi)
        for (std::int64_t r = 0; r < d && ok; ++r)
            for (std::int64_t zj = zi; zj <= d && ok; ++zj)
                for (std::int64_t s = 0; s < d && ok; ++s) {
                    if (zi == zj && s < r) continue;
                    CycNumber tr = (lines[zi][r] * lines[zj][s]).trace();
                    const CycNumber expect =
                        zi != zj ? inv_d
                                 : (r == s ? CycNumber::one(p) : CycNumber::zero(p));
                    ok = tr == expect;
                }
    return {"polytope-identities", ok, dim_tag(spec)};
}

CheckResult group_orders(const FieldSpecPtr& spec) {
    const std::int64_t d = spec->order();
    std::int64_t sl = 0, gl = 0;
    for (std::int64_t a = 0; a < d; ++a)
        for (std::int64_t b = 0; b < d; ++b)
            for (std::int64_t c = 0; c < d; ++c)
                for (std::int64_t e = 0; e < d; ++e) {
                    FieldElement det = spec->element(a) * spec->element(e) -
                                       spec->element(b) * spec->element(c);
                    if (det.is_zero()) continue;
                    ++gl;
                    if (det.is_one()) ++sl;
                }
    bool ok = sl == d * (d * d - 1) && gl == (d - 1) * d * (d * d - 1);
    std::ostringstream os;
    os << dim_tag(spec) << " |SL|=" << sl << " |GL|=" << gl;
    return {"group-orders", ok, os.str()};
}

CheckResult census_check(const EtaElement& eta) {
    const auto& spec = eta.ext.base();
    const std::int64_t d = spec->order();
    StabilizerCensus c = stabilizer_census(eta);
    std::ostringstream os;
    os << dim_tag(spec) << " stabilizer=" << c.stabilizer_order
       << " orbit=" << c.orbit_size;
    // the count 4(d+1) is conjectural, so a mismatch is data rather than a
    // failure; the hard requirements are the known half-turn family and
    // exact divisibility
    bool ok = c.contains_half_turn_family &&
              c.group_order == c.stabilizer_order * c.orbit_size;
    bool conjectured = c.stabilizer_order == 4 * (d + 1) &&
                       c.orbit_size == d * d * d * (d - 1) / 2;
    os << (conjectured ? " (matches conjectured count)"
                       : " (differs from conjectured count)");
    return {"stabilizer-census", ok, os.str()};
}

CheckResult single_orbit_check(const EtaElement& eta) {
    const auto& spec = eta.ext.base();
    const std::int64_t d = spec->order();
    GL2Mat g0 = cycler_generator(eta);
    GUnitary base = GUnitary::make(g0);
    CycVector psi = invariant_vector(base, eta).psi;
    bool ok = true;
    for (std::int64_t r = 1; r <= d && ok; ++r) {
        if (std::gcd(r, d + 1) != 1) continue;
        GUnitary gu = GUnitary::make(g0.pow(static_cast<std::uint64_t>(r)));
        CycVector other = invariant_vector(gu, eta).psi;
        ok = psi.proportional_to(other);
    }
    return {"single-orbit", ok, dim_tag(spec)};
}

}  // namespace gmub::verify
