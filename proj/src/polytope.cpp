#include "gmub/polytope.hpp"

#include <stdexcept>

namespace gmub {

CycMatrix phase_point_operator(const PhasePoint& u) {
    const auto& spec = u.u1.spec();
    // D_{-u} is exactly D_u^{-1}: the symplectic form vanishes on (u, -u)
    return displacement(u) * parity(spec) * displacement(-u);
}

std::vector<PhasePoint> line_points(const FieldSpecPtr& spec, const ProjPoint& z,
                                    const FieldElement& r) {
    std::vector<PhasePoint> pts;
    pts.reserve(spec->order());
    for (std::int64_t yi = 0; yi < spec->order(); ++yi) {
        FieldElement y = spec->element(yi);
        if (z.infinite)
            pts.push_back({y, r});
        else
            pts.push_back({z.value * y + r, y});
    }
    return pts;
}

CycMatrix line_operator(const MUBSet& mub, const ProjPoint& z, std::int64_t r) {
    const auto& spec = mub.spec();
    const std::int64_t d = spec->order();
    const CycVector& e = mub.vec(z, r);
    CycMatrix projector = outer_product(e, e);

    CycMatrix avg(d, spec->p());
    for (const auto& pt : line_points(spec, z, spec->element(r)))
        avg = avg + phase_point_operator(pt);
    avg = avg.scaled(CycNumber::rational(spec->p(), mpq_class(1, d)));

    if (!(projector == avg))
        throw std::logic_error("line average disagrees with the basis projector");
    return projector;
}

CycMatrix generalized_phase_point(const MUBSet& mub,
                                  const std::vector<std::int64_t>& choice) {
    const auto& spec = mub.spec();
    const std::int64_t d = spec->order();
    if (static_cast<std::int64_t>(choice.size()) != d + 1)
        throw std::invalid_argument("need one line per pencil");
    CycMatrix acc(d, spec->p());
    for (std::int64_t zi = 0; zi <= d; ++zi) {
        const CycVector& e = mub.vec(zi, choice[zi]);
        acc = acc + outer_product(e, e);
    }
    return acc - CycMatrix::identity(d, spec->p());
}

const CycNumber& WignerTable::at(const PhasePoint& u) const {
    return values[u.u1.index() * spec->order() + u.u2.index()];
}

CycNumber& WignerTable::at(const PhasePoint& u) {
    return values[u.u1.index() * spec->order() + u.u2.index()];
}

CycNumber WignerTable::sum() const {
    CycNumber s = CycNumber::zero(spec->p());
    for (const auto& v : values) s += v;
    return s;
}

WignerTable wigner_of_state(const FieldSpecPtr& spec, const CycVector& psi) {
    if (psi.is_zero()) throw std::invalid_argument("Wigner table of the zero vector");
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();
    WignerTable w;
    w.spec = spec;
    w.values.assign(d * d, CycNumber::zero(p));
    CycNumber norm_d = inner_product(psi, psi) * CycNumber::integer(p, d);
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            PhasePoint u{spec->element(i), spec->element(j)};
            // <psi| A_u |psi> / (d <psi|psi>)
            CycNumber val = inner_product(psi, phase_point_operator(u) * psi) / norm_d;
            if (!val.is_real()) throw std::logic_error("Wigner value is not real");
            w.at(u) = val;
        }
    return w;
}

AmburgResult amburg_wigner(const EtaElement& eta) {
    const auto& spec = eta.ext.base();
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();
    if (d % 4 != 3)
        throw std::invalid_argument("closed-form balanced-state table needs d = 3 mod 4");

    AmburgResult res;
    res.table.spec = spec;
    res.table.values.assign(d * d, CycNumber::zero(p));
    CycNumber scale = CycNumber::rational(p, mpq_class(1, d * (d + 1)));
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            PhasePoint u{spec->element(i), spec->element(j)};
            CycNumber acc = CycNumber::one(p);
            if (u.is_zero()) acc = acc - CycNumber::integer(p, d);
            FieldElement q = u.u1 * u.u1 + u.u2 * u.u2;
            for (std::int64_t xi = 1; xi < d; ++xi) {
                FieldElement x = spec->element(xi);
                int chi = quadratic_character(x * x + spec->one());
                CycNumber term = CycNumber::omega_pow(p, field_trace(x * q));
                acc += chi == 1 ? term : -term;
            }
            res.table.at(u) = scale * acc;
        }

    // the rotation-like cycler F = [[alpha, beta], [-beta, alpha]] with
    // alpha = (eta + eta^d)/2, beta = i_M (eta - eta^d)/2, i_M^2 = -1
    const auto& ext = eta.ext;
    FieldElement e = eta.value;
    FieldElement ed = e.pow(static_cast<std::uint64_t>(d));
    FieldElement i_m = e.pow(static_cast<std::uint64_t>((p - 1) * (d + 1) / 4));
    FieldElement half = ext.ext()->from_int(2).inverse();
    auto alpha = ext.restrict_to_base((e + ed) * half);
    auto beta = ext.restrict_to_base(i_m * (e - ed) * half);
    if (!alpha || !beta)
        throw std::logic_error("rotation-like cycler entries left the base field");
    res.cycler = GL2Mat::from_entries(*alpha, *beta, -*beta, *alpha);

    GUnitary u_f = GUnitary::make(res.cycler);
    res.state = invariant_vector(u_f, eta).psi;
    WignerTable direct = wigner_of_state(spec, res.state);
    res.direct_match = direct == res.table;
    if (!res.direct_match) {
        // the invariant line is unique, so any discrepancy can only be a
        // relabeling by an extended Clifford element; reconstruct the density
        // matrix encoded by the table and compare projectors instead
        CycMatrix rho(d, p);
        for (std::int64_t i = 0; i < d; ++i)
            for (std::int64_t j = 0; j < d; ++j) {
                PhasePoint u{spec->element(i), spec->element(j)};
                rho = rho + phase_point_operator(u).scaled(res.table.at(u));
            }
        CycNumber norm = inner_product(res.state, res.state);
        CycMatrix proj = outer_product(res.state, res.state).scaled(norm.inverse());
        if (!(rho == proj))
            throw std::logic_error("closed-form table is not the cycler state's table");
    }
    return res;
}

StabilizerCensus stabilizer_census(const EtaElement& eta) {
    const auto& spec = eta.ext.base();
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();
    if (d % 4 != 3)
        throw std::invalid_argument("balanced-state census needs d = 3 mod 4");

    GL2Mat g0 = cycler_generator(eta);
    GUnitary u0 = GUnitary::make(g0);
    CycVector psi = invariant_vector(u0, eta).psi;
    CycVector psi_conj = psi.conj();

    StabilizerCensus census;
    census.group_order = 2 * d * d * d * (d * d - 1);

    // half-turn family: powers of G0^{(p-1)/2} (alternating symplectic and
    // anti-symplectic) are expected inside the stabilizer
    GL2Mat half_turn = g0.pow(static_cast<std::uint64_t>((p - 1) / 2));
    {
        GUnitary v = GUnitary::make(half_turn);
        CycVector image =
            v.is_antiunitary() ? v.unitary_part() * psi_conj : v.apply(psi);
        census.contains_half_turn_family = psi.proportional_to(image);
    }

    // enumerate (G, v) with det G = +-1 over all displacements v; the image
    // of psi under D_v U_G fixes the projector exactly when it stays on the
    // line of psi
    FieldElement half = spec->from_int(2).inverse();
    std::int64_t count = 0;
    for (std::int64_t ai = 0; ai < d; ++ai)
        for (std::int64_t bi = 0; bi < d; ++bi)
            for (std::int64_t ci = 0; ci < d; ++ci)
                for (std::int64_t di = 0; di < d; ++di) {
                    GL2Mat g{spec->element(ai), spec->element(bi), spec->element(ci),
                             spec->element(di)};
                    FieldElement det = g.det();
                    bool plus = det.is_one();
                    bool minus = (-det).is_one();
                    if (!plus && !minus) continue;
                    GL2Mat sl = plus ? g
                                     : g * GL2Mat::from_entries(spec->one(), spec->zero(),
                                                                spec->zero(), -spec->one());
                    CycVector w0 = metaplectic(sl) * (plus ? psi : psi_conj);
                    // D_v w0 proportional to psi, scanning all v cheaply
                    for (std::int64_t v1i = 0; v1i < d; ++v1i)
                        for (std::int64_t v2i = 0; v2i < d; ++v2i) {
                            FieldElement v1 = spec->element(v1i);
                            FieldElement v2 = spec->element(v2i);
                            CycVector w(d, p);
                            FieldElement base = half * v1 * v2;
                            for (std::int64_t xi = 0; xi < d; ++xi) {
                                FieldElement x = spec->element(xi);
                                std::int64_t ph = field_trace(base + v2 * x);
                                w[(x + v1).index()] =
                                    CycNumber::omega_pow(p, ph) * w0[xi];
                            }
                            if (psi.proportional_to(w)) ++count;
                        }
                }
    census.stabilizer_order = count;
    census.orbit_size = census.group_order / count;
    return census;
}

}  // namespace gmub
