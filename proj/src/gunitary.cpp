#include "gmub/gunitary.hpp"

#include <stdexcept>

namespace gmub {
namespace {

GL2Mat k_matrix(const FieldSpecPtr& spec, const FieldElement& x) {
    return GL2Mat::from_entries(spec->one(), spec->zero(), spec->zero(), x);
}

void require_cycler(const GUnitary& gu, const EtaElement& eta) {
    if (!is_mub_cycler(gu.source(), eta))
        throw std::invalid_argument("operation requires a MUB-cycling matrix");
}

}  // namespace

GUnitary GUnitary::make(const GL2Mat& g) {
    const auto& spec = g.spec();
    auto delta = g.det().as_prime_residue();
    if (!delta || *delta == 0)
        throw std::invalid_argument(
            "determinant lies outside the prime field: no g-unitary representation");
    GUnitary gu;
    gu.source_ = g;
    FieldElement delta_elem = spec->from_int(*delta);
    gu.sl_part_ = g * k_matrix(spec, delta_elem.inverse());
    gu.unitary_ = metaplectic(gu.sl_part_);
    gu.auto_ = GaloisAuto(spec->p(), *delta);
    return gu;
}

CycVector GUnitary::apply(const CycVector& v) const {
    if (v.dim() != unitary_.dim()) throw std::invalid_argument("dimension mismatch");
    return unitary_ * v.apply(auto_);
}

GUnitary GUnitary::adjoint() const {
    GaloisAuto inv = auto_.inverse();
    GUnitary r;
    r.source_ = source_.inverse();
    const auto& spec = source_.spec();
    FieldElement delta_inv = spec->from_int(inv.k);
    r.sl_part_ = r.source_ * k_matrix(spec, delta_inv.inverse());
    r.unitary_ = unitary_.conj_transpose().apply(inv);
    r.auto_ = inv;
    return r;
}

int composition_sign(const GUnitary& g1, const GUnitary& g2) {
    // U_G1 U_G2 = U_Gbar1 g_D1(U_Gbar2) g_D1 g_D2
    CycMatrix twisted = g2.unitary_part().apply(g1.galois_part());
    CycMatrix product = g1.unitary_part() * twisted;
    GUnitary direct = GUnitary::make(g1.source() * g2.source());
    if (product == direct.unitary_part()) return 1;
    if (product == direct.unitary_part().scaled(CycNumber::integer(product.prime(), -1)))
        return -1;
    throw std::logic_error("g-unitary product is not a sign multiple of U_{G1 G2}");
}

GUnitary compose(const GUnitary& g1, const GUnitary& g2) {
    const auto& spec = g1.source().spec();
    if (spec->n() % 2 == 1) {
        // the twist moves the automorphism through the symplectic unitary
        FieldElement d1 = spec->from_int(g1.delta_residue());
        GL2Mat k1 = k_matrix(spec, d1);
        GL2Mat conj = k1 * g2.sl_part() * k1.inverse();
        if (g2.unitary_part().apply(g1.galois_part()) != metaplectic(conj))
            throw std::logic_error("automorphism twist identity failed");
        if (composition_sign(g1, g2) != 1)
            throw std::logic_error("composition sign violates faithfulness");
    }
    return GUnitary::make(g1.source() * g2.source());
}

std::int64_t delta_order(const GUnitary& gu) {
    const std::int64_t p = gu.source().spec()->p();
    std::int64_t delta = gu.delta_residue();
    std::int64_t x = delta, m = 1;
    while (x != 1) {
        x = (x * delta) % p;
        ++m;
    }
    if (m % 2 != 0) throw std::logic_error("cycler determinant has odd order");
    // delta^{m/2} must be -1
    std::int64_t h = 1;
    for (std::int64_t i = 0; i < m / 2; ++i) h = (h * delta) % p;
    if (h != p - 1) throw std::logic_error("delta^{m0} is not -1");
    return m;
}

CycMatrix invariant_projector(const GUnitary& gu, const EtaElement& eta) {
    require_cycler(gu, eta);
    const auto& spec = gu.source().spec();
    const std::int64_t d = spec->order();
    std::int64_t two_m0 = delta_order(gu);
    GL2Mat step = gu.source().pow(static_cast<std::uint64_t>(two_m0));
    if (!step.det().is_one()) throw std::logic_error("U_G^{2m0} is not a plain unitary");
    CycMatrix acc = CycMatrix::identity(d, spec->p());
    GL2Mat power = step;
    for (std::int64_t u = 1; u <= d; ++u) {
        acc = acc + metaplectic(power);
        power = power * step;
    }
    return acc.scaled(CycNumber::rational(spec->p(), mpq_class(1, d + 1)));
}

EigenResult invariant_vector(const GUnitary& gu, const EtaElement& eta) {
    require_cycler(gu, eta);
    const auto& spec = gu.source().spec();
    const std::int64_t d = spec->order();
    const std::int64_t p = spec->p();

    EigenResult res;
    res.two_m0 = delta_order(gu);

    // fixed space of the plain unitary U_{G^{2m0}}
    GL2Mat g2m0 = gu.source().pow(static_cast<std::uint64_t>(res.two_m0));
    CycMatrix m = metaplectic(g2m0) - CycMatrix::identity(d, p);
    auto kernel = nullspace(m);
    if (kernel.size() != 1)
        throw std::logic_error("fixed space of U_G^{2m0} is not one-dimensional");
    res.phi = kernel[0];

    // U_G phi = lambda phi with lambda in the field
    CycVector image = gu.apply(res.phi);
    std::int64_t i0 = res.phi.first_nonzero();
    res.lambda = image[i0] / res.phi[i0];
    if (image != res.phi.scaled(res.lambda))
        throw std::logic_error("kernel vector is not an eigenvector of U_G");

    // Hilbert-90 rescaling: lambda has cocycle norm 1 over <g_Delta>, so
    // lambda = mu / g_Delta(mu) with mu = T(x) for the resolvent
    // T(x) = sum_j a_j g^j(x), a_j = lambda g(lambda) ... g^{j-1}(lambda),
    // nonzero for some power of omega by Dedekind independence
    GaloisAuto g = gu.galois_part();
    std::vector<CycNumber> a;
    a.push_back(CycNumber::one(p));
    for (std::int64_t j = 1; j < res.two_m0; ++j)
        a.push_back(a.back() * res.lambda.apply(g.pow(j - 1)));
    CycNumber cocycle = a.back() * res.lambda.apply(g.pow(res.two_m0 - 1));
    if (!(cocycle == CycNumber::one(p)))
        throw std::logic_error("eigenvalue cocycle does not close");

    std::optional<CycNumber> mu;
    for (std::int64_t e = 0; e < p; ++e) {
        CycNumber x = CycNumber::omega_pow(p, e);
        CycNumber t = CycNumber::zero(p);
        for (std::int64_t j = 0; j < res.two_m0; ++j) t += a[j] * x.apply(g.pow(j));
        if (!t.is_zero()) {
            mu = t;
            break;
        }
    }
    if (!mu) throw std::logic_error("resolvent vanished on all powers of omega");
    res.mu = *mu;
    if (!(res.lambda == *mu / mu->apply(g)))
        throw std::logic_error("Hilbert-90 rescaling failed");

    res.psi = res.phi.scaled(*mu);
    if (gu.apply(res.psi) != res.psi)
        throw std::logic_error("rescaled vector is not fixed by U_G");
    return res;
}

bool eigenvector_uniqueness_check(const GUnitary& gu, const EtaElement& eta,
                                  const CycVector& v) {
    if (v.is_zero()) return false;
    EigenResult res = invariant_vector(gu, eta);
    return res.psi.proportional_to(v);
}

}  // namespace gmub
