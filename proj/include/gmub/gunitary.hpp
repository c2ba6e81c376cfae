#ifndef GMUB_GUNITARY_HPP
#define GMUB_GUNITARY_HPP

#include <cstdint>

#include "gmub/cyc_linalg.hpp"
#include "gmub/gl2.hpp"
#include "gmub/weyl.hpp"

namespace gmub {

/// Galois unitary U_G = U_Gbar o g_Delta for G in GL_p(2, F_d): the matrix G
/// factors as Gbar K_Delta with det Gbar = 1, Delta = det G in the prime
/// field; the operator applies the automorphism omega -> omega^Delta to the
/// components and then the symplectic unitary of Gbar.  Acts only on vectors
/// with entries in Q(omega_p).
class GUnitary {
public:
    static GUnitary make(const GL2Mat& g);

    const GL2Mat& source() const { return source_; }
    const GL2Mat& sl_part() const { return sl_part_; }
    const CycMatrix& unitary_part() const { return unitary_; }
    const GaloisAuto& galois_part() const { return auto_; }
    // determinant as a residue in 1..p-1
    std::int64_t delta_residue() const { return auto_.k; }
    bool is_plain_unitary() const { return auto_.is_identity(); }
    bool is_antiunitary() const { return auto_.is_conjugation(); }

    CycVector apply(const CycVector& v) const;
    // <U_G psi, phi> = g_Delta^{-1}(<psi, U_G^dagger phi>)
    GUnitary adjoint() const;

private:
    GUnitary() = default;

    GL2Mat source_;
    GL2Mat sl_part_;
    CycMatrix unitary_;
    GaloisAuto auto_;
};

// the g-unitary of g1.source * g2.source; for odd n the twisted product
// U_Gbar1 g_D1(U_Gbar2) is verified to equal the symplectic unitary of the
// product's SL part (the twist identity g_D(U_S) = U_{K_D S K_D^{-1}} is
// asserted along the way)
GUnitary compose(const GUnitary& g1, const GUnitary& g2);

// sign s with U_G1 U_G2 = s * U_{G1 G2}; always +1 when n is odd
int composition_sign(const GUnitary& g1, const GUnitary& g2);

// multiplicative order 2*m0 of Delta mod p for a MUB-cycler; necessarily
// even, with Delta^{m0} = -1 (checked)
std::int64_t delta_order(const GUnitary& gu);

// exact projector (1/(d+1)) sum_u U_{G^{2 m0 u}} onto the fixed space of
// U_G^{2 m0}; has unit trace and squares to itself
CycMatrix invariant_projector(const GUnitary& gu, const EtaElement& eta);

struct EigenResult {
    CycVector psi;        // U_G psi = psi, exactly
    CycVector phi;        // unit-leading-entry kernel vector of U_{G^{2m0}} - I
    CycNumber lambda;     // U_G phi = lambda phi
    CycNumber mu;         // lambda = mu / g_Delta(mu); psi = mu phi
    std::int64_t two_m0 = 0;
};

// the unique invariant line of a MUB-cycling g-unitary: solve the kernel of
// U_{G^{2m0}} - I (one-dimensional), read off lambda, and rescale to
// eigenvalue 1 through the resolvent map of the Hilbert-90 argument
EigenResult invariant_vector(const GUnitary& gu, const EtaElement& eta);

// true iff v spans the invariant line of gu
bool eigenvector_uniqueness_check(const GUnitary& gu, const EtaElement& eta,
                                  const CycVector& v);

}  // namespace gmub

#endif
