#ifndef GMUB_WEYL_HPP
#define GMUB_WEYL_HPP

#include <cstdint>

#include "gmub/cyc_linalg.hpp"
#include "gmub/finite_field.hpp"
#include "gmub/gl2.hpp"

namespace gmub {

/// Point of the discrete phase space (F_d)^2; u1 is the shift component and
/// u2 the phase component of the displacement it labels.
struct PhasePoint {
    FieldElement u1, u2;

    static PhasePoint origin(const FieldSpecPtr& spec) {
        return {spec->zero(), spec->zero()};
    }
    PhasePoint operator+(const PhasePoint& o) const { return {u1 + o.u1, u2 + o.u2}; }
    PhasePoint operator-() const { return {-u1, -u2}; }
    PhasePoint scaled(const FieldElement& t) const { return {t * u1, t * u2}; }
    bool operator==(const PhasePoint& o) const { return u1 == o.u1 && u2 == o.u2; }
    bool is_zero() const { return u1.is_zero() && u2.is_zero(); }
};

// column action (u1, u2) -> (a u1 + b u2, c u1 + d u2)
PhasePoint apply_gl2(const GL2Mat& g, const PhasePoint& u);

// u2 v1 - u1 v2; displacements compose as D_u D_v = w^{tr Omega(u,v)} D_{u+v}
FieldElement symplectic_form(const PhasePoint& u, const PhasePoint& v);

// D_u |x> = w^{tr(u1 u2 / 2) + tr(u2 x)} |x + u1>, with basis states indexed
// by the fixed enumeration of F_d and w = omega_p
CycMatrix displacement(const PhasePoint& u);

// the matrix of w^{tr Omega(u,v)}, as a scalar
CycNumber symplectic_phase(const PhasePoint& u, const PhasePoint& v);

/// The symplectic unitary U_G for G in SL(2, F_d), with the phase convention
/// that makes G -> U_G a homomorphism (not merely projective).  All entries
/// lie in Q(omega_p): the 1/sqrt(d) prefactor is expanded through the Gauss
/// sum and the power i^k it carries reduces to a sign.
CycMatrix metaplectic(const GL2Mat& g);

// permutation |x> -> |-x>; equals the average of all displacements and
// l(-1) * U_{-I}
CycMatrix parity(const FieldSpecPtr& spec);

// trace of U_S; equals the quadratic character of tr(S) - 2 whenever
// tr(S) != 2 (checked), and is returned unchecked otherwise
CycNumber trace_of_metaplectic(const GL2Mat& s);

}  // namespace gmub

#endif
