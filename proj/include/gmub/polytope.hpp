#ifndef GMUB_POLYTOPE_HPP
#define GMUB_POLYTOPE_HPP

#include <cstdint>
#include <vector>

#include "gmub/cyc_linalg.hpp"
#include "gmub/gunitary.hpp"
#include "gmub/mub.hpp"
#include "gmub/weyl.hpp"

namespace gmub {

// A_u = D_u A D_u^{-1} with A the parity operator; these d^2 operators form
// a regular simplex: Tr(A_u A_v) = d delta_{uv} and their sum is d * I
CycMatrix phase_point_operator(const PhasePoint& u);

// the d points of line r in pencil z: {(z*y + r, y)} for finite z (so the
// z = 0 pencil is the vertical lines matching the computational basis) and
// {(x, r)} for the infinite pencil
std::vector<PhasePoint> line_points(const FieldSpecPtr& spec, const ProjPoint& z,
                                    const FieldElement& r);

// rank-1 projector onto MUB vector r of basis z, computed both as the
// outer product and as the line average (1/d) sum of phase-point operators;
// a disagreement between the two throws, as it would falsify the
// line-pencil <-> basis correspondence
CycMatrix line_operator(const MUBSet& mub, const ProjPoint& z, std::int64_t r);

// sum over pencils of one chosen line projector each, minus the identity;
// has unit trace, and Tr(A P_r^{(z)}) is 1 exactly when the choice at z is r
CycMatrix generalized_phase_point(const MUBSet& mub,
                                  const std::vector<std::int64_t>& choice);

/// Exact discrete Wigner table W_u = Tr(rho A_u)/d indexed row-major by
/// (index(u1), index(u2)); entries are real field elements summing to 1.
struct WignerTable {
    FieldSpecPtr spec;
    std::vector<CycNumber> values;  // d*d entries

    const CycNumber& at(const PhasePoint& u) const;
    CycNumber& at(const PhasePoint& u);
    CycNumber sum() const;
    bool operator==(const WignerTable& o) const { return values == o.values; }
};

WignerTable wigner_of_state(const FieldSpecPtr& spec, const CycVector& psi);

// the closed-form Wigner table of the balanced state in dimensions
// d = 3 mod 4:
//   W_u = (1 - d [u = 0] + sum_{x != 0} l(x^2+1) w^{tr(x(u1^2+u2^2))}) / (d(d+1))
// cross-checked exactly against the Wigner function of the invariant vector
// of the rotation-like cycler F built from eta
struct AmburgResult {
    WignerTable table;
    GL2Mat cycler;        // the matrix F
    CycVector state;      // invariant vector of U_F
    bool direct_match = false;  // table equalled wigner_of_state(state) as-is
};

AmburgResult amburg_wigner(const EtaElement& eta);

/// Census of the extended Clifford group elements (symplectic and
/// anti-symplectic, modulo phases) fixing the balanced state's projector.
struct StabilizerCensus {
    std::int64_t group_order = 0;       // 2 d^3 (d^2 - 1)
    std::int64_t stabilizer_order = 0;
    std::int64_t orbit_size = 0;
    bool contains_half_turn_family = false;  // the powers of G0^{(p-1)/2}
};

StabilizerCensus stabilizer_census(const EtaElement& eta);

}  // namespace gmub

#endif
