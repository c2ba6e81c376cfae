#ifndef GMUB_VERIFY_HPP
#define GMUB_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gmub/finite_field.hpp"
#include "gmub/gl2.hpp"
#include "gmub/mub.hpp"

namespace gmub::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Rng = std::mt19937_64;

// deterministic draws (uniform_int_distribution is not portable across
// standard libraries, so indices come straight from the engine)
FieldElement random_element(const FieldSpecPtr& spec, Rng& rng);
GL2Mat random_sl(const FieldSpecPtr& spec, Rng& rng);
GL2Mat random_glp(const FieldSpecPtr& spec, Rng& rng);
GL2Mat random_nonsplit(const FieldSpecPtr& spec, Rng& rng);
GL2Mat random_cycler(const FieldSpecPtr& spec, const EtaElement& eta, Rng& rng);

// gauss_sum(p)^2 = +p or -p according to p mod 4
CheckResult gauss_sum_square(std::int64_t p);
// U_{G1} U_{G2} = U_{G1 G2} over random SL pairs
CheckResult sl_faithfulness(const FieldSpecPtr& spec, int pairs, Rng& rng);
// same through the g-unitary composition over GL_p pairs (odd n)
CheckResult glp_faithfulness(const FieldSpecPtr& spec, int pairs, Rng& rng);
// for even n the product is only a sign times U_{G1 G2}; count both signs
CheckResult sign_census(const FieldSpecPtr& spec, int pairs, Rng& rng);
// U_G D_u U_G^{-1} = D_{Gu}
CheckResult weyl_covariance(const FieldSpecPtr& spec, int samples, Rng& rng);
// every overlap of the d(d+1) MUB vectors matches the unbiasedness grid
CheckResult mub_grid(const MUBSet& mub);
// A^m = s_m A - s_{m-1} det(A) I against repeated multiplication
CheckResult power_recurrence(const FieldSpecPtr& spec, int samples, Rng& rng);
// G^{d+1} = det(G) I for matrices with irreducible characteristic polynomial
CheckResult nonsplit_power_identity(const FieldSpecPtr& spec, int samples, Rng& rng);
// exhaustive suborder scan over companion matrices with prime-field det
CheckResult companion_suborder_scan(const FieldSpecPtr& spec, const EtaElement& eta);
// anti-symplectic MUB-cyclers exist exactly when d = 3 mod 4
CheckResult antisymplectic_existence(const EtaElement& eta);
// unit trace, idempotency and the term-trace pattern of the fixed-space
// projector of the cycler generator
CheckResult projector_identities(const EtaElement& eta);
// invariant vector: fixed exactly, unique line, parity eigenvalue
CheckResult invariant_vector_checks(const EtaElement& eta);
// balanced + minimum-uncertainty verdicts for the invariant vector; at
// d = 1 mod 4 the verdict is data, not a failure
CheckResult balanced_verdict(const MUBSet& mub, const EtaElement& eta);
// closed-form Wigner table against the cycler state
CheckResult amburg_crosscheck(const EtaElement& eta);
// line/point duality, the {1, 0, 1/d} trace table, simplex orthogonality
CheckResult polytope_identities(const MUBSet& mub);
// |SL| = d(d^2-1) and |GL| = (d-1)d(d^2-1) by exhaustive count
CheckResult group_orders(const FieldSpecPtr& spec);
// stabilizer order and orbit size of the balanced state
CheckResult census_check(const EtaElement& eta);
// invariant vectors of all cycler-generator powers coprime to d+1 agree
CheckResult single_orbit_check(const EtaElement& eta);

}  // namespace gmub::verify

#endif
