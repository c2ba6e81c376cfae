#ifndef GMUB_MUB_HPP
#define GMUB_MUB_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gmub/cyc_linalg.hpp"
#include "gmub/gl2.hpp"
#include "gmub/gunitary.hpp"
#include "gmub/interval.hpp"
#include "gmub/weyl.hpp"

namespace gmub {

/// The complete set of d+1 mutually unbiased bases generated from the
/// computational basis.  Basis z (a projective-line label) is the joint
/// eigenbasis of the displacements along the phase-space direction (z, 1);
/// the label infinity corresponds to the direction (1, 0).  Vector r of
/// basis z is U_{Gz} |r> for Gz = [[1, z], [0, 1]] (and [[0, -1], [1, 0]]
/// for infinity), so the computational basis itself sits at z = 0.
class MUBSet {
public:
    static MUBSet build(const FieldSpecPtr& spec);

    const FieldSpecPtr& spec() const { return spec_; }
    std::int64_t d() const { return spec_->order(); }
    // bases are stored with finite labels first (by field index), then inf
    std::int64_t basis_count() const { return d() + 1; }
    std::int64_t basis_index(const ProjPoint& z) const;
    ProjPoint label_of(std::int64_t basis_index) const;
    const CycVector& vec(std::int64_t basis_index, std::int64_t r) const;
    const CycVector& vec(const ProjPoint& z, std::int64_t r) const;

    std::vector<ProjPoint> all_labels() const;

private:
    FieldSpecPtr spec_;
    std::vector<std::vector<CycVector>> bases_;
};

// for each basis label z, the label z' = (a z + b)/(c z + d) such that U_G
// maps basis z onto basis z' vector-by-vector up to field phases; a failure
// to match any basis (or a mismatch with the fractional-linear formula)
// throws, since it would mean the labeling convention is inconsistent
std::vector<ProjPoint> mobius_action_check(const MUBSet& mub, const GL2Mat& g);

// exact outcome probabilities |<e_j^(z) | psi>|^2 / <psi|psi>; real field
// elements summing to 1
std::vector<CycNumber> probabilities(const MUBSet& mub, const CycVector& psi,
                                     const ProjPoint& z);

struct BalancedResult {
    bool balanced = false;
    // witness permutations f_z with p^{(z)}_j = p^{(0)}_{f_z(j)}, one per basis
    std::vector<std::vector<std::int64_t>> permutations;
};

// a state is MUB-balanced when every basis sees the same multiset of
// probabilities; comparison is exact field-element equality
BalancedResult is_mub_balanced(const MUBSet& mub, const CycVector& psi);

// sum_j p_j^2 = 2/(d+1) in every basis, exactly
bool is_minimum_uncertainty(const MUBSet& mub, const CycVector& psi);

struct RenyiReport {
    std::vector<RealInterval> entropies;  // H_z = -log2 sum_j p_j^2
    RealInterval total;
    RealInterval bound;  // (d+1) log2((d+1)/2)
    bool bound_respected = false;  // interval check of total >= bound
    bool saturated = false;        // exact minimum-uncertainty condition
};

RenyiReport renyi_report(const MUBSet& mub, const CycVector& psi,
                         mpfr_prec_t precision);

}  // namespace gmub

#endif
