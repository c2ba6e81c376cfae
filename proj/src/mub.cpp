#include "gmub/mub.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmub {

MUBSet MUBSet::build(const FieldSpecPtr& spec) {
    if (spec->p() % 2 == 0)
        throw std::invalid_argument("MUB construction needs an odd prime power");
    MUBSet m;
    m.spec_ = spec;
    const std::int64_t d = spec->order();
    m.bases_.reserve(d + 1);
    for (std::int64_t zi = 0; zi <= d; ++zi) {
        GL2Mat g = zi < d
                       ? GL2Mat::from_entries(spec->one(), spec->element(zi),
                                              spec->zero(), spec->one())
                       : GL2Mat::from_entries(spec->zero(), -spec->one(), spec->one(),
                                              spec->zero());
        CycMatrix u = metaplectic(g);
        std::vector<CycVector> basis;
        basis.reserve(d);
        for (std::int64_t r = 0; r < d; ++r) {
            CycVector v(d, spec->p());
            for (std::int64_t row = 0; row < d; ++row) v[row] = u.at(row, r);
            basis.push_back(std::move(v));
        }
        m.bases_.push_back(std::move(basis));
    }
    return m;
}

std::int64_t MUBSet::basis_index(const ProjPoint& z) const {
    return z.infinite ? d() : z.value.index();
}

ProjPoint MUBSet::label_of(std::int64_t basis_index) const {
    return basis_index == d() ? ProjPoint::infinity()
                              : ProjPoint::finite(spec_->element(basis_index));
}

const CycVector& MUBSet::vec(std::int64_t basis_index, std::int64_t r) const {
    return bases_[basis_index][r];
}

const CycVector& MUBSet::vec(const ProjPoint& z, std::int64_t r) const {
    return bases_[basis_index(z)][r];
}

std::vector<ProjPoint> MUBSet::all_labels() const {
    std::vector<ProjPoint> ls;
    for (std::int64_t i = 0; i <= d(); ++i) ls.push_back(label_of(i));
    return ls;
}

std::vector<ProjPoint> mobius_action_check(const MUBSet& mub, const GL2Mat& g) {
    if (!g.det().is_one())
        throw std::invalid_argument("basis permutation check expects det 1");
    const std::int64_t d = mub.d();
    CycMatrix u = metaplectic(g);
    std::vector<ProjPoint> images;
    for (std::int64_t zi = 0; zi <= d; ++zi) {
        std::optional<std::int64_t> target;
        for (std::int64_t r = 0; r < d; ++r) {
            CycVector w = u * mub.vec(zi, r);
            // locate the unique basis vector proportional to the image
            bool found = false;
            for (std::int64_t zj = 0; zj <= d && !found; ++zj) {
                if (target && zj != *target) continue;
                for (std::int64_t s = 0; s < d; ++s) {
                    const CycVector& cand = mub.vec(zj, s);
                    if (!cand.proportional_to(w)) continue;
                    // the relating phase must be a unit of the field
                    std::int64_t i0 = cand.first_nonzero();
                    CycNumber phase = w[i0] / cand[i0];
                    if (!(phase * phase.conj() == CycNumber::one(phase.prime())))
                        throw std::logic_error("basis image phase is not unimodular");
                    if (target && *target != zj)
                        throw std::logic_error("basis split across labels");
                    target = zj;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("image vector matches no basis");
        }
        ProjPoint expected = mobius(g, mub.label_of(zi));
        if (mub.label_of(*target) != expected)
            throw std::logic_error("basis permutation violates the fractional-linear rule");
        images.push_back(expected);
    }
    return images;
}

std::vector<CycNumber> probabilities(const MUBSet& mub, const CycVector& psi,
                                     const ProjPoint& z) {
    if (psi.is_zero()) throw std::invalid_argument("probabilities of the zero vector");
    const std::int64_t d = mub.d();
    const std::int64_t p = mub.spec()->p();
    CycNumber norm = inner_product(psi, psi);
    std::vector<CycNumber> out;
    out.reserve(d);
    CycNumber total = CycNumber::zero(p);
    for (std::int64_t r = 0; r < d; ++r) {
        CycNumber amp = inner_product(mub.vec(z, r), psi);
        CycNumber prob = amp.conj() * amp / norm;
        if (!prob.is_real()) throw std::logic_error("probability is not real");
        total += prob;
        out.push_back(std::move(prob));
    }
    if (!(total == CycNumber::one(p)))
        throw std::logic_error("probabilities do not sum to one");
    return out;
}

BalancedResult is_mub_balanced(const MUBSet& mub, const CycVector& psi) {
    const std::int64_t d = mub.d();
    BalancedResult res;
    auto base = probabilities(mub, psi, ProjPoint::finite(mub.spec()->element(0)));
    res.permutations.assign(d + 1, {});
    for (std::int64_t zi = 0; zi <= d; ++zi) {
        auto probs = probabilities(mub, psi, mub.label_of(zi));
        std::vector<std::int64_t> perm(d, -1);
        std::vector<bool> used(d, false);
        for (std::int64_t j = 0; j < d; ++j) {
            bool matched = false;
            for (std::int64_t k = 0; k < d; ++k) {
                if (used[k] || !(probs[j] == base[k])) continue;
                perm[j] = k;
                used[k] = true;
                matched = true;
                break;
            }
            if (!matched) return res;  // multiset mismatch: not balanced
        }
        res.permutations[zi] = std::move(perm);
    }
    res.balanced = true;
    return res;
}

bool is_minimum_uncertainty(const MUBSet& mub, const CycVector& psi) {
    const std::int64_t d = mub.d();
    const std::int64_t p = mub.spec()->p();
    CycNumber target = CycNumber::rational(p, mpq_class(2, d + 1));
    for (std::int64_t zi = 0; zi <= d; ++zi) {
        auto probs = probabilities(mub, psi, mub.label_of(zi));
        CycNumber sum = CycNumber::zero(p);
        for (const auto& q : probs) sum += q * q;
        if (!(sum == target)) return false;
    }
    return true;
}

RenyiReport renyi_report(const MUBSet& mub, const CycVector& psi,
                         mpfr_prec_t precision) {
    const std::int64_t d = mub.d();
    RenyiReport rep;
    rep.saturated = is_minimum_uncertainty(mub, psi);
    RealInterval total = RealInterval::from_int(0, precision);
    for (std::int64_t zi = 0; zi <= d; ++zi) {
        auto probs = probabilities(mub, psi, mub.label_of(zi));
        CycNumber sum = CycNumber::zero(mub.spec()->p());
        for (const auto& q : probs) sum += q * q;
        RealInterval h = -embed(sum, precision).re.log2();
        total = total + h;
        rep.entropies.push_back(std::move(h));
    }
    rep.total = total;
    rep.bound = RealInterval::from_int(d + 1, precision) *
                RealInterval::from_rational(mpq_class(d + 1, 2), precision).log2();
    // the bound is respected unless the whole total interval sits below it
    rep.bound_respected = !rep.total.certainly_less(rep.bound);
    return rep;
}

}  // namespace gmub
