#include <doctest.h>

#include "gmub/mub.hpp"
#include "gmub/verify.hpp"

using namespace gmub;

TEST_CASE("construction yields d+1 unbiased bases") {
    for (auto [p, n] : {std::pair<std::int64_t, int>{3, 1}, {5, 1}, {3, 2}}) {
        auto spec = FieldSpec::make(p, n);
        MUBSet mub = MUBSet::build(spec);
        CHECK(mub.basis_count() == spec->order() + 1);
        CHECK(verify::mub_grid(mub).pass);
    }
}

TEST_CASE("the computational basis sits at label zero") {
    auto spec = FieldSpec::make(5, 1);
    MUBSet mub = MUBSet::build(spec);
    for (std::int64_t r = 0; r < 5; ++r) {
        const CycVector& e = mub.vec(ProjPoint::finite(spec->element(0)), r);
        for (std::int64_t i = 0; i < 5; ++i)
            CHECK(e[i] == (i == r ? CycNumber::one(5) : CycNumber::zero(5)));
    }
}

TEST_CASE("each basis diagonalizes its displacement direction") {
    for (auto [p, n] : {std::pair<std::int64_t, int>{5, 1}, {3, 2}}) {
        auto spec = FieldSpec::make(p, n);
        MUBSet mub = MUBSet::build(spec);
        for (std::int64_t zi = 0; zi <= spec->order(); ++zi) {
            ProjPoint z = mub.label_of(zi);
            PhasePoint dir = z.infinite
                                 ? PhasePoint{spec->one(), spec->zero()}
                                 : PhasePoint{z.value, spec->one()};
            CycMatrix d = displacement(dir);
            for (std::int64_t r = 0; r < spec->order(); ++r) {
                const CycVector& e = mub.vec(zi, r);
                CHECK((d * e).proportional_to(e));
            }
        }
    }
}

TEST_CASE("displacements permute vectors within each basis") {
    auto spec = FieldSpec::make(3, 1);
    MUBSet mub = MUBSet::build(spec);
    verify::Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        PhasePoint u{verify::random_element(spec, rng), verify::random_element(spec, rng)};
        CycMatrix d = displacement(u);
        for (std::int64_t zi = 0; zi <= 3; ++zi)
            for (std::int64_t r = 0; r < 3; ++r) {
                CycVector w = d * mub.vec(zi, r);
                bool found = false;
                for (std::int64_t s = 0; s < 3 && !found; ++s)
                    found = mub.vec(zi, s).proportional_to(w);
                CHECK(found);
            }
    }
}

TEST_CASE("symplectic unitaries permute bases by the fractional-linear rule") {
    auto spec = FieldSpec::make(5, 1);
    MUBSet mub = MUBSet::build(spec);

    auto id_images = mobius_action_check(mub, GL2Mat::identity(spec));
    for (std::int64_t zi = 0; zi <= 5; ++zi) CHECK(id_images[zi] == mub.label_of(zi));

    // [[0,-1],[1,0]] sends z to -1/z, so 0 and infinity swap
    GL2Mat s = GL2Mat::from_entries(spec->zero(), -spec->one(), spec->one(), spec->zero());
    auto images = mobius_action_check(mub, s);
    CHECK(images[0] == ProjPoint::infinity());
    CHECK(images[5] == ProjPoint::finite(spec->zero()));

    verify::Rng rng(62);
    for (int i = 0; i < 5; ++i) mobius_action_check(mub, verify::random_sl(spec, rng));
}

TEST_CASE("a cycler's unitary part cycles the bases in one orbit") {
    auto spec = FieldSpec::make(7, 1);
    EtaElement eta = make_eta(spec);
    MUBSet mub = MUBSet::build(spec);
    GL2Mat g0 = cycler_generator(eta);
    // the fractional-linear action of the full cycler permutes all labels in
    // a single (d+1)-cycle
    std::vector<bool> seen(8, false);
    ProjPoint z = ProjPoint::finite(spec->zero());
    for (int step = 0; step < 8; ++step) {
        seen[mub.basis_index(z)] = true;
        z = mobius(g0, z);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    // and its SL part respects the rule as a basis permutation
    mobius_action_check(mub, GUnitary::make(g0).sl_part());
}

TEST_CASE("probabilities are exact, real and sum to one") {
    auto spec = FieldSpec::make(3, 1);
    MUBSet mub = MUBSet::build(spec);
    const CycVector& e0 = mub.vec(0, 0);
    auto own = probabilities(mub, e0, mub.label_of(0));
    CHECK(own[0] == CycNumber::one(3));
    CHECK(own[1] == CycNumber::zero(3));
    for (std::int64_t zi = 1; zi <= 3; ++zi) {
        auto probs = probabilities(mub, e0, mub.label_of(zi));
        for (const auto& q : probs) CHECK(q == CycNumber::rational(3, mpq_class(1, 3)));
    }
    CycVector zero(3, 3);
    CHECK_THROWS_AS(probabilities(mub, zero, mub.label_of(0)), std::invalid_argument);
}

TEST_CASE("the purity identity: squared probabilities over all bases sum to 2") {
    for (auto [p, n] : {std::pair<std::int64_t, int>{3, 1}, {7, 1}}) {
        auto spec = FieldSpec::make(p, n);
        MUBSet mub = MUBSet::build(spec);
        verify::Rng rng(p);
        // a handful of cyclotomic states with rational-by-construction norms
        for (int trial = 0; trial < 4; ++trial) {
            CycVector psi(spec->order(), spec->p());
            for (std::int64_t i = 0; i < spec->order(); ++i)
                psi[i] = CycNumber::omega_pow(spec->p(), rng() % spec->p()) +
                         CycNumber::integer(spec->p(), static_cast<long>(rng() % 3));
            if (psi.is_zero()) continue;
            CycNumber total = CycNumber::zero(spec->p());
            for (std::int64_t zi = 0; zi <= spec->order(); ++zi)
                for (const auto& q : probabilities(mub, psi, mub.label_of(zi)))
                    total += q * q;
            CHECK(total == CycNumber::integer(spec->p(), 2));
        }
    }
}

TEST_CASE("basis states are not balanced; cycler states at d = 3 mod 4 are") {
    auto spec = FieldSpec::make(7, 1);
    EtaElement eta = make_eta(spec);
    MUBSet mub = MUBSet::build(spec);

    CHECK(!is_mub_balanced(mub, mub.vec(0, 0)).balanced);
    CHECK(!is_minimum_uncertainty(mub, mub.vec(0, 0)));

    GUnitary gu = GUnitary::make(cycler_generator(eta));
    CycVector psi = invariant_vector(gu, eta).psi;
    auto verdict = is_mub_balanced(mub, psi);
    REQUIRE(verdict.balanced);
    CHECK(is_minimum_uncertainty(mub, psi));

    // the witness permutations genuinely transport the distributions
    auto base = probabilities(mub, psi, mub.label_of(0));
    for (std::int64_t zi = 0; zi <= 7; ++zi) {
        auto probs = probabilities(mub, psi, mub.label_of(zi));
        for (std::int64_t j = 0; j < 7; ++j)
            CHECK(probs[j] == base[verdict.permutations[zi][j]]);
    }
}

TEST_CASE("the open case d = 5 is reported, not asserted") {
    auto spec = FieldSpec::make(5, 1);
    EtaElement eta = make_eta(spec);
    MUBSet mub = MUBSet::build(spec);
    GUnitary gu = GUnitary::make(cycler_generator(eta));
    CycVector psi = invariant_vector(gu, eta).psi;
    auto verdict = is_mub_balanced(mub, psi);
    bool mus = is_minimum_uncertainty(mub, psi);
    // record the exact outcome: the balanced property fails at d = 5 for
    // this state, and with it the minimum-uncertainty saturation
    CHECK(!verdict.balanced);
    CHECK(!mus);
    CHECK(verify::balanced_verdict(mub, eta).pass);  // data, not failure
}

TEST_CASE("minimum uncertainty condition for the d = 3 balanced state") {
    auto spec = FieldSpec::make(3, 1);
    EtaElement eta = make_eta(spec);
    MUBSet mub = MUBSet::build(spec);
    GUnitary gu = GUnitary::make(cycler_generator(eta));
    CycVector psi = invariant_vector(gu, eta).psi;
    REQUIRE(is_mub_balanced(mub, psi).balanced);
    // each basis sum of squares is 2/(d+1) = 1/2
    for (std::int64_t zi = 0; zi <= 3; ++zi) {
        CycNumber sum = CycNumber::zero(3);
        for (const auto& q : probabilities(mub, psi, mub.label_of(zi))) sum += q * q;
        CHECK(sum == CycNumber::rational(3, mpq_class(1, 2)));
    }
}

TEST_CASE("renyi entropies respect the uncertainty bound") {
    auto spec = FieldSpec::make(3, 1);
    EtaElement eta = make_eta(spec);
    MUBSet mub = MUBSet::build(spec);

    // basis state: H_0 = 0 and H_z = log2(3) elsewhere
    RenyiReport basis_rep = renyi_report(mub, mub.vec(0, 0), 128);
    CHECK(basis_rep.bound_respected);
    CHECK(!basis_rep.saturated);
    CHECK(basis_rep.entropies[0].contains(mpq_class(0)));
    RealInterval expected_total =
        RealInterval::from_int(3, 128) * RealInterval::from_int(3, 128).log2();
    CHECK(basis_rep.total.intersects(expected_total));

    // balanced state saturates: T = 4 * log2(2) = 4
    GUnitary gu = GUnitary::make(cycler_generator(eta));
    CycVector psi = invariant_vector(gu, eta).psi;
    RenyiReport rep = renyi_report(mub, psi, 128);
    CHECK(rep.saturated);
    CHECK(rep.bound_respected);
    CHECK(rep.total.contains(mpq_class(4)));

    // random rational states stay above the bound
    verify::Rng rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        CycVector v(3, 3);
        for (int i = 0; i < 3; ++i)
            v[i] = CycNumber::rational(3, mpq_class(1 + static_cast<long>(rng() % 5),
                                                    1 + static_cast<long>(rng() % 3)));
        RenyiReport r = renyi_report(mub, v, 128);
        CHECK(r.bound_respected);
    }
}
