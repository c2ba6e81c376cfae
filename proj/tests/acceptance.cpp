// acceptance suite: every criterion is an exact identity (interval checks
// are called out); one PASS/FAIL line per criterion, nonzero exit on failure

#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <vector>

#include "gmub/gunitary.hpp"
#include "gmub/json_io.hpp"
#include "gmub/polytope.hpp"
#include "gmub/verify.hpp"

using namespace gmub;
using verify::CheckResult;
using verify::Rng;

namespace {

struct Criterion {
    std::string id;
    bool pass = true;
    std::string detail;

    void merge(const CheckResult& r) {
        pass = pass && r.pass;
        if (!detail.empty()) detail += "; ";
        detail += r.detail.empty() ? r.name : r.detail;
    }
    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " FAILED");
    }
};

FieldSpecPtr spec_of(std::int64_t d) {
    switch (d) {
        case 3: return FieldSpec::make(3, 1);
        case 5: return FieldSpec::make(5, 1);
        case 7: return FieldSpec::make(7, 1);
        case 9: return FieldSpec::make(3, 2);
        case 11: return FieldSpec::make(11, 1);
        case 13: return FieldSpec::make(13, 1);
        case 27: return FieldSpec::make(3, 3);
    }
    throw std::invalid_argument("unsupported dimension");
}

Criterion c01_gauss_sums() {
    Criterion c{"01-gauss-sums"};
    auto start = std::chrono::steady_clock::now();
    for (std::int64_t p : {5, 13}) c.merge(verify::gauss_sum_square(p));
    for (std::int64_t p : {3, 7, 11}) c.merge(verify::gauss_sum_square(p));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    std::ostringstream os;
    os << "runtime " << secs << "s";
    c.require(secs < 1.0, os.str());
    return c;
}

Criterion c02_faithfulness(Rng& rng) {
    Criterion c{"02-metaplectic-faithfulness"};
    for (std::int64_t d : {3, 5, 7, 11, 27})
        c.merge(verify::sl_faithfulness(spec_of(d), 50, rng));
    for (std::int64_t d : {7, 27}) c.merge(verify::glp_faithfulness(spec_of(d), 50, rng));
    c.merge(verify::sign_census(spec_of(9), 50, rng));
    return c;
}

Criterion c03_covariance(Rng& rng) {
    Criterion c{"03-weyl-covariance"};
    for (std::int64_t d : {3, 5, 7, 9, 11, 27})
        c.merge(verify::weyl_covariance(spec_of(d), 50, rng));
    return c;
}

Criterion c04_mub_grid() {
    Criterion c{"04-mub-grid"};
    for (std::int64_t d : {3, 5, 7, 9, 11, 27})
        c.merge(verify::mub_grid(MUBSet::build(spec_of(d))));
    return c;
}

Criterion c05_recurrence(Rng& rng) {
    Criterion c{"05-power-recurrence"};
    for (std::int64_t d : {5, 7, 9}) c.merge(verify::power_recurrence(spec_of(d), 100, rng));
    return c;
}

Criterion c06_nonsplit_power(Rng& rng) {
    Criterion c{"06-nonsplit-power-identity"};
    for (std::int64_t d : {5, 7, 9, 27})
        c.merge(verify::nonsplit_power_identity(spec_of(d), 100, rng));
    return c;
}

Criterion c07_suborders() {
    Criterion c{"07-suborder-characterization"};
    for (std::int64_t d : {9, 7, 27}) {
        auto spec = spec_of(d);
        c.merge(verify::companion_suborder_scan(spec, make_eta(spec)));
    }
    return c;
}

Criterion c08_antisymplectic() {
    Criterion c{"08-antisymplectic-cyclers"};
    for (std::int64_t d : {7, 11, 27, 5, 13}) {
        auto spec = spec_of(d);
        c.merge(verify::antisymplectic_existence(make_eta(spec)));
    }
    return c;
}

Criterion c09_projector() {
    Criterion c{"09-projector-identities"};
    for (std::int64_t d : {3, 5, 7, 11, 27}) {
        auto spec = spec_of(d);
        c.merge(verify::projector_identities(make_eta(spec)));
    }
    return c;
}

Criterion c10_eigenvector() {
    Criterion c{"10-invariant-vector"};
    for (std::int64_t d : {3, 5, 7, 11, 27}) {
        auto spec = spec_of(d);
        c.merge(verify::invariant_vector_checks(make_eta(spec)));
    }
    return c;
}

Criterion c11_balanced() {
    Criterion c{"11-mub-balanced"};
    for (std::int64_t d : {3, 7, 11, 27}) {
        auto spec = spec_of(d);
        EtaElement eta = make_eta(spec);
        MUBSet mub = MUBSet::build(spec);
        c.merge(verify::balanced_verdict(mub, eta));
        GUnitary gu = GUnitary::make(cycler_generator(eta));
        CycVector psi = invariant_vector(gu, eta).psi;
        c.require(is_mub_balanced(mub, psi).balanced, "balanced d=" + std::to_string(d));
        c.require(is_minimum_uncertainty(mub, psi),
                  "sum of squares 2/(d+1) d=" + std::to_string(d));
    }
    {
        // open case: record the exact verdict, do not assert it
        auto spec = spec_of(5);
        EtaElement eta = make_eta(spec);
        MUBSet mub = MUBSet::build(spec);
        GUnitary gu = GUnitary::make(cycler_generator(eta));
        CycVector psi = invariant_vector(gu, eta).psi;
        std::ostringstream os;
        os << "d=5 verdict recorded: balanced=" << is_mub_balanced(mub, psi).balanced
           << " min-uncertainty=" << is_minimum_uncertainty(mub, psi);
        c.require(true, os.str());
    }
    return c;
}

Criterion c12_amburg() {
    Criterion c{"12-wigner-crosscheck"};
    for (std::int64_t d : {3, 7}) {
        auto spec = spec_of(d);
        EtaElement eta = make_eta(spec);
        AmburgResult res = amburg_wigner(eta);
        c.require(res.direct_match, "closed-form table matches state d=" + std::to_string(d));
        c.require(res.table.sum() == CycNumber::one(spec->p()),
                  "normalization d=" + std::to_string(d));
    }
    return c;
}

Criterion c13_polytope() {
    Criterion c{"13-polytope-identities"};
    for (std::int64_t d : {3, 5, 7})
        c.merge(verify::polytope_identities(MUBSet::build(spec_of(d))));
    return c;
}

Criterion c14_single_orbit() {
    Criterion c{"14-single-orbit-and-census"};
    auto spec = spec_of(7);
    EtaElement eta = make_eta(spec);
    c.merge(verify::single_orbit_check(eta));
    c.merge(verify::census_check(eta));
    return c;
}

Criterion c15_group_orders() {
    Criterion c{"15-group-orders"};
    for (std::int64_t d : {3, 5}) c.merge(verify::group_orders(spec_of(d)));
    return c;
}

}  // namespace

int main() {
    Rng rng(0x5eedULL);
    std::vector<Criterion> results;
    auto run = [&](const std::string& id, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        Criterion c;
        c.id = id;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.id = id;
            c.pass = false;
            c.detail += std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-32s (%.1fs)  %s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                    secs, c.detail.c_str());
        std::fflush(stdout);
        results.push_back(c);
    };

    run("01-gauss-sums", [&] { return c01_gauss_sums(); });
    run("02-metaplectic-faithfulness", [&] { return c02_faithfulness(rng); });
    run("03-weyl-covariance", [&] { return c03_covariance(rng); });
    run("04-mub-grid", [&] { return c04_mub_grid(); });
    run("05-power-recurrence", [&] { return c05_recurrence(rng); });
    run("06-nonsplit-power-identity", [&] { return c06_nonsplit_power(rng); });
    run("07-suborder-characterization", [&] { return c07_suborders(); });
    run("08-antisymplectic-cyclers", [&] { return c08_antisymplectic(); });
    run("09-projector-identities", [&] { return c09_projector(); });
    run("10-invariant-vector", [&] { return c10_eigenvector(); });
    run("11-mub-balanced", [&] { return c11_balanced(); });
    run("12-wigner-crosscheck", [&] { return c12_amburg(); });
    run("13-polytope-identities", [&] { return c13_polytope(); });
    run("14-single-orbit-and-census", [&] { return c14_single_orbit(); });
    run("15-group-orders", [&] { return c15_group_orders(); });

    int failures = 0;
    for (const auto& c : results) failures += c.pass ? 0 : 1;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
