#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "gmub/finite_field.hpp"

using namespace gmub;

namespace {

// brute-force oracle: the first monic irreducible of degree n in base-p
// numeric order, testing irreducibility by trial division with every monic
// polynomial of degree 1 .. n-1
std::vector<std::int64_t> smallest_irreducible_oracle(std::int64_t p, int n) {
    auto mod = [&](std::int64_t a) { return ((a % p) + p) % p; };
    auto divides = [&](const std::vector<std::int64_t>& g,
                       const std::vector<std::int64_t>& f) {
        std::vector<std::int64_t> r = f;
        while (r.size() >= g.size()) {
            std::int64_t lead = r.back();  // g is monic
            size_t shift = r.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i)
                r[i + shift] = mod(r[i + shift] - lead * g[i]);
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) return true;
        }
        return false;
    };
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (std::int64_t v = 0; v < total; ++v) {
        std::vector<std::int64_t> f(n + 1, 1);
        std::int64_t t = v;
        for (int i = 0; i < n; ++i) {
            f[i] = t % p;
            t /= p;
        }
        bool irreducible = true;
        for (int m = 1; m <= n / 2 && irreducible; ++m) {
            std::int64_t gcount = 1;
            for (int i = 0; i < m; ++i) gcount *= p;
            for (std::int64_t gv = 0; gv < gcount && irreducible; ++gv) {
                std::vector<std::int64_t> g(m + 1, 1);
                std::int64_t s = gv;
                for (int i = 0; i < m; ++i) {
                    g[i] = s % p;
                    s /= p;
                }
                if (divides(g, f)) irreducible = false;
            }
        }
        if (irreducible) return f;
    }
    return {};
}

}  // namespace

TEST_CASE("field construction picks the first irreducible modulus") {
    auto f9 = FieldSpec::make(3, 2);
    CHECK(f9->modulus() == std::vector<std::int64_t>{1, 0, 1});  // x^2 + 1
    CHECK(f9->order() == 9);

    auto f5 = FieldSpec::make(5, 1);
    CHECK(f5->modulus() == std::vector<std::int64_t>{0, 1});  // prime field: x

    auto f27 = FieldSpec::make(3, 3);
    CHECK(f27->modulus() == smallest_irreducible_oracle(3, 3));

    CHECK(FieldSpec::make(7, 2)->modulus() == smallest_irreducible_oracle(7, 2));
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::make(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::make(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::make(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::make(5, -2), std::invalid_argument);
}

TEST_CASE("arithmetic in GF(9) uses lambda^2 = -1") {
    auto f9 = FieldSpec::make(3, 2);
    FieldElement lambda = f9->from_coeffs({0, 1});
    CHECK(lambda * lambda == f9->from_int(2));  // -1 mod 3
    CHECK(lambda * f9->one() == lambda);
    CHECK_THROWS_AS(lambda / f9->zero(), std::invalid_argument);
}

TEST_CASE("powers respect the field order") {
    std::mt19937_64 rng(7);
    for (auto [p, n] : {std::pair<std::int64_t, int>{3, 2}, {5, 1}, {7, 1}, {3, 3}}) {
        auto spec = FieldSpec::make(p, n);
        for (int i = 0; i < 50; ++i) {
            FieldElement a = spec->element(rng() % spec->order());
            // repeated-multiplication oracle for a^{p^n}
            FieldElement acc = spec->one();
            for (std::int64_t k = 0; k < spec->order(); ++k) acc = acc * a;
            CHECK(acc == a);
            CHECK(a.pow(spec->order()) == a);
        }
    }
}

TEST_CASE("frobenius is additive and fixes exactly the prime field") {
    std::mt19937_64 rng(11);
    auto spec = FieldSpec::make(3, 3);
    for (int i = 0; i < 100; ++i) {
        FieldElement a = spec->element(rng() % spec->order());
        FieldElement b = spec->element(rng() % spec->order());
        CHECK((a + b).pow(3) == a.pow(3) + b.pow(3));
    }
    for (std::int64_t idx = 0; idx < spec->order(); ++idx) {
        FieldElement a = spec->element(idx);
        bool in_prime = a.as_prime_residue().has_value();
        CHECK((a.frobenius() == a) == in_prime);
    }
}

TEST_CASE("trace maps into the prime field and is linear") {
    auto f5 = FieldSpec::make(5, 1);
    CHECK(field_trace(f5->from_int(3)) == 3);  // identity on the prime field

    auto f9 = FieldSpec::make(3, 2);
    FieldElement lambda = f9->from_coeffs({0, 1});
    CHECK(field_trace(lambda) == 0);  // lambda + lambda^3 = 0

    std::mt19937_64 rng(5);
    auto f27 = FieldSpec::make(3, 3);
    for (int i = 0; i < 50; ++i) {
        FieldElement a = f27->element(rng() % 27);
        FieldElement b = f27->element(rng() % 27);
        CHECK(field_trace(a + b) == (field_trace(a) + field_trace(b)) % 3);
    }
}

TEST_CASE("primitive elements have full order") {
    auto f5 = FieldSpec::make(5, 1);
    CHECK(primitive_element(f5) == f5->from_int(2));
    CHECK(multiplicative_order(primitive_element(f5)) == 4);

    auto f3 = FieldSpec::make(3, 1);
    CHECK(primitive_element(f3) == f3->from_int(2));

    auto f9 = FieldSpec::make(3, 2);
    FieldElement theta = primitive_element(f9);
    CHECK(multiplicative_order(theta) == 8);
    // exhaustively the smallest one
    for (std::int64_t idx = 1; idx < theta.index(); ++idx) {
        if (idx == 0) continue;
        CHECK(multiplicative_order(f9->element(idx)) < 8);
    }
}

TEST_CASE("quadratic character matches the residue sets") {
    auto f5 = FieldSpec::make(5, 1);
    CHECK(quadratic_character(f5->one()) == 1);
    CHECK(quadratic_character(f5->from_int(2)) == -1);
    CHECK(quadratic_character(f5->zero()) == 0);

    auto f3 = FieldSpec::make(3, 1);
    CHECK(quadratic_character(f3->from_int(2)) == -1);

    // multiplicativity and an exact 50/50 split
    for (auto [p, n] : {std::pair<std::int64_t, int>{5, 1}, {3, 2}, {3, 3}}) {
        auto spec = FieldSpec::make(p, n);
        std::int64_t plus = 0;
        for (std::int64_t i = 1; i < spec->order(); ++i)
            if (quadratic_character(spec->element(i)) == 1) ++plus;
        CHECK(plus == (spec->order() - 1) / 2);
        std::mt19937_64 rng(p * 100 + n);
        for (int i = 0; i < 40; ++i) {
            FieldElement x = spec->element(1 + rng() % (spec->order() - 1));
            FieldElement y = spec->element(1 + rng() % (spec->order() - 1));
            CHECK(quadratic_character(x * y) ==
                  quadratic_character(x) * quadratic_character(y));
        }
    }
}

TEST_CASE("square roots exist exactly for characters != -1") {
    auto f5 = FieldSpec::make(5, 1);
    CHECK(sqrt_in_field(f5->zero()) == f5->zero());
    CHECK(sqrt_in_field(f5->from_int(4)) == f5->from_int(2));

    auto f7 = FieldSpec::make(7, 1);
    CHECK(!sqrt_in_field(f7->from_int(3)).has_value());

    for (std::int64_t i = 0; i < 7; ++i) {
        auto r = sqrt_in_field(f7->element(i));
        if (r) CHECK(*r * *r == f7->element(i));
    }
}

TEST_CASE("minus one is a non-square exactly when d = 3 mod 4") {
    for (auto [p, n] : {std::pair<std::int64_t, int>{3, 1}, {5, 1}, {7, 1},
                        {3, 2}, {11, 1}, {3, 3}}) {
        auto spec = FieldSpec::make(p, n);
        bool nonsquare = quadratic_character(-spec->one()) == -1;
        CHECK(nonsquare == (spec->order() % 4 == 3));
    }
}

TEST_CASE("theta^(1+p+...+p^(n-1)) is primitive in the prime subfield") {
    auto f27 = FieldSpec::make(3, 3);
    FieldElement theta = primitive_element(f27);
    FieldElement tp = theta.pow(1 + 3 + 9);
    auto residue = tp.as_prime_residue();
    REQUIRE(residue.has_value());
    CHECK(*residue == 2);  // the only primitive element of GF(3)
}

TEST_CASE("quadratic extension embeds the base field homomorphically") {
    std::mt19937_64 rng(23);
    for (auto [p, n] : {std::pair<std::int64_t, int>{5, 1}, {3, 2}, {3, 3}}) {
        auto spec = FieldSpec::make(p, n);
        QuadExtension ext = QuadExtension::make(spec);
        CHECK(ext.ext()->order() == spec->order() * spec->order());
        for (int i = 0; i < 30; ++i) {
            FieldElement a = spec->element(rng() % spec->order());
            FieldElement b = spec->element(rng() % spec->order());
            CHECK(ext.embed(a * b) == ext.embed(a) * ext.embed(b));
            CHECK(ext.embed(a + b) == ext.embed(a) + ext.embed(b));
            // embedded elements satisfy x^d = x
            CHECK(ext.embed(a).pow(spec->order()) == ext.embed(a));
            CHECK(ext.restrict_to_base(ext.embed(a)) == a);
        }
    }
}

TEST_CASE("eta has order (p-1)(d+1)") {
    auto f7 = FieldSpec::make(7, 1);
    EtaElement eta7 = make_eta(f7);
    CHECK(eta7.order == 48);
    // d = p: the defining exponent is 1, so eta is the primitive element
    CHECK(eta7.value == primitive_element(eta7.ext.ext()));

    auto f27 = FieldSpec::make(3, 3);
    EtaElement eta27 = make_eta(f27);
    CHECK(eta27.order == 2 * 28);

    // eta^{(d+1)p} = eta^{d+1}: the norm-like power lands in the prime field
    for (const EtaElement& eta : {eta7, eta27}) {
        std::int64_t d = eta.ext.base()->order();
        FieldElement h = eta.value.pow(d + 1);
        CHECK(h.pow(eta.ext.base()->p()) == h);
        auto restricted = eta.ext.restrict_to_base(h);
        REQUIRE(restricted.has_value());
        CHECK(restricted->as_prime_residue().has_value());
    }
}
