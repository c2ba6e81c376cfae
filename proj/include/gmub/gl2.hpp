#ifndef GMUB_GL2_HPP
#define GMUB_GL2_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmub/finite_field.hpp"

namespace gmub {

/// Invertible 2x2 matrix [[a, b], [c, d]] over GF(p^n).
struct GL2Mat {
    FieldElement a, b, c, d;

    static GL2Mat identity(const FieldSpecPtr& spec);
    static GL2Mat from_entries(FieldElement a, FieldElement b, FieldElement c,
                               FieldElement d);
    // companion matrix [[0, -det], [1, tr]] of x^2 - tr*x + det
    static GL2Mat companion(const FieldElement& tr, const FieldElement& det);

    const FieldSpecPtr& spec() const { return a.spec(); }
    FieldElement trace() const { return a + d; }
    FieldElement det() const { return a * d - b * c; }
    bool det_in_prime_field() const;

    GL2Mat operator*(const GL2Mat& o) const;
    bool operator==(const GL2Mat& o) const;
    bool operator!=(const GL2Mat& o) const { return !(*this == o); }
    GL2Mat inverse() const;
    GL2Mat pow(std::uint64_t e) const;

    std::string to_string() const;
};

// smallest m >= 1 with G^m == I
std::int64_t matrix_order(const GL2Mat& g);

/// Conjugacy classification by the discriminant tr^2 - 4 det:
///   Split     -- nonzero square: two distinct eigenvalues in GF(d)
///   NonSplit  -- non-square: eigenvalues in GF(d^2) \ GF(d)
///   Repeated  -- zero: a single eigenvalue tr/2 in GF(d)
enum class GL2Class { Split, NonSplit, Repeated };

struct GL2Classification {
    GL2Class cls;
    // Split: both eigenvalues in the base field (smaller-index root first)
    std::optional<std::pair<FieldElement, FieldElement>> base_eigs;
    // NonSplit: lambda+ = (t + j)/2 in GF(d^2), j the smaller-index root
    std::optional<FieldElement> ext_eig;
    // NonSplit with determinant in the prime field: exponent r with
    // lambda+ = eta^r, 0 < r < (p-1)(d+1), r not a multiple of (d+1)/2
    std::optional<std::int64_t> eta_exponent;
};

GL2Classification classify(const GL2Mat& g, const EtaElement& eta);

// smallest m >= 1 with s_m = 0 for the recurrence s_{m+1} = t s_m - det s_{m-1},
// s_0 = 0, s_1 = 1; equivalently the smallest m with G^m proportional to I
std::int64_t suborder(const GL2Mat& g);

// the recurrence values themselves, s_0 .. s_count
std::vector<FieldElement> suborder_sequence(const GL2Mat& g, std::int64_t count);

// true iff g has suborder d+1 (needs det in the prime field and n odd);
// characterized by g being NonSplit with gcd(eta_exponent, d+1) = 1
bool is_mub_cycler(const GL2Mat& g, const EtaElement& eta);

// S in SL(2, F_d) with g = S * companion(tr, det) * S^{-1}; requires a
// nonzero discriminant; deterministic first solution in scan order
std::pair<GL2Mat, GL2Mat> canonical_form(const GL2Mat& g);

// G0 = [[0, -eta^{d+1}], [1, eta + eta^d]]: its powers G0^r with
// gcd(r, d+1) = 1 exhaust the MUB-cyclers up to conjugation (n odd)
GL2Mat cycler_generator(const EtaElement& eta);

// true iff d = 3 mod 4; the witness exponent, when present, is the smallest
// r with G0^r a MUB-cycler of determinant -1
bool antisymplectic_cyclers_exist(const EtaElement& eta);
std::optional<std::int64_t> antisymplectic_cycler_exponent(const EtaElement& eta);

/// Point of the projective line over GF(d): a field value or infinity.
struct ProjPoint {
    bool infinite = false;
    FieldElement value;  // meaningful only when finite

    static ProjPoint finite(FieldElement v) { return {false, std::move(v)}; }
    static ProjPoint infinity() { return {true, {}}; }
    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::string to_string() const;
};

// z -> (a z + b) / (c z + d) on the projective line
ProjPoint mobius(const GL2Mat& g, const ProjPoint& z);

}  // namespace gmub

#endif
