#ifndef GMUB_FINITE_FIELD_HPP
#define GMUB_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gmub {

class FieldElement;
class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// A concrete model of GF(p^n): an odd prime p together with the monic
/// irreducible modulus used to build the degree-n extension.  The modulus is
/// the first irreducible polynomial in base-p numeric order (constant term
/// least significant), so two runs always agree on the representation.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    static FieldSpecPtr make(std::int64_t p, int n);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }
    std::int64_t order() const { return order_; }
    // little-endian coefficients, length n+1, leading coefficient 1
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    // the constant v mod p
    FieldElement from_int(std::int64_t v) const;
    // element whose coefficients are the base-p digits of index (constant
    // term = least significant digit); inverse of FieldElement::index()
    FieldElement element(std::int64_t index) const;
    FieldElement from_coeffs(std::vector<std::int64_t> coeffs) const;

    bool same_as(const FieldSpec& other) const;

private:
    FieldSpec(std::int64_t p, int n, std::vector<std::int64_t> modulus);

    std::int64_t p_;
    int n_;
    std::int64_t order_;
    std::vector<std::int64_t> modulus_;
};

/// Element of GF(p^n) as a residue-coefficient vector of length n
/// (little-endian: coeffs[0] is the constant term).  Immutable value type.
class FieldElement {
public:
    FieldElement() = default;

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // position in the fixed enumeration of the field, in 0 .. p^n - 1
    std::int64_t index() const;
    // residue when the element lies in the prime subfield
    std::optional<std::int64_t> as_prime_residue() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement pow(std::uint64_t e) const;
    FieldElement inverse() const;
    // x -> x^p, the generator of the Galois group over GF(p)
    FieldElement frobenius() const;

    std::string to_string() const;

private:
    friend class FieldSpec;
    FieldElement(FieldSpecPtr spec, std::vector<std::int64_t> c);

    FieldSpecPtr spec_;
    std::vector<std::int64_t> c_;
};

// a + a^p + ... + a^{p^{n-1}}, returned as a residue mod p
std::int64_t field_trace(const FieldElement& a);

// smallest-index element of multiplicative order p^n - 1
FieldElement primitive_element(const FieldSpecPtr& spec);

// +1 for nonzero squares, -1 for non-squares, 0 for zero
int quadratic_character(const FieldElement& x);

// smaller-index square root when one exists
std::optional<FieldElement> sqrt_in_field(const FieldElement& x);

/// GF(p^{2n}) built over its own modulus, together with the embedding of
/// GF(p^n) obtained by sending the base generator to the smallest-index root
/// of the base modulus in the big field.
class QuadExtension {
public:
    static QuadExtension make(const FieldSpecPtr& base);

    const FieldSpecPtr& base() const { return base_; }
    const FieldSpecPtr& ext() const { return ext_; }
    const FieldElement& generator_image() const { return gen_image_; }

    FieldElement embed(const FieldElement& a) const;
    // preimage under the embedding, if the element lies in the base field
    std::optional<FieldElement> restrict_to_base(const FieldElement& a) const;

    QuadExtension() = default;

private:
    FieldSpecPtr base_;
    FieldSpecPtr ext_;
    FieldElement gen_image_;
    std::unordered_map<std::int64_t, std::int64_t> image_index_;
};

/// eta = thetabar^{(d-1)/(p-1)} for thetabar the primitive element of
/// GF(d^2); its multiplicative order is (p-1)(d+1).  Eigenvalues of
/// 2x2 matrices with irreducible characteristic polynomial and determinant
/// in the prime field are always powers of this element.
struct EtaElement {
    QuadExtension ext;
    FieldElement value;
    std::int64_t order = 0;
};

EtaElement make_eta(const FieldSpecPtr& spec);

// multiplicative order of a nonzero element
std::int64_t multiplicative_order(const FieldElement& a);

}  // namespace gmub

#endif
