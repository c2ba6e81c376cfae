#ifndef GMUB_CYC_LINALG_HPP
#define GMUB_CYC_LINALG_HPP

#include <cstdint>
#include <vector>

#include "gmub/cyclotomic.hpp"

namespace gmub {

/// Dense vector over Q(omega_p).
class CycVector {
public:
    CycVector() = default;
    CycVector(std::int64_t dim, std::int64_t p);
    explicit CycVector(std::vector<CycNumber> entries);

    std::int64_t dim() const { return static_cast<std::int64_t>(e_.size()); }
    std::int64_t prime() const { return p_; }
    const CycNumber& operator[](std::int64_t i) const { return e_[i]; }
    CycNumber& operator[](std::int64_t i) { return e_[i]; }

    CycVector operator+(const CycVector& o) const;
    CycVector operator-(const CycVector& o) const;
    CycVector scaled(const CycNumber& c) const;
    CycVector apply(const GaloisAuto& g) const;
    CycVector conj() const;
    bool operator==(const CycVector& o) const;
    bool is_zero() const;

    // index of the first nonzero entry, or -1
    std::int64_t first_nonzero() const;
    // true when o == c * this for some nonzero scalar c in the field,
    // i.e. both vectors span the same line
    bool proportional_to(const CycVector& o) const;

private:
    std::int64_t p_ = 0;
    std::vector<CycNumber> e_;
};

// conjugate-linear in the first argument
CycNumber inner_product(const CycVector& a, const CycVector& b);

/// Dense square matrix over Q(omega_p), row-major.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(std::int64_t dim, std::int64_t p);

    static CycMatrix identity(std::int64_t dim, std::int64_t p);

    std::int64_t dim() const { return dim_; }
    std::int64_t prime() const { return p_; }
    const CycNumber& at(std::int64_t r, std::int64_t c) const { return e_[r * dim_ + c]; }
    CycNumber& at(std::int64_t r, std::int64_t c) { return e_[r * dim_ + c]; }

    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator*(const CycMatrix& o) const;
    CycVector operator*(const CycVector& v) const;
    CycMatrix scaled(const CycNumber& c) const;
    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    CycMatrix transpose() const;
    CycMatrix conj_transpose() const;
    CycMatrix apply(const GaloisAuto& g) const;  // entrywise
    CycNumber trace() const;
    bool is_identity() const;
    bool is_zero() const;

private:
    std::int64_t dim_ = 0;
    std::int64_t p_ = 0;
    std::vector<CycNumber> e_;
};

// exact kernel basis via Gauss-Jordan elimination with deterministic pivots
// (first row holding a nonzero entry in column order); each basis vector is
// scaled so that its first nonzero entry is 1
std::vector<CycVector> nullspace(const CycMatrix& m);

// outer product |a><b| (second argument enters conjugated)
CycMatrix outer_product(const CycVector& a, const CycVector& b);

}  // namespace gmub

#endif
