#include "gmub/cyc_linalg.hpp"

#include <stdexcept>

namespace gmub {
namespace {
void require_same_shape(std::int64_t a, std::int64_t b) {
    if (a != b) throw std::invalid_argument("dimension mismatch");
}
}  // namespace

CycVector::CycVector(std::int64_t dim, std::int64_t p)
    : p_(p), e_(dim, CycNumber::zero(p)) {}

CycVector::CycVector(std::vector<CycNumber> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("empty vector");
    p_ = e_[0].prime();
}

CycVector CycVector::operator+(const CycVector& o) const {
    require_same_shape(dim(), o.dim());
    CycVector r = *this;
    for (std::int64_t i = 0; i < dim(); ++i) r.e_[i] += o.e_[i];
    return r;
}

CycVector CycVector::operator-(const CycVector& o) const {
    require_same_shape(dim(), o.dim());
    CycVector r = *this;
    for (std::int64_t i = 0; i < dim(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
}

CycVector CycVector::scaled(const CycNumber& c) const {
    CycVector r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

CycVector CycVector::apply(const GaloisAuto& g) const {
    CycVector r = *this;
    for (auto& x : r.e_) x = x.apply(g);
    return r;
}

CycVector CycVector::conj() const { return apply(GaloisAuto(p_, p_ - 1)); }

bool CycVector::operator==(const CycVector& o) const {
    if (dim() != o.dim()) return false;
    for (std::int64_t i = 0; i < dim(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool CycVector::is_zero() const { return first_nonzero() < 0; }

std::int64_t CycVector::first_nonzero() const {
    for (std::int64_t i = 0; i < dim(); ++i)
        if (!e_[i].is_zero()) return i;
    return -1;
}

bool CycVector::proportional_to(const CycVector& o) const {
    if (dim() != o.dim()) return false;
    std::int64_t i0 = first_nonzero();
    if (i0 < 0) return o.is_zero();
    if (o.e_[i0].is_zero()) return false;
    // cross-multiplied test avoids divisions
    for (std::int64_t i = 0; i < dim(); ++i)
        if (e_[i0] * o.e_[i] != o.e_[i0] * e_[i]) return false;
    return true;
}

CycNumber inner_product(const CycVector& a, const CycVector& b) {
    require_same_shape(a.dim(), b.dim());
    CycNumber acc = CycNumber::zero(a.prime());
    for (std::int64_t i = 0; i < a.dim(); ++i) acc += a[i].conj() * b[i];
    return acc;
}

CycMatrix::CycMatrix(std::int64_t dim, std::int64_t p)
    : dim_(dim), p_(p), e_(dim * dim, CycNumber::zero(p)) {}

CycMatrix CycMatrix::identity(std::int64_t dim, std::int64_t p) {
    CycMatrix m(dim, p);
    for (std::int64_t i = 0; i < dim; ++i) m.at(i, i) = CycNumber::one(p);
    return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    require_same_shape(dim_, o.dim_);
    CycMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    require_same_shape(dim_, o.dim_);
    CycMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    require_same_shape(dim_, o.dim_);
    CycMatrix r(dim_, p_);
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t k = 0; k < dim_; ++k) {
            const CycNumber& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::int64_t j = 0; j < dim_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

CycVector CycMatrix::operator*(const CycVector& v) const {
    require_same_shape(dim_, v.dim());
    CycVector r(dim_, p_);
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t j = 0; j < dim_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

CycMatrix CycMatrix::scaled(const CycNumber& c) const {
    CycMatrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (dim_ != o.dim_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(dim_, p_);
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix r(dim_, p_);
    for (std::int64_t i = 0; i < dim_; ++i)
        for (std::int64_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

CycMatrix CycMatrix::apply(const GaloisAuto& g) const {
    CycMatrix r = *this;
    for (auto& x : r.e_) x = x.apply(g);
    return r;
}

CycNumber CycMatrix::trace() const {
    CycNumber t = CycNumber::zero(p_);
    for (std::int64_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool CycMatrix::is_identity() const { return *this == identity(dim_, p_); }

bool CycMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<CycVector> nullspace(const CycMatrix& m) {
    const std::int64_t n = m.dim();
    const std::int64_t p = m.prime();
    // working copy, reduced in place to reduced row echelon form
    std::vector<std::vector<CycNumber>> rows(n, std::vector<CycNumber>(n, CycNumber::zero(p)));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);

    std::vector<std::int64_t> pivot_col;
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < n && rank < n; ++col) {
        std::int64_t pr = -1;
        for (std::int64_t r = rank; r < n; ++r)
            if (!rows[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        CycNumber inv = rows[rank][col].inverse();
        for (std::int64_t j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::int64_t r = 0; r < n; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            CycNumber f = rows[r][col];
            for (std::int64_t j = col; j < n; ++j)
                rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<CycVector> basis;
    for (std::int64_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        CycVector v(n, p);
        v[free_col] = CycNumber::one(p);
        for (std::int64_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = -rows[r][free_col];
        // canonical scale: first nonzero entry equal to 1
        std::int64_t i0 = v.first_nonzero();
        if (!v[i0].is_zero() && !(v[i0] == CycNumber::one(p)))
            v = v.scaled(v[i0].inverse());
        basis.push_back(std::move(v));
    }
    return basis;
}

CycMatrix outer_product(const CycVector& a, const CycVector& b) {
    require_same_shape(a.dim(), b.dim());
    CycMatrix r(a.dim(), a.prime());
    for (std::int64_t i = 0; i < a.dim(); ++i)
        for (std::int64_t j = 0; j < a.dim(); ++j) r.at(i, j) = a[i] * b[j].conj();
    return r;
}

}  // namespace gmub
