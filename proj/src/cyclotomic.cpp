#include "gmub/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmub {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

void require_same_prime(const CycNumber& a, const CycNumber& b) {
    if (a.prime() == 0 || b.prime() == 0 || a.prime() != b.prime())
        throw std::invalid_argument("cyclotomic numbers belong to different fields");
}

// --- exact polynomial helpers over Q, used for inversion mod 1+x+...+x^{p-1}

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    qtrim(r);
    return r;
}

// division with remainder; divisor nonzero
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& f) {
    qtrim(a);
    QPoly q(a.size() > f.size() ? a.size() - f.size() + 1 : 1, mpq_class(0));
    while (a.size() >= f.size() && !a.empty()) {
        mpq_class c = a.back() / f.back();
        size_t shift = a.size() - f.size();
        q[shift] = c;
        for (size_t i = 0; i < f.size(); ++i) a[i + shift] -= c * f[i];
        qtrim(a);
    }
    qtrim(q);
    return {q, a};
}

}  // namespace

GaloisAuto::GaloisAuto(std::int64_t p_, std::int64_t k_) : p(p_), k(mod(k_, p_)) {
    if (k == 0) throw std::invalid_argument("Galois exponent must be nonzero mod p");
}

GaloisAuto GaloisAuto::compose(const GaloisAuto& o) const {
    if (p != o.p) throw std::invalid_argument("automorphisms of different fields");
    return GaloisAuto(p, mod(k * o.k, p));
}

GaloisAuto GaloisAuto::inverse() const {
    // k^{p-2} mod p
    std::int64_t r = 1, base = k, e = p - 2;
    while (e > 0) {
        if (e & 1) r = mod(r * base, p);
        base = mod(base * base, p);
        e >>= 1;
    }
    return GaloisAuto(p, r);
}

GaloisAuto GaloisAuto::pow(std::int64_t e) const {
    GaloisAuto g = e < 0 ? inverse() : *this;
    std::int64_t m = e < 0 ? -e : e;
    GaloisAuto r(p, 1);
    while (m > 0) {
        if (m & 1) r = r.compose(g);
        g = g.compose(g);
        m >>= 1;
    }
    return r;
}

CycNumber CycNumber::zero(std::int64_t p) {
    if (p < 3) throw std::invalid_argument("cyclotomic prime must be at least 3");
    return CycNumber(p, std::vector<mpq_class>(p - 1, mpq_class(0)));
}

CycNumber CycNumber::one(std::int64_t p) { return rational(p, mpq_class(1)); }

CycNumber CycNumber::rational(std::int64_t p, const mpq_class& q) {
    CycNumber r = zero(p);
    r.c_[0] = q;
    return r;
}

CycNumber CycNumber::integer(std::int64_t p, long v) {
    return rational(p, mpq_class(v));
}

CycNumber CycNumber::omega_pow(std::int64_t p, std::int64_t e) {
    CycNumber r = zero(p);
    e = mod(e, p);
    if (e < p - 1) {
        r.c_[e] = 1;
    } else {
        // omega^{p-1} = -(1 + omega + ... + omega^{p-2})
        for (auto& c : r.c_) c = -1;
    }
    return r;
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycNumber::is_real() const { return conj() == *this; }

std::optional<mpq_class> CycNumber::rational_value() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    require_same_prime(*this, o);
    CycNumber r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    require_same_prime(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    require_same_prime(*this, o);
    CycNumber r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    require_same_prime(*this, o);
    const std::int64_t p = p_;
    // convolve, then fold exponents back below p-1
    std::vector<mpq_class> acc(2 * p - 3, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            acc[i + j] += c_[i] * o.c_[j];
        }
    }
    CycNumber r = zero(p);
    for (std::int64_t e = 0; e < static_cast<std::int64_t>(acc.size()); ++e) {
        if (acc[e] == 0) continue;
        std::int64_t em = mod(e, p);
        if (em < p - 1) {
            r.c_[em] += acc[e];
        } else {
            for (auto& c : r.c_) c -= acc[e];
        }
    }
    return r;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero in cyclotomic field");
    // extended Euclid against the minimal polynomial of omega
    QPoly f(p_, mpq_class(1));  // 1 + x + ... + x^{p-1}
    QPoly a(c_.begin(), c_.end());
    qtrim(a);
    QPoly r0 = f, r1 = a;
    QPoly s0 = {}, s1 = {mpq_class(1)};  // s tracks the coefficient of a
    while (!r1.empty()) {
        auto [q, rem] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd is a nonzero constant (f is irreducible over Q)
    if (r0.size() != 1)
        throw std::logic_error("cyclotomic inverse: gcd not constant");
    CycNumber inv = zero(p_);
    for (size_t i = 0; i < s0.size(); ++i) inv.c_[i] = s0[i] / r0[0];
    return inv;
}

CycNumber CycNumber::operator/(const CycNumber& o) const { return *this * o.inverse(); }

bool CycNumber::operator==(const CycNumber& o) const {
    require_same_prime(*this, o);
    return c_ == o.c_;
}

bool CycNumber::operator<(const CycNumber& o) const {
    require_same_prime(*this, o);
    for (size_t i = 0; i < c_.size(); ++i) {
        int cmp = ::cmp(c_[i], o.c_[i]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

CycNumber CycNumber::conj() const { return apply(GaloisAuto(p_, p_ - 1)); }

CycNumber CycNumber::apply(const GaloisAuto& g) const {
    if (g.p != p_) throw std::invalid_argument("automorphism of a different field");
    CycNumber r = zero(p_);
    for (std::int64_t e = 0; e < p_ - 1; ++e) {
        if (c_[e] == 0) continue;
        std::int64_t em = mod(e * g.k, p_);
        if (em < p_ - 1) {
            r.c_[em] += c_[e];
        } else {
            for (auto& c : r.c_) c -= c_[e];
        }
    }
    return r;
}

CycNumber CycNumber::pow(std::uint64_t e) const {
    CycNumber r = one(p_);
    CycNumber base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string CycNumber::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (std::int64_t e = 0; e < p_ - 1; ++e) {
        if (c_[e] == 0) continue;
        if (any) os << " + ";
        os << c_[e].get_str();
        if (e >= 1) os << "*w^" << e;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

CycNumber gauss_sum(std::int64_t p) {
    CycNumber g = CycNumber::zero(p);
    std::vector<bool> residue(p, false);
    for (std::int64_t y = 1; y < p; ++y) residue[(y * y) % p] = true;
    for (std::int64_t x = 1; x < p; ++x)
        g += residue[x] ? CycNumber::omega_pow(p, x) : -CycNumber::omega_pow(p, x);
    return g;
}

ComplexInterval embed(const CycNumber& x, mpfr_prec_t precision) {
    if (precision < 64) throw std::invalid_argument("embedding precision below 64 bits");
    const std::int64_t p = x.prime();
    RealInterval two_pi_over_p =
        RealInterval::pi(precision) * RealInterval::from_rational(mpq_class(2, p), precision);
    ComplexInterval acc{RealInterval::from_int(0, precision),
                        RealInterval::from_int(0, precision)};
    for (std::int64_t e = 0; e < p - 1; ++e) {
        const mpq_class& q = x.coeffs()[e];
        if (q == 0) continue;
        RealInterval angle = two_pi_over_p * RealInterval::from_int(e, precision);
        RealInterval coeff = RealInterval::from_rational(q, precision);
        acc.re = acc.re + coeff * angle.cos();
        acc.im = acc.im + coeff * angle.sin();
    }
    return acc;
}

}  // namespace gmub
