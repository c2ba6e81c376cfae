#include "gmub/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmub {
namespace {

using Poly = std::vector<std::int64_t>;  // little-endian residues mod p

std::int64_t mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::int64_t x = i < a.size() ? a[i] : 0;
        std::int64_t y = i < b.size() ? b[i] : 0;
        r[i] = mod(x - y, p);
    }
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod(r[i + j] + a[i] * b[j], p);
    trim(r);
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // p is prime, a nonzero mod p
    std::int64_t r = 1, e = p - 2, base = mod(a, p);
    while (e > 0) {
        if (e & 1) r = mod(r * base, p);
        base = mod(base * base, p);
        e >>= 1;
    }
    return r;
}

Poly poly_rem(Poly a, const Poly& f, std::int64_t p) {
    trim(a);
    if (f.empty()) throw std::invalid_argument("polynomial division by zero");
    std::int64_t lead_inv = inv_mod(f.back(), p);
    while (degree(a) >= degree(f)) {
        std::int64_t c = mod(a.back() * lead_inv, p);
        int shift = degree(a) - degree(f);
        for (size_t i = 0; i < f.size(); ++i)
            a[i + shift] = mod(a[i + shift] - c * f[i], p);
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        // make monic so gcd == {1} identifies coprimality
        std::int64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = mod(c * inv, p);
    }
    return a;
}

// x^(p^k) mod f by repeated frobenius of x
Poly x_power_pk_mod(const Poly& f, std::int64_t p, int k) {
    Poly x = {0, 1};
    Poly acc = poly_rem(x, f, p);
    for (int i = 0; i < k; ++i) {
        // acc -> acc^p mod f via square-and-multiply on the exponent p
        Poly r = {1};
        Poly base = acc;
        std::int64_t e = p;
        while (e > 0) {
            if (e & 1) r = poly_rem(poly_mul(r, base, p), f, p);
            base = poly_rem(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        acc = std::move(r);
    }
    return acc;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
    int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    for (int k = 1; k < n; ++k) {
        Poly xpk = x_power_pk_mod(f, p, k);
        Poly g = poly_sub(xpk, {0, 1}, p);
        Poly d = poly_gcd(g, f, p);
        if (!(d.size() == 1 && d[0] == 1)) return false;
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
    std::vector<std::int64_t> fs;
    for (std::int64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            fs.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

}  // namespace

FieldSpec::FieldSpec(std::int64_t p, int n, std::vector<std::int64_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < n; ++i) order_ *= p;
}

FieldSpecPtr FieldSpec::make(std::int64_t p, int n) {
    if (!is_prime(p) || p < 3 || p % 2 == 0)
        throw std::invalid_argument("field characteristic must be an odd prime, got " +
                                    std::to_string(p));
    if (n <= 0)
        throw std::invalid_argument("extension degree must be positive, got " +
                                    std::to_string(n));
    std::int64_t order = 1;
    for (int i = 0; i < n; ++i) {
        order *= p;
        if (order > (1LL << 30))
            throw std::invalid_argument("field order too large");
    }

    std::vector<std::int64_t> modulus;
    if (n == 1) {
        modulus = {0, 1};  // the polynomial x
    } else {
        // first monic irreducible of degree n in base-p numeric order
        for (std::int64_t v = 0; v < order; ++v) {
            Poly f(n + 1, 0);
            std::int64_t t = v;
            for (int i = 0; i < n; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[n] = 1;
            if (is_irreducible(f, p)) {
                modulus = std::move(f);
                break;
            }
        }
        if (modulus.empty())
            throw std::logic_error("no irreducible polynomial found");
    }
    return FieldSpecPtr(new FieldSpec(p, n, std::move(modulus)));
}

FieldElement FieldSpec::zero() const { return from_int(0); }
FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(std::int64_t v) const {
    std::vector<std::int64_t> c(n_, 0);
    c[0] = mod(v, p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::element(std::int64_t index) const {
    if (index < 0 || index >= order_)
        throw std::invalid_argument("element index out of range");
    std::vector<std::int64_t> c(n_, 0);
    for (int i = 0; i < n_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_coeffs(std::vector<std::int64_t> coeffs) const {
    if (static_cast<int>(coeffs.size()) > n_) {
        // reduce modulo the field modulus
        Poly f = coeffs;
        for (auto& c : f) c = mod(c, p_);
        f = poly_rem(f, modulus_, p_);
        f.resize(n_, 0);
        return FieldElement(shared_from_this(), std::move(f));
    }
    coeffs.resize(n_, 0);
    for (auto& c : coeffs) c = mod(c, p_);
    return FieldElement(shared_from_this(), std::move(coeffs));
}

bool FieldSpec::same_as(const FieldSpec& other) const {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
}

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<std::int64_t> c)
    : spec_(std::move(spec)), c_(std::move(c)) {}

namespace {
void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same_as(*b.spec()))
        throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t FieldElement::index() const {
    std::int64_t idx = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        idx = idx * spec_->p() + c_[i];
    return idx;
}

std::optional<std::int64_t> FieldElement::as_prime_residue() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_spec(*this, o);
    std::vector<std::int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod(c_[i] + o.c_[i], spec_->p());
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_spec(*this, o);
    std::vector<std::int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod(c_[i] - o.c_[i], spec_->p());
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<std::int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod(-c_[i], spec_->p());
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_spec(*this, o);
    Poly prod = poly_mul(c_, o.c_, spec_->p());
    prod = poly_rem(prod, spec_->modulus(), spec_->p());
    prod.resize(spec_->n(), 0);
    return FieldElement(spec_, std::move(prod));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_spec(*this, o);
    return c_ == o.c_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r = spec_->one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero in finite field");
    return pow(static_cast<std::uint64_t>(spec_->order() - 2));
}

FieldElement FieldElement::frobenius() const {
    return pow(static_cast<std::uint64_t>(spec_->p()));
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

std::int64_t field_trace(const FieldElement& a) {
    FieldElement acc = a;
    FieldElement term = a;
    for (int i = 1; i < a.spec()->n(); ++i) {
        term = term.frobenius();
        acc = acc + term;
    }
    auto res = acc.as_prime_residue();
    if (!res) throw std::logic_error("trace left the prime field");
    return *res;
}

std::int64_t multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("zero has no multiplicative order");
    FieldElement x = a;
    std::int64_t m = 1;
    while (!x.is_one()) {
        x = x * a;
        ++m;
    }
    return m;
}

FieldElement primitive_element(const FieldSpecPtr& spec) {
    std::int64_t m = spec->order() - 1;
    auto qs = prime_factors(m);
    for (std::int64_t idx = 2; idx < spec->order(); ++idx) {
        FieldElement cand = spec->element(idx);
        bool ok = true;
        for (std::int64_t q : qs) {
            if (cand.pow(static_cast<std::uint64_t>(m / q)).is_one()) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    throw std::logic_error("no primitive element found");
}

int quadratic_character(const FieldElement& x) {
    if (x.is_zero()) return 0;
    FieldElement r = x.pow(static_cast<std::uint64_t>((x.spec()->order() - 1) / 2));
    if (r.is_one()) return 1;
    if ((-r).is_one()) return -1;
    throw std::logic_error("quadratic character is not a sign");
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& x) {
    if (x.is_zero()) return x;
    if (quadratic_character(x) == -1) return std::nullopt;
    for (std::int64_t idx = 1; idx < x.spec()->order(); ++idx) {
        FieldElement y = x.spec()->element(idx);
        if (y * y == x) return y;
    }
    return std::nullopt;  // unreachable for squares
}

QuadExtension QuadExtension::make(const FieldSpecPtr& base) {
    QuadExtension q;
    q.base_ = base;
    q.ext_ = FieldSpec::make(base->p(), 2 * base->n());

    // smallest-index root of the base modulus inside the big field
    const auto& f = base->modulus();
    std::optional<FieldElement> root;
    for (std::int64_t idx = 0; idx < q.ext_->order(); ++idx) {
        FieldElement e = q.ext_->element(idx);
        FieldElement acc = q.ext_->from_int(f.back());
        for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i)
            acc = acc * e + q.ext_->from_int(f[i]);
        if (acc.is_zero()) {
            root = e;
            break;
        }
    }
    if (!root) throw std::logic_error("base modulus has no root in the extension");
    q.gen_image_ = *root;

    for (std::int64_t idx = 0; idx < base->order(); ++idx)
        q.image_index_[q.embed(base->element(idx)).index()] = idx;
    return q;
}

FieldElement QuadExtension::embed(const FieldElement& a) const {
    if (!a.spec()->same_as(*base_))
        throw std::invalid_argument("element does not belong to the base field");
    const auto& c = a.coeffs();
    FieldElement acc = ext_->from_int(c.back());
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i)
        acc = acc * gen_image_ + ext_->from_int(c[i]);
    return acc;
}

std::optional<FieldElement> QuadExtension::restrict_to_base(const FieldElement& a) const {
    auto it = image_index_.find(a.index());
    if (it == image_index_.end()) return std::nullopt;
    return base_->element(it->second);
}

EtaElement make_eta(const FieldSpecPtr& spec) {
    EtaElement e;
    e.ext = QuadExtension::make(spec);
    FieldElement theta = primitive_element(e.ext.ext());
    std::int64_t d = spec->order();
    std::int64_t exp = (d - 1) / (spec->p() - 1);
    e.value = theta.pow(static_cast<std::uint64_t>(exp));
    e.order = multiplicative_order(e.value);
    if (e.order != (spec->p() - 1) * (d + 1))
        throw std::logic_error("eta has unexpected multiplicative order");
    return e;
}

}  // namespace gmub
