#include "gmub/gl2.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmub {

GL2Mat GL2Mat::identity(const FieldSpecPtr& spec) {
    return {spec->one(), spec->zero(), spec->zero(), spec->one()};
}

GL2Mat GL2Mat::from_entries(FieldElement a, FieldElement b, FieldElement c,
                            FieldElement d) {
    GL2Mat g{std::move(a), std::move(b), std::move(c), std::move(d)};
    if (g.det().is_zero()) throw std::invalid_argument("matrix is singular");
    return g;
}

GL2Mat GL2Mat::companion(const FieldElement& tr, const FieldElement& det) {
    const auto& spec = tr.spec();
    return from_entries(spec->zero(), -det, spec->one(), tr);
}

bool GL2Mat::det_in_prime_field() const {
    return det().as_prime_residue().has_value();
}

GL2Mat GL2Mat::operator*(const GL2Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool GL2Mat::operator==(const GL2Mat& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

GL2Mat GL2Mat::inverse() const {
    FieldElement di = det().inverse();
    return {d * di, -b * di, -c * di, a * di};
}

GL2Mat GL2Mat::pow(std::uint64_t e) const {
    GL2Mat r = identity(spec());
    GL2Mat base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string GL2Mat::to_string() const {
    std::ostringstream os;
    os << "[[" << a.to_string() << "," << b.to_string() << "],[" << c.to_string()
       << "," << d.to_string() << "]]";
    return os.str();
}

std::int64_t matrix_order(const GL2Mat& g) {
    GL2Mat x = g;
    GL2Mat id = GL2Mat::identity(g.spec());
    std::int64_t m = 1;
    while (!(x == id)) {
        x = x * g;
        ++m;
        if (m > g.spec()->order() * g.spec()->order() * 4)
            throw std::logic_error("matrix order runaway");
    }
    return m;
}

GL2Classification classify(const GL2Mat& g, const EtaElement& eta) {
    if (g.det().is_zero()) throw std::invalid_argument("matrix is singular");
    const auto& spec = g.spec();
    FieldElement t = g.trace();
    FieldElement delta = g.det();
    FieldElement disc = t * t - spec->from_int(4) * delta;
    FieldElement half = spec->from_int(2).inverse();

    GL2Classification out;
    if (disc.is_zero()) {
        out.cls = GL2Class::Repeated;
        out.base_eigs = std::make_pair(t * half, t * half);
        return out;
    }
    if (quadratic_character(disc) == 1) {
        out.cls = GL2Class::Split;
        FieldElement j = *sqrt_in_field(disc);
        FieldElement l1 = (t + j) * half;
        FieldElement l2 = (t - j) * half;
        if (l2.index() < l1.index()) std::swap(l1, l2);
        out.base_eigs = std::make_pair(l1, l2);
        return out;
    }

    out.cls = GL2Class::NonSplit;
    // eigenvalues live in the quadratic extension
    const auto& ext = eta.ext;
    FieldElement t_big = ext.embed(t);
    FieldElement disc_big = ext.embed(disc);
    FieldElement j = *sqrt_in_field(disc_big);  // every base element is a square up there
    FieldElement half_big = ext.ext()->from_int(2).inverse();
    FieldElement lam = (t_big + j) * half_big;
    out.ext_eig = lam;

    if (g.det_in_prime_field()) {
        // discrete log of lambda+ to base eta by scanning its cyclic group
        FieldElement pw = eta.value;
        for (std::int64_t r = 1; r < eta.order; ++r) {
            if (pw == lam) {
                out.eta_exponent = r;
                break;
            }
            pw = pw * eta.value;
        }
        if (!out.eta_exponent)
            throw std::logic_error("nonsplit eigenvalue is not a power of eta");
    }
    return out;
}

std::vector<FieldElement> suborder_sequence(const GL2Mat& g, std::int64_t count) {
    const auto& spec = g.spec();
    FieldElement t = g.trace();
    FieldElement delta = g.det();
    std::vector<FieldElement> s;
    s.reserve(count + 1);
    s.push_back(spec->zero());
    s.push_back(spec->one());
    for (std::int64_t m = 1; m < count; ++m)
        s.push_back(t * s[m] - delta * s[m - 1]);
    return s;
}

std::int64_t suborder(const GL2Mat& g) {
    if (g.det().is_zero()) throw std::invalid_argument("matrix is singular");
    const auto& spec = g.spec();
    // for scalar matrices G itself is proportional to I; for every other G
    // the first zero of s_m marks exactly the powers proportional to I
    if (g.b.is_zero() && g.c.is_zero() && g.a == g.d) return 1;
    FieldElement t = g.trace();
    FieldElement delta = g.det();
    FieldElement prev = spec->zero();  // s_{m-1}
    FieldElement cur = spec->one();    // s_m, starting at m = 1
    for (std::int64_t m = 1; m <= spec->order() + 1; ++m) {
        if (cur.is_zero()) return m;
        FieldElement next = t * cur - delta * prev;
        prev = cur;
        cur = next;
    }
    throw std::logic_error("suborder exceeded d+1");
}

bool is_mub_cycler(const GL2Mat& g, const EtaElement& eta) {
    if (!g.det_in_prime_field())
        throw std::invalid_argument(
            "determinant lies outside the prime field: no g-unitary representation");
    if (g.spec()->n() % 2 == 0) return false;
    auto cls = classify(g, eta);
    if (cls.cls != GL2Class::NonSplit) return false;
    std::int64_t d = g.spec()->order();
    bool coprime = std::gcd(*cls.eta_exponent, d + 1) == 1;
    if (coprime != (suborder(g) == d + 1))
        throw std::logic_error("cycler criterion disagrees with the suborder");
    return coprime;
}

std::pair<GL2Mat, GL2Mat> canonical_form(const GL2Mat& g) {
    const auto& spec = g.spec();
    FieldElement t = g.trace();
    FieldElement delta = g.det();
    FieldElement disc = t * t - spec->from_int(4) * delta;
    if (disc.is_zero())
        throw std::invalid_argument("companion conjugation needs a nonzero discriminant");
    GL2Mat gc = GL2Mat::companion(t, delta);

    // S = [v | G v] works for any v with v, Gv independent; then fix det S = 1
    // by a centralizer factor x I + y Gc (its determinant is the norm form
    // x^2 + t x y + delta y^2, which takes every nonzero value)
    for (std::int64_t vi = 1; vi < spec->order() * spec->order(); ++vi) {
        FieldElement v1 = spec->element(vi % spec->order());
        FieldElement v2 = spec->element(vi / spec->order());
        FieldElement w1 = g.a * v1 + g.b * v2;
        FieldElement w2 = g.c * v1 + g.d * v2;
        FieldElement det0 = v1 * w2 - v2 * w1;
        if (det0.is_zero()) continue;
        FieldElement target = det0.inverse();
        for (std::int64_t xi = 0; xi < spec->order(); ++xi)
            for (std::int64_t yi = 0; yi < spec->order(); ++yi) {
                FieldElement x = spec->element(xi);
                FieldElement y = spec->element(yi);
                if ((x * x + t * x * y + delta * y * y) != target) continue;
                // C = x I + y Gc = [[x, -delta y], [y, x + t y]]
                GL2Mat s0{v1, w1, v2, w2};
                GL2Mat c{x, -delta * y, y, x + t * y};
                GL2Mat s = s0 * c;
                if (!s.det().is_one()) continue;
                if (!(s * gc * s.inverse() == g))
                    throw std::logic_error("companion conjugation failed to verify");
                return {s, gc};
            }
    }
    throw std::logic_error("no unimodular conjugator found");
}

GL2Mat cycler_generator(const EtaElement& eta) {
    const auto& base = eta.ext.base();
    if (base->n() % 2 == 0)
        throw std::invalid_argument("MUB-cyclers require an odd extension degree");
    std::int64_t d = base->order();
    FieldElement e = eta.value;
    FieldElement det_big = e.pow(static_cast<std::uint64_t>(d + 1));
    FieldElement tr_big = e + e.pow(static_cast<std::uint64_t>(d));
    auto det = eta.ext.restrict_to_base(det_big);
    auto tr = eta.ext.restrict_to_base(tr_big);
    if (!det || !tr) throw std::logic_error("eta data does not restrict to the base field");
    if (!det->as_prime_residue())
        throw std::logic_error("cycler determinant left the prime field");
    return GL2Mat::companion(*tr, *det);
}

std::optional<std::int64_t> antisymplectic_cycler_exponent(const EtaElement& eta) {
    const auto& base = eta.ext.base();
    std::int64_t d = base->order();
    std::int64_t p = base->p();
    // G0^r has determinant eta^{r(d+1)}; it equals -1 exactly when r is an
    // odd multiple of (p-1)/2
    for (std::int64_t r = 1; r < eta.order; ++r) {
        if (std::gcd(r, d + 1) != 1) continue;
        FieldElement det_big = eta.value.pow(static_cast<std::uint64_t>(r * (d + 1)));
        if ((-det_big).is_one()) {
            if (!(r % ((p - 1) / 2) == 0 && (r / ((p - 1) / 2)) % 2 == 1))
                throw std::logic_error("antisymplectic witness has unexpected form");
            return r;
        }
    }
    return std::nullopt;
}

bool antisymplectic_cyclers_exist(const EtaElement& eta) {
    bool expected = eta.ext.base()->order() % 4 == 3;
    bool found = antisymplectic_cycler_exponent(eta).has_value();
    if (expected != found)
        throw std::logic_error("antisymplectic existence disagrees with d mod 4");
    return found;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (infinite != o.infinite) return false;
    return infinite || value == o.value;
}

std::string ProjPoint::to_string() const {
    return infinite ? "inf" : value.to_string();
}

ProjPoint mobius(const GL2Mat& g, const ProjPoint& z) {
    if (z.infinite) {
        if (g.c.is_zero()) return ProjPoint::infinity();
        return ProjPoint::finite(g.a / g.c);
    }
    FieldElement den = g.c * z.value + g.d;
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint::finite((g.a * z.value + g.b) / den);
}

}  // namespace gmub
