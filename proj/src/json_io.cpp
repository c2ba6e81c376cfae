#include "gmub/json_io.hpp"

namespace gmub {

Json to_json(const FieldSpec& spec) {
    Json j;
    j["p"] = spec.p();
    j["n"] = spec.n();
    j["modulus"] = spec.modulus();
    return j;
}

Json to_json(const FieldElement& e) { return Json(e.coeffs()); }

Json to_json(const CycNumber& x) {
    Json num = Json::array();
    Json den = Json::array();
    for (const auto& q : x.coeffs()) {
        num.push_back(q.get_num().get_str());
        den.push_back(q.get_den().get_str());
    }
    Json j;
    j["p"] = x.prime();
    j["num"] = num;
    j["den"] = den;
    return j;
}

Json to_json(const CycVector& v) {
    Json j = Json::array();
    for (std::int64_t i = 0; i < v.dim(); ++i) j.push_back(to_json(v[i]));
    return j;
}

Json to_json(const CycMatrix& m) {
    Json rows = Json::array();
    for (std::int64_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::int64_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["d"] = m.dim();
    j["p"] = m.prime();
    j["rows"] = rows;
    return j;
}

Json to_json(const GL2Mat& g) {
    Json j;
    j["a"] = to_json(g.a);
    j["b"] = to_json(g.b);
    j["c"] = to_json(g.c);
    j["d"] = to_json(g.d);
    return j;
}

Json to_json(const ProjPoint& z) {
    if (z.infinite) return Json("inf");
    return Json(z.value.index());
}

Json to_json(const MUBSet& mub) {
    Json bases;
    for (std::int64_t zi = 0; zi <= mub.d(); ++zi) {
        std::string key = zi == mub.d() ? "inf" : std::to_string(zi);
        Json basis = Json::array();
        for (std::int64_t r = 0; r < mub.d(); ++r) basis.push_back(to_json(mub.vec(zi, r)));
        bases[key] = std::move(basis);
    }
    Json j;
    j["d"] = mub.d();
    j["bases"] = std::move(bases);
    return j;
}

Json to_json(const WignerTable& w) {
    const std::int64_t d = w.spec->order();
    Json rows = Json::array();
    for (std::int64_t i = 0; i < d; ++i) {
        Json row = Json::array();
        for (std::int64_t j2 = 0; j2 < d; ++j2)
            row.push_back(to_json(w.values[i * d + j2]));
        rows.push_back(std::move(row));
    }
    Json j;
    j["d"] = d;
    j["W"] = rows;
    return j;
}

Json to_json(const EigenResult& r, mpfr_prec_t precision) {
    Json j;
    j["two_m0"] = r.two_m0;
    j["psi"] = to_json(r.psi);
    j["lambda"] = to_json(r.lambda);
    j["mu"] = to_json(r.mu);
    Json dec = Json::array();
    for (std::int64_t i = 0; i < r.psi.dim(); ++i)
        dec.push_back(decimal_string(r.psi[i], precision));
    j["psi_decimal"] = dec;
    return j;
}

std::string decimal_string(const CycNumber& x, mpfr_prec_t precision) {
    ComplexInterval c = embed(x, precision);
    int digits = static_cast<int>(precision / 4);
    if (c.im.contains_zero() && x.is_real()) return c.re.to_string(digits);
    return c.to_string(digits);
}

}  // namespace gmub
