// command-line front end: every pipeline stage with JSON output and a
// one-shot verification suite

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>

#include "gmub/json_io.hpp"
#include "gmub/polytope.hpp"
#include "gmub/verify.hpp"

namespace {

using namespace gmub;

struct RunConfig {
    std::int64_t p = 3;
    int n = 1;
    long precision = 128;
    std::string out;
    bool json = false;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    std::int64_t max_d = 32;
};

void emit(const RunConfig& cfg, const Json& artifact, const std::string& text) {
    std::string payload = cfg.json ? artifact.dump(2) + "\n" : text;
    if (cfg.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(cfg.out);
        if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
        f << payload;
    }
}

FieldSpecPtr checked_spec(const RunConfig& cfg) {
    FieldSpecPtr spec = FieldSpec::make(cfg.p, cfg.n);
    if (spec->order() > cfg.max_d)
        throw CLI::ValidationError(
            "--p/--n", "dimension " + std::to_string(spec->order()) +
                           " exceeds the --max-d guard of " + std::to_string(cfg.max_d));
    return spec;
}

int cmd_field_info(const RunConfig& cfg) {
    FieldSpecPtr spec = checked_spec(cfg);
    EtaElement eta = make_eta(spec);
    FieldElement theta = primitive_element(spec);

    std::vector<std::int64_t> residues;
    for (std::int64_t i = 1; i < spec->order(); ++i)
        if (quadratic_character(spec->element(i)) == 1) residues.push_back(i);

    Json j;
    j["schema"] = 1;
    j["field"] = to_json(*spec);
    j["primitive_element"] = to_json(theta);
    j["quadratic_residue_indices"] = residues;
    j["eta_order"] = eta.order;
    j["ext_modulus"] = to_json(*eta.ext.ext());

    std::ostringstream os;
    os << "GF(" << spec->order() << ") = GF(" << spec->p() << "^" << spec->n() << ")\n";
    os << "modulus coefficients (constant first): ";
    for (auto c : spec->modulus()) os << c << " ";
    os << "\nprimitive element " << theta.to_string() << "\n";
    os << residues.size() << " quadratic residues\n";
    os << "eta order " << eta.order << " = (p-1)(d+1)\n";
    emit(cfg, j, os.str());
    return 0;
}

int cmd_mub(const RunConfig& cfg) {
    FieldSpecPtr spec = checked_spec(cfg);
    MUBSet mub = MUBSet::build(spec);
    auto grid = verify::mub_grid(mub);
    Json j;
    j["schema"] = 1;
    j["mub"] = to_json(mub);
    j["grid_exact"] = grid.pass;
    std::ostringstream os;
    os << (mub.d() + 1) << " bases of " << mub.d() << " vectors; unbiasedness grid "
       << (grid.pass ? "holds exactly" : "FAILED") << "\n";
    emit(cfg, j, os.str());
    return grid.pass ? 0 : 1;
}

int cmd_cyclers(const RunConfig& cfg) {
    FieldSpecPtr spec = checked_spec(cfg);
    if (spec->n() % 2 == 0)
        throw CLI::ValidationError("--n", "no MUB-cyclers exist for even extension degree");
    EtaElement eta = make_eta(spec);
    GL2Mat g0 = cycler_generator(eta);
    const std::int64_t d = spec->order();

    Json list = Json::array();
    std::ostringstream os;
    os << "cycler generator G0 = " << g0.to_string() << ", order "
       << matrix_order(g0) << "\n";
    for (std::int64_t r = 1; r < eta.order; ++r) {
        if (std::gcd(r, d + 1) != 1) continue;
        GL2Mat g = g0.pow(static_cast<std::uint64_t>(r));
        if (!is_mub_cycler(g, eta)) throw std::logic_error("generator power not a cycler");
        bool anti = (-g.det()).is_one();
        Json e;
        e["r"] = r;
        e["matrix"] = to_json(g);
        e["suborder"] = suborder(g);
        e["antisymplectic"] = anti;
        list.push_back(std::move(e));
        os << "r=" << r << " suborder=" << suborder(g)
           << (anti ? " antisymplectic" : "") << "\n";
    }
    Json j;
    j["schema"] = 1;
    j["d"] = d;
    j["generator"] = to_json(g0);
    j["cyclers"] = std::move(list);
    emit(cfg, j, os.str());
    return 0;
}

int cmd_balanced(const RunConfig& cfg) {
    FieldSpecPtr spec = checked_spec(cfg);
    if (spec->n() % 2 == 0)
        throw CLI::ValidationError(
            "--n", "no cyclers in even extension degree, so no invariant state");
    EtaElement eta = make_eta(spec);
    MUBSet mub = MUBSet::build(spec);
    GUnitary gu = GUnitary::make(cycler_generator(eta));
    EigenResult res = invariant_vector(gu, eta);
    auto balanced = is_mub_balanced(mub, res.psi);
    bool mus = is_minimum_uncertainty(mub, res.psi);
    RenyiReport renyi = renyi_report(mub, res.psi, cfg.precision);

    Json j;
    j["schema"] = 1;
    j["d"] = spec->order();
    j["state"] = to_json(res, cfg.precision);
    j["balanced"] = balanced.balanced;
    j["minimum_uncertainty"] = mus;
    j["open_case"] = spec->order() % 4 == 1;
    j["renyi_total"] = renyi.total.to_string(static_cast<int>(cfg.precision / 4));
    j["renyi_bound"] = renyi.bound.to_string(static_cast<int>(cfg.precision / 4));

    std::ostringstream os;
    os << "invariant state of the generator cycler at d=" << spec->order() << "\n";
    os << "balanced=" << balanced.balanced << " minimum-uncertainty=" << mus;
    if (spec->order() % 4 == 1) os << "  (d = 1 mod 4: verdict recorded as data)";
    os << "\ntotal quadratic Renyi entropy " << renyi.total.to_string(12) << " >= bound "
       << renyi.bound.to_string(12) << "\n";
    emit(cfg, j, os.str());
    return 0;
}

int cmd_polytope(const RunConfig& cfg) {
    FieldSpecPtr spec = checked_spec(cfg);
    MUBSet mub = MUBSet::build(spec);
    auto poly = verify::polytope_identities(mub);
    Json j;
    j["schema"] = 1;
    j["d"] = spec->order();
    j["identities_exact"] = poly.pass;
    std::ostringstream os;
    os << "polytope identities at d=" << spec->order() << ": "
       << (poly.pass ? "hold exactly" : "FAILED") << "\n";
    if (spec->n() % 2 == 1 && spec->order() % 4 == 3) {
        EtaElement eta = make_eta(spec);
        AmburgResult am = amburg_wigner(eta);
        j["wigner"] = to_json(am.table);
        j["wigner_direct_match"] = am.direct_match;
        os << "balanced-state Wigner table emitted ("
           << (am.direct_match ? "direct match" : "projector match") << ")\n";
    }
    emit(cfg, j, os.str());
    return poly.pass ? 0 : 1;
}

int cmd_verify_all(const RunConfig& cfg) {
    FieldSpecPtr spec = checked_spec(cfg);
    verify::Rng rng(cfg.seed);
    std::vector<verify::CheckResult> results;
    auto run = [&](auto&& fn) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back({"exception", false, e.what()});
        }
    };

    run([&] { return verify::gauss_sum_square(spec->p()); });
    run([&] { return verify::sl_faithfulness(spec, 20, rng); });
    run([&] { return verify::weyl_covariance(spec, 20, rng); });
    MUBSet mub = MUBSet::build(spec);
    run([&] { return verify::mub_grid(mub); });
    run([&] { return verify::power_recurrence(spec, 50, rng); });
    run([&] { return verify::nonsplit_power_identity(spec, 50, rng); });
    EtaElement eta = make_eta(spec);
    run([&] { return verify::companion_suborder_scan(spec, eta); });
    run([&] { return verify::polytope_identities(mub); });
    if (spec->order() <= 9) run([&] { return verify::group_orders(spec); });
    if (spec->n() % 2 == 1) {
        run([&] { return verify::glp_faithfulness(spec, 10, rng); });
        run([&] { return verify::antisymplectic_existence(eta); });
        run([&] { return verify::projector_identities(eta); });
        run([&] { return verify::invariant_vector_checks(eta); });
        run([&] { return verify::balanced_verdict(mub, eta); });
        if (spec->order() % 4 == 3)
            run([&] { return verify::amburg_crosscheck(eta); });
    } else {
        run([&] { return verify::sign_census(spec, 10, rng); });
    }

    bool all = true;
    Json arr = Json::array();
    std::ostringstream os;
    for (const auto& r : results) {
        all = all && r.pass;
        Json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        arr.push_back(std::move(e));
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  " << r.detail << "\n";
    }
    os << (all ? "all identities hold exactly" : "FAILURES PRESENT") << "\n";
    Json j;
    j["schema"] = 1;
    j["d"] = spec->order();
    j["checks"] = std::move(arr);
    j["all_pass"] = all;
    emit(cfg, j, os.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Weyl-Heisenberg, Galois-unitary and MUB toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--p", cfg.p, "odd prime characteristic")->capture_default_str();
    app.add_option("--n", cfg.n, "extension degree")->capture_default_str();
    app.add_option("--precision", cfg.precision, "bits for decimal rendering")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "write output to this file");
    app.add_flag("--json", cfg.json, "emit the JSON artifact instead of text");
    app.add_option("--seed", cfg.seed, "seed for randomized property checks")
        ->capture_default_str();
    app.add_option("--max-d", cfg.max_d,
                   "refuse dimensions above this bound (exact arithmetic cost grows fast)")
        ->capture_default_str();

    int (*handler)(const RunConfig&) = nullptr;
    app.add_subcommand("field-info", "modulus, primitive element, residues, eta")
        ->callback([&] { handler = cmd_field_info; });
    app.add_subcommand("mub", "the complete set of d+1 bases with the exact grid check")
        ->callback([&] { handler = cmd_mub; });
    app.add_subcommand("cyclers", "enumerate MUB-cycling classes and flag anti-symplectic ones")
        ->callback([&] { handler = cmd_cyclers; });
    app.add_subcommand("balanced", "invariant state of the generator cycler and its verdicts")
        ->callback([&] { handler = cmd_balanced; });
    app.add_subcommand("polytope", "phase-point simplex and line-operator identities")
        ->callback([&] { handler = cmd_polytope; });
    app.add_subcommand("verify-all", "run every exact identity check for this dimension")
        ->callback([&] { handler = cmd_verify_all; });

    try {
        app.parse(argc, argv);
        return handler(cfg);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
