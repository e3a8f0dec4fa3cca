// Command-line surface: bounds tables, generic-freeness certificates,
// Weyl-kernel queries and the affine-line polynomial verifier.
//
// Exit codes: 0 success/pass, 2 usage error, 3 certificate failure,
// 4 refusal (infeasible strategy or unsupported target), 1 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "edtool/edbounds.hpp"
#include "edtool/errors.hpp"
#include "edtool/serialize.hpp"

namespace {

using edt::RefusalError;
using edt::serialize::Json;
namespace eb = edt::edbounds;
namespace gf = edt::genfree;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertFail = 3;
constexpr int kExitRefusal = 4;

struct OutputConfig {
    std::string format = "text";
    std::string path;
};

void emit(const OutputConfig& out, const std::string& payload) {
    if (out.path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out.path);
    f << payload;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// -- descriptor selection ----------------------------------------------------

struct GroupSelect {
    std::string type;
    std::string isogeny = "adjoint";
    unsigned mu = 0;
    std::string family;
    unsigned n = 0;
    unsigned characteristic = 0;
    bool all = false;
};

eb::GroupDescriptor descriptor_from(const GroupSelect& sel) {
    const unsigned p = sel.characteristic;
    if (!sel.family.empty()) {
        if (sel.n == 0) throw CLI::ValidationError("--family needs --n");
        if (sel.family == "PGL") return eb::pgl(sel.n, p);
        if (sel.family == "SL") return eb::sl_quotient(sel.n, sel.mu ? sel.mu : 1, p);
        if (sel.family == "GL") return eb::gl_quotient(sel.n, sel.mu ? sel.mu : 1, p);
        if (sel.family == "Sp") return eb::sp(2 * sel.n, p);
        if (sel.family == "PSp") return eb::psp(2 * sel.n, p);
        if (sel.family == "SO") return eb::so(sel.n, p);
        if (sel.family == "Spin") return eb::spin(sel.n, p);
        if (sel.family == "HSpin") return eb::hspin(sel.n, p);
        throw CLI::ValidationError("unknown --family " + sel.family +
                                   " (PGL, SL, GL, Sp, PSp, SO, Spin, HSpin)");
    }
    if (sel.type.empty()) throw CLI::ValidationError("need --type or --family");
    auto t = edt::rootsys::DynkinType::parse(sel.type);
    if (sel.isogeny == "adjoint" || sel.isogeny == "self") return eb::adjoint_group(t, p);
    if (sel.isogeny == "sc" || sel.isogeny == "simply-connected") {
        if (sel.mu) return eb::sl_quotient(t.rank + 1, sel.mu, p);
        return eb::simply_connected_group(t, p);
    }
    if (sel.isogeny == "so") return eb::so(2 * t.rank, p);
    if (sel.isogeny == "spin")
        return eb::spin(t.family == edt::rootsys::Family::B ? 2 * t.rank + 1 : 2 * t.rank, p);
    if (sel.isogeny == "hspin") return eb::hspin(2 * t.rank, p);
    if (sel.isogeny == "sl" || sel.isogeny == "mu")
        return eb::sl_quotient(t.rank + 1, sel.mu ? sel.mu : t.rank + 1, p);
    throw CLI::ValidationError("unknown --isogeny " + sel.isogeny);
}

std::vector<eb::GroupDescriptor> sweep_descriptors(unsigned p) {
    using edt::rootsys::DynkinType;
    using edt::rootsys::Family;
    std::vector<eb::GroupDescriptor> ds;
    for (unsigned rank = 2; rank <= 8; ++rank) {
        unsigned n = rank + 1;
        for (unsigned m = 1; m <= n; ++m)
            if (n % m == 0) ds.push_back(eb::sl_quotient(n, m, p));
        ds.push_back(eb::adjoint_group({Family::B, rank}, p));
        if (rank >= 3) {
            ds.push_back(eb::sp(2 * rank, p));
            ds.push_back(eb::psp(2 * rank, p));
        }
        if (rank >= 4) {
            ds.push_back(eb::adjoint_group({Family::D, rank}, p));
            ds.push_back(eb::so(2 * rank, p));
        }
    }
    for (const char* label : {"G2", "F4", "E8"})
        ds.push_back(eb::adjoint_group(DynkinType::parse(label), p));
    for (const char* label : {"E6", "E7"}) {
        ds.push_back(eb::adjoint_group(DynkinType::parse(label), p));
        ds.push_back(eb::simply_connected_group(DynkinType::parse(label), p));
    }
    return ds;
}

int run_bounds(const GroupSelect& sel, bool all_rules, const OutputConfig& out) {
    std::vector<eb::GroupDescriptor> ds;
    if (sel.all)
        ds = sweep_descriptors(sel.characteristic);
    else
        ds.push_back(descriptor_from(sel));

    std::vector<eb::BoundReport> rows;
    for (const auto& d : ds) {
        if (all_rules) {
            for (auto& r : eb::applicable_bounds(d)) rows.push_back(std::move(r));
        } else {
            rows.push_back(eb::best_bound(d));
        }
    }
    if (out.format == "json") {
        Json j = Json::array();
        for (const auto& r : rows) j.push_back(edt::serialize::bound_report_json(r));
        emit(out, dump(j));
    } else if (out.format == "csv") {
        emit(out, edt::serialize::bound_reports_csv(rows));
    } else {
        std::string text;
        for (const auto& r : rows) {
            text += r.group.display + " (char " + std::to_string(r.group.characteristic) +
                    "): ed " + (r.kind == eb::BoundKind::Exact
                                    ? "= "
                                    : (r.kind == eb::BoundKind::Upper ? "<= " : ">= ")) +
                    std::to_string(r.value);
            if (!r.provenance.empty()) text += "   [" + r.provenance.back().rule + "]";
            text += "\n";
        }
        emit(out, text);
    }
    return kExitOk;
}

int run_certify(const std::string& target, const GroupSelect& sel, unsigned weight, unsigned n,
                const std::string& strategy_name, std::uint64_t limit, std::uint64_t seed,
                unsigned trials, const OutputConfig& out) {
    gf::SweepOptions opts;
    opts.limit = limit;
    opts.seed = seed;
    opts.mc_trials = trials;
    auto strategy = gf::strategy_from_string(strategy_name);

    gf::Certificate cert;
    if (target == "short" || target == "minuscule") {
        if (sel.type.empty()) throw CLI::ValidationError("certify " + target + " needs --type");
        auto rs = edt::rootsys::RootSystem::build(edt::rootsys::DynkinType::parse(sel.type));
        if (strategy == gf::Strategy::Exhaustive) {
            mpz_class order = edt::weyl::weyl_order(rs);
            if (order > 100000)
                std::cerr << "sweeping a Weyl group of order " << order.get_str() << " ...\n";
        }
        if (target == "short") {
            cert = gf::certify_short(rs, strategy, opts);
        } else {
            unsigned w = weight;
            if (w == 0) w = (rs.rank() == 7 ? 7 : 1);
            cert = gf::certify_minuscule(rs, w, strategy, opts);
        }
    } else if (target == "halfspin") {
        if (n == 0) throw CLI::ValidationError("certify halfspin needs --n");
        cert = gf::certify_half_spin(n, strategy, opts);
    } else if (target == "projs") {
        if (n == 0) throw CLI::ValidationError("certify projs needs --n");
        cert = gf::certify_projs(n);
    } else {
        throw CLI::ValidationError("unknown certify target " + target +
                                   " (short, minuscule, halfspin, projs)");
    }

    if (out.format == "json") {
        emit(out, dump(edt::serialize::certificate_json(cert)));
    } else if (out.format == "csv") {
        std::string text = "id,verdict,strategy,kernel_rank,bound,checked_elements\n";
        text += cert.id + "," + gf::to_string(cert.verdict) + "," + cert.strategy + "," +
                std::to_string(cert.kernel_rank) + "," +
                (cert.bound ? std::to_string(*cert.bound) : "") + "," +
                cert.checked_elements.get_str() + "\n";
        emit(out, text);
    } else {
        std::string text = cert.id + ": " + gf::to_string(cert.verdict) + " (" + cert.strategy +
                           ")";
        if (cert.bound) text += ", ed(N(T)) <= " + std::to_string(*cert.bound);
        text += "\n";
        for (const auto& line : cert.provenance) text += "  - " + line + "\n";
        for (const auto& w : cert.witnesses) text += "  witness [" + w.kind + "]: " + w.detail + "\n";
        emit(out, text);
    }
    return cert.verdict == gf::Verdict::Pass ? kExitOk : kExitCertFail;
}

int run_weyl(const GroupSelect& sel, unsigned p, const OutputConfig& out) {
    if (sel.type.empty()) throw CLI::ValidationError("weyl needs --type");
    auto t = edt::rootsys::DynkinType::parse(sel.type);
    if (t.rank > 8)
        throw RefusalError("kernel queries are supported for rank <= 8 (got " + t.label() + ")");
    auto rs = edt::rootsys::RootSystem::build(t);
    auto extended = edt::weyl::kernel_mod_p(rs, p, /*include_minus_one=*/true);
    auto in_w = edt::weyl::kernel_mod_p(rs, p, /*include_minus_one=*/false);
    auto adj = eb::adjoint_stabilizer(eb::adjoint_group(t, p));

    Json j;
    j["type"] = rs.type().label();
    j["mod"] = p;
    j["weyl_order"] = edt::weyl::weyl_order(rs).get_str();
    j["has_minus_one"] = rs.has_minus_one();
    j["kernel_extended"] = edt::serialize::kernel_json(extended);
    j["kernel_in_w"] = edt::serialize::kernel_json(in_w);
    j["adjoint_stabilizer"] = edt::serialize::adjoint_report_json(adj);
    if (out.format == "json") {
        emit(out, dump(j));
    } else if (out.format == "csv") {
        std::string text =
            "type,mod,kernel_extended_order,kernel_extended_structure,kernel_in_w_order,"
            "component_group\n";
        text += rs.type().label() + "," + std::to_string(p) + "," + extended.order.get_str() +
                "," + edt::weyl::abelian_2_structure(extended) + "," + in_w.order.get_str() + "," +
                adj.component_group + "\n";
        emit(out, text);
    } else {
        std::string text = "W(" + rs.type().label() + ") mod " + std::to_string(p) + ":\n";
        text += "  kernel in <W,-1>: order " + extended.order.get_str() + " (" +
                edt::weyl::abelian_2_structure(extended) + ")\n";
        text += "  kernel in W:      order " + in_w.order.get_str() + " (" +
                edt::weyl::abelian_2_structure(in_w) + ")\n";
        text += "  adjoint stabilizer component group at char " + std::to_string(p) + ": " +
                adj.component_group + (adj.inversion_action ? " (acts on the torus by inversion)"
                                                            : "") +
                "\n";
        emit(out, text);
    }
    return kExitOk;
}

int run_polys(unsigned n, unsigned q, unsigned samples, std::uint64_t seed,
              const OutputConfig& out) {
    auto report = gf::agl1_generic_check(n, q, samples, seed);
    if (out.format == "json") {
        emit(out, dump(edt::serialize::agl1_report_json(report)));
    } else if (out.format == "csv") {
        std::string text = "n,q,p,samples,trivial_count,degenerate,seed\n";
        text += std::to_string(report.n) + "," + std::to_string(report.q) + "," +
                std::to_string(report.p) + "," + std::to_string(report.samples) + "," +
                std::to_string(report.trivial_count) + "," +
                (report.degenerate_case ? "1" : "0") + "," + std::to_string(report.seed) + "\n";
        emit(out, text);
    } else {
        std::string text = "affine stabilizers on monic degree-" + std::to_string(n) +
                           " zero-trace polynomials over F_" + std::to_string(q) + ":\n";
        text += "  trivial-stabilizer fraction: " + std::to_string(report.trivial_count) + "/" +
                std::to_string(report.samples) + " (seed " + std::to_string(report.seed) + ")\n";
        if (report.degenerate_case)
            text += "  degenerate case: every split sample is fixed by a translation\n";
        emit(out, text);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "edtool: exact essential-dimension bounds and generic-freeness certificates for "
        "simple algebraic groups.\nSimple roots follow the Bourbaki numbering; "
        "EDTOOL_ENUM_LIMIT overrides the default exhaustive-sweep cap (10^7)."};
    app.require_subcommand(1);

    OutputConfig out;
    auto add_output_options = [&out](CLI::App* sub) {
        sub->add_option("--format", out.format, "output format: text, json, csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--output", out.path, "write output to a file instead of stdout");
    };

    GroupSelect sel;
    bool all_rules = false;
    auto* bounds = app.add_subcommand("bounds", "essential-dimension bound table");
    bounds->add_option("--type", sel.type, "Dynkin type, e.g. E8, A3, D6");
    bounds->add_option("--isogeny", sel.isogeny,
                       "adjoint | sc | so | spin | hspin | self (default adjoint)");
    bounds->add_option("--mu", sel.mu, "m for SL_n/mu_m and GL_n/mu_m");
    bounds->add_option("--family", sel.family, "PGL, SL, GL, Sp, PSp, SO, Spin, HSpin");
    bounds->add_option("--n", sel.n, "n for the chosen family (PSp: PSp_{2n})");
    bounds->add_option("--char", sel.characteristic, "field characteristic (0 or prime)");
    bounds->add_flag("--all", sel.all, "table over every descriptor of rank 2..8");
    bounds->add_flag("--rules", all_rules, "emit every applicable rule, not just the best");
    add_output_options(bounds);

    std::string target, strategy = "auto";
    unsigned weight = 0, nn = 0, trials = 20;
    std::uint64_t limit = 0, seed = 1;
    auto* certify = app.add_subcommand("certify", "generic-freeness certificates");
    certify->add_option("target", target, "short | minuscule | halfspin | projs")->required();
    certify->add_option("--type", sel.type, "Dynkin type for short/minuscule");
    certify->add_option("--weight", weight, "fundamental weight index (minuscule)");
    certify->add_option("--n", nn, "n for halfspin (HSpin_n) or projs (PGL_n)");
    certify->add_option("--strategy", strategy,
                        "auto | exhaustive | minimal-normal-witnesses | monte-carlo");
    certify->add_option("--limit", limit, "exhaustive sweep cap (default EDTOOL_ENUM_LIMIT)");
    certify->add_option("--seed", seed, "PRNG seed for monte-carlo");
    certify->add_option("--trials", trials, "monte-carlo trials");
    add_output_options(certify);

    unsigned mod_p = 2;
    auto* weylcmd = app.add_subcommand("weyl", "mod-p Weyl kernels and adjoint stabilizers");
    weylcmd->add_option("--type", sel.type, "Dynkin type, rank <= 8")->required();
    weylcmd->add_option("--mod", mod_p, "prime p")->required();
    add_output_options(weylcmd);

    unsigned pn = 0, pq = 0, psamples = 500;
    std::uint64_t pseed = 1;
    auto* polys = app.add_subcommand("polys", "affine-line stabilizers on zero-trace polynomials");
    polys->add_option("--n", pn, "polynomial degree (>= 3)")->required();
    polys->add_option("--q", pq, "field size (prime power >= n)")->required();
    polys->add_option("--samples", psamples, "number of split samples")->capture_default_str();
    polys->add_option("--seed", pseed, "PRNG seed")->capture_default_str();
    add_output_options(polys);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bounds->parsed()) return run_bounds(sel, all_rules, out);
        if (certify->parsed())
            return run_certify(target, sel, weight, nn, strategy, limit, seed, trials, out);
        if (weylcmd->parsed()) return run_weyl(sel, mod_p, out);
        if (polys->parsed()) return run_polys(pn, pq, psamples, pseed, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
