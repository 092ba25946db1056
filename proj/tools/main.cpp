// Command-line entry point. Subcommands wrap the library pipelines and emit
// byte-stable machine-readable run reports; all randomness in the acceptance
// suite derives from a mandatory --seed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccx/ctransform.hpp"
#include "ccx/errors.hpp"
#include "ccx/hamiltonian.hpp"
#include "ccx/inversion.hpp"
#include "ccx/json_io.hpp"
#include "ccx/monotone.hpp"
#include "ccx/selfdual.hpp"
#include "ccx/space.hpp"
#include "ccx/transport.hpp"
#include "reports.hpp"
#include "selftest.hpp"

namespace {

using steady = std::chrono::steady_clock;

struct GlobalOpts {
    double tol = 1e-6;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string json_out;
    int max_iter = 10000;
    bool with_timings = false;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ccx::InvalidInput("cannot read instance file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void emit(const ccxt::RunReport& rep, const GlobalOpts& g) {
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "pass " : "FAIL ") << c.name << "  residual " << fmt_g(c.residual);
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "result: PASS\n" : "result: FAIL\n");
    if (!g.json_out.empty()) {
        std::ofstream f(g.json_out, std::ios::binary);
        if (!f) throw ccx::InvalidInput("cannot write report file: " + g.json_out);
        f << rep.to_json();
    }
}

const ccx::Relation& require_relation(const ccx::InstanceDoc& doc, const char* who) {
    if (!doc.relation)
        throw ccx::InvalidInput(std::string(who) + ": instance needs a \"pairs\" relation");
    return *doc.relation;
}

std::string pair_list_note(const std::vector<ccx::IndexPair>& pairs, std::size_t limit) {
    std::string s;
    for (std::size_t k = 0; k < pairs.size() && k < limit; ++k) {
        if (!s.empty()) s += ", ";
        s += "(" + std::to_string(pairs[k].first) + ", " + std::to_string(pairs[k].second) + ")";
    }
    if (pairs.size() > limit) s += ", ...";
    return s;
}

// ------------------------------------------------------------ check-monotone

void run_check_monotone(const ccx::InstanceDoc& doc, int order, bool maximal,
                        const GlobalOpts& g, ccxt::RunReport& rep) {
    const ccx::Relation& M = require_relation(doc, "check-monotone");
    const ccx::MonotoneCheck mc = ccx::is_c_monotone(M, doc.coupling, g.tol);
    std::string note;
    if (mc.witness) {
        const auto& w = *mc.witness;
        note = "violating pair ((" + std::to_string(w[0]) + ", " + std::to_string(w[1]) +
               "), (" + std::to_string(w[2]) + ", " + std::to_string(w[3]) + "))";
    }
    rep.add("pairwise-monotone", std::max(0.0, -mc.worst), mc.ok, note);

    if (order != 0) {
        const ccx::CyclicCheck cc = ccx::is_c_cyclically_monotone(M, doc.coupling, order, g.tol);
        note.clear();
        if (cc.witness_cycle) note = "violating cycle " + pair_list_note(*cc.witness_cycle, 8);
        rep.add("cyclically-monotone-order-" + std::to_string(order),
                std::max(0.0, -cc.worst_cycle_sum), cc.ok, note);
    }
    if (maximal) {
        const ccx::MaximalityCheck mx = ccx::is_maximal_c_monotone(M, doc.coupling, g.tol);
        note = std::to_string(mx.admissible_extensions.size()) + " admissible extensions";
        if (!mx.admissible_extensions.empty())
            note += ": " + pair_list_note(mx.admissible_extensions, 6);
        rep.add("maximal", static_cast<double>(mx.admissible_extensions.size()), mx.maximal,
                note);
    }
}

// ----------------------------------------------------------------- represent

void run_represent(const ccx::InstanceDoc& doc, const GlobalOpts& g, ccxt::RunReport& rep) {
    const ccx::Relation& M = require_relation(doc, "represent");
    const ccx::Coupling& c = doc.coupling;
    const ccx::MonotoneCheck mc = ccx::is_c_monotone(M, c, g.tol);
    ccx::MaximalityCheck mx;
    if (mc.ok) mx = ccx::is_maximal_c_monotone(M, c, g.tol);

    const double syn_tol = std::min(g.tol, 1e-9);
    const ccx::FitzpatrickFunction fp = ccx::fitzpatrick(M, c);
    const ccx::SynthesisResult syn = ccx::synthesize_selfdual(
        fp.F, fp.Fc, ccx::SymmetrizedCoupling{c}, syn_tol, g.max_iter);
    const ccx::Hamiltonian ham = ccx::hamiltonian_of(syn.lagrangian);
    const ccx::DbarGraph graph = ccx::graph_of_dbar(syn.lagrangian, g.tol);

    rep.add("selfdual-residual", syn.lagrangian.selfdual_residual,
            syn.lagrangian.selfdual_residual <= g.tol,
            std::to_string(syn.iterations) + " synthesis iterations");

    if (mc.ok && mx.maximal) {
        auto a = graph.pairs;
        auto b = M.pairs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        rep.add("recovery-equals-input", a == b ? 0.0 : 1.0, a == b,
                "graph of the synthesized Lagrangian vs the input relation");
    } else if (mc.ok) {
        std::cerr << "warning: input relation is not maximal ("
                  << mx.admissible_extensions.size()
                  << " admissible extensions); asserting containment only\n";
        int missing = 0;
        for (const auto& p : M.pairs)
            if (std::find(graph.pairs.begin(), graph.pairs.end(), p) == graph.pairs.end())
                ++missing;
        rep.add("recovery-contains-input", missing, missing == 0,
                "input not maximal: " + std::to_string(mx.admissible_extensions.size()) +
                    " admissible extensions");
        rep.add_artifact("admissible_extensions",
                         ccx::relation_to_json(ccx::make_relation(mx.admissible_extensions)));
    } else {
        std::cerr << "warning: input relation is not c-monotone; "
                     "reporting the recovered relation without a containment assertion\n";
    }

    rep.add_artifact("lagrangian", ccx::lagrangian_to_json(syn.lagrangian, syn_tol, syn.iterations));
    rep.add_artifact("hamiltonian", ccx::table_to_json(ham.H));
    rep.add_artifact("recovered_relation",
                     ccx::relation_to_json(ccx::make_relation(graph.pairs)));
}

// ----------------------------------------------------------------- rearrange

void run_rearrange(const ccx::InstanceDoc& doc, const GlobalOpts& g, ccxt::RunReport& rep) {
    if (!doc.map_T)
        throw ccx::InvalidInput("rearrange: instance needs a \"map_T\" entry");
    const ccx::Coupling& c = doc.coupling;
    const ccx::DiscreteMeasure mu = doc.mu ? *doc.mu : ccx::uniform_measure(c.x);
    const ccx::RearrangementResult rr =
        ccx::monotone_rearrangement(c, *doc.map_T, mu, g.tol, g.max_iter);

    rep.add("duality-gap", std::abs(rr.gap), std::abs(rr.gap) <= g.tol,
            "primal value vs selfdual certificate objective");

    rep.add_artifact("plan", ccx::table_to_json(rr.primal.plan));
    {
        nlohmann::json v;
        v["value"] = rr.primal.value;
        v["value_exact"] = rr.primal.value_exact;
        rep.add_artifact("value", v.dump());
    }
    rep.add_artifact("lagrangian",
                     ccx::lagrangian_to_json(rr.dual.selfdual, g.tol, rr.dual.iterations));
    rep.add_artifact("hamiltonian", ccx::table_to_json(rr.ham.H));
    {
        nlohmann::json inv;
        inv["is_graph"] = rr.involution.is_graph;
        if (rr.involution.is_graph)
            inv["S"] = rr.involution.S;
        else
            inv["S"] = nullptr;
        inv["involution"] = rr.involution.involution;
        inv["measure_preserving"] = rr.involution.measure_preserving;
        inv["antisymmetry_residual"] = rr.involution.antisymmetry_residual;
        inv["outcome"] = rr.involution.is_graph ? "graph" : "NotAGraph";
        rep.add_artifact("involution", inv.dump());
    }
    {
        nlohmann::json mono;
        mono["map_monotone"] = rr.monotonicity.ok;
        mono["diagonal_objective"] = rr.diagonal_objective;
        mono["diagonal_optimal"] = rr.diagonal_optimal;
        mono["inclusion_holds"] = rr.inclusion_holds;
        rep.add_artifact("monotone_case", mono.dump());
    }
    const bool grad_form = c.form == ccx::CostForm::neg_half_sqdist &&
                           (c.x.kind() == ccx::SpaceKind::circle ||
                            c.x.kind() == ccx::SpaceKind::interval_grid);
    if (grad_form) {
        const ccx::GradientConsistencyReport gc =
            ccx::gradient_consistency_check(rr.ham, *doc.map_T);
        nlohmann::json j;
        j["max_deviation"] = gc.max_deviation;
        j["h"] = gc.h;
        j["stencil"] = gc.stencil;
        rep.add_artifact("gradient_consistency", j.dump());
    }
}

// -------------------------------------------------------------------- invert

void run_invert(const ccx::InstanceDoc& doc, const GlobalOpts& g, ccxt::RunReport& rep) {
    const ccx::Coupling& c = doc.coupling;
    if (doc.lagrangian && doc.p) {
        ccx::Lagrangian L{c, *doc.lagrangian};
        const ccx::SelfdualCheck sd = ccx::is_selfdual(L, g.tol);
        L.selfdual_residual = sd.residual;
        rep.add("lagrangian-selfdual", sd.residual, sd.ok);
        const ccx::IpMinimization ip = ccx::minimize_Ip(L, *doc.p, g.tol);
        rep.add("minimum-nonnegative", std::max(0.0, -ip.min_value), ip.min_value >= -g.tol,
                "gap functional of a selfdual Lagrangian is nonnegative");
        if (ip.attained)
            rep.add("target-inclusion", std::max(0.0, ip.min_value), true,
                    "minimum vanishes: the target is reached from the argmin");
        nlohmann::json j;
        j["min_value"] = ip.min_value;
        j["argmin"] = ip.argmin;
        j["values"] = ip.values;
        j["attained"] = ip.attained;
        j["no_solution_on_grid"] = !ip.attained;
        rep.add_artifact("minimization", j.dump());
    } else if (doc.phi && doc.skew_B) {
        const ccx::SkewMap B{*doc.skew_B};
        const ccx::SkewCheck sk = ccx::is_c_skew(B, c, g.tol);
        rep.add("skew-adjoint", sk.residual, sk.ok,
                "candidate adjoint map must be skew before inversion");
        if (sk.ok) {
            const ccx::SkewInversionReport inv =
                ccx::invert_via_skew(ccx::make_value_table(c.x, *doc.phi), B, c, g.tol);
            if (inv.attained)
                rep.add("subdifferential-inclusion", std::max(0.0, inv.min_value),
                        inv.inclusion_verified,
                        "image of the argmin under the skew map lies in the subdifferential");
            nlohmann::json j;
            j["min_value"] = inv.min_value;
            j["argmin"] = inv.argmin;
            j["values"] = inv.values;
            j["attained"] = inv.attained;
            j["no_solution_on_grid"] = !inv.attained;
            j["skew_residual"] = inv.skew_residual;
            rep.add_artifact("minimization", j.dump());
        }
    } else {
        throw ccx::InvalidInput(
            "invert: instance needs either \"lagrangian\" with \"p\", or \"phi\" with \"B\"");
    }
}

// ------------------------------------------------------------------ selftest

int run_selftest(const GlobalOpts& g, int criterion) {
    if (!g.seed_given) throw ccx::InvalidInput("selftest: --seed is required");
    if (criterion < 0 || criterion > 14)
        throw ccx::InvalidInput("selftest: --criterion must lie in 1..14");
    const ccxt::AcceptanceOutcome out = ccxt::run_acceptance_suite(g.seed, criterion);
    ccxt::print_outcomes(out, std::cout, g.with_timings);

    ccxt::RunReport rep;
    rep.with_timings = g.with_timings;
    rep.command = "selftest --seed " + std::to_string(g.seed) +
                  (criterion != 0 ? " --criterion " + std::to_string(criterion) : "") + " --tol " +
                  fmt_g(g.tol);
    rep.instance_digest = ccxt::fnv1a_hex(rep.command);
    for (const auto& cr : out.criteria) {
        int failed = 0;
        for (const auto& ch : cr.checks)
            if (!ch.pass) ++failed;
        rep.add(cr.name, failed, cr.pass, cr.note);
        if (g.with_timings) rep.add_timing(cr.name, cr.seconds);
    }
    rep.add_artifact("criteria", ccxt::canonical_criteria_json(out));
    if (!g.json_out.empty()) {
        std::ofstream f(g.json_out, std::ios::binary);
        if (!f) throw ccx::InvalidInput("cannot write report file: " + g.json_out);
        f << rep.to_json();
    }
    return out.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-space c-convex analysis toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol", g.tol, "assertion tolerance")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", g.seed, "seed for generated fixtures");
    app.add_option("--json-out", g.json_out, "write the run report JSON to this path");
    app.add_option("--max-iter", g.max_iter, "iteration budget for selfdual synthesis")
        ->capture_default_str();
    app.add_flag("--with-timings", g.with_timings, "attach wall times to reports");

    std::string instance_path;
    int order = 0;
    bool maximal = false;
    auto* cm = app.add_subcommand("check-monotone",
                                  "verify pairwise / cyclic monotonicity of a relation");
    cm->add_option("instance", instance_path, "instance JSON file")->required();
    cm->add_option("--order", order, "also check cyclic monotonicity of this order");
    cm->add_flag("--maximal", maximal, "also run the exhaustive extension search");
    cm->fallthrough();

    auto* rp = app.add_subcommand("represent",
                                  "synthesize the selfdual Lagrangian representing a relation");
    rp->add_option("instance", instance_path, "instance JSON file")->required();
    rp->fallthrough();

    auto* ra = app.add_subcommand(
        "rearrange", "solve the symmetric transport problem and extract the rearrangement");
    ra->add_option("instance", instance_path, "instance JSON file")->required();
    ra->fallthrough();

    auto* iv = app.add_subcommand("invert", "variational inversion of a represented map");
    iv->add_option("instance", instance_path, "instance JSON file")->required();
    iv->fallthrough();

    int criterion = 0;
    auto* st = app.add_subcommand("selftest", "run the acceptance suite");
    st->add_option("--criterion", criterion, "run a single criterion (1..14; default all)");
    st->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.seed_given = seed_opt->count() > 0;

    try {
        if (st->parsed()) return run_selftest(g, criterion);

        const std::string text = read_file(instance_path);
        const ccx::InstanceDoc doc = ccx::parse_instance_document(text);
        ccxt::RunReport rep;
        rep.with_timings = g.with_timings;
        rep.instance_digest = ccxt::fnv1a_hex(text);
        const auto t0 = steady::now();
        if (cm->parsed()) {
            rep.command = "check-monotone" + std::string(order != 0 ? " --order " : "") +
                          (order != 0 ? std::to_string(order) : "") +
                          (maximal ? " --maximal" : "") + " --tol " + fmt_g(g.tol);
            run_check_monotone(doc, order, maximal, g, rep);
        } else if (rp->parsed()) {
            rep.command = "represent --tol " + fmt_g(g.tol);
            run_represent(doc, g, rep);
        } else if (ra->parsed()) {
            rep.command = "rearrange --tol " + fmt_g(g.tol);
            run_rearrange(doc, g, rep);
        } else {
            rep.command = "invert --tol " + fmt_g(g.tol);
            run_invert(doc, g, rep);
        }
        rep.add_timing("total", std::chrono::duration<double>(steady::now() - t0).count());
        emit(rep, g);
        return rep.all_pass() ? 0 : 1;
    } catch (const ccx::InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ccx::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ccx::NonConvergence& e) {
        std::cerr << "synthesis failure: " << e.what() << "\n";
        return 4;
    } catch (const ccx::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 4;
    } catch (const ccx::CertificateMismatch& e) {
        std::cerr << "certificate mismatch: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
