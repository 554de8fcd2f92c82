#include <CLI11.hpp>

#include "symfer/c2.hpp"
#include "symfer/report.hpp"
#include "symfer/zhu.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace symfer;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    int d = 1;
    int max_weight = 12;
    int cap = 12;
    std::string suite;
    std::string method = "reps";
    std::string cache_dir;
    std::string out;
    int threads = 0; // 0 = all available; computations are serial either way
};

long elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int finish(const SuiteReport& rep, const Options& opt,
           std::chrono::steady_clock::time_point t0,
           std::map<std::string, std::string> params) {
    params["threads"] = std::to_string(opt.threads);
    emit_report(opt.out, report_json(rep, opt.d, params, elapsed_since(t0)));
    if (rep.inconclusive) return kExitInconclusive;
    return rep.pass ? kExitPass : kExitFail;
}

SuiteReport c2_dims_report(const Options& opt) {
    AlgebraConfig cfg{opt.d};
    if (!opt.cache_dir.empty())
        for (int w = 0; w <= opt.max_weight; ++w)
            basis_cached(cfg, Sector::Untwisted, Rat(w), true, opt.cache_dir);
    GradedDimReport g = c2_quotient_dims(cfg, opt.max_weight);
    SuiteReport rep;
    rep.suite = "c2-dims";
    rep.inconclusive = g.truncated;
    for (const auto& row : g.per_weight) {
        std::ostringstream name;
        name << "weight " << row.weight << " quotient";
        if (row.truncated)
            rep.add(name.str(), "complete rank", "row cap hit");
        else
            rep.add_info(name.str(), std::to_string(row.quotient_dim));
    }
    rep.add("total", std::to_string(g.expected), std::to_string(g.total));
    rep.add_check("tail vanishes",
                  g.stable_from >= 0 &&
                      g.stable_from <= std::max(8, 2 * opt.d) + 1);
    rep.pass = rep.pass && g.pass;
    return rep;
}

SuiteReport nilpotency_report(const Options& opt) {
    AlgebraConfig cfg{opt.d};
    C2Workspace ws(cfg);
    NilpotencyReport n = nilpotency_degree(ws);
    SuiteReport rep;
    rep.suite = "nilpotency";
    rep.inconclusive = n.inconclusive;
    rep.add("least vanishing power of omega-bar",
            std::to_string(std::max(5, opt.d + 1)), std::to_string(n.degree));
    rep.add_check("witness for the last nonzero power", n.witness_ok);
    if (!n.witness.empty()) rep.add_info("witness", n.witness);
    return rep;
}

SuiteReport dims_report(const Options& opt, const std::string& which) {
    AdAlgebra ad = build_Ad(AlgebraConfig{opt.d});
    long expect = (1L << (2 * opt.d - 1)) + 3;
    SuiteReport rep;
    rep.suite = which;
    if (which == "center")
        rep.add("center dimension", std::to_string(expect),
                std::to_string(center_dim(ad)));
    else
        rep.add("symmetric functional dimension", std::to_string(expect),
                std::to_string(symmetric_functionals_dim(ad)));
    return rep;
}

SuiteReport invariants_report(const Options& opt) {
    AdAlgebra ad = build_Ad(AlgebraConfig{opt.d});
    InvariantsReport inv = sp_invariants(ad);
    SuiteReport rep;
    rep.suite = "invariants";
    rep.add("invariant dimension", std::to_string(inv.expected),
            std::to_string(inv.dim));
    for (const auto& [deg, dim] : inv.lambda_blocks)
        rep.add("invariants in exterior degree " + std::to_string(deg), "1",
                std::to_string(dim));
    rep.add_check("invariants lie in the span of omega powers",
                  inv.omega_span);
    return rep;
}

SuiteReport relations_report(const Options& opt) {
    AlgebraConfig cfg{opt.d};
    SuiteReport rep;
    rep.suite = "relations";
    for (const auto& id : relation_ids()) {
        SuiteReport one = relation_suite(cfg, id, 6);
        rep.inconclusive = rep.inconclusive || one.inconclusive;
        for (const auto& it : one.items) {
            rep.items.push_back(it);
            rep.pass = rep.pass && it.pass;
        }
    }
    return rep;
}

SuiteReport bd_report(const Options& opt) {
    AlgebraConfig cfg{opt.d};
    C2Workspace ws(cfg);
    BdReport b = verify_bd_basis(ws);
    SuiteReport rep;
    rep.suite = "bd-basis";
    rep.add("independent spanning-set rank", std::to_string(b.expected),
            std::to_string(b.rank));
    rep.add_check("per-weight counts match quotients", b.pass);
    BdReport control = verify_bd_basis(ws, true);
    rep.add("drop-one control rank falls short",
            std::to_string(b.expected - 1), std::to_string(control.rank));
    return rep;
}

SuiteReport zhu_reps_report(const Options& opt) {
    AlgebraConfig cfg{opt.d};
    AdAlgebra ad = build_Ad(cfg);
    SuiteReport rep;
    rep.suite = "zhu-reps";
    rep.add("algebra dimension", std::to_string(n_d(opt.d)),
            std::to_string(ad.basis.size()));
    SuiteReport cop = coprimality_check(ad);
    for (const auto& it : cop.items) {
        rep.items.push_back(it);
        rep.pass = rep.pass && it.pass;
    }
    long expect = (1L << (2 * opt.d - 1)) + 3;
    rep.add("center dimension", std::to_string(expect),
            std::to_string(center_dim(ad)));
    rep.add("symmetric functional dimension", std::to_string(expect),
            std::to_string(symmetric_functionals_dim(ad)));
    return rep;
}

SuiteReport zhu_direct_report(const Options& opt) {
    ZhuTruncation t = direct_zhu_dim(AlgebraConfig{opt.d}, opt.cap);
    SuiteReport rep;
    rep.suite = "zhu-direct";
    rep.inconclusive = !t.stabilized;
    for (const auto& [c, q] : t.qdims)
        rep.add_info("quotient at cap " + std::to_string(c),
                     std::to_string(q));
    rep.add_check("stabilized across two caps", t.stabilized);
    rep.add("stabilized dimension", std::to_string(t.expected),
            t.stabilized ? std::to_string(t.dim) : "not stabilized");
    if (t.j4_member)
        rep.add_check("weight-4 invariant identity holds in the quotient",
                      *t.j4_member);
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the even symplectic fermion algebra"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("SYMFER_CACHE")) opt.cache_dir = env;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--d", opt.d, "rank")->check(CLI::Range(1, 16));
        cmd->add_option("--max-weight", opt.max_weight, "weight cutoff")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--cap", opt.cap, "truncation cap")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--cache-dir", opt.cache_dir, "basis cache directory");
        cmd->add_option("--out", opt.out, "report path (default: stdout)");
        cmd->add_option("--threads", opt.threads,
                        "worker threads (0 = all; computations are serial)");
    };

    CLI::App* c2 = app.add_subcommand("c2-dims", "graded quotient dimensions");
    add_common(c2);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify
        ->add_option("--suite", opt.suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"relations", "bd-basis", "nilpotency",
                               "coprimality", "center", "functionals",
                               "invariants", "j4", "oracle-reps",
                               "lambda-bracket", "virasoro"}));

    CLI::App* zhu = app.add_subcommand("zhu", "quotient algebra checks");
    add_common(zhu);
    zhu->add_option("--method", opt.method, "reps or direct")
        ->check(CLI::IsMember({"reps", "direct"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    std::map<std::string, std::string> params;

    try {
        if (c2->parsed()) {
            params["max_weight"] = std::to_string(opt.max_weight);
            return finish(c2_dims_report(opt), opt, t0, params);
        }
        if (verify->parsed()) {
            params["suite"] = opt.suite;
            AlgebraConfig cfg{opt.d};
            SuiteReport rep;
            if (opt.suite == "relations") rep = relations_report(opt);
            else if (opt.suite == "bd-basis") rep = bd_report(opt);
            else if (opt.suite == "nilpotency") rep = nilpotency_report(opt);
            else if (opt.suite == "coprimality")
                rep = coprimality_check(build_Ad(cfg));
            else if (opt.suite == "center") rep = dims_report(opt, "center");
            else if (opt.suite == "functionals")
                rep = dims_report(opt, "functionals");
            else if (opt.suite == "invariants") rep = invariants_report(opt);
            else if (opt.suite == "j4") {
                if (opt.d != 2) {
                    std::cerr << "symfer: the weight-4 identity requires --d 2\n";
                    return kExitUsage;
                }
                rep = verify_j4(cfg);
            } else if (opt.suite == "oracle-reps")
                rep = oracle_rep_check(cfg);
            else if (opt.suite == "lambda-bracket")
                rep = bracket_suite(cfg);
            else if (opt.suite == "virasoro")
                rep = virasoro_suite(cfg, std::min(opt.max_weight, 6));
            return finish(rep, opt, t0, params);
        }
        if (zhu->parsed()) {
            params["method"] = opt.method;
            params["cap"] = std::to_string(opt.cap);
            SuiteReport rep = opt.method == "direct" ? zhu_direct_report(opt)
                                                     : zhu_reps_report(opt);
            return finish(rep, opt, t0, params);
        }
    } catch (const std::exception& e) {
        std::cerr << "symfer: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
