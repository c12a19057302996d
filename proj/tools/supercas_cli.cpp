// supercas: exact verification of split-Casimir identities, projector
// systems, Yang-Baxter solutions, and Vogel-parameter universal formulas for
// the osp(M|N) and sl(M|N) superalgebra families.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "supercas/dump.hpp"
#include "supercas/suites.hpp"

using namespace supercas;

namespace {

AlgebraKind parse_kind(const std::string& s) {
    if (s == "osp") return AlgebraKind::osp;
    if (s == "sl") return AlgebraKind::sl;
    throw CLI::ValidationError("--algebra must be osp or sl");
}

int finish(const std::vector<InstanceReport>& reports, const std::string& json_path,
           bool verbose) {
    int failures = 0;
    for (const auto& r : reports) {
        r.print(verbose);
        failures += r.failures();
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        out << reports_to_json(reports) << "\n";
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"supercas: exact split-Casimir verification engine for osp(M|N) and sl(M|N)"};
    app.require_subcommand(1);

    std::string algebra = "osp", suite = "all", json_path, op_name = "casimir_f", u_str = "1/3",
                v_str;
    long M = 0, N = 0;
    unsigned order = 8;
    bool verbose = false;

    auto add_instance_opts = [&](CLI::App* cmd, bool required) {
        cmd->add_option("--algebra", algebra, "osp | sl")->required(required);
        cmd->add_option("--M", M, "even dimension M")->required(required);
        cmd->add_option("--N", N, "odd dimension N")->required(required);
    };

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_instance_opts(verify, false);
    verify->add_option("--suite", suite,
                       "defining | adjoint | projectors | ybe | brauer | vogel | series | all");
    verify->add_option("--json", json_path, "write a JSON report to this file");
    verify->add_flag("--verbose", verbose, "print passing checks too");

    auto* dims = app.add_subcommand("dims", "closed-form dimension table");
    add_instance_opts(dims, true);
    dims->add_option("--json", json_path, "write a JSON report to this file");

    auto* series = app.add_subcommand("series", "higher Casimir eigenvalue series");
    add_instance_opts(series, true);
    series->add_option("--order", order, "highest coefficient k (default 8)");
    series->add_option("--json", json_path, "write a JSON report to this file");

    auto* rmatrix = app.add_subcommand("rmatrix", "evaluate R(u); with --v check the YBE sample");
    add_instance_opts(rmatrix, true);
    rmatrix->add_option("--u", u_str, "spectral parameter, rational p/q")->required();
    rmatrix->add_option("--v", v_str, "second spectral parameter for a YBE check");

    auto* dump = app.add_subcommand("dump", "dump an operator in the matrix JSON format");
    add_instance_opts(dump, true);
    dump->add_option("--op", op_name,
                     "epsilon | perm | contraction | casimir_f | identity_ad | perm_ad | "
                     "contraction_ad | casimir_ad | casimir_plus | casimir_minus | tilde_minus");
    dump->add_option("--out", json_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        AlgebraKind kind = parse_kind(algebra);
        if (verify->parsed()) {
            std::vector<Suite> suites;
            if (suite == "all") {
                suites = all_suites();
            } else if (auto s = suite_from_string(suite)) {
                suites = {*s};
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            std::vector<InstanceReport> reports;
            if (verify->count("--M") == 0 && verify->count("--N") == 0) {
                for (const auto& inst : default_instances())
                    reports.push_back(run_instance(inst.kind, inst.M, inst.N, suites, order));
            } else {
                reports.push_back(run_instance(kind, static_cast<std::size_t>(M),
                                               static_cast<std::size_t>(N), suites, order));
            }
            return finish(reports, json_path, verbose);
        }
        if (dims->parsed()) {
            InstanceReport rep;
            rep.algebra = algebra;
            rep.M = static_cast<std::size_t>(M);
            rep.N = static_cast<std::size_t>(N);
            rep.omega = M - N;
            rep.dims = dims_table(kind, rep.M, rep.N);
            rep.has_dims = true;
            std::printf("closed-form invariant subspace dimensions, %s(%ld|%ld):\n",
                        algebra.c_str(), M, N);
            for (const auto& d : rep.dims)
                std::printf("  %-10s (%ld, %ld)\n", d.name.c_str(), d.even, d.odd);
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                out << rep.to_json() << "\n";
            }
            return 0;
        }
        if (series->parsed()) {
            auto rep = run_instance(kind, static_cast<std::size_t>(M),
                                    static_cast<std::size_t>(N), {Suite::series}, order);
            return finish({rep}, json_path, verbose);
        }
        if (rmatrix->parsed()) {
            Rational u = rat_parse(u_str);
            SuperMatrix r;
            GradedSpace v;
            if (kind == AlgebraKind::osp) {
                auto model = OspModel::build(M, N);
                r = model.r_matrix(u);
                v = model.defining_space();
                if (!v_str.empty()) {
                    Rational vv = rat_parse(v_str);
                    auto res = verify_ybe(
                        v, [&](const Rational& x) { return model.r_matrix(x); }, {{u, vv}});
                    std::printf("YBE at (u,v)=(%s,%s): %s\n", rat_str(u).c_str(),
                                rat_str(vv).c_str(),
                                res[0].skipped ? ("skipped: " + res[0].note).c_str()
                                               : (res[0].equal ? "exact" : "VIOLATED"));
                    if (!res[0].equal) return 1;
                }
            } else {
                auto model = SlModel::build(M, N);
                r = model.r_matrix(u);
                v = model.defining_space();
                if (!v_str.empty()) {
                    Rational vv = rat_parse(v_str);
                    auto res = verify_ybe(
                        v, [&](const Rational& x) { return model.r_matrix(x); }, {{u, vv}});
                    std::printf("YBE at (u,v)=(%s,%s): %s\n", rat_str(u).c_str(),
                                rat_str(vv).c_str(),
                                res[0].skipped ? ("skipped: " + res[0].note).c_str()
                                               : (res[0].equal ? "exact" : "VIOLATED"));
                    if (!res[0].equal) return 1;
                }
            }
            std::cout << dump_matrix_json(r) << "\n";
            return 0;
        }
        if (dump->parsed()) {
            SuperMatrix mat;
            auto pick_common = [&](const auto& model) -> SuperMatrix {
                if (op_name == "perm") return model.perm2();
                if (op_name == "contraction") return model.contraction2();
                if (op_name == "casimir_f") return model.casimir_defining();
                auto b = model.adjoint_bundle();
                if (op_name == "identity_ad") return b.identity;
                if (op_name == "perm_ad") return b.perm;
                if (op_name == "contraction_ad") return b.contraction;
                if (op_name == "casimir_ad") return b.casimir;
                if (op_name == "casimir_plus") return b.casimir_plus;
                if (op_name == "casimir_minus") return b.casimir_minus;
                throw std::invalid_argument("unknown --op: " + op_name);
            };
            if (kind == AlgebraKind::osp) {
                auto model = OspModel::build(M, N);
                mat = (op_name == "epsilon") ? model.metric() : pick_common(model);
            } else {
                auto model = SlModel::build(M, N);
                if (op_name == "tilde_minus")
                    mat = model.adjoint_bundle().tilde_minus;
                else if (op_name == "epsilon")
                    throw std::invalid_argument("epsilon is an osp operator");
                else
                    mat = pick_common(model);
            }
            if (json_path.empty()) {
                std::cout << dump_matrix_json(mat) << "\n";
            } else {
                std::ofstream out(json_path);
                out << dump_matrix_json(mat) << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
