#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpath/extremal.hpp"
#include "qpath/graph.hpp"
#include "qpath/graph6.hpp"
#include "qpath/kernels.hpp"
#include "qpath/pathcover.hpp"
#include "qpath/spectral.hpp"
#include "qpath/verifier.hpp"

namespace {

using namespace qpath;

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct InputOpts {
    std::string g6;
    std::string file;
    bool use_stdin = false;
    std::string construct;
    int n = 0;
    int k = 1;
    int delta = 2;
    int drop = 0;
    std::uint64_t seed = 42;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    auto* g6 = cmd->add_option("--g6", in.g6, "inline graph6 record");
    auto* file = cmd->add_option("--file", in.file, "file with a graph6 record");
    auto* use_stdin = cmd->add_flag("--stdin", in.use_stdin, "read a graph6 record from stdin");
    auto* construct = cmd->add_option("--construct", in.construct, "named construction (B)")
                          ->check(CLI::IsMember({"B"}));
    cmd->add_option("--n", in.n, "order for --construct");
    cmd->add_option("--k", in.k, "path budget / construction parameter");
    cmd->add_option("--delta", in.delta, "minimum-degree parameter");
    cmd->add_option("--drop", in.drop, "delete this many clique edges from the construction");
    cmd->add_option("--seed", in.seed, "seed for --drop sampling");
    g6->excludes(file)->excludes(use_stdin)->excludes(construct);
    file->excludes(use_stdin)->excludes(construct);
    use_stdin->excludes(construct);
}

std::string first_record(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (!line.empty()) return line;
    }
    throw Graph6Error("no graph6 record found in input");
}

Graph resolve_input(const InputOpts& in) {
    int sources = !in.g6.empty() + !in.file.empty() + in.use_stdin + !in.construct.empty();
    if (sources != 1)
        throw CLI::ValidationError("input", "exactly one of --g6/--file/--stdin/--construct");
    if (!in.g6.empty()) return from_graph6(in.g6);
    if (in.use_stdin) return from_graph6(first_record(std::cin));
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) throw CLI::ValidationError("input", "cannot open " + in.file);
        return from_graph6(first_record(f));
    }
    if (in.drop == 0) return build_base(in.n, in.k, in.delta).graph;
    auto sets = sample_deletions(in.n, in.k, in.delta, in.drop, 1, in.seed);
    Graph g = build_base(in.n, in.k, in.delta).graph;
    for (auto [u, v] : sets.at(0)) g.remove_edge(u, v);
    return g;
}

int cmd_qindex(const InputOpts& in, bool adjacency, bool json, double tol) {
    Graph g = resolve_input(in);
    EigenOptions eopt;
    if (tol > 0) eopt.tol = tol;
    SpectralResult r = adjacency ? adjacency_spectral_radius(g, eopt) : q_index(g, eopt);
    if (json) {
        ordered_json j;
        j["matrix"] = adjacency ? "adjacency" : "signless_laplacian";
        j["n"] = g.order();
        j["edges"] = g.edge_count();
        j["value"] = r.value;
        j["residual"] = r.residual;
        j["iterations"] = r.iterations;
        j["method"] = r.method;
        j["converged"] = r.converged;
        j["eigenvector"] = r.vector;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (adjacency ? "lambda" : "q") << "\t" << fmt_g(r.value) << "\n"
                  << "residual\t" << fmt_g(r.residual) << "\n"
                  << "iterations\t" << r.iterations << "\n"
                  << "method\t" << r.method << "\n";
    }
    return r.converged ? 0 : 1;
}

void print_paths(const std::vector<std::vector<int>>& paths) {
    for (const auto& p : paths) {
        std::cout << "path\t";
        for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
        std::cout << "\n";
    }
}

int cmd_pathcover(const InputOpts& in, bool certificate, bool strict, int dp_cap,
                  std::uint64_t seed, bool json) {
    const int k = in.k;
    Graph g = resolve_input(in);
    if (!certificate) {
        PathCoverResult r = min_path_cover(g, dp_cap);
        if (json) {
            ordered_json j;
            j["n"] = g.order();
            j["cover"] = r.cover_number;
            j["paths"] = r.paths;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "cover\t" << r.cover_number << "\n";
            print_paths(r.paths);
        }
        return 0;
    }

    CoverOptions copt;
    copt.dp_cap = 0; // certificates only, independent of order
    copt.seed = seed;
    CoverEvidence ev = is_k_path_coverable(g, k, copt);
    if (json) {
        ordered_json j;
        j["n"] = g.order();
        j["k"] = k;
        j["verdict"] = ev.verdict == Coverable::yes  ? "yes"
                       : ev.verdict == Coverable::no ? "no"
                                                     : "unknown";
        j["route"] = ev.route;
        if (ev.witness) j["paths"] = *ev.witness;
        if (ev.separator) {
            ordered_json s;
            s["separator"] = ev.separator->separator;
            s["components_after"] = ev.separator->components_after;
            s["cover_at_least"] = ev.separator->bound;
            j["separator"] = s;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict\t"
                  << (ev.verdict == Coverable::yes  ? "yes"
                      : ev.verdict == Coverable::no ? "no"
                                                    : "unknown")
                  << "\n"
                  << "route\t" << ev.route << "\n";
        if (ev.witness) print_paths(*ev.witness);
        if (ev.separator) {
            std::cout << "cover_at_least\t" << ev.separator->bound << "\n";
            std::cout << "separator\t";
            for (std::size_t i = 0; i < ev.separator->separator.size(); ++i)
                std::cout << (i ? " " : "") << ev.separator->separator[i];
            std::cout << "\n";
        }
    }
    if (ev.verdict == Coverable::unknown && strict) return 3;
    return 0;
}

struct VerifyOpts {
    std::vector<std::string> checks;
    std::string corpus;
    bool use_stdin = false;
    int n = 245;
    int k = 1;
    int delta = 2;
    int max_n = 7;
    int count = 1000;
    int samples = 1000;
    std::uint64_t seed = 42;
    bool exhaustive = false;
    std::string report;
    bool timings = false;
};

int cmd_verify(const VerifyOpts& vo) {
    ordered_json report;
    ordered_json invocation;
    invocation["checks"] = vo.checks;
    invocation["n"] = vo.n;
    invocation["k"] = vo.k;
    invocation["delta"] = vo.delta;
    invocation["max_n"] = vo.max_n;
    invocation["count"] = vo.count;
    invocation["samples"] = vo.samples;
    invocation["seed"] = vo.seed;
    invocation["exhaustive"] = vo.exhaustive;
    report["invocation"] = invocation;
    report["backend"] = kern::backend_name(kern::active_backend());

    bool all_pass = true;
    ordered_json checks = ordered_json::array();
    auto record = [&](CheckOutcome out, std::chrono::steady_clock::time_point t0) {
        if (vo.timings) {
            auto t1 = std::chrono::steady_clock::now();
            out.details["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        }
        all_pass = all_pass && out.pass;
        std::cout << out.name << (out.pass ? ": PASS " : ": FAIL ") << (out.cases - out.failures)
                  << "/" << out.cases;
        if (out.skipped) std::cout << " (" << out.skipped << " conditional cases skipped)";
        std::cout << "\n";
        checks.push_back(out.to_json());
    };
    for (const std::string& name : vo.checks) {
        auto t0 = std::chrono::steady_clock::now();
        if (name == "edge-bound") {
            record(check_edge_bound_exhaustive(vo.max_n), t0);
            t0 = std::chrono::steady_clock::now();
            record(check_edge_bound_random(vo.count, 30, vo.seed), t0);
        } else if (name == "stability") {
            record(check_closure_stability(vo.max_n, vo.k), t0);
        } else if (name == "members-within-budget") {
            record(scan_members_within_budget(vo.n, vo.k, vo.delta, vo.exhaustive, vo.samples,
                                              vo.seed),
                   t0);
        } else if (name == "members-past-budget") {
            record(scan_members_past_budget(vo.n, vo.k, vo.delta, vo.samples, vo.seed), t0);
        } else if (name == "x-entry-bound") {
            record(check_x_entry_bound(vo.n, vo.k, vo.delta, vo.samples, vo.seed), t0);
        } else if (name == "argmax-orderings") {
            record(check_argmax_entry_orderings(vo.n, vo.k, vo.delta), t0);
        } else if (name == "edge-threshold") {
            record(check_edge_threshold_coverability(vo.n, vo.k, vo.delta, vo.samples, vo.seed),
                   t0);
        } else {
            throw CLI::ValidationError("--check", "unknown check " + name);
        }
    }
    report["checks"] = checks;

    if (!vo.corpus.empty() || vo.use_stdin) {
        ClassifyOptions copt;
        copt.k = vo.k;
        copt.delta = vo.delta;
        ScanReport sr;
        if (vo.use_stdin) {
            sr = scan_corpus(std::cin, copt);
        } else {
            std::ifstream f(vo.corpus);
            if (!f) throw CLI::ValidationError("--corpus", "cannot open " + vo.corpus);
            sr = scan_corpus(f, copt);
        }
        report["scan"] = sr.to_json();
        all_pass = all_pass && sr.violations == 0;
        std::cout << "corpus: " << sr.records.size() << " graphs, " << sr.violations
                  << " violations, " << sr.unknowns << " unknown, " << sr.malformed.size()
                  << " malformed\n";
    }

    report["pass"] = all_pass;
    if (!vo.report.empty()) {
        std::ofstream f(vo.report, std::ios::binary);
        if (!f) throw CLI::ValidationError("--report", "cannot write " + vo.report);
        f << report.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signless-Laplacian route to path coverability: solvers and checkers"};
    app.require_subcommand(1);

    std::string kernels = "auto";
    app.add_option("--kernels", kernels, "compute backend: auto, scalar, avx2, neon")
        ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

    InputOpts qi_in, pc_in;
    bool adjacency = false, qi_json = false;
    double tol = 0.0;
    CLI::App* qi = app.add_subcommand("qindex", "largest signless-Laplacian eigenvalue");
    add_input_options(qi, qi_in);
    qi->add_flag("--adjacency", adjacency, "adjacency spectral radius instead");
    qi->add_flag("--json", qi_json, "JSON output with the eigenvector");
    qi->add_option("--tol", tol, "residual tolerance");

    int dp_cap = 20;
    bool certificate = false, strict = false, pc_json = false;
    std::uint64_t pc_seed = 42;
    CLI::App* pc = app.add_subcommand("pathcover", "minimum vertex-disjoint path cover");
    add_input_options(pc, pc_in);
    pc->add_flag("--certificate", certificate, "decide cover <= k by certificates, no exact DP");
    pc->add_flag("--strict", strict, "exit 3 when the verdict is unknown");
    pc->add_option("--dp-cap", dp_cap, "largest order solved exactly");
    pc->add_option("--search-seed", pc_seed, "seed for the randomized cover search");
    pc->add_flag("--json", pc_json, "JSON output");

    VerifyOpts vo;
    CLI::App* vf = app.add_subcommand("verify", "run property checks, write a JSON report");
    vf->add_option("--check", vo.checks,
                   "edge-bound, stability, members-within-budget, members-past-budget, "
                   "x-entry-bound, argmax-orderings, edge-threshold")
        ->check(CLI::IsMember({"edge-bound", "stability", "members-within-budget",
                               "members-past-budget", "x-entry-bound", "argmax-orderings",
                               "edge-threshold"}));
    vf->add_option("--corpus", vo.corpus, "graph6 file to classify");
    vf->add_flag("--stdin", vo.use_stdin, "classify graph6 records from stdin");
    vf->add_option("--n", vo.n, "family order");
    vf->add_option("--k", vo.k, "path budget");
    vf->add_option("--delta", vo.delta, "minimum-degree parameter");
    vf->add_option("--max-n", vo.max_n, "exhaustive order cap");
    vf->add_option("--count", vo.count, "random graph count for edge-bound");
    vf->add_option("--samples", vo.samples, "sample count for family scans");
    vf->add_option("--seed", vo.seed, "seed for all sampling");
    vf->add_flag("--exhaustive", vo.exhaustive, "enumerate members instead of sampling");
    vf->add_option("--report", vo.report, "write the JSON report here");
    vf->add_flag("--timings", vo.timings, "include wall-clock timings in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (kernels != "auto") {
        kern::Backend want = kernels == "scalar"  ? kern::Backend::scalar
                             : kernels == "avx2"  ? kern::Backend::avx2
                                                  : kern::Backend::neon;
        if (!kern::set_backend(want)) {
            std::cerr << "backend " << kernels << " is not available on this machine\n";
            return 2;
        }
    }

    try {
        if (qi->parsed()) return cmd_qindex(qi_in, adjacency, qi_json, tol);
        if (pc->parsed()) return cmd_pathcover(pc_in, certificate, strict, dp_cap, pc_seed,
                                               pc_json);
        if (vf->parsed()) {
            if (vo.checks.empty() && vo.corpus.empty() && !vo.use_stdin) {
                std::cerr << "verify: nothing to do, pass --check or --corpus/--stdin\n";
                return 2;
            }
            return cmd_verify(vo);
        }
    } catch (const Graph6Error& e) {
        std::cerr << "graph6: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
