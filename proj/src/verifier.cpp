#include "qpath/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qpath/closure.hpp"
#include "qpath/enumerate.hpp"
#include "qpath/graph6.hpp"
#include "qpath/randomgraph.hpp"

namespace qpath {

namespace {

std::string eprime_str(const std::vector<std::pair<int, int>>& es) {
    std::string out;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(es[i].first) + "-" + std::to_string(es[i].second);
    }
    return out;
}

const char* coverable_str(Coverable c) {
    switch (c) {
        case Coverable::yes: return "yes";
        case Coverable::no: return "no";
        case Coverable::unknown: return "unknown";
    }
    return "?";
}

// Base family graph with its signless Laplacian assembled once; deletion sets
// are applied in place and reverted, so a scan over many members never
// rebuilds the matrix.
struct FamilyScanner {
    BFamily fam;
    SymMatrix q0;
    Graph g0;
    EigenOptions eopt;

    FamilyScanner(int n, int k, int delta)
        : fam(build_base(n, k, delta)), q0(signless_laplacian(fam.graph)), g0(fam.graph) {}

    void apply(const std::vector<std::pair<int, int>>& es) {
        for (auto [u, v] : es) {
            q0.add(u, u, -1.0);
            q0.add(v, v, -1.0);
            q0.set(u, v, 0.0);
            g0.remove_edge(u, v);
        }
    }
    void revert(const std::vector<std::pair<int, int>>& es) {
        for (auto [u, v] : es) {
            q0.add(u, u, 1.0);
            q0.add(v, v, 1.0);
            q0.set(u, v, 1.0);
            g0.add_edge(u, v);
        }
    }

    SpectralResult solve(const std::vector<std::pair<int, int>>& es) {
        apply(es);
        SpectralResult r = largest_eigenpair(q0, eopt);
        revert(es);
        return r;
    }
};

} // namespace

ordered_json CheckOutcome::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["pass"] = pass;
    j["cases"] = cases;
    j["failures"] = failures;
    j["skipped"] = skipped;
    j["details"] = details;
    return j;
}

CheckOutcome check_edge_bound_exhaustive(int max_n) {
    CheckOutcome out;
    out.name = "edge-bound-exhaustive";
    ordered_json by_order = ordered_json::object();
    double worst_slack = std::numeric_limits<double>::infinity();
    std::string worst;
    for (int n = 2; n <= max_n; ++n) {
        long long count = 0;
        for (const Graph& g : all_graphs_up_to_iso(n, true)) {
            ++count;
            ++out.cases;
            EdgeBoundReport rep = edge_count_bound(g);
            if (!rep.holds) ++out.failures;
            if (rep.bound - rep.q < worst_slack) {
                worst_slack = rep.bound - rep.q;
                worst = to_graph6(g);
            }
        }
        by_order[std::to_string(n)] = count;
    }
    out.details["max_n"] = max_n;
    out.details["by_order"] = by_order;
    out.details["worst_slack"] = worst_slack;
    out.details["worst_graph"] = worst;
    out.pass = out.failures == 0;
    return out;
}

CheckOutcome check_edge_bound_random(int count, int max_n, std::uint64_t seed) {
    CheckOutcome out;
    out.name = "edge-bound-random";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, max_n);
    std::uniform_real_distribution<double> pick_p(0.05, 0.95);
    double worst_slack = std::numeric_limits<double>::infinity();
    std::string worst;
    for (int i = 0; i < count; ++i) {
        Graph g = erdos_renyi(pick_n(rng), pick_p(rng), rng);
        ++out.cases;
        EdgeBoundReport rep = edge_count_bound(g);
        if (!rep.holds) ++out.failures;
        if (rep.bound - rep.q < worst_slack) {
            worst_slack = rep.bound - rep.q;
            worst = to_graph6(g);
        }
    }
    out.details["count"] = count;
    out.details["max_n"] = max_n;
    out.details["seed"] = seed;
    out.details["worst_slack"] = worst_slack;
    out.details["worst_graph"] = worst;
    out.pass = out.failures == 0;
    return out;
}

CheckOutcome check_closure_stability(int max_n, int k) {
    CheckOutcome out;
    out.name = "closure-stability";
    ordered_json discrepancies = ordered_json::array();
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : all_graphs_up_to_iso(n, true)) {
            ++out.cases;
            bool before = min_path_cover(g).cover_number <= k;
            Graph closed = degree_sum_closure(g, n - k).closure;
            bool after = min_path_cover(closed).cover_number <= k;
            if (before != after) {
                ++out.failures;
                if (discrepancies.size() < 10) discrepancies.push_back(to_graph6(g));
            }
        }
    }
    out.details["max_n"] = max_n;
    out.details["k"] = k;
    out.details["discrepancies"] = discrepancies;
    out.pass = out.failures == 0;
    return out;
}

CheckOutcome scan_members_within_budget(int n, int k, int delta, bool exhaustive, int samples,
                                        std::uint64_t seed) {
    CheckOutcome out;
    out.name = "members-within-budget";
    const Thresholds th = thresholds(n, k, delta);
    FamilyScanner sc(n, k, delta);

    std::vector<std::vector<std::pair<int, int>>> members;
    ordered_json by_size = ordered_json::object();
    if (exhaustive) {
        const auto pool = deletable_pairs(n, k, delta);
        long long total = 0, layer = 1;
        for (int size = 0; size <= th.budget; ++size) {
            // C(|pool|, size), small sizes only
            layer = 1;
            for (int i = 0; i < size; ++i) layer = layer * (static_cast<long long>(pool.size()) - i) / (i + 1);
            total += layer;
        }
        if (total > 2000000)
            throw std::invalid_argument("scan_members_within_budget: exhaustive set too large");
        members.push_back({});
        if (th.budget >= 1)
            for (auto pr : pool) members.push_back({pr});
        if (th.budget >= 2)
            for (std::size_t a = 0; a < pool.size(); ++a)
                for (std::size_t b = a + 1; b < pool.size(); ++b)
                    members.push_back({pool[a], pool[b]});
        if (th.budget >= 3)
            throw std::invalid_argument("scan_members_within_budget: budgets above 2 are sampled only");
        for (int size = 0; size <= th.budget; ++size) {
            long long c = 0;
            for (const auto& m : members)
                if (static_cast<int>(m.size()) == size) ++c;
            by_size[std::to_string(size)] = c;
        }
    } else {
        members.push_back({});
        int per_size = samples / static_cast<int>(th.budget > 0 ? th.budget : 1);
        for (int size = 1; size <= th.budget; ++size) {
            int want = size == th.budget ? samples - per_size * (static_cast<int>(th.budget) - 1)
                                         : per_size;
            for (auto& es : sample_deletions(n, k, delta, size, want, seed + size))
                members.push_back(std::move(es));
        }
        by_size["sampled"] = static_cast<long long>(members.size()) - 1;
    }

    double min_q = std::numeric_limits<double>::infinity();
    std::string min_q_member;
    double max_residual = 0.0;
    long long separator_failures = 0, degree_failures = 0, q_failures = 0, solver_failures = 0;
    ordered_json failures_sample = ordered_json::array();

    const std::vector<int>& yset = sc.fam.Y;
    for (const auto& es : members) {
        ++out.cases;
        sc.apply(es);
        SpectralResult r = largest_eigenpair(sc.q0, sc.eopt);
        bool ok = true;
        if (!r.converged || r.residual > 1e-8) {
            ++solver_failures;
            ok = false;
        }
        if (r.value < th.q_threshold - 1e-6) {
            ++q_failures;
            ok = false;
        }
        SeparatorCertificate cert = separator_bound(sc.g0, yset);
        if (cert.bound != k + 1) {
            ++separator_failures;
            ok = false;
        }
        if (sc.g0.min_degree() < delta) {
            ++degree_failures;
            ok = false;
        }
        if (r.value < min_q) {
            min_q = r.value;
            min_q_member = eprime_str(es);
        }
        max_residual = std::max(max_residual, r.residual);
        if (!ok) {
            ++out.failures;
            if (failures_sample.size() < 10) failures_sample.push_back(eprime_str(es));
        }
        sc.revert(es);
    }

    out.details["n"] = n;
    out.details["k"] = k;
    out.details["delta"] = delta;
    out.details["budget"] = th.budget;
    out.details["q_threshold"] = th.q_threshold;
    out.details["exhaustive"] = exhaustive;
    if (!exhaustive) {
        out.details["samples"] = samples;
        out.details["seed"] = seed;
    }
    out.details["members"] = out.cases;
    out.details["by_size"] = by_size;
    out.details["min_q"] = min_q;
    out.details["min_q_member"] = min_q_member;
    out.details["min_q_margin"] = min_q - th.q_threshold;
    out.details["max_residual"] = max_residual;
    out.details["separator_bound_expected"] = k + 1;
    out.details["separator_failures"] = separator_failures;
    out.details["degree_failures"] = degree_failures;
    out.details["q_failures"] = q_failures;
    out.details["solver_failures"] = solver_failures;
    out.details["failures_sample"] = failures_sample;
    out.pass = out.failures == 0;
    return out;
}

CheckOutcome scan_members_past_budget(int n, int k, int delta, int samples, std::uint64_t seed) {
    CheckOutcome out;
    out.name = "members-past-budget";
    const Thresholds th = thresholds(n, k, delta);
    const int size = static_cast<int>(th.budget) + 1;
    const double lower = th.q_threshold - 1.0;
    const bool upper_applies = n >= th.n_min_spectral;

    FamilyScanner sc(n, k, delta);
    auto members = sample_deletions(n, k, delta, size, samples, seed);

    double min_q = std::numeric_limits<double>::infinity();
    double max_q = -std::numeric_limits<double>::infinity();
    std::string min_member, max_member;
    double max_residual = 0.0;
    for (const auto& es : members) {
        ++out.cases;
        SpectralResult r = sc.solve(es);
        max_residual = std::max(max_residual, r.residual);
        bool ok = r.converged;
        if (!(r.value > lower + 1e-9)) ok = false;
        if (upper_applies && !(r.value < th.q_threshold - 1e-9)) ok = false;
        if (!upper_applies) ++out.skipped;
        if (!ok) ++out.failures;
        if (r.value < min_q) {
            min_q = r.value;
            min_member = eprime_str(es);
        }
        if (r.value > max_q) {
            max_q = r.value;
            max_member = eprime_str(es);
        }
    }

    out.details["n"] = n;
    out.details["k"] = k;
    out.details["delta"] = delta;
    out.details["size"] = size;
    out.details["samples"] = samples;
    out.details["seed"] = seed;
    out.details["lower"] = lower;
    out.details["upper"] = th.q_threshold;
    out.details["upper_applies"] = upper_applies;
    out.details["min_q"] = min_q;
    out.details["min_q_member"] = min_member;
    out.details["max_q"] = max_q;
    out.details["max_q_member"] = max_member;
    out.details["max_residual"] = max_residual;
    out.pass = out.failures == 0;
    return out;
}

CheckOutcome check_x_entry_bound(int n, int k, int delta, int samples, std::uint64_t seed) {
    CheckOutcome out;
    out.name = "x-entry-bound";
    const Thresholds th = thresholds(n, k, delta);
    FamilyScanner sc(n, k, delta);

    std::vector<std::vector<std::pair<int, int>>> members;
    members.push_back({}); // the base graph itself
    {
        int sizes = static_cast<int>(th.budget) + 1;
        int per = std::max(1, samples / sizes);
        int left = samples;
        for (int size = 1; size <= sizes && left > 0; ++size) {
            int want = std::min(left, size == sizes ? left : per);
            for (auto& es : sample_deletions(n, k, delta, size, want, seed + size))
                members.push_back(std::move(es));
            left -= want;
        }
    }

    double worst_margin = std::numeric_limits<double>::infinity();
    std::string worst_member;
    double max_eq_residual = 0.0;
    for (const auto& es : members) {
        ++out.cases;
        sc.apply(es);
        SpectralResult r = largest_eigenpair(sc.q0, sc.eopt);
        auto h = max_one_normalized(r.vector);
        double bound = delta / (r.value - delta);
        double max_x = -std::numeric_limits<double>::infinity();
        for (int v : sc.fam.X) max_x = std::max(max_x, h[v]);
        double margin = bound + 1e-8 - max_x;
        if (margin < worst_margin) {
            worst_margin = margin;
            worst_member = eprime_str(es);
        }
        if (margin < 0 || !r.converged) ++out.failures;
        max_eq_residual =
            std::max(max_eq_residual, check_eigen_equation(sc.g0, r.value, r.vector).max_residual);
        sc.revert(es);
    }

    out.details["n"] = n;
    out.details["k"] = k;
    out.details["delta"] = delta;
    out.details["samples"] = samples;
    out.details["seed"] = seed;
    out.details["members"] = out.cases;
    out.details["worst_margin"] = worst_margin;
    out.details["worst_member"] = worst_member;
    out.details["max_eigen_eq_residual"] = max_eq_residual;
    out.pass = out.failures == 0 && max_eq_residual <= 1e-8;
    return out;
}

CheckOutcome check_argmax_entry_orderings(int n, int k, int delta) {
    CheckOutcome out;
    out.name = "argmax-entry-orderings";
    const Thresholds th = thresholds(n, k, delta);
    if (th.budget + 1 != 2)
        throw std::invalid_argument("argmax check: exhaustive search covers budget+1 == 2 only");
    const auto pool = deletable_pairs(n, k, delta);
    const long long total = static_cast<long long>(pool.size()) * (pool.size() - 1) / 2;
    if (total > 200000)
        throw std::invalid_argument("argmax check: member count too large for exhaustion");

    FamilyScanner sc(n, k, delta);

    // Pass over every member, keeping the values for the tie-break afterwards.
    std::vector<double> qs;
    qs.reserve(total);
    double best_q = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            SpectralResult r = sc.solve({pool[a], pool[b]});
            qs.push_back(r.value);
            best_q = std::max(best_q, r.value);
        }
    out.cases = total;

    // Ties within the window: most surviving edges inside Y, then the
    // lexicographically smallest deletion set.
    const double window = 1e-7;
    std::vector<std::pair<int, int>> champion;
    long long champ_y_edges = -1;
    {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = a + 1; b < pool.size(); ++b, ++idx) {
                if (qs[idx] < best_q - window) continue;
                std::vector<std::pair<int, int>> es{pool[a], pool[b]};
                long long y_internal = 0;
                for (auto [u, v] : es)
                    if (u < delta && v < delta) ++y_internal;
                long long y_edges = static_cast<long long>(delta) * (delta - 1) / 2 - y_internal;
                if (champion.empty() || y_edges > champ_y_edges ||
                    (y_edges == champ_y_edges && es < champion)) {
                    champion = es;
                    champ_y_edges = y_edges;
                }
            }
    }

    SpectralResult r = sc.solve(champion);
    sc.apply(champion);
    auto h = max_one_normalized(r.vector);

    std::vector<int> y1, y2, z1, z2;
    for (int v : sc.fam.Y)
        (sc.g0.degree(v) == n - 1 ? y1 : y2).push_back(v);
    for (int v : sc.fam.Z)
        (sc.g0.degree(v) == n - delta - k - 1 ? z1 : z2).push_back(v);

    auto min_over = [&](const std::vector<int>& s) {
        double m = std::numeric_limits<double>::infinity();
        for (int v : s) m = std::min(m, h[v]);
        return m;
    };
    auto max_over = [&](const std::vector<int>& s) {
        double m = -std::numeric_limits<double>::infinity();
        for (int v : s) m = std::max(m, h[v]);
        return m;
    };

    ordered_json orderings = ordered_json::object();
    auto record_ordering = [&](const char* nm, bool applies, double lo_side, double hi_side) {
        if (!applies) {
            orderings[nm] = "n/a";
            ++out.skipped;
            return;
        }
        double margin = lo_side - hi_side;
        ordered_json entry;
        entry["margin"] = margin;
        entry["holds"] = margin > 1e-10;
        orderings[nm] = entry;
        if (!(margin > 1e-10)) ++out.failures;
    };

    if (z1.empty()) ++out.failures; // the full-degree part of Z must survive
    record_ordering("z1_above_y2", !y2.empty() && !z1.empty(), min_over(z1), max_over(y2));
    record_ordering("z1_above_z2", !z2.empty() && !z1.empty(), min_over(z1), max_over(z2));
    record_ordering("y1_above_z1", !y1.empty() && !z1.empty(), min_over(y1), max_over(z1));

    double max_h = *std::max_element(h.begin(), h.end());
    double min_yz = std::numeric_limits<double>::infinity();
    for (int v : sc.fam.Y) min_yz = std::min(min_yz, h[v]);
    for (int v : sc.fam.Z) min_yz = std::min(min_yz, h[v]);
    double gap = max_h - min_yz;
    double denom = r.value - n + 1;
    double gap_bound = ((delta + k) * (delta + 4.0) + 4.0) / (2.0 * denom);
    if (!(denom > 0)) ++out.failures;
    if (!(gap < gap_bound)) ++out.failures;

    sc.revert(champion);

    out.details["n"] = n;
    out.details["k"] = k;
    out.details["delta"] = delta;
    out.details["pairs"] = static_cast<long long>(pool.size());
    out.details["members"] = total;
    out.details["argmax_member"] = eprime_str(champion);
    out.details["argmax_q"] = r.value;
    out.details["tie_window"] = window;
    out.details["part_sizes"] = {{"y1", y1.size()}, {"y2", y2.size()}, {"z1", z1.size()}, {"z2", z2.size()}};
    out.details["orderings"] = orderings;
    out.details["gap"] = gap;
    out.details["gap_bound"] = gap_bound;
    out.details["q_minus_n_plus_1"] = denom;
    out.pass = out.failures == 0;
    return out;
}

CheckOutcome check_edge_threshold_coverability(int n, int k, int delta, int samples,
                                               std::uint64_t seed) {
    CheckOutcome out;
    out.name = "edge-threshold-coverability";
    const Thresholds th = thresholds(n, k, delta);
    const BFamily fam = build_base(n, k, delta);

    // pairs absent from the base graph: inside X, and between X and Z
    std::vector<std::pair<int, int>> non_edges;
    for (std::size_t i = 0; i < fam.X.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.X.size(); ++j)
            non_edges.emplace_back(fam.X[i], fam.X[j]);
        for (int z : fam.Z) non_edges.emplace_back(std::min(fam.X[i], z), std::max(fam.X[i], z));
    }
    std::sort(non_edges.begin(), non_edges.end());

    std::mt19937_64 rng(seed);
    // density already above the edge threshold, so rejection stays cheap
    const double dens = th.edge_threshold / (static_cast<double>(n) * (n - 1) / 2.0);
    const double p_lo = std::min(0.99, std::max(0.78, dens + 0.01));
    std::uniform_real_distribution<double> pick_p(p_lo, std::min(0.999, p_lo + 0.14));

    ordered_json routes = ordered_json::object();
    for (const char* r : {"dp", "closure", "greedy", "separator", "none", "empty"}) routes[r] = 0;
    long long coverable = 0, subgraph_only = 0, violations = 0, unknowns = 0;
    ordered_json violations_sample = ordered_json::array();

    for (int i = 0; i < samples; ++i) {
        Graph g(0);
        if (i % 2 == 0) {
            g = fam.graph;
            int extras = (i / 2) % 10;
            // Floyd sample of distinct missing pairs
            std::vector<int> idx;
            const long long m = static_cast<long long>(non_edges.size());
            for (long long j = m - extras; j < m; ++j) {
                std::uniform_int_distribution<long long> dist(0, j);
                long long t = dist(rng);
                if (std::find(idx.begin(), idx.end(), static_cast<int>(t)) == idx.end())
                    idx.push_back(static_cast<int>(t));
                else
                    idx.push_back(static_cast<int>(j));
            }
            for (int id : idx) g.add_edge(non_edges[id].first, non_edges[id].second);
        } else {
            bool found = false;
            for (int attempt = 0; attempt < 5000 && !found; ++attempt) {
                g = erdos_renyi(n, pick_p(rng), rng);
                found = g.min_degree() >= delta &&
                        static_cast<double>(g.edge_count()) > th.edge_threshold;
            }
            if (!found) throw std::runtime_error("edge-threshold check: sampler failed");
        }
        ++out.cases;

        CoverOptions copt;
        copt.seed = seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1));
        CoverEvidence ev = is_k_path_coverable(g, k, copt);
        routes[ev.route] = routes[ev.route].get<long long>() + 1;

        if (ev.verdict == Coverable::yes) {
            ++coverable;
        } else if (ev.verdict == Coverable::no) {
            if (roles_if_spanning_subgraph(g, k, delta)) {
                ++subgraph_only;
            } else {
                ++violations;
                ++out.failures;
                if (violations_sample.size() < 5) violations_sample.push_back(to_graph6(g));
            }
        } else {
            ++unknowns;
            ++out.failures;
        }
    }

    out.details["n"] = n;
    out.details["k"] = k;
    out.details["delta"] = delta;
    out.details["samples"] = samples;
    out.details["seed"] = seed;
    out.details["edge_threshold"] = th.edge_threshold;
    out.details["order_ok"] = n >= th.n_min_edges;
    out.details["routes"] = routes;
    out.details["coverable"] = coverable;
    out.details["subgraph_of_base"] = subgraph_only;
    out.details["unknown"] = unknowns;
    out.details["violations"] = violations;
    out.details["violations_sample"] = violations_sample;
    out.pass = out.failures == 0;
    return out;
}

ordered_json ScanRecord::to_json() const {
    ordered_json j;
    j["graph6"] = graph6;
    j["n"] = n;
    j["edges"] = edges;
    j["min_degree"] = min_degree;
    j["connected"] = connected;
    ordered_json qj;
    qj["value"] = q.value;
    qj["method"] = q.method;
    qj["iterations"] = q.iterations;
    qj["residual"] = q.residual;
    qj["converged"] = q.converged;
    j["q"] = qj;
    j["q_threshold"] = q_threshold;
    j["params_applicable"] = params_applicable;
    j["hypotheses_met"] = hypotheses_met;
    j["coverable"] = coverable_str(coverable);
    j["route"] = route;
    j["member_within_budget"] = member_within_budget;
    j["spanning_subgraph_of_base"] = spanning_subgraph_of_base;
    j["edge_bound_holds"] = edge_bound_holds;
    j["theorem_violated"] = theorem_violated;
    return j;
}

ScanRecord classify_graph(const Graph& g, const ClassifyOptions& opt) {
    if (g.order() == 0) throw std::invalid_argument("classify_graph: empty graph");
    ScanRecord rec;
    rec.graph6 = to_graph6(g);
    rec.n = g.order();
    rec.edges = g.edge_count();
    rec.min_degree = g.min_degree();
    rec.connected = is_connected(g);
    rec.q = q_index(g, opt.eigen);

    rec.params_applicable = opt.k >= 1 && opt.delta >= 1 && rec.n >= 2 * opt.delta + opt.k + 1;
    if (rec.params_applicable) {
        const Thresholds th = thresholds(rec.n, opt.k, opt.delta);
        rec.q_threshold = th.q_threshold;
        rec.hypotheses_met = rec.connected && opt.delta >= 2 && rec.min_degree >= opt.delta &&
                             rec.n >= th.n_min_spectral && rec.q.value >= th.q_threshold - 1e-6;
    }

    CoverEvidence ev = is_k_path_coverable(g, opt.k, opt.cover);
    rec.coverable = ev.verdict;
    rec.route = ev.route;

    if (opt.recognize_family && rec.params_applicable) {
        rec.member_within_budget = roles_if_member_within_budget(g, opt.k, opt.delta).has_value();
        rec.spanning_subgraph_of_base = roles_if_spanning_subgraph(g, opt.k, opt.delta).has_value();
    }
    rec.edge_bound_holds = rec.n >= 2 ? edge_count_bound(g).holds : true;

    rec.theorem_violated =
        rec.hypotheses_met && rec.coverable == Coverable::no && !rec.member_within_budget;
    return rec;
}

ordered_json ScanReport::to_json() const {
    ordered_json j;
    ordered_json recs = ordered_json::array();
    for (const auto& r : records) recs.push_back(r.to_json());
    j["records"] = recs;
    ordered_json summary;
    summary["graphs"] = static_cast<long long>(records.size());
    summary["violations"] = violations;
    summary["unknowns"] = unknowns;
    ordered_json mal = ordered_json::array();
    for (const auto& [line, err] : malformed) {
        ordered_json e;
        e["line"] = line;
        e["error"] = err;
        mal.push_back(e);
    }
    summary["malformed"] = mal;
    j["summary"] = summary;
    return j;
}

ScanReport scan_corpus(std::istream& in, const ClassifyOptions& opt) {
    ScanReport rep;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        try {
            Graph g = from_graph6(line);
            rep.records.push_back(classify_graph(g, opt));
            if (rep.records.back().theorem_violated) ++rep.violations;
            if (rep.records.back().coverable == Coverable::unknown) ++rep.unknowns;
        } catch (const Graph6Error& e) {
            rep.malformed.emplace_back(line_no, e.what());
        }
    }
    return rep;
}

} // namespace qpath
