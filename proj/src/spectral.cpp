#include "qpath/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qpath/kernels.hpp"

namespace qpath {

namespace {

double norm2(const std::vector<double>& x) {
    return std::sqrt(kern::ops().dot(x.data(), x.data(), x.size()));
}

// Sign convention: make the largest-magnitude entry positive (first such
// index on ties).  Keeps reported eigenvectors reproducible across methods.
void fix_sign(std::vector<double>& x) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs(x[i]) > std::abs(x[best])) best = i;
    if (x[best] < 0)
        for (double& v : x) v = -v;
}

double residual_inf(const SymMatrix& m, double value, const std::vector<double>& x,
                    std::vector<double>& scratch) {
    kern::ops().matvec(m.data(), x.size(), x.data(), scratch.data());
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        worst = std::max(worst, std::abs(scratch[i] - value * x[i]));
    return worst;
}

} // namespace

SymMatrix adjacency_matrix(const Graph& g) {
    int n = g.order();
    SymMatrix m(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) m.set(u, v, 1.0);
    return m;
}

SymMatrix signless_laplacian(const Graph& g) {
    SymMatrix m = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) m.set(v, v, static_cast<double>(g.degree(v)));
    return m;
}

JacobiResult jacobi_eigen(const SymMatrix& m, bool want_vectors) {
    const int n = m.order();
    JacobiResult out;
    if (n == 0) return out;

    std::vector<double> a(m.data(), m.data() + static_cast<std::size_t>(n) * n);
    std::vector<double> vt;
    if (want_vectors) {
        vt.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) vt[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double fro = std::sqrt(kern::ops().dot(a.data(), a.data(), a.size()));
    const double stop = 1e-13 * std::max(1.0, fro);
    const int max_sweeps = 64;

    int sweep = 0;
    double off = 0.0;
    for (; sweep < max_sweeps; ++sweep) {
        off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        off = std::sqrt(2.0 * off);
        if (off <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double app = at(p, p), aqq = at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                kern::ops().rot(&at(p, 0), &at(q, 0), c, s, static_cast<std::size_t>(n));
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    at(i, p) = at(p, i);
                    at(i, q) = at(q, i);
                }
                if (want_vectors)
                    kern::ops().rot(vt.data() + static_cast<std::size_t>(p) * n,
                                    vt.data() + static_cast<std::size_t>(q) * n, c, s,
                                    static_cast<std::size_t>(n));
            }
        }
    }

    out.sweeps = sweep;
    out.off_norm = off;

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return at(i, i) < at(j, j); });
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = at(idx[i], idx[i]);
    if (want_vectors) {
        out.vectors.resize(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            std::copy_n(vt.data() + static_cast<std::size_t>(idx[i]) * n, n,
                        out.vectors.data() + static_cast<std::size_t>(i) * n);
    }
    return out;
}

SpectralResult largest_eigenpair(const SymMatrix& m, const EigenOptions& opt) {
    const int n = m.order();
    if (n == 0) throw std::invalid_argument("largest_eigenpair: empty matrix");

    SpectralResult res;

    auto finish_with_jacobi = [&](int iterations_so_far) {
        JacobiResult jr = jacobi_eigen(m, true);
        res.value = jr.values.back();
        res.vector.assign(jr.vectors.end() - n, jr.vectors.end());
        double nrm = norm2(res.vector);
        for (double& v : res.vector) v /= nrm;
        fix_sign(res.vector);
        std::vector<double> scratch(n);
        res.residual = residual_inf(m, res.value, res.vector, scratch);
        res.iterations = iterations_so_far;
        res.method = "jacobi";
        res.converged = res.residual <= std::max(opt.tol, 1e-12 * std::max(1.0, std::abs(res.value))) * 10.0;
        if (n >= 2) {
            res.leading_gap = jr.values[n - 1] - jr.values[n - 2];
            res.degenerate = *res.leading_gap < 1e-6;
        }
        return res;
    };

    if (opt.force_jacobi) return finish_with_jacobi(0);

    // Gershgorin shift: sigma >= -lambda_min, zero for diagonally dominant
    // PSD input (the signless Laplacian), max degree for an adjacency matrix.
    double sigma = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        const double* row = m.row(i);
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::abs(row[j]);
        sigma = std::max(sigma, radius - row[i]);
    }

    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 + static_cast<double>(i) / (8.0 * n);
    double nrm = norm2(x);
    for (double& v : x) v /= nrm;

    const auto& k = kern::ops();
    for (int it = 1; it <= opt.max_iter; ++it) {
        k.matvec(m.data(), static_cast<std::size_t>(n), x.data(), y.data());
        double lambda = k.dot(x.data(), y.data(), static_cast<std::size_t>(n)); // x unit
        double worst = 0.0;
        for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(y[i] - lambda * x[i]));
        if (worst <= opt.tol) {
            res.value = lambda;
            res.vector = x;
            fix_sign(res.vector);
            res.residual = worst;
            res.iterations = it;
            res.method = "power";
            res.converged = true;
            return res;
        }
        if (sigma != 0.0) k.axpy(sigma, x.data(), y.data(), static_cast<std::size_t>(n));
        double ynrm = norm2(y);
        if (ynrm == 0.0) { // x in the kernel of M + sigma*I: lambda = -sigma exactly
            res.value = lambda;
            res.vector = x;
            fix_sign(res.vector);
            res.residual = worst;
            res.iterations = it;
            res.method = "power";
            res.converged = worst <= opt.tol;
            return res;
        }
        for (int i = 0; i < n; ++i) x[i] = y[i] / ynrm;
    }

    if (n <= opt.jacobi_cap) return finish_with_jacobi(opt.max_iter);

    // Report the stalled state honestly.
    k.matvec(m.data(), static_cast<std::size_t>(n), x.data(), y.data());
    res.value = k.dot(x.data(), y.data(), static_cast<std::size_t>(n));
    res.vector = x;
    fix_sign(res.vector);
    std::vector<double> scratch(n);
    res.residual = residual_inf(m, res.value, res.vector, scratch);
    res.iterations = opt.max_iter;
    res.method = "power";
    res.converged = false;
    return res;
}

SpectralResult q_index(const Graph& g, const EigenOptions& opt) {
    return largest_eigenpair(signless_laplacian(g), opt);
}

SpectralResult adjacency_spectral_radius(const Graph& g, const EigenOptions& opt) {
    return largest_eigenpair(adjacency_matrix(g), opt);
}

std::vector<double> max_one_normalized(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("max_one_normalized: empty vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (std::abs(x[i]) > std::abs(x[best])) best = i;
    if (x[best] == 0.0) throw std::invalid_argument("max_one_normalized: zero vector");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / x[best];
    return out;
}

double rayleigh_quotient(const SymMatrix& m, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != m.order())
        throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
    double xx = kern::ops().dot(x.data(), x.data(), x.size());
    if (xx == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    std::vector<double> y(x.size());
    kern::ops().matvec(m.data(), x.size(), x.data(), y.data());
    return kern::ops().dot(x.data(), y.data(), x.size()) / xx;
}

double signless_rayleigh_checked(const Graph& g, const std::vector<double>& x) {
    double via_matrix = rayleigh_quotient(signless_laplacian(g), x);
    double xx = kern::ops().dot(x.data(), x.data(), x.size());
    double acc = 0.0;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) acc += (x[u] + x[v]) * (x[u] + x[v]);
    double via_edges = acc / xx;
    double tol = 1e-9 * std::max({1.0, std::abs(via_matrix), std::abs(via_edges)});
    if (std::abs(via_matrix - via_edges) > tol)
        throw std::logic_error("signless Rayleigh routes disagree: matrix " +
                               std::to_string(via_matrix) + " vs edges " +
                               std::to_string(via_edges));
    return via_matrix;
}

EigenEquationReport check_eigen_equation(const Graph& g, double q, const std::vector<double>& h) {
    if (static_cast<int>(h.size()) != g.order())
        throw std::invalid_argument("check_eigen_equation: dimension mismatch");
    EigenEquationReport rep;
    rep.residuals.resize(g.order());
    for (int i = 0; i < g.order(); ++i) {
        double sum = 0.0;
        for (int j : g.neighbors(i)) sum += h[j];
        rep.residuals[i] = std::abs((q - g.degree(i)) * h[i] - sum);
        rep.max_residual = std::max(rep.max_residual, rep.residuals[i]);
    }
    return rep;
}

double difference_identity_gap(const Graph& g, double q, const std::vector<double>& h, int i,
                               int j) {
    if (static_cast<int>(h.size()) != g.order())
        throw std::invalid_argument("difference_identity_gap: dimension mismatch");
    if (i == j) throw std::invalid_argument("difference_identity_gap: i == j");
    double only_i = 0.0, only_j = 0.0;
    for (int v = 0; v < g.order(); ++v) {
        bool ni = v != i && g.adjacent(i, v);
        bool nj = v != j && g.adjacent(j, v);
        if (ni && !nj) only_i += h[v];
        if (nj && !ni) only_j += h[v];
    }
    double lhs = (q - g.degree(i)) * (h[i] - h[j]);
    double rhs = (g.degree(i) - g.degree(j)) * h[j] + only_i - only_j;
    return std::abs(lhs - rhs);
}

EdgeBoundReport edge_count_bound(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("edge_count_bound: order must be at least 2");
    EdgeBoundReport rep;
    rep.q = q_index(g).value;
    rep.bound = 2.0 * static_cast<double>(g.edge_count()) / (n - 1) + n - 2;
    rep.holds = rep.q <= rep.bound + 1e-6;
    return rep;
}

} // namespace qpath
