#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpath/graph.hpp"

namespace qpath {

// Dense symmetric matrix, full row-major storage.  set/add keep both mirror
// entries in sync so the kernels can stream whole rows.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int order() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }
    void add(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] += v;
        if (i != j) a_[static_cast<std::size_t>(j) * n_ + i] += v;
    }
    const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }
    const double* data() const { return a_.data(); }
    double* data() { return a_.data(); }

  private:
    int n_ = 0;
    std::vector<double> a_;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix signless_laplacian(const Graph& g); // D + A

struct EigenOptions {
    double tol = 1e-10;     // infinity-norm residual target
    int max_iter = 50000;   // power iteration cap
    bool force_jacobi = false;
    int jacobi_cap = 400;   // fallback allowed up to this order
};

struct SpectralResult {
    double value = 0.0;
    std::vector<double> vector; // unit 2-norm, sign fixed so the largest-|.| entry is positive
    double residual = 0.0;      // ||Mx - value*x||_inf
    int iterations = 0;
    std::string method;         // "power" or "jacobi"
    bool converged = false;
    // Populated when the full spectrum was computed: distance between the two
    // largest eigenvalues, and whether it is below the multiplicity threshold.
    std::optional<double> leading_gap;
    bool degenerate = false;
};

// Largest eigenvalue and eigenvector.  Power iteration on M + sigma*I with a
// Gershgorin shift sigma >= -lambda_min(M); falls back to Jacobi when the
// iteration stalls (degenerate leading eigenvalue) and the order permits.
SpectralResult largest_eigenpair(const SymMatrix& m, const EigenOptions& opt = {});

SpectralResult q_index(const Graph& g, const EigenOptions& opt = {});
SpectralResult adjacency_spectral_radius(const Graph& g, const EigenOptions& opt = {});

struct JacobiResult {
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // row i (length n) is the eigenvector of values[i]
    int sweeps = 0;
    double off_norm = 0.0;
};

// Cyclic Jacobi on a copy of m.  Deterministic; quadratic convergence, hard
// sweep cap well above anything seen in practice.
JacobiResult jacobi_eigen(const SymMatrix& m, bool want_vectors = true);

// x rescaled so the entry of largest magnitude equals +1.
std::vector<double> max_one_normalized(const std::vector<double>& x);

double rayleigh_quotient(const SymMatrix& m, const std::vector<double>& x);

// <Qx,x>/<x,x> computed two ways: through the assembled matrix and through
// the edge sum  sum_{ij in E} (x_i+x_j)^2.  Throws if the routes disagree
// beyond 1e-9 relative; returns the matrix-route value.
double signless_rayleigh_checked(const Graph& g, const std::vector<double>& x);

struct EigenEquationReport {
    std::vector<double> residuals; // |(q - d(i)) h_i - sum_{j ~ i} h_j| per vertex
    double max_residual = 0.0;
};
EigenEquationReport check_eigen_equation(const Graph& g, double q, const std::vector<double>& h);

// |(q - d(i))(h_i - h_j) - (d(i) - d(j)) h_j - sum_{N(i)\N(j)} h + sum_{N(j)\N(i)} h|
// for one ordered pair (i, j); plain set differences, so j itself may appear
// in the first sum and i in the second.
double difference_identity_gap(const Graph& g, double q, const std::vector<double>& h, int i, int j);

struct EdgeBoundReport {
    double q = 0.0;
    double bound = 0.0; // 2e/(n-1) + n - 2
    bool holds = false; // q <= bound + 1e-6
};
EdgeBoundReport edge_count_bound(const Graph& g); // n >= 2 required

} // namespace qpath
