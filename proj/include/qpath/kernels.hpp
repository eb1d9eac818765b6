#pragma once

#include <cstddef>

// Dense double-precision primitives used by the eigensolvers.  Each operation
// has a scalar reference implementation and, where the host supports it, a
// SIMD variant selected at runtime.  All variants must agree to floating-point
// roundoff; the equivalence tests pin that down.

namespace qpath::kern {

enum class Backend { scalar, avx2, neon };

struct Ops {
    // <x, y> over n entries
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y = A x for row-major symmetric A of order n
    void (*matvec)(const double* a, std::size_t n, const double* x, double* y);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // plane rotation applied to two rows:
    //   x[i] <- c*x[i] - s*y[i],  y[i] <- s*x[i] + c*y[i]
    void (*rot)(double* x, double* y, double c, double s, std::size_t n);
};

const char* backend_name(Backend b);
bool backend_available(Backend b);

// Currently active backend (picked at startup: best available).
Backend active_backend();
// Override the active backend.  Returns false if unavailable on this host.
bool set_backend(Backend b);

// Operation table of the active backend.
const Ops& ops();
// Operation table of a specific backend; throws if unavailable.
const Ops& ops_for(Backend b);

} // namespace qpath::kern
