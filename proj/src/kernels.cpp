#include "qpath/kernels.hpp"

#include <stdexcept>

namespace qpath::kern {

const Ops& scalar_ops();
#ifdef QPATH_WITH_AVX2
const Ops& avx2_ops();
#endif
#ifdef QPATH_WITH_NEON
const Ops& neon_ops();
#endif

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#ifdef QPATH_WITH_AVX2
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#ifdef QPATH_WITH_NEON
            return true; // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

namespace {

Backend pick_default() {
    if (backend_available(Backend::avx2)) return Backend::avx2;
    if (backend_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

Backend& active_slot() {
    static Backend b = pick_default();
    return b;
}

} // namespace

Backend active_backend() { return active_slot(); }

bool set_backend(Backend b) {
    if (!backend_available(b)) return false;
    active_slot() = b;
    return true;
}

const Ops& ops_for(Backend b) {
    switch (b) {
        case Backend::scalar:
            return scalar_ops();
        case Backend::avx2:
#ifdef QPATH_WITH_AVX2
            if (backend_available(Backend::avx2)) return avx2_ops();
#endif
            break;
        case Backend::neon:
#ifdef QPATH_WITH_NEON
            return neon_ops();
#endif
            break;
    }
    throw std::runtime_error(std::string("kernel backend unavailable: ") + backend_name(b));
}

const Ops& ops() { return ops_for(active_backend()); }

} // namespace qpath::kern
