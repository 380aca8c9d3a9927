#include "condlab/kernels.hpp"

#include <cstring>
#include <stdexcept>

namespace condlab::kernels {

#if defined(CONDLAB_BUILD_AVX2)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(CONDLAB_BUILD_AVX2)
    if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
    return nullptr;
}

namespace {
const Ops* g_forced = nullptr;
}

const Ops& active_ops() {
    if (g_forced) return *g_forced;
    if (const Ops* v = avx2_ops()) return *v;
    return scalar_ops();
}

void force_backend(const char* name) {
    if (std::strcmp(name, "auto") == 0) {
        g_forced = nullptr;
        return;
    }
    if (std::strcmp(name, "scalar") == 0) {
        g_forced = &scalar_ops();
        return;
    }
    if (std::strcmp(name, "avx2") == 0) {
        const Ops* v = avx2_ops();
        if (!v) throw std::runtime_error("avx2 backend unavailable on this host");
        g_forced = v;
        return;
    }
    throw std::invalid_argument("unknown kernel backend");
}

}  // namespace condlab::kernels
