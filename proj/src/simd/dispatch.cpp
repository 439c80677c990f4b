#include <cstdlib>
#include <cstring>

#include "optomech/simd/em_kernel.hpp"

namespace optomech::simd {

void em_run_block_scalar(const EmBlockSpec&, std::uint64_t, int, double*);
#if OPTOMECH_X86
void em_run_block_avx2(const EmBlockSpec&, std::uint64_t, int, double*);
#endif
#if OPTOMECH_ARM64
void em_run_block_neon(const EmBlockSpec&, std::uint64_t, int, double*);
#endif

Arch detect_arch() {
#if OPTOMECH_X86
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Arch::avx2;
    return Arch::scalar;
#elif OPTOMECH_ARM64
    return Arch::neon;
#else
    return Arch::scalar;
#endif
}

Arch active_arch() {
    const char* env = std::getenv("OPTOMECH_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return Arch::scalar;
        if (std::strcmp(env, "avx2") == 0 && detect_arch() == Arch::avx2)
            return Arch::avx2;
        if (std::strcmp(env, "neon") == 0 && detect_arch() == Arch::neon)
            return Arch::neon;
        return Arch::scalar;
    }
    return detect_arch();
}

const char* arch_name(Arch a) {
    switch (a) {
        case Arch::scalar: return "scalar";
        case Arch::avx2: return "avx2";
        case Arch::neon: return "neon";
    }
    return "unknown";
}

EmKernel em_kernel_for(Arch a) {
#if OPTOMECH_X86
    if (a == Arch::avx2 && detect_arch() == Arch::avx2)
        return {Arch::avx2, 4, &em_run_block_avx2};
#endif
#if OPTOMECH_ARM64
    if (a == Arch::neon) return {Arch::neon, 2, &em_run_block_neon};
#endif
    (void)a;
    return {Arch::scalar, 1, &em_run_block_scalar};
}

EmKernel active_em_kernel() { return em_kernel_for(active_arch()); }

}  // namespace optomech::simd
