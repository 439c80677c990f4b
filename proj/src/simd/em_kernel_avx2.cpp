// Compiled with -mavx2 -mfma on x86-64; keep all AVX2 code in this TU.

#include "optomech/simd/arch.hpp"

#if OPTOMECH_X86
#define OPTOMECH_PACK_AVX2 1
#include "optomech/simd/em_kernel.hpp"

namespace optomech::simd {

void em_run_block_avx2(const EmBlockSpec& spec, std::uint64_t traj_base, int lanes,
                       double* out) {
    em_run_block_impl<pack<4>>(spec, traj_base, lanes, out);
}

void vmath_probe_avx2(const double* u, double* out_log, double* out_sin,
                      double* out_cos, int n) {
    alignas(32) double buf[4];
    for (int i = 0; i < n; i += 4) {
        for (int k = 0; k < 4; ++k) buf[k] = u[(i + k < n) ? i + k : n - 1];
        const pack<4> x{_mm256_loadu_pd(buf)};
        pack<4> s, c;
        vsincos_2pi(x, s, c);
        const pack<4> l = vlog(x);
        for (int k = 0; k < 4 && i + k < n; ++k) {
            out_log[i + k] = l.lane(k);
            out_sin[i + k] = s.lane(k);
            out_cos[i + k] = c.lane(k);
        }
    }
}

}  // namespace optomech::simd

#endif  // OPTOMECH_X86
