#include "optomech/simd/arch.hpp"

#if OPTOMECH_ARM64
#define OPTOMECH_PACK_NEON 1
#include "optomech/simd/em_kernel.hpp"

namespace optomech::simd {

void em_run_block_neon(const EmBlockSpec& spec, std::uint64_t traj_base, int lanes,
                       double* out) {
    em_run_block_impl<pack<2>>(spec, traj_base, lanes, out);
}

void vmath_probe_neon(const double* u, double* out_log, double* out_sin,
                      double* out_cos, int n) {
    double buf[2];
    for (int i = 0; i < n; i += 2) {
        for (int k = 0; k < 2; ++k) buf[k] = u[(i + k < n) ? i + k : n - 1];
        const pack<2> x{vld1q_f64(buf)};
        pack<2> s, c;
        vsincos_2pi(x, s, c);
        const pack<2> l = vlog(x);
        for (int k = 0; k < 2 && i + k < n; ++k) {
            out_log[i + k] = l.lane(k);
            out_sin[i + k] = s.lane(k);
            out_cos[i + k] = c.lane(k);
        }
    }
}

}  // namespace optomech::simd

#endif  // OPTOMECH_ARM64
