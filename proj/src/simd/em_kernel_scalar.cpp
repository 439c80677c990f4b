#include "optomech/simd/em_kernel.hpp"

namespace optomech::simd {

void em_run_block_scalar(const EmBlockSpec& spec, std::uint64_t traj_base, int lanes,
                         double* out) {
    em_run_block_impl<pack<1>>(spec, traj_base, lanes, out);
}

void vmath_probe_scalar(const double* u, double* out_log, double* out_sin,
                        double* out_cos, int n) {
    for (int i = 0; i < n; ++i) {
        const pack<1> x{u[i]};
        out_log[i] = vlog(x).v;
        pack<1> s, c;
        vsincos_2pi(x, s, c);
        out_sin[i] = s.v;
        out_cos[i] = c.v;
    }
}

}  // namespace optomech::simd
