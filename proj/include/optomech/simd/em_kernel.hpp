#pragma once

// Euler-Maruyama trajectory-block kernels. The generic implementation is
// instantiated once per backend translation unit (scalar always; AVX2/NEON
// where the target supports them) and selected at runtime.

#include <cstdint>

#include "optomech/simd/arch.hpp"
#include "optomech/simd/rng.hpp"

namespace optomech::simd {

struct EmBlockSpec {
    const double* a_dt;       // 8x8 row-major, A * dt
    const double* noise_amp;  // 8 entries, sqrt(dt * D_ii)
    std::int64_t burn_steps = 0;
    std::int64_t sample_steps = 0;
    std::uint64_t seed = 0;
};

// Runs `lanes` trajectories with indices traj_base .. traj_base+lanes-1 and
// writes each trajectory's time-averaged second moments to out[lane*36 + k],
// k enumerating the upper triangle (i <= j) row by row.
using EmBlockFn = void (*)(const EmBlockSpec&, std::uint64_t traj_base, int lanes,
                           double* out);

struct EmKernel {
    Arch arch = Arch::scalar;
    int width = 1;
    EmBlockFn run_block = nullptr;
};

// Kernel for the requested architecture; falls back to scalar when the
// request is not compiled in or not supported by the CPU.
EmKernel em_kernel_for(Arch a);
EmKernel active_em_kernel();

inline constexpr int n_moments = 36;

template <class P>
void em_run_block_impl(const EmBlockSpec& spec, std::uint64_t traj_base, int lanes,
                       double* out) {
    auto rng = XoshiroPack<P>::seeded(spec.seed, traj_base);

    P x[8], macc[n_moments];
    for (auto& xi : x) xi = P::zero();
    for (auto& m : macc) m = P::zero();

    const std::int64_t total = spec.burn_steps + spec.sample_steps;
    for (std::int64_t step = 0; step < total; ++step) {
        P g[8];
        rng.next_gaussian_pair(g[0], g[1]);
        rng.next_gaussian_pair(g[2], g[3]);
        rng.next_gaussian_pair(g[4], g[5]);
        rng.next_gaussian_pair(g[6], g[7]);

        P y[8];
        for (int i = 0; i < 8; ++i) {
            P acc = x[i];
            const double* row = spec.a_dt + 8 * i;
            for (int j = 0; j < 8; ++j)
                acc = P::fma(P::broadcast(row[j]), x[j], acc);
            y[i] = P::fma(P::broadcast(spec.noise_amp[i]), g[i], acc);
        }
        for (int i = 0; i < 8; ++i) x[i] = y[i];

        if (step >= spec.burn_steps) {
            int k = 0;
            for (int i = 0; i < 8; ++i)
                for (int j = i; j < 8; ++j, ++k)
                    macc[k] = P::fma(x[i], x[j], macc[k]);
        }
    }

    const double inv_n = 1.0 / static_cast<double>(spec.sample_steps);
    for (int lane = 0; lane < lanes; ++lane)
        for (int k = 0; k < n_moments; ++k)
            out[lane * n_moments + k] = macc[k].lane(lane) * inv_n;
}

}  // namespace optomech::simd
