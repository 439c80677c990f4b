#pragma once

#include <cstdint>

#include "optomech/dynamics.hpp"
#include "optomech/linalg.hpp"
#include "optomech/simd/em_kernel.hpp"
#include "optomech/steadystate.hpp"

namespace optomech {

// Euler-Maruyama ensemble settings. The quantum Langevin equations are
// emulated as classical Gaussian SDEs with noise covariance D, which is exact
// for all symmetrized second moments of the linear Gaussian model.
struct SdeConfig {
    double dt = 0.0;          // seconds
    double burn_in = 0.0;     // seconds
    double horizon = 0.0;     // seconds
    int n_trajectories = 0;
    std::uint64_t seed = 0;
};

// Spec defaults: dt = 0.01/max(kappa, omega_j, omega_m, |Delta|),
// burn_in = 10/|abscissa|, horizon = 50/|abscissa|, 2000 trajectories.
SdeConfig default_sde_config(const PhysicalParams& p, const DerivedParams& d,
                             const MeanFields& mf, double spectral_abscissa,
                             std::uint64_t seed = 0x243F6A8885A308D3ull);

struct EnsembleCovariance {
    Mat8 cov = Mat8::Zero();       // ensemble-and-time averaged second moments
    Mat8 std_err = Mat8::Zero();   // standard error of each element
    std::int64_t samples_per_trajectory = 0;
    int n_trajectories = 0;
};

// Euler-Maruyama ensemble estimate of the stationary covariance.
// Deterministic given cfg.seed, independent of thread count and lane width.
// n_threads = 0 uses the hardware concurrency.
EnsembleCovariance integrate_ensemble(const DriftMatrix& A, const DiffusionMatrix& D,
                                      const SdeConfig& cfg, int n_threads = 0,
                                      const simd::EmKernel* kernel = nullptr);

// Independent check V = int_0^inf e^(At) D e^(A^T t) dt, evaluated by
// adaptive Gauss-Legendre quadrature on an initial interval plus exact
// interval doubling with matrix exponentials, truncated at
// t_max >= 40/|abscissa| (relative tail below 1e-8).
Mat8 integral_formula_check(const DriftMatrix& A, const DiffusionMatrix& D);

}  // namespace optomech
