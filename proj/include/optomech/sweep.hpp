#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optomech/measures.hpp"
#include "optomech/steadystate.hpp"

namespace optomech {

struct DetuningRange {
    double start = 0.0;  // units of kappa
    double stop = 0.0;
    int steps = 0;
};

struct SwRange {
    double start = 0.0;  // units of omega_R
    double stop = 0.0;
    int steps = 0;
};

// One evaluated parameter point. Unstable points keep their mean-field data
// but carry no measures.
struct SweepPoint {
    double axis_1 = 0.0;  // delta_c/kappa for sweeps, omega_sw1/omega_R for grids
    double axis_2 = 0.0;  // omega_sw2/omega_R for grids
    std::optional<MeasureSet> measures;
    double alpha_re = 0.0, alpha_im = 0.0;
    double intensity = 0.0;
    double delta_eff = 0.0;  // rad/s
    bool stable = false;
    int n_branches = 0;
    double lyapunov_residual = 0.0;
    std::string error;  // per-point failure, never aborts the sweep
};

struct SweepResult {
    std::vector<SweepPoint> points;  // row-major for grids
    int steps_1 = 0;
    int steps_2 = 0;  // 0 for 1-D sweeps
};

// 1-D detuning sweep with branch continuation (sequential by contract).
SweepResult sweep_detuning(const PhysicalParams& p, const DerivedParams& d,
                           const DetuningRange& range,
                           BranchPolicy policy = BranchPolicy::continuation);

// 2-D (omega_sw1, omega_sw2) grid at fixed delta_c; every point selected
// fresh (no continuation) so evaluation order cannot matter. Points may be
// evaluated concurrently; n_threads = 0 uses the hardware concurrency.
SweepResult grid_sw(const PhysicalParams& p, const SwRange& range_1,
                    const SwRange& range_2, int n_threads = 0);

// Full pipeline at one parameter point (shared by sweeps, grids and the CLI).
SweepPoint evaluate_point(const PhysicalParams& p,
                          const std::optional<MeanFields>& previous,
                          BranchPolicy policy = BranchPolicy::continuation);

}  // namespace optomech
