#include "optomech/sweep.hpp"

#include <thread>

#include "optomech/errors.hpp"
#include "optomech/lyapunov.hpp"

namespace optomech {

SweepPoint evaluate_point(const PhysicalParams& p,
                          const std::optional<MeanFields>& previous,
                          BranchPolicy policy) {
    SweepPoint pt;
    try {
        const DerivedParams d = derive_params(p);
        const auto roots = solve_mean_fields(p, d);
        const MeanFields& mf = select_branch(roots, previous, policy);
        pt.n_branches = static_cast<int>(roots.size());
        pt.alpha_re = mf.alpha_re;
        pt.alpha_im = mf.alpha_im;
        pt.intensity = mf.intensity;
        pt.delta_eff = mf.delta_eff;
        pt.stable = mf.stable;
        if (mf.stable) {
            const DriftMatrix A = build_drift(p, d, mf);
            const DiffusionMatrix D = build_diffusion(p, d);
            const CovarianceMatrix V = solve_lyapunov(A, D);
            pt.lyapunov_residual = residual(A, D, V);
            pt.measures = measure_point(p, d, mf, V);
        }
    } catch (const std::exception& e) {
        pt.error = e.what();
    }
    return pt;
}

SweepResult sweep_detuning(const PhysicalParams& p, const DerivedParams&,
                           const DetuningRange& range, BranchPolicy policy) {
    if (range.steps < 2) throw invalid_parameter("sweep.steps", "must be >= 2");
    SweepResult res;
    res.steps_1 = range.steps;
    res.points.reserve(range.steps);

    std::optional<MeanFields> previous;
    for (int k = 0; k < range.steps; ++k) {
        const double x = range.start
                         + (range.stop - range.start) * k / (range.steps - 1);
        PhysicalParams pk = p;
        pk.delta_c = x * p.kappa;
        SweepPoint pt = evaluate_point(pk, previous, policy);
        pt.axis_1 = x;
        if (pt.error.empty()) {
            MeanFields mf;
            mf.intensity = pt.intensity;
            mf.stable = pt.stable;
            previous = mf;  // continuation tracks the intensity
        }
        res.points.push_back(std::move(pt));
    }
    return res;
}

SweepResult grid_sw(const PhysicalParams& p, const SwRange& range_1,
                    const SwRange& range_2, int n_threads) {
    if (range_1.steps < 2) throw invalid_parameter("grid.steps_1", "must be >= 2");
    if (range_2.steps < 2) throw invalid_parameter("grid.steps_2", "must be >= 2");
    SweepResult res;
    res.steps_1 = range_1.steps;
    res.steps_2 = range_2.steps;
    const int total = range_1.steps * range_2.steps;
    res.points.resize(total);

    auto eval_index = [&](int idx) {
        const int i = idx / range_2.steps;   // row: omega_sw1
        const int j = idx % range_2.steps;   // col: omega_sw2
        const double x1 = range_1.start
                          + (range_1.stop - range_1.start) * i / (range_1.steps - 1);
        const double x2 = range_2.start
                          + (range_2.stop - range_2.start) * j / (range_2.steps - 1);
        PhysicalParams pk = p;
        pk.omega_sw_1 = x1 * p.omega_R;
        pk.omega_sw_2 = x2 * p.omega_R;
        SweepPoint pt = evaluate_point(pk, std::nullopt, BranchPolicy::lowest);
        pt.axis_1 = x1;
        pt.axis_2 = x2;
        res.points[idx] = std::move(pt);
    };

    int hw = n_threads > 0 ? n_threads : static_cast<int>(std::thread::hardware_concurrency());
    hw = std::max(1, std::min(hw, total));
    if (hw == 1) {
        for (int idx = 0; idx < total; ++idx) eval_index(idx);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(hw);
        for (int t = 0; t < hw; ++t)
            pool.emplace_back([&, t]() {
                for (int idx = t; idx < total; idx += hw) eval_index(idx);
            });
        for (auto& th : pool) th.join();
    }
    return res;
}

}  // namespace optomech
