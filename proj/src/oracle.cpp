#include "optomech/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "optomech/constants.hpp"
#include "optomech/errors.hpp"

namespace optomech {

SdeConfig default_sde_config(const PhysicalParams& p, const DerivedParams& d,
                             const MeanFields& mf, double spectral_abscissa,
                             std::uint64_t seed) {
    SdeConfig cfg;
    const double fmax = std::max({p.kappa, d.omega_1, d.omega_2, p.omega_m,
                                  std::abs(mf.delta_eff)});
    cfg.dt = 0.01 / fmax;
    cfg.burn_in = 10.0 / std::abs(spectral_abscissa);
    cfg.horizon = 50.0 / std::abs(spectral_abscissa);
    cfg.n_trajectories = 2000;
    cfg.seed = seed;
    return cfg;
}

namespace {

struct SpectrumInfo {
    double abscissa;
    double max_imag;
    double radius;
};

SpectrumInfo spectrum(const Mat8& a) {
    Eigen::EigenSolver<Mat8> es(a, false);
    if (es.info() != Eigen::Success)
        throw numerical_failure("eigenvalue solve failed in oracle");
    SpectrumInfo s{};
    s.abscissa = es.eigenvalues().real().maxCoeff();
    s.max_imag = es.eigenvalues().imag().cwiseAbs().maxCoeff();
    s.radius = es.eigenvalues().cwiseAbs().maxCoeff();
    return s;
}

}  // namespace

EnsembleCovariance integrate_ensemble(const DriftMatrix& A, const DiffusionMatrix& D,
                                      const SdeConfig& cfg, int n_threads,
                                      const simd::EmKernel* kernel_in) {
    const auto sp = spectrum(A.a);
    if (!(sp.abscissa < 0.0)) throw unstable_drift(sp.abscissa);
    if (!(cfg.dt > 0.0)) throw invalid_parameter("dt", "must be > 0");
    if (cfg.n_trajectories < 100)
        throw invalid_parameter("n_trajectories", "must be >= 100");
    if (cfg.dt * std::abs(sp.abscissa) >= 0.05)
        throw step_too_large("dt * |spectral abscissa| must be < 0.05");
    if (cfg.dt * sp.max_imag >= 0.05)
        throw step_too_large("dt * max|Im lambda(A)| must be < 0.05");
    // The explicit scheme also has to resolve the fastest decay, which the
    // two bounds above do not see when Re and Im scales are very different.
    if (cfg.dt * sp.radius >= 0.5)
        throw step_too_large("dt * spectral radius must be < 0.5 (scheme stability)");

    const std::int64_t burn_steps = static_cast<std::int64_t>(std::ceil(cfg.burn_in / cfg.dt));
    const std::int64_t sample_steps =
        std::max<std::int64_t>(1, static_cast<std::int64_t>(std::llround(cfg.horizon / cfg.dt)));

    double a_dt[64], noise_amp[8];
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) a_dt[8 * i + j] = A.a(i, j) * cfg.dt;
        noise_amp[i] = std::sqrt(cfg.dt * D.diag(i));
    }
    simd::EmBlockSpec spec{a_dt, noise_amp, burn_steps, sample_steps, cfg.seed};

    const simd::EmKernel kernel = kernel_in ? *kernel_in : simd::active_em_kernel();
    const int n = cfg.n_trajectories;
    const int width = kernel.width;
    const int n_blocks = (n + width - 1) / width;

    std::vector<double> traj_means(static_cast<std::size_t>(n) * simd::n_moments);

    int hw = n_threads > 0 ? n_threads : static_cast<int>(std::thread::hardware_concurrency());
    hw = std::max(1, std::min(hw, n_blocks));
    auto worker = [&](int b0, int b1) {
        for (int b = b0; b < b1; ++b) {
            const int t0 = b * width;
            const int lanes = std::min(width, n - t0);
            kernel.run_block(spec, static_cast<std::uint64_t>(t0), lanes,
                             traj_means.data() + static_cast<std::size_t>(t0) * simd::n_moments);
        }
    };
    if (hw == 1) {
        worker(0, n_blocks);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(hw);
        for (int t = 0; t < hw; ++t) {
            const int b0 = static_cast<int>(static_cast<std::int64_t>(n_blocks) * t / hw);
            const int b1 = static_cast<int>(static_cast<std::int64_t>(n_blocks) * (t + 1) / hw);
            pool.emplace_back(worker, b0, b1);
        }
        for (auto& th : pool) th.join();
    }

    // Reduce in trajectory order: mean of the per-trajectory time averages
    // and its standard error, so results do not depend on scheduling.
    double mean[simd::n_moments] = {};
    for (int t = 0; t < n; ++t)
        for (int k = 0; k < simd::n_moments; ++k)
            mean[k] += traj_means[static_cast<std::size_t>(t) * simd::n_moments + k];
    for (double& m : mean) m /= n;

    double m2[simd::n_moments] = {};
    for (int t = 0; t < n; ++t)
        for (int k = 0; k < simd::n_moments; ++k) {
            const double dlt = traj_means[static_cast<std::size_t>(t) * simd::n_moments + k] - mean[k];
            m2[k] += dlt * dlt;
        }

    EnsembleCovariance out;
    out.samples_per_trajectory = sample_steps;
    out.n_trajectories = n;
    int k = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = i; j < 8; ++j, ++k) {
            out.cov(i, j) = out.cov(j, i) = mean[k];
            const double se = n > 1 ? std::sqrt(m2[k] / (static_cast<double>(n - 1) * n)) : 0.0;
            out.std_err(i, j) = out.std_err(j, i) = se;
        }
    return out;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

Mat8 quad_integral(const Mat8& a, const Mat8& d, double t1, int n_nodes) {
    std::vector<double> x, w;
    gauss_legendre(n_nodes, x, w);
    Mat8 acc = Mat8::Zero();
    for (int i = 0; i < n_nodes; ++i) {
        const double t = 0.5 * t1 * (x[i] + 1.0);
        const Mat8 e = (a * t).exp();
        acc += (0.5 * t1 * w[i]) * (e * d * e.transpose());
    }
    return acc;
}

}  // namespace

Mat8 integral_formula_check(const DriftMatrix& A, const DiffusionMatrix& D) {
    const auto sp = spectrum(A.a);
    if (!(sp.abscissa < 0.0)) throw unstable_drift(sp.abscissa);

    // Initial interval short enough that the integrand is mildly varying,
    // then exact doubling: V(2T) = V(T) + e^(AT) V(T) e^(A^T T).
    const double t_max = 40.0 / std::abs(sp.abscissa);
    const double t0 = std::min(0.25 / sp.radius, t_max);
    int doublings = 0;
    for (double cur = t0; cur < t_max && doublings < 120; cur *= 2.0) ++doublings;

    const Mat8 d = D.matrix();
    Mat8 v = quad_integral(A.a, d, t0, 16);
    for (int n_nodes = 32; n_nodes <= 128; n_nodes *= 2) {
        const Mat8 refined = quad_integral(A.a, d, t0, n_nodes);
        const double change = (refined - v).norm() / std::max(refined.norm(), 1e-300);
        v = refined;
        if (change < 1e-13) break;
    }

    Mat8 e = (A.a * t0).exp();
    for (int k = 0; k < doublings; ++k) {
        v = v + e * v * e.transpose();
        e = e * e;
    }
    return 0.5 * (v + v.transpose());
}

}  // namespace optomech
