#include "optomech/steadystate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "optomech/dynamics.hpp"
#include "optomech/errors.hpp"

namespace optomech {

double backaction_coefficient(const PhysicalParams& p, const DerivedParams& d) {
    const double mem = 2.0 * p.xi * p.xi * p.omega_m
                       / (p.omega_m * p.omega_m + p.gamma_m * p.gamma_m);
    auto bec = [&](double zeta, double omega) {
        return zeta * zeta * omega / (omega * omega + p.gamma_c * p.gamma_c);
    };
    return mem + bec(d.zeta_1, d.omega_1) + bec(d.zeta_2, d.omega_2);
}

namespace {

// Real non-negative roots of c^2 I^3 - 2 dc c I^2 + (dc^2+k^2) I - eta^2 = 0,
// via the companion matrix of the monic cubic plus Newton polish.
std::vector<double> intensity_roots(double c, double delta_c, double kappa, double eta) {
    const double k2 = delta_c * delta_c + kappa * kappa;
    const double eta2 = eta * eta;
    if (c == 0.0) return {eta2 / k2};

    const double a2 = -2.0 * delta_c / c;
    const double a1 = k2 / (c * c);
    const double a0 = -eta2 / (c * c);

    Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
    companion(0, 2) = -a0;
    companion(1, 2) = -a1;
    companion(2, 2) = -a2;
    companion(1, 0) = 1.0;
    companion(2, 1) = 1.0;
    Eigen::EigenSolver<Eigen::Matrix3d> es(companion, false);
    if (es.info() != Eigen::Success)
        throw numerical_failure("companion-matrix eigenvalue solve failed");

    auto f = [&](double x) {
        return ((c * c * x - 2.0 * delta_c * c) * x + k2) * x - eta2;
    };
    auto fp = [&](double x) { return (3.0 * c * c * x - 4.0 * delta_c * c) * x + k2; };

    std::vector<double> roots;
    for (int i = 0; i < 3; ++i) {
        const auto z = es.eigenvalues()(i);
        if (std::abs(z.imag()) > 1e-8 * std::max(std::abs(z.real()), 1e-300)) continue;
        double x = z.real();
        // Newton polish; closed-form cubic solutions lose accuracy near
        // double roots, one or two corrections restore 1e-12 residuals.
        for (int it = 0; it < 8; ++it) {
            const double fx = f(x);
            if (std::abs(fx) <= 1e-13 * std::max(eta2, 1e-300)) break;
            const double d1 = fp(x);
            if (d1 == 0.0) break;
            x -= fx / d1;
        }
        if (x >= 0.0) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    // Collapse numerically coincident roots (separation <= 1e-8 relative).
    std::vector<double> unique;
    for (double r : roots) {
        if (!unique.empty() && std::abs(r - unique.back()) <= 1e-8 * std::max(std::abs(r), std::abs(unique.back())))
            continue;
        unique.push_back(r);
    }
    return unique;
}

}  // namespace

std::vector<MeanFields> solve_mean_fields(const PhysicalParams& p, const DerivedParams& d) {
    if (!(p.gamma_c > 0.0)) throw invalid_parameter("gamma_c", "must be > 0");
    if (!(d.omega_1 > 0.0 && d.omega_2 > 0.0))
        throw invalid_parameter("omega_j", "Bogoliubov frequencies must be > 0");

    const double c = backaction_coefficient(p, d);
    const auto Is = intensity_roots(c, p.delta_c, p.kappa, p.eta);
    if (Is.empty()) throw no_physical_root();

    const double mem_den = p.omega_m * p.omega_m + p.gamma_m * p.gamma_m;
    std::vector<MeanFields> out;
    out.reserve(Is.size());
    for (double I : Is) {
        MeanFields mf;
        mf.intensity = I;
        mf.delta_eff = p.delta_c - c * I;
        const double den = mf.delta_eff * mf.delta_eff + p.kappa * p.kappa;
        mf.alpha_re = -p.eta * p.kappa / den;
        mf.alpha_im = p.eta * mf.delta_eff / den;
        mf.beta_re = p.xi * I * p.omega_m / mem_den;
        mf.beta_im = p.xi * I * p.gamma_m / mem_den;
        mf.q_bar_1 = -d.zeta_1 * d.omega_1 * I / (d.omega_1 * d.omega_1 + p.gamma_c * p.gamma_c);
        mf.q_bar_2 = -d.zeta_2 * d.omega_2 * I / (d.omega_2 * d.omega_2 + p.gamma_c * p.gamma_c);
        mf.p_bar_1 = (p.gamma_c / d.omega_1) * mf.q_bar_1;
        mf.p_bar_2 = (p.gamma_c / d.omega_2) * mf.q_bar_2;
        mf.stable = is_stable(build_drift(p, d, mf)).stable;
        out.push_back(mf);
    }
    return out;
}

const MeanFields& select_branch(const std::vector<MeanFields>& roots,
                                const std::optional<MeanFields>& previous) {
    return select_branch(roots, previous, BranchPolicy::continuation);
}

const MeanFields& select_branch(const std::vector<MeanFields>& roots,
                                const std::optional<MeanFields>& previous,
                                BranchPolicy policy) {
    if (roots.empty()) throw no_physical_root();

    std::vector<const MeanFields*> stable;
    for (const auto& r : roots)
        if (r.stable) stable.push_back(&r);
    if (stable.empty()) return roots.front();  // lowest I, flagged unstable

    switch (policy) {
        case BranchPolicy::lowest:
            return *stable.front();
        case BranchPolicy::highest:
            return *stable.back();
        case BranchPolicy::continuation:
            break;
    }
    if (previous) {
        const MeanFields* best = stable.front();
        for (const MeanFields* r : stable)
            if (std::abs(r->intensity - previous->intensity)
                < std::abs(best->intensity - previous->intensity))
                best = r;
        return *best;
    }
    return *stable.front();
}

}  // namespace optomech
