#include "optomech/dynamics.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "optomech/errors.hpp"

namespace optomech {

DriftMatrix build_drift(const PhysicalParams& p, const DerivedParams& d,
                        const MeanFields& mf) {
    const double s2 = std::sqrt(2.0);
    const double aR = mf.alpha_re, aI = mf.alpha_im, De = mf.delta_eff;
    DriftMatrix A;
    Mat8& m = A.a;
    m.setZero();

    m(iX, iX) = -p.kappa;
    m(iX, iY) = De;
    m(iX, iQ1) = s2 * d.zeta_1 * aI;
    m(iX, iQ2) = s2 * d.zeta_2 * aI;
    m(iX, iq) = -2.0 * p.xi * aI;

    m(iY, iX) = -De;
    m(iY, iY) = -p.kappa;
    m(iY, iQ1) = -s2 * d.zeta_1 * aR;
    m(iY, iQ2) = -s2 * d.zeta_2 * aR;
    m(iY, iq) = 2.0 * p.xi * aR;

    m(iQ1, iQ1) = -p.gamma_c;
    m(iQ1, iP1) = d.omega_1;

    m(iP1, iX) = -s2 * d.zeta_1 * aR;
    m(iP1, iY) = -s2 * d.zeta_1 * aI;
    m(iP1, iQ1) = -d.omega_1;
    m(iP1, iP1) = -p.gamma_c;

    m(iQ2, iQ2) = -p.gamma_c;
    m(iQ2, iP2) = d.omega_2;

    m(iP2, iX) = -s2 * d.zeta_2 * aR;
    m(iP2, iY) = -s2 * d.zeta_2 * aI;
    m(iP2, iQ2) = -d.omega_2;
    m(iP2, iP2) = -p.gamma_c;

    m(iq, iq) = -p.gamma_m;
    m(iq, ip) = p.omega_m;

    m(ip, iX) = 2.0 * p.xi * aR;
    m(ip, iY) = 2.0 * p.xi * aI;
    m(ip, iq) = -p.omega_m;
    m(ip, ip) = -p.gamma_m;

    return A;
}

DiffusionMatrix build_diffusion(const PhysicalParams& p, const DerivedParams& d) {
    DiffusionMatrix D;
    D.diag(iX) = D.diag(iY) = p.kappa * (2.0 * p.n_ph + 1.0);
    D.diag(iQ1) = D.diag(iP1) = p.gamma_c * (2.0 * d.n_c_1 + 1.0);
    D.diag(iQ2) = D.diag(iP2) = p.gamma_c * (2.0 * d.n_c_2 + 1.0);
    D.diag(iq) = D.diag(ip) = p.gamma_m * (2.0 * d.n_m + 1.0);
    return D;
}

StabilityReport is_stable(const DriftMatrix& A, double tol_stab) {
    if (tol_stab < 0.0) tol_stab = 1e-9 * std::abs(A.a(0, 0));
    Eigen::EigenSolver<Mat8> es(A.a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw numerical_failure("eigenvalue solver failed on drift matrix");
    StabilityReport r;
    r.spectral_abscissa = es.eigenvalues().real().maxCoeff();
    r.stable = r.spectral_abscissa < -tol_stab;
    return r;
}

namespace {

// Characteristic polynomial coefficients by the Faddeev-LeVerrier recursion,
// on a pre-scaled copy of A so the coefficients stay well inside double range.
// Returns c[0..n] with p(x) = c[0] x^n + c[1] x^(n-1) + ... + c[n], c[0] = 1.
std::array<double, 9> char_poly_scaled(const Mat8& a_in, double& scale) {
    scale = a_in.cwiseAbs().maxCoeff();
    if (scale == 0.0) scale = 1.0;
    Mat8 a = a_in / scale;
    std::array<double, 9> c{};
    c[0] = 1.0;
    Mat8 m = Mat8::Zero();
    for (int k = 1; k <= 8; ++k) {
        m = a * m + c[k - 1] * Mat8::Identity();
        c[k] = -(a * m).trace() / k;
    }
    return c;
}

}  // namespace

bool routh_hurwitz(const DriftMatrix& A) {
    double scale;
    const auto c = char_poly_scaled(A.a, scale);

    // Routh table; two working rows of length 5. Rows are for degrees
    // x^8 down to x^0, so the first column has 9 entries.
    constexpr int n = 8;
    std::array<double, 5> prev{}, curr{};
    for (int j = 0; j < 5; ++j) prev[j] = c[2 * j];      // x^8 row
    for (int j = 0; j < 4; ++j) curr[j] = c[2 * j + 1];  // x^7 row
    curr[4] = 0.0;

    for (int row = 2; row <= n; ++row) {
        double row_scale = 1.0;
        for (int j = 0; j < 5; ++j)
            row_scale = std::max({row_scale, std::abs(prev[j]), std::abs(curr[j])});
        const double piv = curr[0];
        if (piv < -1e-12 * row_scale) return false;  // sign change in first column
        if (std::abs(piv) <= 1e-12 * row_scale)
            throw degenerate_pivot("Routh pivot within 1e-12 of zero (marginal case)");
        std::array<double, 5> next{};
        for (int j = 0; j + 1 < 5; ++j)
            next[j] = (piv * prev[j + 1] - prev[0] * curr[j + 1]) / piv;
        next[4] = 0.0;
        prev = curr;
        curr = next;
    }
    return curr[0] > 0.0;
}

}  // namespace optomech
