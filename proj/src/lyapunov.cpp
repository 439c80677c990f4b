#include "optomech/lyapunov.hpp"

#include <complex>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "optomech/errors.hpp"

namespace optomech {

namespace {

using Mat64 = Eigen::Matrix<double, 64, 64>;
using Vec64 = Eigen::Matrix<double, 64, 1>;

// I (x) A + A (x) I acting on column-major vec(V).
Mat64 lyapunov_operator(const Mat8& a) {
    Mat64 k = Mat64::Zero();
    for (int j = 0; j < 8; ++j)
        k.block<8, 8>(8 * j, 8 * j) = a;                  // I (x) A
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i)
            for (int r = 0; r < 8; ++r)
                k(8 * j + r, 8 * i + r) += a(j, i);       // A (x) I
    return k;
}

Vec64 vec(const Mat8& m) {
    Vec64 v;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) v(8 * j + i) = m(i, j);
    return v;
}

Mat8 unvec(const Vec64& v) {
    Mat8 m;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) m(i, j) = v(8 * j + i);
    return m;
}

}  // namespace

CovarianceMatrix solve_lyapunov(const DriftMatrix& A, const DiffusionMatrix& D) {
    const auto stab = is_stable(A);
    if (!stab.stable) throw unstable_drift(stab.spectral_abscissa);

    const Mat64 k = lyapunov_operator(A.a);
    Eigen::PartialPivLU<Mat64> lu(k);
    const Mat8 d = D.matrix();

    Mat8 v = unvec(lu.solve(-vec(d)));
    v = 0.5 * (v + v.transpose()).eval();

    // One pass of iterative refinement; keeps the residual at the 1e-10
    // contract even for badly scaled drift matrices.
    CovarianceMatrix V{v};
    if (residual(A, D, V) > 1e-10) {
        const Mat8 r = A.a * v + v * A.a.transpose() + d;
        Mat8 dv = unvec(lu.solve(-vec(r)));
        v += 0.5 * (dv + dv.transpose());
        V.v = v;
        if (residual(A, D, V) > 1e-10)
            throw solver_singularity("Lyapunov solve did not reach the 1e-10 residual contract");
    }
    return V;
}

double residual(const DriftMatrix& A, const DiffusionMatrix& D, const CovarianceMatrix& V) {
    const Mat8 d = D.matrix();
    const double dn = d.norm();
    if (dn == 0.0) throw invalid_parameter("D", "diffusion matrix must be nonzero");
    return (A.a * V.v + V.v * A.a.transpose() + d).norm() / dn;
}

double physicality_min_eigenvalue(const CovarianceMatrix& V) {
    using CMat8 = Eigen::Matrix<std::complex<double>, 8, 8>;
    CMat8 h = V.v.cast<std::complex<double>>();
    const std::complex<double> ihalf(0.0, 0.5);
    for (int b = 0; b < 4; ++b) {
        h(2 * b, 2 * b + 1) += ihalf;
        h(2 * b + 1, 2 * b) -= ihalf;
    }
    Eigen::SelfAdjointEigenSolver<CMat8> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numerical_failure("Hermitian eigenvalue solve failed in physicality check");
    return es.eigenvalues().minCoeff();
}

}  // namespace optomech
