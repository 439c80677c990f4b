#pragma once

#include "optomech/dynamics.hpp"
#include "optomech/linalg.hpp"

namespace optomech {

// Stationary correlation matrix in the ordering (X, Y, Q1, P1, Q2, P2, q, p),
// V_ik = <du_i du_k + du_k du_i>/2, vacuum variance 1/2.
struct CovarianceMatrix {
    Mat8 v = Mat8::Zero();
};

// Solves A V + V A^T = -D by vectorization of the 64-unknown linear system,
// then symmetrizes. Requires a stable A.
CovarianceMatrix solve_lyapunov(const DriftMatrix& A, const DiffusionMatrix& D);

// ||A V + V A^T + D||_F / ||D||_F
double residual(const DriftMatrix& A, const DiffusionMatrix& D, const CovarianceMatrix& V);

// Minimum eigenvalue of the Hermitian matrix V + i J/2, where J is the
// block-diagonal symplectic form; >= -1e-9 for a physical state.
double physicality_min_eigenvalue(const CovarianceMatrix& V);

}  // namespace optomech
