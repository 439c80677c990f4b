#pragma once

#include "optomech/linalg.hpp"
#include "optomech/model.hpp"
#include "optomech/steadystate.hpp"

namespace optomech {

// Linearized drift matrix in the ordering (X, Y, Q1, P1, Q2, P2, q, p).
struct DriftMatrix {
    Mat8 a = Mat8::Zero();
};

// Diagonal diffusion matrix of the linearized Langevin system.
struct DiffusionMatrix {
    Vec8 diag = Vec8::Zero();
    Mat8 matrix() const { return diag.asDiagonal(); }
};

struct StabilityReport {
    bool stable = false;
    double spectral_abscissa = 0.0;  // max Re lambda(A)
};

DriftMatrix build_drift(const PhysicalParams& p, const DerivedParams& d,
                        const MeanFields& mf);

DiffusionMatrix build_diffusion(const PhysicalParams& p, const DerivedParams& d);

// Stable iff max Re lambda(A) < -tol_stab. When tol_stab is not given it
// defaults to 1e-9 * |a(0,0)|, i.e. 1e-9 * kappa for drift matrices built by
// build_drift; callers with synthetic A should pass an explicit tolerance.
StabilityReport is_stable(const DriftMatrix& A, double tol_stab = -1.0);

// Routh-Hurwitz first-column test on the characteristic polynomial.
// Cross-check oracle for is_stable; throws degenerate_pivot near marginal cases.
bool routh_hurwitz(const DriftMatrix& A);

}  // namespace optomech
