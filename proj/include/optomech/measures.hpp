#pragma once

#include <array>

#include "optomech/lyapunov.hpp"

namespace optomech {

// Two-mode bipartitions of the four-mode state. The paper-relevant pairs are
// the first three; the optical pairs are kept for diagnostics.
enum class Bipartition {
    bec1_bec2,
    bec1_membrane,
    bec2_membrane,
    optical_bec1,
    optical_bec2,
    optical_membrane,
};

// 0-based quadrature indices of the two modes in the bipartition.
std::array<int, 4> bipartition_indices(Bipartition bp);

// Entanglement and squeezing summary at one parameter point.
struct MeasureSet {
    double e_n_b1b2 = 0.0;
    double e_n_b1m = 0.0;
    double e_n_b2m = 0.0;
    double s_q1 = 0.0, s_p1 = 0.0;
    double s_q2 = 0.0, s_p2 = 0.0;
    bool stable = false;
};

// Principal 4x4 submatrix of V on the bipartition's indices,
// partitioned as [[B, C], [C^T, B']].
Mat4 reduce_bipartition(const CovarianceMatrix& V, Bipartition bp);

// E_N = max[0, -ln(2 eta-)] with eta- the lowest symplectic eigenvalue of the
// partially transposed two-mode covariance matrix.
double log_negativity(const Mat4& vbp);

// (s_q1, s_p1, s_q2, s_p2) with s = 2 V_ii - 1.
std::array<double, 4> squeezing_params(const CovarianceMatrix& V);

MeasureSet measure_point(const PhysicalParams& p, const DerivedParams& d,
                         const MeanFields& mf, const CovarianceMatrix& V);

}  // namespace optomech
