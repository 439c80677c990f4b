#include "optomech/measures.hpp"

#include <cmath>

#include "optomech/errors.hpp"
#include "optomech/steadystate.hpp"

namespace optomech {

std::array<int, 4> bipartition_indices(Bipartition bp) {
    switch (bp) {
        case Bipartition::bec1_bec2:        return {iQ1, iP1, iQ2, iP2};
        case Bipartition::bec1_membrane:    return {iQ1, iP1, iq, ip};
        case Bipartition::bec2_membrane:    return {iQ2, iP2, iq, ip};
        case Bipartition::optical_bec1:     return {iX, iY, iQ1, iP1};
        case Bipartition::optical_bec2:     return {iX, iY, iQ2, iP2};
        case Bipartition::optical_membrane: return {iX, iY, iq, ip};
    }
    throw invalid_parameter("bipartition", "unknown value");
}

Mat4 reduce_bipartition(const CovarianceMatrix& V, Bipartition bp) {
    const auto idx = bipartition_indices(bp);
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = V.v(idx[r], idx[c]);
    return out;
}

double log_negativity(const Mat4& vbp) {
    const Mat2 b = vbp.block<2, 2>(0, 0);
    const Mat2 bp = vbp.block<2, 2>(2, 2);
    const Mat2 c = vbp.block<2, 2>(0, 2);
    const double sigma = b.determinant() + bp.determinant() - 2.0 * c.determinant();
    const double det4 = vbp.determinant();

    double disc = sigma * sigma - 4.0 * det4;
    if (disc < -1e-12)
        throw numeric_domain_error("partial-transpose discriminant is negative (unphysical CM)");
    if (disc < 0.0) disc = 0.0;

    double eta_minus_sq = 0.5 * (sigma - std::sqrt(disc));
    if (eta_minus_sq <= 0.0)
        throw numeric_domain_error("lowest symplectic eigenvalue is not positive (unphysical CM)");
    const double e_n = -0.5 * std::log(4.0 * eta_minus_sq);
    if (e_n < 0.0) return 0.0;
    return e_n;
}

std::array<double, 4> squeezing_params(const CovarianceMatrix& V) {
    return {2.0 * V.v(iQ1, iQ1) - 1.0, 2.0 * V.v(iP1, iP1) - 1.0,
            2.0 * V.v(iQ2, iQ2) - 1.0, 2.0 * V.v(iP2, iP2) - 1.0};
}

MeasureSet measure_point(const PhysicalParams&, const DerivedParams&,
                         const MeanFields& mf, const CovarianceMatrix& V) {
    if (!mf.stable) throw unstable_drift();
    MeasureSet m;
    m.e_n_b1b2 = log_negativity(reduce_bipartition(V, Bipartition::bec1_bec2));
    m.e_n_b1m = log_negativity(reduce_bipartition(V, Bipartition::bec1_membrane));
    m.e_n_b2m = log_negativity(reduce_bipartition(V, Bipartition::bec2_membrane));
    const auto s = squeezing_params(V);
    m.s_q1 = s[0];
    m.s_p1 = s[1];
    m.s_q2 = s[2];
    m.s_p2 = s[3];
    m.stable = true;
    return m;
}

}  // namespace optomech
