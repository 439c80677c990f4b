#pragma once

#include <optional>
#include <vector>

#include "optomech/model.hpp"

namespace optomech {

// One classical steady-state branch of the mean-field equations.
struct MeanFields {
    double alpha_re = 0.0, alpha_im = 0.0;  // intracavity field
    double intensity = 0.0;                 // I = |alpha|^2
    double beta_re = 0.0, beta_im = 0.0;    // membrane amplitude
    double q_bar_1 = 0.0, p_bar_1 = 0.0;    // Bogoliubov displacements
    double q_bar_2 = 0.0, p_bar_2 = 0.0;
    double delta_eff = 0.0;                 // Delta = delta_c - 2 xi beta_R + sum_j zeta_j Qbar_j
    bool stable = false;
};

enum class BranchPolicy { continuation, lowest, highest };

// Solves the steady-state cubic in I = |alpha|^2 and expands every
// non-negative real root into a full branch, sorted ascending in I and
// tagged with drift-matrix stability.
std::vector<MeanFields> solve_mean_fields(const PhysicalParams& p, const DerivedParams& d);

// Sweep-continuation rule: stable root closest in I to `previous`, else the
// lowest stable root, else the lowest root (flagged unstable).
const MeanFields& select_branch(const std::vector<MeanFields>& roots,
                                const std::optional<MeanFields>& previous);

const MeanFields& select_branch(const std::vector<MeanFields>& roots,
                                const std::optional<MeanFields>& previous,
                                BranchPolicy policy);

// Coefficient c of the cubic c^2 I^3 - 2 delta_c c I^2 + (delta_c^2+kappa^2) I = eta^2;
// exposed for tests.
double backaction_coefficient(const PhysicalParams& p, const DerivedParams& d);

}  // namespace optomech
