#include "optomech/model.hpp"

#include <cmath>

#include "optomech/constants.hpp"
#include "optomech/errors.hpp"

namespace optomech {

void PhysicalParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw invalid_parameter(name, "must be > 0 and finite");
    };
    positive(kappa, "kappa");
    positive(omega_m, "omega_m");
    positive(gamma_m, "gamma_m");
    positive(gamma_c, "gamma_c");
    positive(omega_R, "omega_R");
    if (!(n_atoms_1 >= 1.0)) throw invalid_parameter("n_atoms_1", "must be >= 1");
    if (!(n_atoms_2 >= 1.0)) throw invalid_parameter("n_atoms_2", "must be >= 1");
    if (!(temperature >= 0.0)) throw invalid_parameter("temperature", "must be >= 0");
    if (!(omega_sw_1 >= 0.0)) throw invalid_parameter("omega_sw_1", "must be >= 0");
    if (!(omega_sw_2 >= 0.0)) throw invalid_parameter("omega_sw_2", "must be >= 0");
    if (!(n_ph >= 0.0)) throw invalid_parameter("n_ph", "must be >= 0");
    if (delta_a == 0.0 || !std::isfinite(delta_a))
        throw invalid_parameter("delta_a", "dispersive regime requires a finite nonzero detuning");
    if (!std::isfinite(eta) || !std::isfinite(xi) || !std::isfinite(delta_c))
        throw invalid_parameter("eta/xi/delta_c", "must be finite");
    if (!(g0 > 0.0)) throw invalid_parameter("g0", "must be > 0");
}

double thermal_occupancy(double omega, double temperature) {
    if (!(omega > 0.0)) throw invalid_parameter("omega", "must be > 0");
    if (!(temperature >= 0.0)) throw invalid_parameter("temperature", "must be >= 0");
    if (temperature == 0.0) return 0.0;
    const double x = hbar * omega / (k_boltzmann * temperature);
    return 1.0 / std::expm1(x);
}

DerivedParams derive_params(const PhysicalParams& p) {
    p.validate();
    DerivedParams d;
    d.u0 = p.g0 * p.g0 / p.delta_a;
    d.zeta_c_1 = 0.5 * std::sqrt(p.n_atoms_1) * d.u0;
    d.zeta_c_2 = 0.5 * std::sqrt(p.n_atoms_2) * d.u0;

    auto bogoliubov = [&](double omega_sw, double& chi, double& omega) {
        const double omega_plus = 4.0 * p.omega_R + 1.5 * omega_sw;
        const double omega_minus = 4.0 * p.omega_R + 0.5 * omega_sw;
        chi = std::pow(omega_plus / omega_minus, 0.25);
        omega = std::sqrt(omega_plus * omega_minus);
    };
    bogoliubov(p.omega_sw_1, d.chi_1, d.omega_1);
    bogoliubov(p.omega_sw_2, d.chi_2, d.omega_2);
    d.zeta_1 = d.zeta_c_1 / d.chi_1;
    d.zeta_2 = d.zeta_c_2 / d.chi_2;

    d.n_c_1 = thermal_occupancy(d.omega_1, p.temperature);
    d.n_c_2 = thermal_occupancy(d.omega_2, p.temperature);
    d.n_m = thermal_occupancy(p.omega_m, p.temperature);
    return d;
}

double drive_rate_from_power(double power, double kappa, double omega_p) {
    if (!(power >= 0.0)) throw invalid_parameter("power", "must be >= 0");
    if (!(kappa > 0.0)) throw invalid_parameter("kappa", "must be > 0");
    if (!(omega_p > 0.0)) throw invalid_parameter("omega_p", "must be > 0");
    return std::sqrt(2.0 * power * kappa / (hbar * omega_p));
}

double sw_frequency_from_geometry(const PhysicalParams& p, int side) {
    if (side != 1 && side != 2) throw invalid_parameter("side", "must be 1 or 2");
    if (!p.geometry) throw missing_geometry("sw_frequency_from_geometry");
    const Geometry& g = *p.geometry;
    if (!(g.scattering_length >= 0.0))
        throw invalid_parameter("scattering_length", "must be >= 0");
    if (!(g.cavity_half_length > 0.0))
        throw invalid_parameter("cavity_half_length", "must be > 0");
    if (!(g.atom_mass > 0.0)) throw invalid_parameter("atom_mass", "must be > 0");
    const double waist = (side == 1) ? g.waist_1 : g.waist_2;
    if (!(waist > 0.0)) throw invalid_parameter("waist", "must be > 0");
    const double n_atoms = (side == 1) ? p.n_atoms_1 : p.n_atoms_2;
    return 8.0 * pi * hbar * g.scattering_length * n_atoms
           / (g.atom_mass * g.cavity_half_length * waist * waist);
}

ValidityReport validity_check(const PhysicalParams& p, const DerivedParams& d,
                              double intensity) {
    ValidityReport r;
    r.u0_intensity = std::abs(d.u0) * intensity;
    r.weak_interaction_bound = 10.0 * p.omega_R;
    r.weak_interaction_ok = r.u0_intensity <= r.weak_interaction_bound;
    if (p.geometry && p.geometry->wavelength > 0.0 && p.geometry->membrane_mass > 0.0) {
        const Geometry& g = *p.geometry;
        r.sigma = (4.0 * pi / g.wavelength)
                  * std::sqrt(pi * hbar / (g.membrane_mass * p.omega_m));
        r.lamb_dicke = (r.sigma < 0.1) ? ValidityReport::LambDicke::ok
                                       : ValidityReport::LambDicke::violated;
    }
    return r;
}

}  // namespace optomech
