#pragma once

#include <optional>
#include <string>

namespace optomech {

// Optional cavity/atom geometry, used only by convenience formulas
// (s-wave frequency from trap geometry, Lamb-Dicke diagnostic, drive rate).
struct Geometry {
    double cavity_half_length = 0.0;     // L (m)
    double atom_mass = 0.0;              // m_a (kg)
    double scattering_length = 0.0;      // a_s (m)
    double waist_1 = 0.0;                // w_1 (m)
    double waist_2 = 0.0;                // w_2 (m)
    double membrane_mass = 0.0;          // m (kg)
    double wavelength = 0.0;             // lambda_0 (m)
    double laser_power = 0.0;            // P (W)
    double pump_angular_frequency = 0.0; // omega_p (rad/s)
};

// Laboratory inputs. All frequencies are angular (rad/s); values quoted in
// the literature as "2pi x f" enter as 2*pi*f.
struct PhysicalParams {
    double kappa = 0.0;        // cavity amplitude decay
    double omega_R = 0.0;      // atomic recoil frequency
    double omega_m = 0.0;      // membrane frequency
    double gamma_m = 0.0;      // membrane damping
    double gamma_c = 0.0;      // BEC collective-excitation damping
    double g0 = 0.0;           // vacuum Rabi frequency
    double delta_a = 0.0;      // atom-pump detuning
    double n_atoms_1 = 0.0;    // N_1
    double n_atoms_2 = 0.0;    // N_2
    double temperature = 0.0;  // bath temperature (K)
    double eta = 0.0;          // pump rate
    double xi = 0.0;           // membrane optomechanical coupling
    double delta_c = 0.0;      // effective Stark-shifted detuning (sweep variable)
    double omega_sw_1 = 0.0;   // s-wave scattering frequency, side 1
    double omega_sw_2 = 0.0;   // s-wave scattering frequency, side 2
    double n_ph = 0.0;         // optical thermal occupancy

    std::optional<Geometry> geometry;

    // Throws invalid_parameter naming the offending field.
    void validate() const;
};

// Effective model constants derived from PhysicalParams.
struct DerivedParams {
    double u0 = 0.0;                       // U_0 = g0^2 / delta_a
    double zeta_c_1 = 0.0, zeta_c_2 = 0.0; // (1/2) sqrt(N_j) U_0
    double chi_1 = 0.0, chi_2 = 0.0;       // (Omega+/Omega-)^(1/4)
    double omega_1 = 0.0, omega_2 = 0.0;   // sqrt(Omega+ Omega-)
    double zeta_1 = 0.0, zeta_2 = 0.0;     // zeta_c / chi
    double n_c_1 = 0.0, n_c_2 = 0.0;       // Bogoliubov thermal occupancies
    double n_m = 0.0;                      // membrane thermal occupancy
};

// Regime diagnostics; never aborts a computation.
struct ValidityReport {
    bool weak_interaction_ok = false;  // U_0 |alpha|^2 <= 10 omega_R
    double u0_intensity = 0.0;
    double weak_interaction_bound = 0.0;

    enum class LambDicke { ok, violated, unknown };
    LambDicke lamb_dicke = LambDicke::unknown;  // sigma < 0.1, if geometry known
    double sigma = 0.0;
};

DerivedParams derive_params(const PhysicalParams& p);

// Bose factor [exp(hbar*omega/(k_B T)) - 1]^(-1); 0 at T = 0.
double thermal_occupancy(double omega, double temperature);

// eta = sqrt(2 P kappa / (hbar omega_p))
double drive_rate_from_power(double power, double kappa, double omega_p);

// omega_swj = 8 pi hbar a_s N_j / (m_a L w_j^2); requires the geometry group.
double sw_frequency_from_geometry(const PhysicalParams& p, int side);

ValidityReport validity_check(const PhysicalParams& p, const DerivedParams& d,
                              double intensity);

}  // namespace optomech
