#pragma once

#include <stdexcept>
#include <string>

namespace optomech {

// Thrown when a parameter precondition fails; the message names the field.
struct invalid_parameter : std::invalid_argument {
    explicit invalid_parameter(const std::string& field, const std::string& why)
        : std::invalid_argument("invalid parameter '" + field + "': " + why) {}
};

struct missing_geometry : std::runtime_error {
    explicit missing_geometry(const std::string& what)
        : std::runtime_error("geometry group required but absent: " + what) {}
};

struct no_physical_root : std::runtime_error {
    no_physical_root() : std::runtime_error("steady-state cubic has no real root with I >= 0") {}
};

struct unstable_drift : std::runtime_error {
    unstable_drift() : std::runtime_error("drift matrix is not stable") {}
    explicit unstable_drift(double abscissa)
        : std::runtime_error("drift matrix is not stable (spectral abscissa = "
                             + std::to_string(abscissa) + " rad/s)") {}
};

struct solver_singularity : std::runtime_error {
    explicit solver_singularity(const std::string& what) : std::runtime_error(what) {}
};

struct numerical_failure : std::runtime_error {
    explicit numerical_failure(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_domain_error : std::runtime_error {
    explicit numeric_domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct degenerate_pivot : std::runtime_error {
    explicit degenerate_pivot(const std::string& what) : std::runtime_error(what) {}
};

struct step_too_large : std::runtime_error {
    explicit step_too_large(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace optomech
