#pragma once

#include <cmath>

#include "lambdamem/errors.hpp"

namespace lambdamem {

// Lambda-type medium in natural units: times in units of the reference pulse
// duration tau_a, lengths in absorption lengths 1/kappa_a where
// kappa_a = mu13 * tau_a / 2.  In these units the signal-channel coupling is
// exactly 2 and only the coupling ratio mu23/mu13 remains as a parameter.
struct MediumSpec {
    double length = 10.0;     // medium extent, units of 1/kappa_a
    double mu_ratio = 1.0;    // mu23 / mu13
    double gamma3_tau = 0.0;  // spontaneous emission rate Gamma_3 * tau_a
    double delta_tau = 0.0;   // common detuning Delta * tau_a

    void validate() const {
        if (!(length > 0.0)) throw ValidationError("medium length must be > 0");
        if (!(mu_ratio > 0.0)) throw ValidationError("medium mu_ratio must be > 0");
        if (!(gamma3_tau >= 0.0)) throw ValidationError("medium gamma3_tau must be >= 0");
        if (!std::isfinite(delta_tau)) throw ValidationError("medium delta_tau must be finite");
    }

    bool operator==(const MediumSpec&) const = default;
};

// Dimensionless couplings entering the field equations
// dW13/dZ = i*mu13_eff*conj(rho13), dW23/dZ = i*mu23_eff*conj(rho23).
inline double mu13_effective() { return 2.0; }
inline double mu23_effective(const MediumSpec& m) { return 2.0 * m.mu_ratio; }

} // namespace lambdamem
