#pragma once

#include <span>
#include <vector>

#include "lambdamem/density_matrix.hpp"
#include "lambdamem/grid.hpp"

namespace lambdamem {

enum class PulseShape { Sech, Gaussian };

// One input envelope: amplitude theta/(pi*tau)*sech((T-c)/tau) or
// theta/(sqrt(2 pi)*tau)*exp(-(T-c)^2/(2 tau^2)), times exp(i*phase).
struct PulseSpec {
    PulseShape shape = PulseShape::Sech;
    double area = 0.0;      // radians
    double duration = 1.0;  // tau_a units
    double center = 0.0;    // tau_a units
    double phase = 0.0;     // radians

    void validate() const {
        if (!(duration > 0.0)) throw ValidationError("pulse duration must be > 0");
        if (!(area >= 0.0)) throw ValidationError("pulse area must be >= 0");
    }

    double peak_amplitude() const;

    // Half-width in T beyond which |tau_a * Omega| falls below the threshold.
    double tail_span(double threshold) const;

    bool operator==(const PulseSpec&) const = default;
};

// Signal (1-3 channel) plus control (2-3 channel) entering at Z = 0.
struct InputPair {
    PulseSpec signal;
    PulseSpec control;

    bool operator==(const InputPair&) const = default;
};

// Envelope samples on the grid's T axis.  Throws WindowTooNarrow when the
// pulse is clipped at a window boundary above the truncation threshold.
std::vector<complexd> make_envelope(const PulseSpec& spec, const Grid& grid,
                                    double truncation_threshold = 1e-5);

// Zero every sample with |tau_a * Omega| below the threshold; leave the rest.
void truncate_envelope(std::span<complexd> samples, double threshold = 1e-5);

// Magnitude of the complex trapezoidal integral of the envelope.
double pulse_area(std::span<const complexd> samples, double dt);

// Quadrature-sum area of the two channels.
double total_area(double theta13, double theta23);

// Predicted imprint location kappa_a*x1 = ln(theta13/theta23) for a
// time-matched pair entering at Z = 0.
double predicted_imprint_location(double theta13, double theta23);

// Time-matched sech pair with area ratio exp(x1_target) and total area
// theta_tot.
InputPair matched_input_for_target(double x1_target, double theta_tot, double duration,
                                   PulseShape shape = PulseShape::Sech);

// Variant with the signal area held fixed; the control area follows the
// location formula.
InputPair matched_input_signal_fixed(double x1_target, double theta13, double duration,
                                     PulseShape shape = PulseShape::Sech);

} // namespace lambdamem
