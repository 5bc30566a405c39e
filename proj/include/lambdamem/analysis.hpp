#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lambdamem/density_matrix.hpp"

namespace lambdamem {

// Spatial profile of the ground-state matrix elements at a fixed time.
struct ImprintSnapshot {
    double time = 0.0;  // tau_a units
    std::vector<double> z_axis;
    std::vector<double> rho11;
    std::vector<double> rho22;
    std::vector<complexd> rho12;
};

// Summary of one imprint.  The |2>-population bump peaks exactly at the
// encoding location; the ground-state coherence is an odd sech*tanh pattern
// around it, so its sign is read off the lobes, not the center.
struct ImprintCharacter {
    double center = 0.0;          // kappa_a * x
    double width_fwhm = 0.0;      // FWHM of the rho22 bump
    double peak_coherence = 0.0;  // max |rho12| over the imprint
    int phase_sign = +1;          // +1 unflipped, -1 pi-shifted
};

// Locate and summarize an imprint; nullopt when max |rho12| is below the
// detection threshold (nothing stored, or the imprint was pushed out).
std::optional<ImprintCharacter> characterize_imprint(const ImprintSnapshot& snapshot,
                                                     double detection_threshold = 0.01);

inline double displacement(const ImprintCharacter& before, const ImprintCharacter& after) {
    return after.center - before.center;
}

inline bool phase_flipped(const ImprintCharacter& before, const ImprintCharacter& after) {
    return before.phase_sign * after.phase_sign == -1;
}

// Predicted displacement ln|(tau_a + tau_b)/(tau_a - tau_b)| of an imprint
// hit by a 2*pi control pulse of duration tau_b.
double phase_lag_displacement(double tau_a, double tau_b);

// Output/input signal intensity ratio (trapezoidal in T).
double retrieval_efficiency(std::span<const complexd> omega_in,
                            std::span<const complexd> omega_out, double dt);

// Pearson correlation between the input and output intensity profiles after
// aligning their peaks, over the union window where either profile exceeds
// 1e-3 of its peak.
double shape_correlation(std::span<const complexd> omega_in,
                         std::span<const complexd> omega_out, double dt);

// Phase of the envelope at its intensity peak.
double envelope_phase_at_peak(std::span<const complexd> samples);

// Parabolic refinement of a sampled maximum: returns the abscissa offset from
// node j in units of the sample spacing, clamped to [-0.5, 0.5].
double parabolic_peak_offset(double ym, double y0, double yp);

// Per-slice pulse areas along the medium.
struct AreaEvolution {
    std::vector<double> z;
    std::vector<double> theta13;
    std::vector<double> theta23;
    std::vector<double> theta_tot;
};

AreaEvolution make_area_evolution(std::span<const double> z, std::span<const double> theta13,
                                  std::span<const double> theta23);

} // namespace lambdamem
