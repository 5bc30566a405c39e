#include "lambdamem/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lambdamem {

namespace {

double shape_value(const PulseSpec& s, double t) {
    const double u = (t - s.center) / s.duration;
    switch (s.shape) {
        case PulseShape::Sech:
            return s.area / (std::numbers::pi * s.duration) / std::cosh(u);
        case PulseShape::Gaussian:
            return s.area / (std::sqrt(2.0 * std::numbers::pi) * s.duration) *
                   std::exp(-0.5 * u * u);
    }
    return 0.0;
}

} // namespace

double PulseSpec::peak_amplitude() const { return shape_value(*this, center); }

double PulseSpec::tail_span(double threshold) const {
    const double peak = peak_amplitude();
    if (peak <= threshold) return 0.0;
    switch (shape) {
        case PulseShape::Sech:
            // sech(u) = threshold/peak  =>  u = acosh(peak/threshold)
            return duration * std::acosh(peak / threshold);
        case PulseShape::Gaussian:
            return duration * std::sqrt(2.0 * std::log(peak / threshold));
    }
    return 0.0;
}

std::vector<complexd> make_envelope(const PulseSpec& spec, const Grid& grid,
                                    double truncation_threshold) {
    spec.validate();
    const complexd phase_factor = std::polar(1.0, spec.phase);
    std::vector<complexd> samples(grid.nt());
    for (int i = 0; i < grid.nt(); ++i)
        samples[i] = phase_factor * shape_value(spec, grid.t(i));

    // A window is acceptable when the boundary amplitude is either below the
    // truncation threshold (it would be zeroed anyway) or negligible against
    // the peak.
    const double peak = spec.peak_amplitude();
    const double allowed = std::max(truncation_threshold, 1e-3 * peak);
    const double boundary = std::max(std::abs(samples.front()), std::abs(samples.back()));
    if (boundary > allowed)
        throw WindowTooNarrow("pulse clipped at window boundary: |tau_a*Omega| = " +
                              std::to_string(boundary));
    return samples;
}

void truncate_envelope(std::span<complexd> samples, double threshold) {
    for (auto& v : samples)
        if (std::abs(v) < threshold) v = complexd{0.0, 0.0};
}

double pulse_area(std::span<const complexd> samples, double dt) {
    if (samples.size() < 2) return 0.0;
    complexd acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        acc += 0.5 * (samples[i] + samples[i + 1]);
    return std::abs(acc * dt);
}

double total_area(double theta13, double theta23) { return std::hypot(theta13, theta23); }

double predicted_imprint_location(double theta13, double theta23) {
    return std::log(theta13 / theta23);
}

InputPair matched_input_for_target(double x1_target, double theta_tot, double duration,
                                   PulseShape shape) {
    if (!(theta_tot > 0.0)) throw ValidationError("total pulse area must be > 0");
    // theta13/theta23 = exp(x1), theta13^2 + theta23^2 = theta_tot^2
    const double theta13 = theta_tot / std::sqrt(1.0 + std::exp(-2.0 * x1_target));
    const double theta23 = theta13 * std::exp(-x1_target);
    InputPair pair;
    pair.signal = PulseSpec{shape, theta13, duration, 0.0, 0.0};
    pair.control = PulseSpec{shape, theta23, duration, 0.0, 0.0};
    return pair;
}

InputPair matched_input_signal_fixed(double x1_target, double theta13, double duration,
                                     PulseShape shape) {
    if (!(theta13 > 0.0)) throw ValidationError("signal pulse area must be > 0");
    InputPair pair;
    pair.signal = PulseSpec{shape, theta13, duration, 0.0, 0.0};
    pair.control = PulseSpec{shape, theta13 * std::exp(-x1_target), duration, 0.0, 0.0};
    return pair;
}

} // namespace lambdamem
