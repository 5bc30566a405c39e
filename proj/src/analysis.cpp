#include "lambdamem/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "lambdamem/errors.hpp"

namespace lambdamem {

namespace {

int argmax_abs(std::span<const complexd> v) {
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        const double a = std::abs(v[i]);
        if (a > best_val) {
            best_val = a;
            best = i;
        }
    }
    return best;
}

int argmax(std::span<const double> v) {
    return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

// Catmull-Rom interpolation of a real sequence at fractional index x.
double interp_cubic(std::span<const double> v, double x) {
    const int n = static_cast<int>(v.size());
    if (x <= 0.0) return v.front();
    if (x >= n - 1) return v.back();
    const int i = std::min(static_cast<int>(x), n - 2);
    const double s = x - i;
    const double p0 = v[std::max(i - 1, 0)];
    const double p1 = v[i];
    const double p2 = v[i + 1];
    const double p3 = v[std::min(i + 2, n - 1)];
    return p1 + 0.5 * s * (p2 - p0 +
                           s * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                s * (3.0 * (p1 - p2) + p3 - p0)));
}

// First crossing of `level` scanning from node j in direction dir; returns
// the fractional index, or NaN if the profile never crosses.
double crossing_from(std::span<const double> v, int j, int dir, double level) {
    const int n = static_cast<int>(v.size());
    for (int i = j; i + dir >= 0 && i + dir < n; i += dir) {
        const double a = v[i], b = v[i + dir];
        if ((a - level) * (b - level) <= 0.0 && a != b)
            return i + dir * (a - level) / (a - b);
    }
    return std::nan("");
}

} // namespace

double parabolic_peak_offset(double ym, double y0, double yp) {
    const double denom = ym - 2.0 * y0 + yp;
    if (denom == 0.0) return 0.0;
    return std::clamp(0.5 * (ym - yp) / denom, -0.5, 0.5);
}

std::optional<ImprintCharacter> characterize_imprint(const ImprintSnapshot& snapshot,
                                                     double detection_threshold) {
    const int n = static_cast<int>(snapshot.z_axis.size());
    if (n < 3) return std::nullopt;
    const double dz = snapshot.z_axis[1] - snapshot.z_axis[0];

    const int j12 = argmax_abs(snapshot.rho12);
    const double coh_peak = std::abs(snapshot.rho12[j12]);
    if (coh_peak < detection_threshold) return std::nullopt;

    // Center from the rho22 bump, refined parabolically.
    const int j22 = argmax(snapshot.rho22);
    double center = snapshot.z_axis[j22];
    if (j22 > 0 && j22 < n - 1)
        center += dz * parabolic_peak_offset(snapshot.rho22[j22 - 1], snapshot.rho22[j22],
                                             snapshot.rho22[j22 + 1]);

    // FWHM of the rho22 bump.
    const double half = 0.5 * snapshot.rho22[j22];
    const double xl = crossing_from(snapshot.rho22, j22, -1, half);
    const double xr = crossing_from(snapshot.rho22, j22, +1, half);
    double width;
    if (std::isnan(xl) && std::isnan(xr))
        width = 0.0;
    else if (std::isnan(xl))
        width = 2.0 * dz * (xr - j22);
    else if (std::isnan(xr))
        width = 2.0 * dz * (j22 - xl);
    else
        width = dz * (xr - xl);

    // The coherence pattern is odd around the center: a positive-then-negative
    // lobe pair (unflipped) or its negation.  Reading the dominant lobe's sign
    // together with which side of the center it sits on is insensitive to
    // which lobe happens to be larger.
    const double side = snapshot.z_axis[j12] < center ? -1.0 : 1.0;
    const double lobe = snapshot.rho12[j12].real();
    const int sign = lobe * side < 0.0 ? +1 : -1;

    ImprintCharacter c;
    c.center = center;
    c.width_fwhm = width;
    c.peak_coherence = coh_peak;
    c.phase_sign = sign;
    return c;
}

double phase_lag_displacement(double tau_a, double tau_b) {
    return std::log(std::abs((tau_a + tau_b) / (tau_a - tau_b)));
}

double retrieval_efficiency(std::span<const complexd> omega_in,
                            std::span<const complexd> omega_out, double dt) {
    auto intensity = [dt](std::span<const complexd> v) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            acc += 0.5 * (std::norm(v[i]) + std::norm(v[i + 1]));
        return acc * dt;
    };
    const double in = intensity(omega_in);
    if (in <= 0.0) throw ZeroInput("input signal intensity integral is zero");
    return intensity(omega_out) / in;
}

double shape_correlation(std::span<const complexd> omega_in,
                         std::span<const complexd> omega_out, double dt) {
    (void)dt;  // profiles are compared on the shared sample grid
    const int n = static_cast<int>(std::min(omega_in.size(), omega_out.size()));
    if (n < 3) throw ZeroInput("profiles too short for correlation");

    std::vector<double> pin(n), pout(n);
    for (int i = 0; i < n; ++i) {
        pin[i] = std::norm(omega_in[i]);
        pout[i] = std::norm(omega_out[i]);
    }
    const int jin = argmax(pin), jout = argmax(pout);
    const double peak_in = pin[jin], peak_out = pout[jout];
    if (peak_in <= 0.0 || peak_out <= 0.0) throw ZeroInput("zero intensity profile");

    double pos_in = jin, pos_out = jout;
    if (jin > 0 && jin < n - 1)
        pos_in += parabolic_peak_offset(pin[jin - 1], pin[jin], pin[jin + 1]);
    if (jout > 0 && jout < n - 1)
        pos_out += parabolic_peak_offset(pout[jout - 1], pout[jout], pout[jout + 1]);
    const double shift = pos_out - pos_in;

    // Align the output to the input grid and correlate over the union support.
    std::vector<double> x, y;
    x.reserve(n);
    y.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double aligned = interp_cubic(pout, i + shift);
        if (pin[i] > 1e-3 * peak_in || aligned > 1e-3 * peak_out) {
            x.push_back(pin[i]);
            y.push_back(aligned);
        }
    }
    const int m = static_cast<int>(x.size());
    if (m < 3) throw ZeroInput("no overlapping support for correlation");

    double mx = 0.0, my = 0.0;
    for (int i = 0; i < m; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= m;
    my /= m;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (int i = 0; i < m; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx <= 0.0 || syy <= 0.0) throw ZeroInput("degenerate intensity profile");
    return sxy / std::sqrt(sxx * syy);
}

double envelope_phase_at_peak(std::span<const complexd> samples) {
    const int j = argmax_abs(samples);
    return std::arg(samples[j]);
}

AreaEvolution make_area_evolution(std::span<const double> z, std::span<const double> theta13,
                                  std::span<const double> theta23) {
    AreaEvolution out;
    out.z.assign(z.begin(), z.end());
    out.theta13.assign(theta13.begin(), theta13.end());
    out.theta23.assign(theta23.begin(), theta23.end());
    out.theta_tot.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        out.theta_tot[i] = std::hypot(theta13[i], theta23[i]);
    return out;
}

} // namespace lambdamem
