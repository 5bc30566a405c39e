#pragma once

#include <cmath>
#include <complex>

#include "lambdamem/medium.hpp"

namespace lambdamem {

using complexd = std::complex<double>;

// State of one Lambda atom: |1>, |2> ground states, |3> excited.
// Only the upper triangle is stored; rho_ji = conj(rho_ij) structurally.
struct DensityMatrix {
    double rho11 = 1.0;
    double rho22 = 0.0;
    double rho33 = 0.0;
    complexd rho12{0.0, 0.0};
    complexd rho13{0.0, 0.0};
    complexd rho23{0.0, 0.0};

    static DensityMatrix ground() { return {}; }

    static DensityMatrix excited() {
        DensityMatrix r;
        r.rho11 = 0.0;
        r.rho33 = 1.0;
        return r;
    }

    double trace() const { return rho11 + rho22 + rho33; }

    // Tr(rho^2) = sum rho_ii^2 + 2 sum_{i<j} |rho_ij|^2
    double purity() const {
        return rho11 * rho11 + rho22 * rho22 + rho33 * rho33 +
               2.0 * (std::norm(rho12) + std::norm(rho13) + std::norm(rho23));
    }

    // Largest positive violation of |rho_ij|^2 <= rho_ii * rho_jj.
    double cauchy_schwarz_violation() const {
        const double v12 = std::norm(rho12) - rho11 * rho22;
        const double v13 = std::norm(rho13) - rho11 * rho33;
        const double v23 = std::norm(rho23) - rho22 * rho33;
        return std::max({v12, v13, v23, 0.0});
    }

    bool finite() const {
        const double s = rho11 + rho22 + rho33 + rho12.real() + rho12.imag() +
                         rho13.real() + rho13.imag() + rho23.real() + rho23.imag();
        return std::isfinite(s);
    }
};

// Time derivative of the density matrix under the two Rabi envelopes, with
// spontaneous emission from |3> feeding both ground states at Gamma_3/2,
// Gamma_3/2 damping on the optical coherences and none on rho12.  Everything
// is in tau_a units (omega = Omega*tau_a, derivatives per tau_a).
inline DensityMatrix bloch_derivative(const DensityMatrix& rho, complexd omega13,
                                      complexd omega23, const MediumSpec& medium) {
    const double gamma = medium.gamma3_tau;
    const complexd i_half{0.0, 0.5};
    const complexd i_delta{0.0, medium.delta_tau};

    const double pump13 = std::imag(omega13 * rho.rho13);
    const double pump23 = std::imag(omega23 * rho.rho23);

    DensityMatrix d;
    d.rho11 = pump13 + 0.5 * gamma * rho.rho33;
    d.rho22 = pump23 + 0.5 * gamma * rho.rho33;
    d.rho33 = -pump13 - pump23 - gamma * rho.rho33;
    d.rho12 = i_half * (std::conj(omega13) * std::conj(rho.rho23) - omega23 * rho.rho13);
    d.rho13 = i_delta * rho.rho13 - i_half * std::conj(omega23) * rho.rho12 +
              i_half * std::conj(omega13) * (rho.rho33 - rho.rho11) -
              0.5 * gamma * rho.rho13;
    d.rho23 = i_delta * rho.rho23 - i_half * std::conj(omega13) * std::conj(rho.rho12) +
              i_half * std::conj(omega23) * (rho.rho33 - rho.rho22) -
              0.5 * gamma * rho.rho23;
    return d;
}

// rho + h * d, used by the RK4 stages.
inline DensityMatrix advanced(const DensityMatrix& rho, const DensityMatrix& d, double h) {
    DensityMatrix r;
    r.rho11 = rho.rho11 + h * d.rho11;
    r.rho22 = rho.rho22 + h * d.rho22;
    r.rho33 = rho.rho33 + h * d.rho33;
    r.rho12 = rho.rho12 + h * d.rho12;
    r.rho13 = rho.rho13 + h * d.rho13;
    r.rho23 = rho.rho23 + h * d.rho23;
    return r;
}

inline DensityMatrix rk4_combine(const DensityMatrix& rho, const DensityMatrix& k1,
                                 const DensityMatrix& k2, const DensityMatrix& k3,
                                 const DensityMatrix& k4, double h) {
    const double w = h / 6.0;
    DensityMatrix r;
    r.rho11 = rho.rho11 + w * (k1.rho11 + 2.0 * k2.rho11 + 2.0 * k3.rho11 + k4.rho11);
    r.rho22 = rho.rho22 + w * (k1.rho22 + 2.0 * k2.rho22 + 2.0 * k3.rho22 + k4.rho22);
    r.rho33 = rho.rho33 + w * (k1.rho33 + 2.0 * k2.rho33 + 2.0 * k3.rho33 + k4.rho33);
    r.rho12 = rho.rho12 + w * (k1.rho12 + 2.0 * k2.rho12 + 2.0 * k3.rho12 + k4.rho12);
    r.rho13 = rho.rho13 + w * (k1.rho13 + 2.0 * k2.rho13 + 2.0 * k3.rho13 + k4.rho13);
    r.rho23 = rho.rho23 + w * (k1.rho23 + 2.0 * k2.rho23 + 2.0 * k3.rho23 + k4.rho23);
    return r;
}

} // namespace lambdamem
