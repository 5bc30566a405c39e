#pragma once

#include <span>
#include <vector>

#include "lambdamem/density_matrix.hpp"
#include "lambdamem/errors.hpp"

namespace lambdamem {

// Envelope view over T-grid samples.  Half-step values use a four-point
// cubic stencil so the RK4 march keeps its fourth-order accuracy; a plain
// linear average of neighbouring samples would cap the time accuracy at
// second order.
class SampledEnvelope {
  public:
    explicit SampledEnvelope(std::span<const complexd> samples) : v_(samples) {}

    complexd at(int i) const { return v_[i]; }

    // Value at the midpoint of [i, i+1].
    complexd mid(int i) const {
        const int n = static_cast<int>(v_.size());
        if (n < 4) return 0.5 * (v_[i] + v_[i + 1]);
        if (i == 0)
            return (5.0 * v_[0] + 15.0 * v_[1] - 5.0 * v_[2] + v_[3]) / 16.0;
        if (i == n - 2)
            return (v_[n - 4] - 5.0 * v_[n - 3] + 15.0 * v_[n - 2] + 5.0 * v_[n - 1]) / 16.0;
        return (-v_[i - 1] + 9.0 * v_[i] + 9.0 * v_[i + 1] - v_[i + 2]) / 16.0;
    }

  private:
    std::span<const complexd> v_;
};

// Exact envelope evaluation from a callable omega(t); used by tests and
// oracles where a closed form is available.
template <class F>
class AnalyticEnvelope {
  public:
    AnalyticEnvelope(F f, double t_min, double dt) : f_(std::move(f)), t_min_(t_min), dt_(dt) {}
    complexd at(int i) const { return f_(t_min_ + i * dt_); }
    complexd mid(int i) const { return f_(t_min_ + (i + 0.5) * dt_); }

  private:
    F f_;
    double t_min_, dt_;
};

// Classical RK4 march of the Bloch equations over the T axis at one Z slice.
// Writes the state at every node into `out` (size nt).  Throws NonFiniteState
// if the state stops being finite.
template <class Env13, class Env23>
void advance_bloch_slice(const DensityMatrix& rho_init, const Env13& w13, const Env23& w23,
                         const MediumSpec& medium, int nt, double dt,
                         std::span<DensityMatrix> out) {
    out[0] = rho_init;
    DensityMatrix rho = rho_init;
    for (int i = 0; i + 1 < nt; ++i) {
        const complexd a13 = w13.at(i), m13 = w13.mid(i), b13 = w13.at(i + 1);
        const complexd a23 = w23.at(i), m23 = w23.mid(i), b23 = w23.at(i + 1);
        const DensityMatrix k1 = bloch_derivative(rho, a13, a23, medium);
        const DensityMatrix k2 = bloch_derivative(advanced(rho, k1, 0.5 * dt), m13, m23, medium);
        const DensityMatrix k3 = bloch_derivative(advanced(rho, k2, 0.5 * dt), m13, m23, medium);
        const DensityMatrix k4 = bloch_derivative(advanced(rho, k3, dt), b13, b23, medium);
        rho = rk4_combine(rho, k1, k2, k3, k4, dt);
        if (!rho.finite())
            throw NonFiniteState("Bloch state non-finite at T node " + std::to_string(i + 1));
        out[i + 1] = rho;
    }
}

template <class Env13, class Env23>
std::vector<DensityMatrix> advance_bloch_slice(const DensityMatrix& rho_init, const Env13& w13,
                                               const Env23& w23, const MediumSpec& medium,
                                               int nt, double dt) {
    std::vector<DensityMatrix> out(nt);
    advance_bloch_slice(rho_init, w13, w23, medium, nt, dt, std::span<DensityMatrix>(out));
    return out;
}

} // namespace lambdamem
