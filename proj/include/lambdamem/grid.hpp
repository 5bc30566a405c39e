#pragma once

#include <cmath>
#include <cstdint>

#include "lambdamem/errors.hpp"

namespace lambdamem {

// Uniform (Z, T) grid in traveling-wave coordinates.  T in units of tau_a,
// Z in units of 1/kappa_a starting at 0.  Ranges must be exact multiples of
// the step sizes so node coordinates are reproducible.
class Grid {
  public:
    static Grid make(double t_min, double t_max, double dt, double z_max, double dz) {
        Grid g;
        g.t_min_ = t_min;
        g.t_max_ = t_max;
        g.dt_ = dt;
        g.z_max_ = z_max;
        g.dz_ = dz;
        if (!(dt > 0.0)) throw ValidationError("grid dt must be > 0");
        if (!(dz > 0.0)) throw ValidationError("grid dz must be > 0");
        if (!(t_max > t_min)) throw ValidationError("grid T range is empty");
        if (!(z_max > 0.0)) throw ValidationError("grid Z range is empty");
        g.nt_ = exact_count(t_max - t_min, dt, "T");
        g.nz_ = exact_count(z_max, dz, "Z");
        return g;
    }

    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    double dt() const { return dt_; }
    double z_max() const { return z_max_; }
    double dz() const { return dz_; }

    int nt() const { return nt_; }  // number of T nodes
    int nz() const { return nz_; }  // number of Z nodes

    double t(int i) const { return t_min_ + i * dt_; }
    double z(int j) const { return j * dz_; }

    // Nearest T node index, clamped to the grid.
    int t_index(double t) const {
        int i = static_cast<int>(std::lround((t - t_min_) / dt_));
        if (i < 0) i = 0;
        if (i > nt_ - 1) i = nt_ - 1;
        return i;
    }

    bool operator==(const Grid&) const = default;

  private:
    static int exact_count(double range, double step, const char* axis) {
        const double ratio = range / step;
        const auto n = static_cast<std::int64_t>(std::llround(ratio));
        if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio))
            throw ValidationError(std::string("grid ") + axis +
                                  " range is not an exact multiple of the step");
        return static_cast<int>(n) + 1;
    }

    double t_min_ = 0, t_max_ = 0, dt_ = 0, z_max_ = 0, dz_ = 0;
    int nt_ = 0, nz_ = 0;
};

} // namespace lambdamem
