#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lambdamem/analysis.hpp"
#include "lambdamem/bloch_integrator.hpp"
#include "lambdamem/grid.hpp"
#include "lambdamem/medium.hpp"

namespace lambdamem {

// What integrate_medium keeps besides boundary envelopes and per-slice
// scalars.  Full retention is for diagnostics; sweeps run with BoundaryOnly.
enum class Retention { BoundaryOnly, FullFields, FullFieldsAndCoherences };

struct TimeWindow {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

struct IntegrationRequest {
    Grid grid = Grid::make(0.0, 1.0, 0.02, 1.0, 0.02);
    MediumSpec medium;
    std::vector<complexd> input13;  // envelopes at Z = 0, one sample per T node
    std::vector<complexd> input23;
    Retention retention = Retention::BoundaryOnly;
    double snapshot_stride = 0.5;          // tau_a; <= 0 disables strided snapshots
    std::vector<double> snapshot_times;    // extra explicit snapshot times
    std::vector<TimeWindow> area_windows;  // empty -> one full-window entry
};

struct PropagationRecord {
    Grid grid = Grid::make(0.0, 1.0, 0.02, 1.0, 0.02);
    MediumSpec medium;

    std::vector<complexd> in13, in23;    // Z = 0
    std::vector<complexd> out13, out23;  // Z = length

    std::vector<double> z_axis;
    std::vector<ImprintSnapshot> snapshots;  // ordered by time

    // Per-window, per-slice pulse areas.
    std::vector<TimeWindow> area_windows;
    std::vector<std::vector<double>> theta13;  // [window][iz]
    std::vector<std::vector<double>> theta23;

    // Photon bookkeeping per slice: integral of (|W13|^2 + |W23|^2) dT and
    // the excited population left at the last T node.
    std::vector<double> intensity_flux;
    std::vector<double> rho33_final;

    double max_trace_drift = 0.0;
    std::optional<double> max_purity_drift;  // tracked only when Gamma_3 = 0
    double max_cs_violation = 0.0;
    std::vector<std::string> warnings;

    // Full-field records, row-major [iz * nt + it]; empty unless retained.
    std::vector<complexd> full13, full23;
    std::vector<DensityMatrix> full_rho;

    const ImprintSnapshot* snapshot_nearest(double time) const;
    AreaEvolution areas(std::size_t window_index = 0) const;
};

// One spatial step of the envelope equations with supplied polarizations:
// W13 += dz * i * mu13_eff * rho31, and likewise for the control channel.
// The predictor passes the current slice's polarizations; the corrector
// passes the trapezoidal average of current and predicted ones.
void advance_field_step(std::span<const complexd> rho31, std::span<const complexd> rho32,
                        std::span<const complexd> w13_in, std::span<const complexd> w23_in,
                        const MediumSpec& medium, double dz, std::span<complexd> w13_out,
                        std::span<complexd> w23_out);

// March the coupled envelope/Bloch system from Z = 0 to Z = length with a
// two-pass predictor-corrector in Z and RK4 in T.  The atom starts in |1><1|
// at T_min everywhere; inputs must already be truncated.
PropagationRecord integrate_medium(const IntegrationRequest& request);

} // namespace lambdamem
