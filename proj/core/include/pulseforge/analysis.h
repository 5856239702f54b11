// Copyright 2026 The PulseForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PULSEFORGE_ANALYSIS_H
#define PULSEFORGE_ANALYSIS_H

#include <span>
#include <utility>
#include <vector>

#include "pulseforge/families.h"
#include "pulseforge/solver.h"
#include "pulseforge/su2.h"
#include "pulseforge/sweep_table.h"

namespace pulseforge {

/// Total flip angle L (drive strength 1), proportional to wall-clock duration.
class OperationTime {
  public:
    explicit OperationTime(double radians);
    double radians() const { return radians_; }

  private:
    double radians_;
};

struct ScalingFit {
    /// Slope of log F against log f.
    double exponent;
    double intercept;
    /// RMS of the log-space fit residuals.
    double residual;
    std::pair<double, double> f_range;
    int points;
};

struct MinOperationTime {
    double c1_star;
    double length;
};

struct SweepOptions {
    /// Worker threads for row evaluation; rows keep grid order regardless.
    unsigned threads = 1;
};

/// Smallest infidelity accepted by scaling fits.
inline constexpr double kInfidelityFloor = 1e-13;

OperationTime operation_time(std::span<const Pulse> pulses);
inline OperationTime operation_time(const CompositeSequence &seq) { return operation_time(seq.pulses); }

/// L(c, c1, n) = 4 arccos(c1) + 2 arccos(c2(c, c1)) + 2 pi n.
double operation_time_closed_form(double c, double c1, int n);

/// L is decreasing in c1, so the minimum sits at c1 = c1_upper(c, n).
MinOperationTime min_operation_time(double c, int n);

/// n points from lo to hi inclusive, endpoints exact.
std::vector<double> uniform_grid(double lo, double hi, int n);

/// Gate infidelity against U(theta, 0) over a uniform c1 grid spanning the
/// full admissible interval. Columns: c1, alpha, gate_infidelity,
/// elementary_infidelity (the single-pulse reference, constant per table).
SweepTable infidelity_sweep(double theta, WindingNumbers windings, double f, int grid_points,
                            Branch branch = Branch::kPlus, SweepOptions options = {});

/// As infidelity_sweep but with the state infidelity for initial state psi.
/// Columns: c1, alpha, state_infidelity, gate_infidelity, elementary_state_infidelity.
SweepTable state_infidelity_sweep(double theta, WindingNumbers windings, double f, int grid_points,
                                  Branch branch = Branch::kPlus, const QubitState &psi = QubitState::ground(),
                                  SweepOptions options = {});

/// Rows (c, c1_star, L_min(c, n)) for a strictly increasing grid in (-1, 1).
SweepTable time_sweep(int n, std::span<const double> c_grid);

/// Least-squares slope of log gate_infidelity(ideal, U^(f)) against log f on a
/// geometric grid. Requires 0 < f_min < f_max <= 0.3 and num_points >= 6;
/// throws FloorReached if any infidelity drops below kInfidelityFloor.
ScalingFit scaling_exponent(std::span<const Pulse> pulses, const Su2Matrix &ideal, double f_min, double f_max,
                            int num_points = 12);
ScalingFit scaling_exponent(const CompositeSequence &seq, double f_min, double f_max, int num_points = 12);
ScalingFit scaling_exponent(const FamilySequence &seq, double f_min, double f_max, int num_points = 12);
ScalingFit scaling_exponent(const Pulse &pulse, double f_min, double f_max, int num_points = 12);

/// Max-abs entry of the central difference d/df of the sequence product at
/// f = 0, after removing any component along the global-phase direction.
double first_order_derivative_norm(std::span<const Pulse> pulses, double step = 1e-5);

}  // namespace pulseforge

#endif  // PULSEFORGE_ANALYSIS_H
