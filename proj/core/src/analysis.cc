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

#include "pulseforge/analysis.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "pulseforge/errors.h"

namespace pulseforge {

namespace {

/// Runs body(i) for i in [0, count) on up to `threads` workers, striding so
/// each row is owned by exactly one worker. Rethrows the first exception.
template <typename Body>
void parallel_rows(size_t count, unsigned threads, Body body) {
    unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (size_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < count; i += workers) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::string windings_text(const WindingNumbers &w) {
    std::ostringstream out;
    out << w.n1() << ',' << w.n2() << ',' << w.n3();
    return out.str();
}

void require_grid_points(int grid_points) {
    if (grid_points < 3) {
        throw std::invalid_argument("sweeps need at least 3 grid points");
    }
}

void add_sweep_metadata(SweepTable &table, double theta, double f, const WindingNumbers &w, Branch branch,
                        int grid_points, const C1Bounds &bounds) {
    table.add_metadata("theta", format_scientific(theta));
    table.add_metadata("f", format_scientific(f));
    table.add_metadata("windings", windings_text(w));
    table.add_metadata("branch", branch_symbol(branch));
    table.add_metadata("grid_points", std::to_string(grid_points));
    table.add_metadata("c1_lower", format_scientific(bounds.lower));
    table.add_metadata("c1_upper", format_scientific(bounds.upper));
}

}  // namespace

OperationTime::OperationTime(double radians) : radians_(radians) {
    if (!std::isfinite(radians) || !(radians > 0.0)) {
        throw std::invalid_argument("operation time must be finite and positive");
    }
}

OperationTime operation_time(std::span<const Pulse> pulses) {
    double total = 0.0;
    for (const auto &p : pulses) {
        total += p.theta();
    }
    return OperationTime(total);
}

double operation_time_closed_form(double c, double c1, int n) {
    SecondarySolution sec = solve_secondary(c1, c, parity_of(n));
    return 4.0 * std::acos(c1) + 2.0 * std::acos(sec.c2) + kTwoPi * n;
}

MinOperationTime min_operation_time(double c, int n) {
    if (n < 0) {
        throw std::invalid_argument("total winding n must be non-negative");
    }
    double c1_star = c1_bounds(c, parity_of(n)).upper;
    return MinOperationTime{c1_star, operation_time_closed_form(c, c1_star, n)};
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2) {
        throw std::invalid_argument("uniform grid needs at least 2 points");
    }
    std::vector<double> grid(static_cast<size_t>(n));
    double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; i++) {
        grid[static_cast<size_t>(i)] = lo + step * i;
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

SweepTable infidelity_sweep(double theta, WindingNumbers windings, double f, int grid_points, Branch branch,
                            SweepOptions options) {
    require_grid_points(grid_points);
    TargetRotation target(theta, 0.0);
    OreMagnitude ore(f);
    C1Bounds bounds = c1_bounds(target.c(), windings.parity());
    std::vector<double> grid = uniform_grid(bounds.lower, bounds.upper, grid_points);

    Su2Matrix ideal = target_unitary(target);
    Pulse elementary(theta, 0.0);
    double reference = gate_infidelity(ideal, pulse_unitary(elementary, ore));

    std::vector<std::vector<double>> rows(grid.size());
    parallel_rows(grid.size(), options.threads, [&](size_t i) {
        CompositeSequence seq = build_sequence(target, grid[i], windings, branch);
        double value = gate_infidelity(ideal, sequence_unitary(seq.pulses, ore));
        rows[i] = {grid[i], seq.solution.alpha, value, reference};
    });

    SweepTable table("infidelity_sweep", {"c1", "alpha", "gate_infidelity", "elementary_infidelity"});
    add_sweep_metadata(table, theta, f, windings, branch, grid_points, bounds);
    for (auto &row : rows) {
        table.add_row(std::move(row));
    }
    return table;
}

SweepTable state_infidelity_sweep(double theta, WindingNumbers windings, double f, int grid_points, Branch branch,
                                  const QubitState &psi, SweepOptions options) {
    require_grid_points(grid_points);
    TargetRotation target(theta, 0.0);
    OreMagnitude ore(f);
    C1Bounds bounds = c1_bounds(target.c(), windings.parity());
    std::vector<double> grid = uniform_grid(bounds.lower, bounds.upper, grid_points);

    Su2Matrix ideal = target_unitary(target);
    double reference = state_infidelity(ideal, pulse_unitary(Pulse(theta, 0.0), ore), psi);

    std::vector<std::vector<double>> rows(grid.size());
    parallel_rows(grid.size(), options.threads, [&](size_t i) {
        CompositeSequence seq = build_sequence(target, grid[i], windings, branch);
        Su2Matrix actual = sequence_unitary(seq.pulses, ore);
        rows[i] = {grid[i], seq.solution.alpha, state_infidelity(ideal, actual, psi), gate_infidelity(ideal, actual),
                   reference};
    });

    SweepTable table("state_infidelity_sweep",
                     {"c1", "alpha", "state_infidelity", "gate_infidelity", "elementary_state_infidelity"});
    add_sweep_metadata(table, theta, f, windings, branch, grid_points, bounds);
    std::ostringstream psi_text;
    psi_text.precision(17);
    psi_text << '(' << psi.up().real() << '+' << psi.up().imag() << "i," << psi.down().real() << '+'
             << psi.down().imag() << "i)";
    table.add_metadata("psi", psi_text.str());
    for (auto &row : rows) {
        table.add_row(std::move(row));
    }
    return table;
}

SweepTable time_sweep(int n, std::span<const double> c_grid) {
    SweepTable table("time_sweep", {"c", "c1_star", "L_min"});
    table.add_metadata("n", std::to_string(n));
    table.add_metadata("grid_points", std::to_string(c_grid.size()));
    for (double c : c_grid) {
        MinOperationTime best = min_operation_time(c, n);
        table.add_row({c, best.c1_star, best.length});
    }
    return table;
}

ScalingFit scaling_exponent(std::span<const Pulse> pulses, const Su2Matrix &ideal, double f_min, double f_max,
                            int num_points) {
    if (!(f_min > 0.0) || !(f_min < f_max) || !(f_max <= 0.3)) {
        throw std::invalid_argument("scaling fit needs 0 < f_min < f_max <= 0.3");
    }
    if (num_points < 6) {
        throw std::invalid_argument("scaling fit needs at least 6 points");
    }
    std::vector<double> xs, ys;
    double ratio = std::log(f_max / f_min);
    for (int i = 0; i < num_points; i++) {
        double f = f_min * std::exp(ratio * i / (num_points - 1));
        double value = gate_infidelity(ideal, sequence_unitary(pulses, OreMagnitude(f)));
        if (value < kInfidelityFloor) {
            std::ostringstream msg;
            msg.precision(6);
            msg << "gate infidelity " << value << " at f = " << f << " is below the fitting floor "
                << kInfidelityFloor << "; shrink the f range";
            throw FloorReached(msg.str());
        }
        xs.push_back(std::log(f));
        ys.push_back(std::log(value));
    }

    double n = static_cast<double>(num_points);
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < xs.size(); i++) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    double slope = sxy / sxx;
    double intercept = my - slope * mx;
    double sq = 0.0;
    for (size_t i = 0; i < xs.size(); i++) {
        double r = ys[i] - (intercept + slope * xs[i]);
        sq += r * r;
    }
    return ScalingFit{slope, intercept, std::sqrt(sq / n), {f_min, f_max}, num_points};
}

ScalingFit scaling_exponent(const CompositeSequence &seq, double f_min, double f_max, int num_points) {
    return scaling_exponent(seq.pulses, target_unitary(seq.target), f_min, f_max, num_points);
}

ScalingFit scaling_exponent(const FamilySequence &seq, double f_min, double f_max, int num_points) {
    Su2Matrix ideal = target_unitary(seq.target);
    if (seq.implemented_sign < 0) {
        ideal = -ideal;
    }
    return scaling_exponent(seq.pulses, ideal, f_min, f_max, num_points);
}

ScalingFit scaling_exponent(const Pulse &pulse, double f_min, double f_max, int num_points) {
    return scaling_exponent(std::span<const Pulse>(&pulse, 1), pulse_unitary(pulse), f_min, f_max, num_points);
}

double first_order_derivative_norm(std::span<const Pulse> pulses, double step) {
    if (!(step > 0.0 && step < 1.0)) {
        throw std::invalid_argument("finite-difference step must lie in (0, 1)");
    }
    Mat2 plus = sequence_unitary(pulses, OreMagnitude(step)).matrix();
    Mat2 minus = sequence_unitary(pulses, OreMagnitude(-step)).matrix();
    Mat2 derivative = Complex(0.5 / step) * (plus - minus);

    // Remove the component along i * U0 (Frobenius inner product, |U0|_F^2 = 2).
    Mat2 phase_direction = Complex(0.0, 1.0) * sequence_unitary(pulses).matrix();
    double overlap = (phase_direction.dagger() * derivative).trace().real() / 2.0;
    derivative -= Complex(overlap) * phase_direction;
    return derivative.max_abs();
}

}  // namespace pulseforge
