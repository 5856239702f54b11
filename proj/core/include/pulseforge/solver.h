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

#ifndef PULSEFORGE_SOLVER_H
#define PULSEFORGE_SOLVER_H

#include <array>
#include <span>
#include <string_view>

#include "pulseforge/su2.h"

namespace pulseforge {

/// Sign of sin(l), l = phi2 - phi1. Both signs give valid sequences.
enum class Branch { kPlus, kMinus };

/// Parity of the total winding n = n1 + n2 + n3.
enum class Parity { kEven = 0, kOdd = 1 };

inline Parity parity_of(int n) { return (n % 2 == 0) ? Parity::kEven : Parity::kOdd; }
/// (-1)^n.
inline double parity_sign(Parity p) { return p == Parity::kEven ? 1.0 : -1.0; }
inline double branch_sign(Branch b) { return b == Branch::kPlus ? 1.0 : -1.0; }

const char *branch_symbol(Branch b);
/// Accepts "+", "-", "plus", "minus". Throws std::invalid_argument otherwise.
Branch parse_branch(std::string_view text);

/// Target rotation U(theta, phi) with 0 < theta < 2pi, so sin(theta/2) > 0.
class TargetRotation {
  public:
    TargetRotation(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    double s() const;
    double c() const;

  private:
    double theta_;
    double phi_;
};

/// Windings n_i >= 0 adding 2 pi n_i to the principal flip angles.
class WindingNumbers {
  public:
    WindingNumbers() = default;
    WindingNumbers(int n1, int n2, int n3);

    int n1() const { return n_[0]; }
    int n2() const { return n_[1]; }
    int n3() const { return n_[2]; }
    int operator[](size_t i) const { return n_[i]; }
    int total() const { return n_[0] + n_[1] + n_[2]; }
    Parity parity() const { return parity_of(total()); }

    friend bool operator==(const WindingNumbers &, const WindingNumbers &) = default;

  private:
    std::array<int, 3> n_{0, 0, 0};
};

/// Admissible interval for c1 = cos(theta1_p / 2) at fixed (c, parity).
struct C1Bounds {
    double lower;
    double upper;

    bool contains(double c1) const { return lower <= c1 && c1 <= upper; }
};

struct SecondarySolution {
    double c2;
    double s2;
    /// cos(phi2 - phi1).
    double alpha;
};

struct PhaseSolution {
    /// phi2 - phi.
    double k;
    /// phi2 - phi1.
    double l;
};

/// A point on the solution manifold for one target angle.
struct SolutionPoint {
    double c1;
    double s1;
    double c2;
    double s2;
    double alpha;
    double l;
    double k;
    Parity parity;
    Branch branch;
};

/// Time-symmetric three-pulse sequence: theta3 = theta1 + 2 (n3 - n1) pi and
/// phi3 = phi1. Its errorless product equals the target exactly.
struct CompositeSequence {
    std::array<Pulse, 3> pulses;
    WindingNumbers windings;
    TargetRotation target;
    SolutionPoint solution;
};

/// Endpoint guard: alpha within this distance of -1 is snapped to -1.
inline constexpr double kAlphaClampTolerance = 1e-12;

/// [c1_lower, c1_upper] for |c| < 1; alpha = -1 at both ends.
C1Bounds c1_bounds(double c, Parity parity);

/// Closed-form (c2, s2, alpha) from the robustness and diagonal target
/// equations. Throws OutOfBounds when c1 leaves c1_bounds(c, parity).
SecondarySolution solve_secondary(double c1, double c, Parity parity);

/// (k, l) from the off-diagonal target equation, l = atan2(+-sqrt(1 - alpha^2), alpha).
PhaseSolution solve_phases(double c1, double c, Parity parity, Branch branch);

/// Full manifold coordinates for (c1, c, parity, branch).
SolutionPoint solve_point(double c1, double c, Parity parity, Branch branch);

/// Builds the robust sequence for `target` at free parameter c1.
CompositeSequence build_sequence(const TargetRotation &target, double c1,
                                 WindingNumbers windings = WindingNumbers(),
                                 Branch branch = Branch::kPlus);

/// Errorless U(theta, phi) of the target.
Su2Matrix target_unitary(const TargetRotation &target);

/// Max-abs entry of sin(theta2/2) I + sin(theta3/2) U3 U2 + sin(theta1/2) U2^dagger U1^dagger,
/// which vanishes iff the first-order off-resonance term of the product cancels.
double robustness_residual(std::span<const Pulse, 3> pulses);
inline double robustness_residual(const CompositeSequence &seq) { return robustness_residual(seq.pulses); }

/// |s2 + 2 s1 (c2 c1 - alpha s2 s1)|, the identity part of s2 I + s1 U1U2 + s1 (U1U2)^dagger.
double scalar_robustness_residual(const SolutionPoint &point);

/// |c2 (c1^2 - s1^2) - 2 alpha c1 s1 s2 - (-1)^n c|.
double diagonal_target_residual(const SolutionPoint &point, double c);

/// Splits a flip angle into principal part in (0, 2pi] plus 2 pi * winding.
struct PrincipalAngle {
    double principal;
    int winding;
};
PrincipalAngle principal_decomposition(double theta);

struct OracleSolution {
    double c2;
    double alpha;
    int iterations;
};

/// Independent check of solve_secondary: damped Newton on the robustness and
/// diagonal target equations in (theta2/2, alpha), started from a fixed 5x3 grid.
/// Throws NoConvergence if no start reaches an admissible root.
OracleSolution oracle_solve(double c1, double c, Parity parity);

}  // namespace pulseforge

#endif  // PULSEFORGE_SOLVER_H
