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

#include "pulseforge/solver.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pulseforge/errors.h"

namespace pulseforge {

namespace {

void require_cosine(double c, const char *name) {
    if (!std::isfinite(c) || !(std::abs(c) < 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie strictly inside (-1, 1)");
    }
}

std::string describe_bounds(double c1, double c, Parity parity, const C1Bounds &b) {
    std::ostringstream out;
    out.precision(17);
    out << "c1 = " << c1 << " lies outside the admissible interval [" << b.lower << ", " << b.upper
        << "] for c = " << c << ", parity " << static_cast<int>(parity)
        << " (cos(phi2 - phi1) would fall below -1)";
    return out.str();
}

}  // namespace

const char *branch_symbol(Branch b) { return b == Branch::kPlus ? "+" : "-"; }

Branch parse_branch(std::string_view text) {
    if (text == "+" || text == "plus") {
        return Branch::kPlus;
    }
    if (text == "-" || text == "minus") {
        return Branch::kMinus;
    }
    throw std::invalid_argument("branch must be '+' or '-', got '" + std::string(text) + "'");
}

TargetRotation::TargetRotation(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!std::isfinite(theta) || !(theta > 0.0 && theta < kTwoPi)) {
        throw std::invalid_argument("target angle must satisfy 0 < theta < 2pi");
    }
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("target phase must be finite");
    }
}

double TargetRotation::s() const { return std::sin(0.5 * theta_); }

double TargetRotation::c() const { return std::cos(0.5 * theta_); }

WindingNumbers::WindingNumbers(int n1, int n2, int n3) : n_{n1, n2, n3} {
    if (n1 < 0 || n2 < 0 || n3 < 0) {
        throw std::invalid_argument("winding numbers must be non-negative");
    }
}

C1Bounds c1_bounds(double c, Parity parity) {
    require_cosine(c, "c");
    double cn = parity_sign(parity) * c;
    double root = std::sqrt(3.0 + c * c);
    double lower_radicand = std::max(0.0, 3.0 - c * c + cn * root);
    double upper_radicand = std::max(0.0, 3.0 - c * c - cn * root);
    return C1Bounds{-0.5 * std::sqrt(lower_radicand), 0.5 * std::sqrt(upper_radicand)};
}

SecondarySolution solve_secondary(double c1, double c, Parity parity) {
    require_cosine(c, "c");
    require_cosine(c1, "c1");
    C1Bounds bounds = c1_bounds(c, parity);
    if (c1 < bounds.lower - kAlphaClampTolerance || c1 > bounds.upper + kAlphaClampTolerance) {
        throw OutOfBounds(describe_bounds(c1, c, parity, bounds));
    }

    double cn = parity_sign(parity) * c;
    double s1_sq = 1.0 - c1 * c1;
    double s1 = std::sqrt(s1_sq);
    double radial = std::sqrt(1.0 - c * c * s1_sq);
    double c2 = -cn * s1_sq - c1 * radial;
    double s2 = s1 * (radial - cn * c1);
    // (radial + cn c1)(radial - cn c1) = 1 - c^2, so the textbook quotient
    // collapses to 1 - s^2 / (2 s2^2) without the cancellation near |c1| -> 1.
    double s_sq = (1.0 - c) * (1.0 + c);
    double alpha = 1.0 - s_sq / (2.0 * s2 * s2);

    // On the edges alpha is -1 by definition; snap rather than trust the
    // 1/s1^2 amplified rounding there.
    bool on_edge = std::abs(c1 - bounds.lower) <= kAlphaClampTolerance ||
                   std::abs(c1 - bounds.upper) <= kAlphaClampTolerance;
    if (on_edge || std::abs(alpha + 1.0) <= kAlphaClampTolerance) {
        alpha = -1.0;
    }
    if (alpha < -1.0) {
        throw OutOfBounds(describe_bounds(c1, c, parity, bounds));
    }
    return SecondarySolution{c2, s2, alpha};
}

PhaseSolution solve_phases(double c1, double c, Parity parity, Branch branch) {
    SecondarySolution sec = solve_secondary(c1, c, parity);
    double s1 = std::sqrt(1.0 - c1 * c1);
    double s = std::sqrt(1.0 - c * c);
    double l = std::atan2(branch_sign(branch) * std::sqrt(std::max(0.0, 1.0 - sec.alpha * sec.alpha)), sec.alpha);

    double sign = parity_sign(parity);
    double cos_k = sign / s *
                   (2.0 * s1 * c1 * sec.c2 * std::cos(l) + c1 * c1 * sec.s2 - s1 * s1 * sec.s2 * std::cos(2.0 * l));
    double sin_k = sign / s * (2.0 * s1 * c1 * sec.c2 * std::sin(l) - s1 * s1 * sec.s2 * std::sin(2.0 * l));
    return PhaseSolution{std::atan2(sin_k, cos_k), l};
}

SolutionPoint solve_point(double c1, double c, Parity parity, Branch branch) {
    SecondarySolution sec = solve_secondary(c1, c, parity);
    PhaseSolution ph = solve_phases(c1, c, parity, branch);
    return SolutionPoint{
        .c1 = c1,
        .s1 = std::sqrt(1.0 - c1 * c1),
        .c2 = sec.c2,
        .s2 = sec.s2,
        .alpha = sec.alpha,
        .l = ph.l,
        .k = ph.k,
        .parity = parity,
        .branch = branch,
    };
}

CompositeSequence build_sequence(const TargetRotation &target, double c1, WindingNumbers windings, Branch branch) {
    SolutionPoint point = solve_point(c1, target.c(), windings.parity(), branch);

    double theta1_p = 2.0 * std::acos(point.c1);
    double theta2_p = 2.0 * std::acos(point.c2);
    double phi1 = target.phi() + (point.k - point.l);
    double phi2 = target.phi() + point.k;

    return CompositeSequence{
        .pulses =
            {
                Pulse(theta1_p + kTwoPi * windings.n1(), phi1),
                Pulse(theta2_p + kTwoPi * windings.n2(), phi2),
                Pulse(theta1_p + kTwoPi * windings.n3(), phi1),
            },
        .windings = windings,
        .target = target,
        .solution = point,
    };
}

Su2Matrix target_unitary(const TargetRotation &target) {
    return pulse_unitary(Pulse(target.theta(), target.phi()));
}

double robustness_residual(std::span<const Pulse, 3> pulses) {
    Su2Matrix u1 = pulse_unitary(pulses[0]);
    Su2Matrix u2 = pulse_unitary(pulses[1]);
    Su2Matrix u3 = pulse_unitary(pulses[2]);
    Mat2 lhs = Complex(std::sin(0.5 * pulses[1].theta())) * Mat2::identity();
    lhs += Complex(std::sin(0.5 * pulses[2].theta())) * (u3 * u2).matrix();
    lhs += Complex(std::sin(0.5 * pulses[0].theta())) * (u2.dagger() * u1.dagger()).matrix();
    return lhs.max_abs();
}

double scalar_robustness_residual(const SolutionPoint &p) {
    return std::abs(p.s2 + 2.0 * p.s1 * (p.c2 * p.c1 - p.alpha * p.s2 * p.s1));
}

double diagonal_target_residual(const SolutionPoint &p, double c) {
    return std::abs(p.c2 * (p.c1 * p.c1 - p.s1 * p.s1) - 2.0 * p.alpha * p.c1 * p.s1 * p.s2 -
                    parity_sign(p.parity) * c);
}

PrincipalAngle principal_decomposition(double theta) {
    if (!std::isfinite(theta) || !(theta > 0.0)) {
        throw std::invalid_argument("flip angle must be finite and strictly positive");
    }
    int winding = static_cast<int>(std::ceil(theta / kTwoPi)) - 1;
    winding = std::max(winding, 0);
    return PrincipalAngle{theta - kTwoPi * winding, winding};
}

}  // namespace pulseforge
