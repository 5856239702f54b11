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

#include <array>
#include <cmath>
#include <sstream>

#include "pulseforge/errors.h"
#include "pulseforge/solver.h"

namespace pulseforge {

namespace {

constexpr int kMaxIterations = 200;

struct Residual {
    double robust;
    double diagonal;

    double norm2() const { return robust * robust + diagonal * diagonal; }
};

// Unknowns are (x, alpha) with c2 = cos x, s2 = sin x; a root is admissible
// when x lies in (0, pi), i.e. s2 > 0. The angle form keeps the Jacobian
// bounded as |c2| -> 1, where sqrt(1 - c2^2) would not be.
struct System {
    double c1;
    double s1;
    double cn;

    Residual eval(double x, double alpha) const {
        double c2 = std::cos(x);
        double s2 = std::sin(x);
        return Residual{
            s2 + 2.0 * s1 * (c2 * c1 - alpha * s2 * s1),
            c2 * (c1 * c1 - s1 * s1) - 2.0 * alpha * c1 * s1 * s2 - cn,
        };
    }

    // Rows: (robust, diagonal); columns: (d/dx, d/dalpha).
    std::array<double, 4> jacobian(double x, double alpha) const {
        double c2 = std::cos(x);
        double s2 = std::sin(x);
        return {
            c2 + 2.0 * s1 * (-s2 * c1 - alpha * c2 * s1),
            -2.0 * s1 * s1 * s2,
            -s2 * (c1 * c1 - s1 * s1) - 2.0 * alpha * c1 * s1 * c2,
            -2.0 * c1 * s1 * s2,
        };
    }
};

}  // namespace

OracleSolution oracle_solve(double c1, double c, Parity parity) {
    System sys{c1, std::sqrt(1.0 - c1 * c1), parity_sign(parity) * c};
    constexpr std::array<double, 5> kAngleStarts{0.2, 0.9, 1.6, 2.3, 3.0};
    constexpr std::array<double, 3> kAlphaStarts{-0.8, 0.0, 0.8};

    for (double x_start : kAngleStarts) {
        for (double alpha_start : kAlphaStarts) {
            double x = x_start;
            double alpha = alpha_start;
            Residual r = sys.eval(x, alpha);
            int iter = 0;
            for (; iter < kMaxIterations && r.norm2() > 1e-32; iter++) {
                auto j = sys.jacobian(x, alpha);
                double det = j[0] * j[3] - j[1] * j[2];
                if (!std::isfinite(det) || std::abs(det) < 1e-300) {
                    break;
                }
                double d_x = -(j[3] * r.robust - j[1] * r.diagonal) / det;
                double d_alpha = -(-j[2] * r.robust + j[0] * r.diagonal) / det;

                double step = 1.0;
                bool improved = false;
                for (int halving = 0; halving < 60; halving++, step *= 0.5) {
                    double x_next = x + step * d_x;
                    double alpha_next = alpha + step * d_alpha;
                    Residual r_next = sys.eval(x_next, alpha_next);
                    if (r_next.norm2() < r.norm2()) {
                        x = x_next;
                        alpha = alpha_next;
                        r = r_next;
                        improved = true;
                        break;
                    }
                }
                if (!improved) {
                    break;
                }
            }
            bool admissible = std::sqrt(r.norm2()) < 1e-13 && std::sin(x) > 0.0 && alpha >= -1.0 - 1e-9 &&
                              alpha <= 1.0 + 1e-9;
            if (admissible) {
                return OracleSolution{std::cos(x), alpha, iter};
            }
        }
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "Newton oracle found no admissible root for c1 = " << c1 << ", c = " << c << ", parity "
        << static_cast<int>(parity);
    throw NoConvergence(msg.str());
}

}  // namespace pulseforge
