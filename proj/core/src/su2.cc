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

#include "pulseforge/su2.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pulseforge {

double reduce_angle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

double wrapped_difference(double a, double b) {
    double d = std::remainder(a - b, kTwoPi);
    if (d <= -kPi) {
        d += kTwoPi;
    }
    return d;
}

Mat2 Mat2::identity() {
    Mat2 m;
    m.e = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)};
    return m;
}

Mat2 Mat2::zero() { return Mat2{}; }

Mat2 Mat2::dagger() const {
    Mat2 m;
    m.e = {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
    return m;
}

Complex Mat2::trace() const { return e[0] + e[3]; }

Complex Mat2::det() const { return e[0] * e[3] - e[1] * e[2]; }

double Mat2::max_abs() const {
    double best = 0.0;
    for (const auto &x : e) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

Mat2 &Mat2::operator+=(const Mat2 &other) {
    for (size_t k = 0; k < 4; k++) {
        e[k] += other.e[k];
    }
    return *this;
}

Mat2 &Mat2::operator-=(const Mat2 &other) {
    for (size_t k = 0; k < 4; k++) {
        e[k] -= other.e[k];
    }
    return *this;
}

Mat2 &Mat2::operator*=(Complex scale) {
    for (auto &x : e) {
        x *= scale;
    }
    return *this;
}

Mat2 operator+(Mat2 lhs, const Mat2 &rhs) { return lhs += rhs; }

Mat2 operator-(Mat2 lhs, const Mat2 &rhs) { return lhs -= rhs; }

Mat2 operator*(const Mat2 &lhs, const Mat2 &rhs) {
    Mat2 m;
    m(0, 0) = lhs(0, 0) * rhs(0, 0) + lhs(0, 1) * rhs(1, 0);
    m(0, 1) = lhs(0, 0) * rhs(0, 1) + lhs(0, 1) * rhs(1, 1);
    m(1, 0) = lhs(1, 0) * rhs(0, 0) + lhs(1, 1) * rhs(1, 0);
    m(1, 1) = lhs(1, 0) * rhs(0, 1) + lhs(1, 1) * rhs(1, 1);
    return m;
}

Mat2 operator*(Complex scale, Mat2 m) { return m *= scale; }

Mat2 operator-(Mat2 m) { return m *= -1.0; }

Mat2 pauli_x() {
    Mat2 m;
    m.e = {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)};
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m.e = {Complex(0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0)};
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m.e = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)};
    return m;
}

double max_abs_diff(const Mat2 &lhs, const Mat2 &rhs) { return (lhs - rhs).max_abs(); }

bool is_special_unitary(const Mat2 &m, double tol) {
    for (const auto &x : m.e) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            return false;
        }
    }
    return max_abs_diff(m.dagger() * m, Mat2::identity()) <= tol && std::abs(m.det() - 1.0) <= tol;
}

Su2Matrix::Su2Matrix(const Mat2 &m) : m_(m) {
    if (!is_special_unitary(m)) {
        throw std::invalid_argument("matrix is not in SU(2) within tolerance 1e-12");
    }
}

std::array<double, 4> Su2Matrix::pauli_components() const {
    const Mat2 &m = m_;
    return {
        0.5 * (m(0, 0) + m(1, 1)).real(),
        -0.5 * (m(0, 1) + m(1, 0)).imag(),
        0.5 * (m(1, 0) - m(0, 1)).real(),
        -0.5 * (m(0, 0) - m(1, 1)).imag(),
    };
}

Su2Matrix rotation_unitary(double angle, double nx, double ny, double nz) {
    double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!(norm > 0.0) || !std::isfinite(norm) || !std::isfinite(angle)) {
        throw std::invalid_argument("rotation axis must be a finite nonzero vector");
    }
    nx /= norm;
    ny /= norm;
    nz /= norm;
    double co = std::cos(0.5 * angle);
    double si = std::sin(0.5 * angle);
    Mat2 m;
    m(0, 0) = Complex(co, -si * nz);
    m(0, 1) = Complex(-si * ny, -si * nx);
    m(1, 0) = Complex(si * ny, -si * nx);
    m(1, 1) = Complex(co, si * nz);
    return Su2Matrix(Su2Matrix::Trusted{}, m);
}

Pulse::Pulse(double theta, double phi) : theta_(theta), phi_(0.0) {
    if (!std::isfinite(theta) || !(theta > 0.0)) {
        throw std::invalid_argument("pulse flip angle must be finite and strictly positive");
    }
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("pulse phase must be finite");
    }
    phi_ = reduce_angle(phi);
}

OreMagnitude::OreMagnitude(double f) : f_(f) {
    if (!std::isfinite(f) || !(std::abs(f) < 1.0)) {
        throw std::invalid_argument("off-resonance magnitude must satisfy |f| < 1");
    }
}

QubitState::QubitState(Complex up, Complex down) : up_(up), down_(down) {
    double norm2 = std::norm(up) + std::norm(down);
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("qubit state must have unit norm within 1e-12");
    }
}

QubitState QubitState::normalized(Complex up, Complex down) {
    double norm = std::sqrt(std::norm(up) + std::norm(down));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return QubitState(up / norm, down / norm);
}

Su2Matrix pulse_unitary(const Pulse &pulse, OreMagnitude f) {
    double fv = f.value();
    double scale = std::sqrt(1.0 + fv * fv);
    return rotation_unitary(pulse.theta() * scale, std::cos(pulse.phi()), std::sin(pulse.phi()), fv);
}

Mat2 first_order_ore_term(const Pulse &pulse) {
    return Complex(0.0, -std::sin(0.5 * pulse.theta())) * pauli_z();
}

Su2Matrix sequence_unitary(std::span<const Pulse> pulses, OreMagnitude f) {
    if (pulses.empty()) {
        throw std::invalid_argument("pulse sequence must not be empty");
    }
    Su2Matrix total = pulse_unitary(pulses[0], f);
    for (size_t k = 1; k < pulses.size(); k++) {
        total = pulse_unitary(pulses[k], f) * total;
    }
    return total;
}

namespace {

/// Strips the U(1) part of a 2x2 unitary so it can be read as
/// [[a, -conj(b)], [b, conj(a)]] with |a|^2 + |b|^2 = 1.
void su2_parts(const Mat2 &w, Complex &a, Complex &b) {
    Complex root = std::sqrt(w.det());
    Complex unphase = std::abs(root) > 0.0 ? 1.0 / root : Complex(1.0);
    Mat2 s = unphase * w;
    a = 0.5 * (s(0, 0) + std::conj(s(1, 1)));
    b = 0.5 * (s(1, 0) - std::conj(s(0, 1)));
}

}  // namespace

double gate_infidelity(const Mat2 &u, const Mat2 &v) {
    Complex a, b;
    su2_parts(u.dagger() * v, a, b);
    double n2 = std::norm(a) + std::norm(b);
    if (!(n2 > 0.0)) {
        return 1.0;
    }
    double n = std::sqrt(n2);
    double re = std::abs(a.real());
    // 1 - |Re a| / n, rewritten without cancellation.
    double value = (a.imag() * a.imag() + std::norm(b)) / (n * (n + re));
    return std::clamp(value, 0.0, 1.0);
}

double state_infidelity(const Mat2 &u, const Mat2 &v, const QubitState &psi) {
    Mat2 w = u.dagger() * v;
    Complex wu = w(0, 0) * psi.up() + w(0, 1) * psi.down();
    Complex wd = w(1, 0) * psi.up() + w(1, 1) * psi.down();
    Complex overlap = std::conj(psi.up()) * wu + std::conj(psi.down()) * wd;
    // Component of W psi orthogonal to psi; 1 - |z| = |r|^2 / (1 + |z|).
    Complex ru = wu - overlap * psi.up();
    Complex rd = wd - overlap * psi.down();
    double value = (std::norm(ru) + std::norm(rd)) / (1.0 + std::abs(overlap));
    return std::clamp(value, 0.0, 1.0);
}

double distance_up_to_phase(const Mat2 &u, const Mat2 &v) {
    std::array<double, 4> base{};
    std::array<Complex, 4> cross{};
    for (size_t j = 0; j < 4; j++) {
        base[j] = std::norm(u.e[j]) + std::norm(v.e[j]);
        cross[j] = std::conj(u.e[j]) * v.e[j];
    }
    auto objective = [&](double chi) {
        Complex phase = std::polar(1.0, chi);
        double worst = 0.0;
        for (size_t j = 0; j < 4; j++) {
            worst = std::max(worst, std::abs(u.e[j] - phase * v.e[j]));
        }
        return worst;
    };

    // |u_j - e^{i chi} v_j|^2 = base_j - 2 Re(cross_j e^{i chi}).
    std::vector<double> candidates{0.0};
    for (size_t j = 0; j < 4; j++) {
        if (std::abs(cross[j]) > 0.0) {
            candidates.push_back(-std::arg(cross[j]));
        }
        for (size_t k = j + 1; k < 4; k++) {
            Complex q = cross[j] - cross[k];
            double rho = std::abs(q);
            if (!(rho > 0.0)) {
                continue;
            }
            double t = (base[j] - base[k]) / (2.0 * rho);
            if (std::abs(t) > 1.0) {
                continue;
            }
            double spread = std::acos(t);
            candidates.push_back(-std::arg(q) + spread);
            candidates.push_back(-std::arg(q) - spread);
        }
    }
    double best = std::numeric_limits<double>::infinity();
    for (double chi : candidates) {
        best = std::min(best, objective(chi));
    }
    return best;
}

}  // namespace pulseforge
