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

#ifndef PULSEFORGE_SU2_H
#define PULSEFORGE_SU2_H

#include <array>
#include <complex>
#include <numbers>
#include <span>

namespace pulseforge {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Max-abs entry deviation allowed for unitarity and unit determinant.
inline constexpr double kUnitaryTolerance = 1e-12;

/// Reduces an angle to [0, 2pi).
double reduce_angle(double radians);

/// Signed difference a - b wrapped into (-pi, pi].
double wrapped_difference(double a, double b);

/// Dense complex 2x2 matrix, row-major. No invariants; used for
/// derivative terms, residuals and anything else that is not in SU(2).
struct Mat2 {
    std::array<Complex, 4> e{};

    static Mat2 identity();
    static Mat2 zero();

    Complex &operator()(int row, int col) { return e[2 * row + col]; }
    const Complex &operator()(int row, int col) const { return e[2 * row + col]; }

    Mat2 dagger() const;
    Complex trace() const;
    Complex det() const;
    /// Largest entry modulus.
    double max_abs() const;

    Mat2 &operator+=(const Mat2 &other);
    Mat2 &operator-=(const Mat2 &other);
    Mat2 &operator*=(Complex scale);
};

Mat2 operator+(Mat2 lhs, const Mat2 &rhs);
Mat2 operator-(Mat2 lhs, const Mat2 &rhs);
Mat2 operator*(const Mat2 &lhs, const Mat2 &rhs);
Mat2 operator*(Complex scale, Mat2 m);
Mat2 operator-(Mat2 m);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Max-abs entry of lhs - rhs. Plain comparison, no phase freedom.
double max_abs_diff(const Mat2 &lhs, const Mat2 &rhs);

/// Checks M^dagger M = I and det M = 1, both to `tol` in max-abs.
bool is_special_unitary(const Mat2 &m, double tol = kUnitaryTolerance);

/// A 2x2 unitary with determinant 1.
///
/// Construction from a raw matrix validates both properties to
/// kUnitaryTolerance and throws std::invalid_argument otherwise. Products,
/// adjoints and negation stay in the group and skip revalidation.
class Su2Matrix {
  public:
    Su2Matrix() : m_(Mat2::identity()) {}
    explicit Su2Matrix(const Mat2 &m);

    static Su2Matrix identity() { return Su2Matrix(); }

    const Mat2 &matrix() const { return m_; }
    const Complex &operator()(int row, int col) const { return m_(row, col); }

    Su2Matrix dagger() const { return Su2Matrix(Trusted{}, m_.dagger()); }
    Su2Matrix operator-() const { return Su2Matrix(Trusted{}, -m_); }
    friend Su2Matrix operator*(const Su2Matrix &lhs, const Su2Matrix &rhs) {
        return Su2Matrix(Trusted{}, lhs.m_ * rhs.m_);
    }

    /// Coefficients (a0, bx, by, bz) of m = a0 I - i (bx sx + by sy + bz sz).
    std::array<double, 4> pauli_components() const;

  private:
    struct Trusted {};
    Su2Matrix(Trusted, const Mat2 &m) : m_(m) {}
    friend Su2Matrix rotation_unitary(double angle, double nx, double ny, double nz);

    Mat2 m_;
};

/// exp(-i angle (n . sigma) / 2) for a unit axis n. The axis is
/// renormalized before use.
Su2Matrix rotation_unitary(double angle, double nx, double ny, double nz);

/// One elementary rotation: flip angle theta > 0 about (cos phi, sin phi, 0).
class Pulse {
  public:
    /// Throws std::invalid_argument unless theta > 0 and both are finite.
    Pulse(double theta, double phi);

    double theta() const { return theta_; }
    /// Azimuth in [0, 2pi).
    double phi() const { return phi_; }

    friend bool operator==(const Pulse &, const Pulse &) = default;

  private:
    double theta_;
    double phi_;
};

/// Dimensionless off-resonance error fraction f, |f| < 1.
class OreMagnitude {
  public:
    constexpr OreMagnitude() = default;
    /// Throws std::invalid_argument for |f| >= 1 or non-finite f.
    explicit OreMagnitude(double f);

    double value() const { return f_; }

  private:
    double f_ = 0.0;
};

/// Normalized single-qubit pure state.
class QubitState {
  public:
    /// Throws std::invalid_argument unless |up|^2 + |down|^2 = 1 within 1e-12.
    QubitState(Complex up, Complex down);

    /// Rescales (up, down) to unit norm; throws on the zero vector.
    static QubitState normalized(Complex up, Complex down);
    /// |0>, the +1 eigenvector of sigma_z.
    static QubitState ground() { return QubitState(1.0, 0.0); }

    const Complex &up() const { return up_; }
    const Complex &down() const { return down_; }

  private:
    Complex up_;
    Complex down_;
};

/// U^(f)(theta, phi) = exp(-i theta (cos phi sx + sin phi sy + f sz) / 2),
/// evaluated in closed form as a rotation by theta sqrt(1 + f^2).
Su2Matrix pulse_unitary(const Pulse &pulse, OreMagnitude f = OreMagnitude());

/// d/df U^(f)(theta, phi) at f = 0, which is -i sin(theta/2) sz.
Mat2 first_order_ore_term(const Pulse &pulse);

/// Product U_k ... U_1 with the first pulse applied first.
/// Throws std::invalid_argument on an empty sequence.
Su2Matrix sequence_unitary(std::span<const Pulse> pulses, OreMagnitude f = OreMagnitude());

/// 1 - |tr(U^dagger V)| / 2 for unitary U, V.
///
/// Evaluated through the SU(2) parametrization of U^dagger V so small
/// infidelities keep their relative precision instead of cancelling
/// against 1.
double gate_infidelity(const Mat2 &u, const Mat2 &v);
inline double gate_infidelity(const Su2Matrix &u, const Su2Matrix &v) {
    return gate_infidelity(u.matrix(), v.matrix());
}

/// 1 - |<psi| U^dagger V |psi>|.
double state_infidelity(const Mat2 &u, const Mat2 &v, const QubitState &psi);
inline double state_infidelity(const Su2Matrix &u, const Su2Matrix &v, const QubitState &psi) {
    return state_infidelity(u.matrix(), v.matrix(), psi);
}

/// min over chi of max-abs entry of U - e^{i chi} V.
///
/// Solved exactly: the objective is the upper envelope of four
/// sinusoids in chi, so its minimum sits either at the minimum of one of
/// them or where two of them cross.
double distance_up_to_phase(const Mat2 &u, const Mat2 &v);
inline double distance_up_to_phase(const Su2Matrix &u, const Su2Matrix &v) {
    return distance_up_to_phase(u.matrix(), v.matrix());
}

}  // namespace pulseforge

#endif  // PULSEFORGE_SU2_H
