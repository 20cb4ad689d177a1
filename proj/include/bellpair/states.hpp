// states.hpp — state functionals on the total algebra: pure vector states,
// density-matrix states, expectation values, generator expectations w_j in
// closed form, and the named state families used across the library.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellpair/algebra.hpp"
#include "bellpair/matrix.hpp"
#include "bellpair/rng.hpp"
#include "bellpair/spectral.hpp"

namespace bellpair {

inline constexpr double kStateNormTolerance = 1e-12;
inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kImagResidueTolerance = 1e-12;

// Unit vector z_1 e_1 + ... + z_4 e_4; the functional A ↦ ⟨Ψ, AΨ⟩.
class PureState {
public:
    explicit PureState(const Vector4& amplitudes) : z_(amplitudes) {
        const double n = norm(z_);
        if (std::abs(n - 1.0) > kStateNormTolerance)
            throw std::invalid_argument("PureState: unit norm violated, |Ψ| = " + std::to_string(n));
    }

    PureState(Complex z1, Complex z2, Complex z3, Complex z4)
        : PureState(Vector4{z1, z2, z3, z4}) {}

    static PureState basis(int k) {
        if (k < 1 || k > 4) throw std::out_of_range("PureState::basis: index must be in 1..4");
        Vector4 v{};
        v[static_cast<std::size_t>(k - 1)] = 1.0;
        return PureState(v);
    }

    const Vector4& amplitudes() const { return z_; }
    Complex z(int k) const { return z_[static_cast<std::size_t>(k - 1)]; }

private:
    Vector4 z_;
};

// Normalizes before constructing; rejects (near-)zero vectors.
inline PureState normalized_state(Complex z1, Complex z2, Complex z3, Complex z4) {
    Vector4 v{z1, z2, z3, z4};
    const double n = norm(v);
    if (n < 1e-14) throw std::invalid_argument("normalized_state: zero vector");
    for (auto& c : v) c /= n;
    return PureState(v);
}

// Density matrix ρ; the functional A ↦ tr(ρA).
class MixedState {
public:
    explicit MixedState(const Matrix4& rho) : rho_(rho) {
        if (hermiticity_violation(rho) > kDensityTolerance)
            throw std::invalid_argument("MixedState: hermiticity violated");
        if (std::abs(rho.trace() - Complex(1.0)) > kDensityTolerance)
            throw std::invalid_argument("MixedState: unit trace violated");
        const auto ev = herm4_eigenvalues(rho);
        if (ev[3] < -kDensityTolerance)
            throw std::invalid_argument("MixedState: positive semidefiniteness violated, min eigenvalue " +
                                        std::to_string(ev[3]));
    }

    const Matrix4& rho() const { return rho_; }

    static MixedState maximally_mixed() { return MixedState(Matrix4::identity() * 0.25); }

    static MixedState from_pure(const PureState& psi) {
        Matrix4 rho;
        const auto& z = psi.amplitudes();
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) rho(i, j) = z[i] * std::conj(z[j]);
        return MixedState(rho);
    }

private:
    Matrix4 rho_;
};

inline Complex expectation(const PureState& psi, const Matrix4& a) {
    return inner(psi.amplitudes(), a * psi.amplitudes());
}

inline Complex expectation(const MixedState& rho, const Matrix4& a) {
    return (rho.rho() * a).trace();
}

// Expectation of a hermitian observable; asserts the imaginary residue away.
template <typename State>
double real_expectation(const State& state, const Matrix4& a) {
    const Complex v = expectation(state, a);
    if (std::abs(v.imag()) > kImagResidueTolerance)
        throw std::logic_error("real_expectation: imaginary residue " + std::to_string(v.imag()));
    return v.real();
}

struct WVector {
    std::array<double, 15> w{};
    double operator[](int j) const { return w[static_cast<std::size_t>(j - 1)]; }
};

// The fifteen generator expectations w_j = ⟨Ψ, λ_jΨ⟩ in closed form.
inline WVector w_vector(const PureState& psi) {
    const Complex z1 = psi.z(1), z2 = psi.z(2), z3 = psi.z(3), z4 = psi.z(4);
    const double n1 = std::norm(z1), n2 = std::norm(z2), n3 = std::norm(z3), n4 = std::norm(z4);
    const Complex c12 = std::conj(z1) * z2, c34 = std::conj(z3) * z4;
    const Complex c13 = std::conj(z1) * z3, c24 = std::conj(z2) * z4;
    const Complex c23 = std::conj(z2) * z3, c14 = std::conj(z1) * z4;
    WVector out;
    out.w = {
        2.0 * (c12 + c34).real(),  // 1 ⊗ σ1
        2.0 * (c12 + c34).imag(),  // 1 ⊗ σ2
        n1 - n2 + n3 - n4,         // 1 ⊗ σ3
        2.0 * (c13 + c24).real(),  // σ1 ⊗ 1
        2.0 * (c13 + c24).imag(),  // σ2 ⊗ 1
        n1 + n2 - n3 - n4,         // σ3 ⊗ 1
        2.0 * (c23 + c14).real(),  // σ1 ⊗ σ1
        2.0 * (c14 - c23).imag(),  // σ1 ⊗ σ2
        2.0 * (c13 - c24).real(),  // σ1 ⊗ σ3
        2.0 * (c23 + c14).imag(),  // σ2 ⊗ σ1
        2.0 * (c23 - c14).real(),  // σ2 ⊗ σ2
        2.0 * (c13 - c24).imag(),  // σ2 ⊗ σ3
        2.0 * (c12 - c34).real(),  // σ3 ⊗ σ1
        2.0 * (c12 - c34).imag(),  // σ3 ⊗ σ2
        n1 - n2 - n3 + n4,         // σ3 ⊗ σ3
    };
    return out;
}

// √((1-d)/2) e_2 + √((1+d)/2) e_3 with d = √(1-c²); concurrence equals c.
inline PureState phi_state(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("phi_state: c must be in [0,1]");
    const double d = std::sqrt(1.0 - c * c);
    return PureState(0.0, std::sqrt((1.0 - d) / 2.0), std::sqrt((1.0 + d) / 2.0), 0.0);
}

// A e_1 + B e^{iφ} e_2 + B e^{iθ} e_3 − A e^{i(φ+θ)} e_4 with A = a/√2,
// B = √((1-a²)/2); maximally correlated for the canonical pair.
inline PureState maxent_state(double a, double phi, double theta) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("maxent_state: a must be in [0,1]");
    const double two_pi = 2.0 * std::numbers::pi;
    if (!(phi >= 0.0 && phi <= two_pi) || !(theta >= 0.0 && theta <= two_pi))
        throw std::invalid_argument("maxent_state: angles must be in [0,2π]");
    const double amp = a / std::sqrt(2.0);
    const double b = std::sqrt((1.0 - a * a) / 2.0);
    const Complex ei_phi = std::polar(1.0, phi);
    const Complex ei_theta = std::polar(1.0, theta);
    return PureState(amp, b * ei_phi, b * ei_theta, -amp * ei_phi * ei_theta);
}

// Three-parameter family of states with vanishing restrictions for the
// worked non-canonical pair (see pair.hpp): maximally correlated there.
inline PureState abmax_state(double r, double phi, double theta) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("abmax_state: r must be in [0,1]");
    if (!(phi >= 0.0 && phi <= std::numbers::pi / 2.0))
        throw std::invalid_argument("abmax_state: phi must be in [0,π/2]");
    if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi))
        throw std::invalid_argument("abmax_state: theta must be in [0,2π]");
    const double rc = r * std::cos(phi) / std::sqrt(2.0);
    const Complex ei_theta = std::polar(1.0, theta);
    return PureState(rc, -rc * ei_theta * ei_theta, r * std::sin(phi) * ei_theta,
                     Complex(0.0, 1.0) * std::sqrt(1.0 - r * r) * ei_theta);
}

// Haar-distributed pure state: four complex gaussians, normalized.
inline PureState random_pure(Rng& rng) {
    while (true) {
        Vector4 v;
        for (auto& c : v) c = rng.complex_gaussian();
        const double n = norm(v);
        if (n < 1e-8) continue;
        for (auto& c : v) c /= n;
        return PureState(v);
    }
}

inline PureState random_pure(std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(rng);
}

}  // namespace bellpair
