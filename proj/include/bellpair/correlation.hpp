// correlation.hpp — correlation matrices q_ij = ω(A_iB_j) − ω(A_i)ω(B_j),
// total correlation as the largest singular value, concurrence, and the
// sampling lower bound for the supremum.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "bellpair/matrix.hpp"
#include "bellpair/pair.hpp"
#include "bellpair/rng.hpp"
#include "bellpair/spectral.hpp"
#include "bellpair/states.hpp"

namespace bellpair {

using CorrelationMatrix = Mat3;

namespace detail {

template <typename State>
Mat3 correlation_matrix_unchecked(const State& state, const BellPair& pair) {
    Vec3 r{}, s{};
    for (std::size_t i = 0; i < 3; ++i) {
        r[i] = real_expectation(state, pair.left[i]);
        s[i] = real_expectation(state, pair.right[i]);
    }
    Mat3 q;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            q(i, j) = real_expectation(state, pair.left[i] * pair.right[j]) - r[i] * s[j];
    return q;
}

inline void require_valid(const BellPair& pair) {
    if (!validate(pair).pass) throw std::invalid_argument("invalid Bell pair");
}

}  // namespace detail

template <typename State>
CorrelationMatrix correlation_matrix(const State& state, const BellPair& pair) {
    detail::require_valid(pair);
    return detail::correlation_matrix_unchecked(state, pair);
}

// Largest singular value: square root of the top eigenvalue of QᵀQ.
inline double spectral_norm(const CorrelationMatrix& q) {
    const auto ev = sym3_eigenvalues(q.transpose() * q);
    return std::sqrt(std::max(0.0, ev[0]));
}

// sup over unit a, b of |ω(AB) − ω(A)ω(B)| with A = Σ a_iA_i, B = Σ b_jB_j.
// The identity with ‖Q‖ holds for pure states; density matrices are refused.
inline double total_correlation(const PureState& state, const BellPair& pair) {
    return spectral_norm(correlation_matrix(state, pair));
}

inline double total_correlation(const MixedState&, const BellPair&) {
    throw std::invalid_argument("total_correlation: defined for pure states only");
}

// Wootters concurrence of a pure state, computed as the total correlation
// for the canonical pair.
inline double concurrence(const PureState& state) {
    return total_correlation(state, canonical_pair());
}

// Independent closed-form route: 2|z_1z_4 − z_2z_3|.
inline double concurrence_closed_form(const PureState& state) {
    return 2.0 * std::abs(state.z(1) * state.z(4) - state.z(2) * state.z(3));
}

// |ω(AB) − ω(A)ω(B)| for one concrete observable pair, evaluated through the
// state functional (not through Q).
inline double correlation_value(const PureState& state, const BellPair& pair, const Vec3& a,
                                const Vec3& b) {
    Matrix4 obs_a = a[0] * pair.left[0];
    obs_a += a[1] * pair.left[1];
    obs_a += a[2] * pair.left[2];
    Matrix4 obs_b = b[0] * pair.right[0];
    obs_b += b[1] * pair.right[1];
    obs_b += b[2] * pair.right[2];
    const double joint = real_expectation(state, obs_a * obs_b);
    return std::abs(joint - real_expectation(state, obs_a) * real_expectation(state, obs_b));
}

namespace detail {

inline Vec3 random_unit_vec3(Rng& rng) {
    while (true) {
        Vec3 v = {rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const double n = norm(v);
        if (n < 1e-8) continue;
        for (auto& c : v) c /= n;
        return v;
    }
}

}  // namespace detail

// Maximum of correlation_value over `samples` random unit-vector pairs: a
// sampling lower bound for the supremum that never exceeds ‖Q‖.
inline double brute_force_correlation(const PureState& state, const BellPair& pair, int samples,
                                      std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("brute_force_correlation: samples must be >= 1");
    detail::require_valid(pair);
    Rng rng(seed);
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const Vec3 a = detail::random_unit_vec3(rng);
        const Vec3 b = detail::random_unit_vec3(rng);
        best = std::max(best, correlation_value(state, pair, a, b));
    }
    return best;
}

// The argmax observable directions: top singular vector pair of Q.
inline std::pair<Vec3, Vec3> top_singular_pair(const CorrelationMatrix& q) {
    const Vec3 b = sym3_top_eigenvector(q.transpose() * q);
    Vec3 a = q * b;
    const double n = norm(a);
    if (n < 1e-300) return {Vec3{1.0, 0.0, 0.0}, b};
    for (auto& c : a) c /= n;
    return {a, b};
}

}  // namespace bellpair
