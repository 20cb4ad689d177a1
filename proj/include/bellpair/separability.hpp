// separability.hpp — classification of pure states by the purity of their
// restrictions (Bloch vector norms), plus solvers that construct separable
// and maximally correlated states for a given Bell pair.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellpair/correlation.hpp"
#include "bellpair/matrix.hpp"
#include "bellpair/pair.hpp"
#include "bellpair/rng.hpp"
#include "bellpair/states.hpp"

namespace bellpair {

inline constexpr double kSeparableEps = 1e-7;
inline constexpr double kMaxCorrelatedEps = 1e-7;
inline constexpr double kSolverResidual = 1e-8;

// r = (ω(A_1), ω(A_2), ω(A_3)), s = (ω(B_1), ω(B_2), ω(B_3)): the state seen
// through each side, as a one-qubit Bloch vector.
struct BlochRestriction {
    Vec3 r{};
    Vec3 s{};
};

namespace detail {

inline BlochRestriction restriction_unchecked(const PureState& state, const BellPair& pair) {
    BlochRestriction out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.r[i] = real_expectation(state, pair.left[i]);
        out.s[i] = real_expectation(state, pair.right[i]);
    }
    return out;
}

}  // namespace detail

inline BlochRestriction restriction(const PureState& state, const BellPair& pair) {
    detail::require_valid(pair);
    return detail::restriction_unchecked(state, pair);
}

enum class SeparabilityKind { separable, correlated, maximally_correlated };

inline std::string to_string(SeparabilityKind kind) {
    switch (kind) {
        case SeparabilityKind::separable: return "Separable";
        case SeparabilityKind::correlated: return "Correlated";
        case SeparabilityKind::maximally_correlated: return "MaximallyCorrelated";
    }
    return "Correlated";
}

struct Classification {
    SeparabilityKind kind;
    double total_correlation;  // always reported, whatever the kind
    double eps_sep;
    double eps_max;
};

// Separable iff both restrictions are pure (Bloch norm 1); maximally
// correlated iff both vanish (trace-state restrictions).
inline Classification classify(const PureState& state, const BellPair& pair,
                               double eps_sep = kSeparableEps, double eps_max = kMaxCorrelatedEps) {
    const auto bloch = restriction(state, pair);
    const double nr = norm(bloch.r), ns = norm(bloch.s);
    const double c = total_correlation(state, pair);
    Classification out{SeparabilityKind::correlated, c, eps_sep, eps_max};
    if (std::min(nr, ns) >= 1.0 - eps_sep)
        out.kind = SeparabilityKind::separable;
    else if (std::max(nr, ns) <= eps_max)
        out.kind = SeparabilityKind::maximally_correlated;
    return out;
}

inline Classification classify(const MixedState&, const BellPair&, double = kSeparableEps,
                               double = kMaxCorrelatedEps) {
    throw std::invalid_argument("classify: defined for pure states only");
}

struct SolverOptions {
    int restarts = 32;
    double objective_tol = 1e-16;
    double initial_step = 0.5;
    double min_step = 1e-9;
};

struct SolverResult {
    PureState state;
    double objective;
    int restarts_used;
    std::uint64_t seed;
};

namespace detail {

// Point on the unit 7-sphere from seven hyperspherical angles, read as four
// complex amplitudes, with the first amplitude's phase gauged to zero.
inline PureState state_from_angles(const std::array<double, 7>& theta) {
    std::array<double, 8> x;
    double sines = 1.0;
    for (std::size_t i = 0; i < 7; ++i) {
        x[i] = sines * std::cos(theta[i]);
        sines *= std::sin(theta[i]);
    }
    x[7] = sines;
    Vector4 z = {Complex(x[0], x[1]), Complex(x[2], x[3]), Complex(x[4], x[5]), Complex(x[6], x[7])};
    const double n = norm(z);
    for (auto& c : z) c /= n;
    if (std::abs(z[0]) > 1e-12) {
        const Complex phase = std::conj(z[0]) / std::abs(z[0]);
        for (auto& c : z) c *= phase;
    }
    return PureState(z);
}

template <typename Objective>
std::pair<std::array<double, 7>, double> compass_search(Objective&& f, std::array<double, 7> theta,
                                                        const SolverOptions& opts) {
    double value = f(theta);
    std::array<double, 7> step;
    step.fill(opts.initial_step);
    while (value > opts.objective_tol) {
        bool improved = false;
        double max_step = 0.0;
        for (std::size_t i = 0; i < 7; ++i) {
            bool moved = false;
            for (const double dir : {+1.0, -1.0}) {
                std::array<double, 7> trial = theta;
                trial[i] += dir * step[i];
                const double tv = f(trial);
                if (tv < value) {
                    theta = trial;
                    value = tv;
                    moved = true;
                    break;
                }
            }
            if (moved) {
                step[i] = std::min(step[i] * 1.6, opts.initial_step);
                improved = true;
            } else {
                step[i] *= 0.5;
            }
            max_step = std::max(max_step, step[i]);
        }
        if (!improved && max_step < opts.min_step) break;
    }
    return {theta, value};
}

template <typename Objective>
SolverResult multi_start_solve(Objective&& f, std::uint64_t seed, const SolverOptions& opts,
                               const char* who) {
    SolverResult best{PureState::basis(1), std::numeric_limits<double>::infinity(), 0, seed};
    for (int restart = 0; restart < opts.restarts; ++restart) {
        Rng rng(seed + static_cast<std::uint64_t>(restart) * 0x9e3779b97f4a7c15ull);
        std::array<double, 7> theta;
        for (auto& t : theta) t = 2.0 * std::numbers::pi * rng.uniform();
        auto [opt_theta, value] = compass_search(f, theta, opts);
        best.restarts_used = restart + 1;
        if (value < best.objective) {
            best.objective = value;
            best.state = state_from_angles(opt_theta);
        }
        if (best.objective <= opts.objective_tol) return best;
    }
    throw std::runtime_error(std::string(who) + ": no restart reached the objective tolerance (" +
                             std::to_string(opts.restarts) + " restarts)");
}

inline double sq(double x) { return x * x; }

}  // namespace detail

// Pure state whose restriction matches the prescribed unit Bloch vectors and
// whose total correlation vanishes. Minimizes the restriction mismatch plus
// the squared correlation norm; the correlation term is required because the
// mismatch alone is quartically flat in the entangling direction and cannot
// certify C ≤ 1e-8 at the 1e-16 objective tolerance.
inline SolverResult find_separable(const BellPair& pair, const Vec3& target_r, const Vec3& target_s,
                                   std::uint64_t seed, const SolverOptions& opts = {}) {
    if (std::abs(norm(target_r) - 1.0) > 1e-10 || std::abs(norm(target_s) - 1.0) > 1e-10)
        throw std::invalid_argument("find_separable: targets must be unit vectors");
    detail::require_valid(pair);
    auto objective = [&](const std::array<double, 7>& theta) {
        const PureState psi = detail::state_from_angles(theta);
        const auto bloch = detail::restriction_unchecked(psi, pair);
        double obj = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            obj += detail::sq(bloch.r[i] - target_r[i]) + detail::sq(bloch.s[i] - target_s[i]);
        const double c = spectral_norm(detail::correlation_matrix_unchecked(psi, pair));
        return obj + c * c;
    };
    return detail::multi_start_solve(objective, seed, opts, "find_separable");
}

// Pure state with vanishing restrictions: the trace-state (maximally
// correlated) case. Total correlation 1 then follows.
inline SolverResult find_maximally_correlated(const BellPair& pair, std::uint64_t seed,
                                              const SolverOptions& opts = {}) {
    detail::require_valid(pair);
    auto objective = [&](const std::array<double, 7>& theta) {
        const auto bloch = detail::restriction_unchecked(detail::state_from_angles(theta), pair);
        return dot(bloch.r, bloch.r) + dot(bloch.s, bloch.s);
    };
    SolverResult result = detail::multi_start_solve(objective, seed, opts, "find_maximally_correlated");
    const double c = spectral_norm(detail::correlation_matrix_unchecked(result.state, pair));
    if (std::abs(c - 1.0) > kSolverResidual)
        throw std::runtime_error("find_maximally_correlated: solution has total correlation " +
                                 std::to_string(c));
    return result;
}

}  // namespace bellpair
