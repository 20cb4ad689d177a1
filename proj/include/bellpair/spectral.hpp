// spectral.hpp — eigenvalue solvers for the small symmetric/hermitian problems:
// closed-form (trigonometric Cardano) eigenvalues of a symmetric 3x3 with a
// Jacobi fallback near discriminant zero, and cyclic Jacobi for hermitian 4x4.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bellpair/matrix.hpp"

namespace bellpair {

// |1 - r^2| below this means (nearly) repeated roots; switch to Jacobi.
inline constexpr double kCardanoDegenerate = 1e-14;

namespace detail {

inline void sort_descending(std::array<double, 3>& v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
}

// Cyclic Jacobi for a real symmetric 3x3. Optionally accumulates the
// rotations so that columns of V are the eigenvectors.
inline std::array<double, 3> jacobi_sym3(Mat3 a, Mat3* vectors = nullptr) {
    Mat3 v = Mat3::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
        if (off == 0.0) break;
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = p + 1; q < 3; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = 0.5 * std::atan2(2.0 * apq, a(p, p) - a(q, q));
                const double c = std::cos(theta), s = std::sin(theta);
                Mat3 r = Mat3::identity();
                r(p, p) = c;
                r(q, q) = c;
                r(p, q) = s;
                r(q, p) = -s;
                a = r.transpose() * a * r;
                a(p, q) = a(q, p) = 0.0;
                v = v * r;
            }
    }
    if (vectors) *vectors = v;
    return {a(0, 0), a(1, 1), a(2, 2)};
}

}  // namespace detail

// Eigenvalues of a symmetric 3x3 matrix, descending.
inline std::array<double, 3> sym3_eigenvalues(const Mat3& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    if (p1 == 0.0) {
        std::array<double, 3> ev = {a(0, 0), a(1, 1), a(2, 2)};
        detail::sort_descending(ev);
        return ev;
    }
    const double d0 = a(0, 0) - q, d1 = a(1, 1) - q, d2 = a(2, 2) - q;
    const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    double r = std::clamp(detb / 2.0, -1.0, 1.0);
    if (1.0 - r * r < kCardanoDegenerate) {
        auto ev = detail::jacobi_sym3(a);
        detail::sort_descending(ev);
        return ev;
    }
    const double phi = std::acos(r) / 3.0;
    const double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
    std::array<double, 3> ev = {q + 2.0 * p * std::cos(phi),
                                q + 2.0 * p * std::cos(phi - two_thirds_pi),
                                q + 2.0 * p * std::cos(phi + two_thirds_pi)};
    detail::sort_descending(ev);
    return ev;
}

// Unit eigenvector for the largest eigenvalue of a symmetric 3x3.
inline Vec3 sym3_top_eigenvector(const Mat3& a) {
    Mat3 v;
    auto ev = detail::jacobi_sym3(a, &v);
    std::size_t top = 0;
    if (ev[1] > ev[top]) top = 1;
    if (ev[2] > ev[top]) top = 2;
    Vec3 x = {v(0, top), v(1, top), v(2, top)};
    const double n = norm(x);
    if (n > 0.0)
        for (auto& c : x) c /= n;
    return x;
}

// Eigenvalues of a hermitian 4x4 matrix by cyclic complex Jacobi, descending.
inline std::array<double, 4> herm4_eigenvalues(Matrix4 h) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t q = p + 1; q < 4; ++q) off += std::abs(h(p, q));
        if (off < 1e-15) break;
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = p + 1; q < 4; ++q) {
                const Complex hpq = h(p, q);
                if (std::abs(hpq) == 0.0) continue;
                // phase out h(p,q), then a real rotation on the (p,q) block
                const Complex phase = hpq / std::abs(hpq);
                const double app = h(p, p).real(), aqq = h(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * std::abs(hpq), app - aqq);
                const double c = std::cos(theta), s = std::sin(theta);
                Matrix4 g = Matrix4::identity();
                g(p, p) = c;
                g(q, q) = c;
                g(p, q) = s * phase;
                g(q, p) = -s * std::conj(phase);
                h = g.adjoint() * h * g;
                h(p, q) = h(q, p) = 0.0;
            }
    }
    std::array<double, 4> ev = {h(0, 0).real(), h(1, 1).real(), h(2, 2).real(), h(3, 3).real()};
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

}  // namespace bellpair
