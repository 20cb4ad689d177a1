// algebra.hpp — concrete total algebra of the four-level system: Pauli/Kronecker
// generator table, coefficient decomposition, and span ranks.
#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "bellpair/matrix.hpp"

namespace bellpair {

// 2x2 Pauli matrix, index 1..3
inline Matrix2 pauli(int i) {
    switch (i) {
        case 1: return Matrix2{{0.0, 1.0, 1.0, 0.0}};
        case 2: return Matrix2{{0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}};
        case 3: return Matrix2{{1.0, 0.0, 0.0, -1.0}};
        default: throw std::out_of_range("pauli: index must be 1, 2 or 3");
    }
}

// (X ⊗ Y)_{2(a-1)+c, 2(b-1)+d} = X_{ab} Y_{cd}
template <std::size_t N, std::size_t M>
ComplexMatrix<N * M> kron(const ComplexMatrix<N>& x, const ComplexMatrix<M>& y) {
    ComplexMatrix<N * M> k;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t c = 0; c < M; ++c)
                for (std::size_t d = 0; d < M; ++d)
                    k(M * a + c, M * b + d) = x(a, b) * y(c, d);
    return k;
}

// Hermitian involutive generators of the total algebra:
//   λ_i     = 1 ⊗ σ_i          i = 1,2,3
//   λ_{3+i} = σ_i ⊗ 1          i = 1,2,3
//   λ_7..15 = σ_a ⊗ σ_b        (a,b) = (1,1),(1,2),...,(3,3)
struct GeneratorTable {
    Matrix4 identity;
    std::array<Matrix4, 15> lambdas;

    GeneratorTable() : identity(Matrix4::identity()) {
        const Matrix2 one = Matrix2::identity();
        for (int i = 1; i <= 3; ++i) {
            lambdas[i - 1] = kron(one, pauli(i));
            lambdas[i + 2] = kron(pauli(i), one);
        }
        int j = 6;
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) lambdas[j++] = kron(pauli(a), pauli(b));
    }
};

inline const GeneratorTable& generators() {
    static const GeneratorTable table;
    return table;
}

// λ_j, index 1..15
inline const Matrix4& lambda(int j) {
    if (j < 1 || j > 15) throw std::out_of_range("lambda: index must be in 1..15");
    return generators().lambdas[static_cast<std::size_t>(j - 1)];
}

template <std::size_t N>
ComplexMatrix<N> commutator(const ComplexMatrix<N>& x, const ComplexMatrix<N>& y) {
    return x * y - y * x;
}

template <std::size_t N>
ComplexMatrix<N> anticommutator(const ComplexMatrix<N>& x, const ComplexMatrix<N>& y) {
    return x * y + y * x;
}

// Coefficients (c_0, c_1..c_15) of A = c_0·1 + Σ c_j λ_j.
// The λ_j are Hilbert-Schmidt orthogonal with tr(λ_jλ_j) = 4, so c_j = tr(λ_j A)/4.
inline std::array<Complex, 16> decompose(const Matrix4& a) {
    std::array<Complex, 16> c{};
    c[0] = a.trace() * 0.25;
    for (int j = 1; j <= 15; ++j) c[static_cast<std::size_t>(j)] = (lambda(j) * a).trace() * 0.25;
    return c;
}

inline Matrix4 reconstruct(const std::array<Complex, 16>& c) {
    Matrix4 a = c[0] * Matrix4::identity();
    for (int j = 1; j <= 15; ++j) a += c[static_cast<std::size_t>(j)] * lambda(j);
    return a;
}

namespace detail {

// Rank of a set of complex column vectors by modified Gram-Schmidt with
// column pivoting. Residual norms below tol_rel times the largest pivot
// count as zero.
template <std::size_t D>
int rank_of_columns(std::vector<CVector<D>> cols, double tol_rel) {
    int rank = 0;
    double first_pivot = 0.0;
    const std::size_t n = cols.size();
    std::vector<bool> used(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        double best_norm = -1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            const double nk = norm(cols[k]);
            if (nk > best_norm) {
                best_norm = nk;
                best = k;
            }
        }
        if (best == n) break;
        if (rank == 0) first_pivot = best_norm;
        if (best_norm <= tol_rel * first_pivot || best_norm == 0.0) break;
        used[best] = true;
        ++rank;
        for (auto& v : cols[best]) v /= best_norm;
        for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            const Complex proj = inner(cols[best], cols[k]);
            for (std::size_t i = 0; i < D; ++i) cols[k][i] -= proj * cols[best][i];
        }
    }
    return rank;
}

inline CVector<16> vectorize(const Matrix4& m) {
    CVector<16> v;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) v[i * 4 + j] = m(i, j);
    return v;
}

}  // namespace detail

inline constexpr double kRankTolerance = 1e-9;

// Dimension of the complex linear span of the given matrices.
inline int rank_of_span(std::span<const Matrix4> elements, double tol_rel = kRankTolerance) {
    if (elements.empty()) throw std::invalid_argument("rank_of_span: empty list");
    std::vector<CVector<16>> cols;
    cols.reserve(elements.size());
    for (const auto& m : elements) cols.push_back(detail::vectorize(m));
    return detail::rank_of_columns<16>(std::move(cols), tol_rel);
}

inline int rank_of_span(const std::vector<Matrix4>& elements, double tol_rel = kRankTolerance) {
    return rank_of_span(std::span<const Matrix4>(elements), tol_rel);
}

}  // namespace bellpair
