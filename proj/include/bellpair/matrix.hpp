// matrix.hpp — fixed-size complex matrices and the small real types used throughout
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace bellpair {

using Complex = std::complex<double>;

template <std::size_t N>
class ComplexMatrix {
public:
    static constexpr std::size_t dim = N;

    constexpr ComplexMatrix() = default;

    ComplexMatrix(std::initializer_list<Complex> entries) {
        if (entries.size() != N * N)
            throw std::invalid_argument("ComplexMatrix: wrong number of entries");
        std::size_t k = 0;
        for (const auto& v : entries) e_[k++] = v;
    }

    static ComplexMatrix identity() {
        ComplexMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero() { return ComplexMatrix{}; }

    Complex& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) e_[k] += o.e_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) e_[k] -= o.e_[k];
        return *this;
    }
    ComplexMatrix& operator*=(Complex s) {
        for (auto& v : e_) v *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s); }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= Complex(-1.0); }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix c;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    Complex trace() const {
        Complex t{};
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

private:
    std::array<Complex, N * N> e_{};
};

using Matrix2 = ComplexMatrix<2>;
using Matrix4 = ComplexMatrix<4>;

template <std::size_t N>
using CVector = std::array<Complex, N>;
using Vector4 = CVector<4>;

template <std::size_t N>
CVector<N> operator*(const ComplexMatrix<N>& m, const CVector<N>& x) {
    CVector<N> y{};
    for (std::size_t i = 0; i < N; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < N; ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

// ⟨x, y⟩, conjugate-linear in the first slot
template <std::size_t N>
Complex inner(const CVector<N>& x, const CVector<N>& y) {
    Complex acc{};
    for (std::size_t i = 0; i < N; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

template <std::size_t N>
double norm(const CVector<N>& x) {
    double acc = 0.0;
    for (const auto& v : x) acc += std::norm(v);
    return std::sqrt(acc);
}

template <std::size_t N>
double max_abs(const ComplexMatrix<N>& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

template <std::size_t N>
double max_abs_diff(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
    return max_abs(a - b);
}

template <std::size_t N>
double hermiticity_violation(const ComplexMatrix<N>& m) {
    return max_abs_diff(m, m.adjoint());
}

template <std::size_t N>
double involution_violation(const ComplexMatrix<N>& m) {
    return max_abs_diff(m * m, ComplexMatrix<N>::identity());
}

template <std::size_t N>
bool is_hermitian(const ComplexMatrix<N>& m, double tol = 1e-12) {
    return hermiticity_violation(m) <= tol;
}

template <std::size_t N>
bool is_involution(const ComplexMatrix<N>& m, double tol = 1e-12) {
    return involution_violation(m) <= tol;
}

template <std::size_t N>
double unitarity_violation(const ComplexMatrix<N>& m) {
    return max_abs_diff(m.adjoint() * m, ComplexMatrix<N>::identity());
}

// --- small real linear algebra (3-vectors and 3x3 matrices) ---

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct Mat3 {
    std::array<double, 9> e{};

    double& operator()(std::size_t i, std::size_t j) { return e[i * 3 + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return e[i * 3 + j]; }

    static Mat3 zero() { return {}; }
    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
    static Mat3 diag(double a, double b, double c) {
        Mat3 m;
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = c;
        return m;
    }

    Vec3 operator*(const Vec3& x) const {
        Vec3 y{};
        for (std::size_t i = 0; i < 3; ++i)
            y[i] = (*this)(i, 0) * x[0] + (*this)(i, 1) * x[1] + (*this)(i, 2) * x[2];
        return y;
    }

    Mat3 transpose() const {
        Mat3 t;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double max_abs() const {
        double worst = 0.0;
        for (double v : e) worst = std::max(worst, std::abs(v));
        return worst;
    }
};

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

}  // namespace bellpair
