// pair.hpp — Bell pairs of observable subalgebras: two commuting triples of
// anticommuting hermitian involutions that jointly generate the total algebra.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bellpair/algebra.hpp"
#include "bellpair/matrix.hpp"

namespace bellpair {

inline constexpr double kPairTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;

// Three generators of one side: hermitian, involutive, pairwise anticommuting.
struct SubalgebraTriple {
    std::array<Matrix4, 3> gens;

    const Matrix4& operator[](std::size_t i) const { return gens[i]; }
};

struct BellPair {
    SubalgebraTriple left;
    SubalgebraTriple right;
    std::string label;  // decorative, not part of value identity
};

// Per-condition maximum violation magnitudes. Failures are data: validate
// never throws on a bad pair.
struct ValidationReport {
    double tolerance = kPairTolerance;
    double hermiticity = 0.0;
    double involution = 0.0;
    double anticommutation = 0.0;
    double cross_commutation = 0.0;
    double traceless = 0.0;
    double closure = 0.0;  // residual of A_iA_j outside span{1, A_1, A_2, A_3}
    int left_rank = 0;     // span rank of {1, A_1, A_2, A_3}; 4 expected
    int right_rank = 0;
    int generation_rank = 0;  // span rank of the 16 products; 16 expected
    bool pass = false;

    double max_violation() const {
        double worst = hermiticity;
        worst = std::max(worst, involution);
        worst = std::max(worst, anticommutation);
        worst = std::max(worst, cross_commutation);
        worst = std::max(worst, traceless);
        worst = std::max(worst, closure);
        return worst;
    }
};

namespace detail {

// Residual of X outside the span of an HS-orthogonal family {1, G_1..G_3},
// each of squared HS norm 4.
inline double closure_residual(const Matrix4& x, const std::array<Matrix4, 3>& gens) {
    Matrix4 rem = x - (x.trace() * 0.25) * Matrix4::identity();
    for (const auto& g : gens) rem -= ((g * x).trace() * 0.25) * g;
    return max_abs(rem);
}

}  // namespace detail

inline ValidationReport validate(const BellPair& pair, double tol = kPairTolerance) {
    ValidationReport rep;
    rep.tolerance = tol;
    const auto& a = pair.left.gens;
    const auto& b = pair.right.gens;

    for (const auto& side : {a, b}) {
        for (const auto& g : side) {
            rep.hermiticity = std::max(rep.hermiticity, hermiticity_violation(g));
            rep.involution = std::max(rep.involution, involution_violation(g));
            rep.traceless = std::max(rep.traceless, std::abs(g.trace()));
        }
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                rep.anticommutation =
                    std::max(rep.anticommutation, max_abs(anticommutator(side[i], side[j])));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                rep.closure = std::max(rep.closure, detail::closure_residual(side[i] * side[j], side));
    }

    for (const auto& ai : a)
        for (const auto& bj : b)
            rep.cross_commutation = std::max(rep.cross_commutation, max_abs(commutator(ai, bj)));

    const Matrix4 one = Matrix4::identity();
    rep.left_rank = rank_of_span(std::vector<Matrix4>{one, a[0], a[1], a[2]});
    rep.right_rank = rank_of_span(std::vector<Matrix4>{one, b[0], b[1], b[2]});

    std::vector<Matrix4> products;
    products.reserve(16);
    for (const auto& x : {one, a[0], a[1], a[2]})
        for (const auto& y : {one, b[0], b[1], b[2]}) products.push_back(x * y);
    rep.generation_rank = rank_of_span(products);

    rep.pass = rep.max_violation() <= tol && rep.left_rank == 4 && rep.right_rank == 4 &&
               rep.generation_rank == 16;
    return rep;
}

// (1⊗σ_1, 1⊗σ_2, 1⊗σ_3) against (σ_1⊗1, σ_2⊗1, σ_3⊗1): the partition
// matching the tensor product structure.
inline BellPair canonical_pair() {
    return BellPair{{{lambda(1), lambda(2), lambda(3)}},
                    {{lambda(4), lambda(5), lambda(6)}},
                    "canonical"};
}

// Worked example pair under which e_3 and e_4 are maximally correlated
// while e_1 and e_2 stay separable.
inline BellPair ab_pair() {
    const double s = 1.0 / std::sqrt(2.0);
    return BellPair{{{(lambda(4) + lambda(11)) * s,
                      (lambda(10) - lambda(12)) * s,
                      (lambda(1) + lambda(3) - lambda(13) + lambda(15)) * -0.5}},
                    {{(lambda(7) + lambda(9)) * s,
                      (lambda(5) + lambda(8)) * -s,
                      (lambda(1) - lambda(3) - lambda(13) - lambda(15)) * 0.5}},
                    "paper-AB"};
}

// Worked example pair under which the canonically maximally entangled
// family splits into separable and correlated states.
inline BellPair prime_pair() {
    const double s = 1.0 / std::sqrt(2.0);
    return BellPair{{{(lambda(3) - lambda(6) - lambda(7) + lambda(11)) * -0.5,
                      -lambda(10),
                      (lambda(3) + lambda(6) - lambda(7) - lambda(11)) * -0.5}},
                    {{(lambda(1) - lambda(9)) * s,
                      (lambda(5) - lambda(14)) * -s,
                      lambda(15)}},
                    "paper-prime"};
}

// Conjugates every generator: G ↦ U G U†.
inline BellPair transported_pair(const Matrix4& u, const BellPair& base) {
    if (unitarity_violation(u) > kUnitaryTolerance)
        throw std::invalid_argument("transported_pair: matrix is not unitary");
    const Matrix4 udag = u.adjoint();
    BellPair out;
    for (std::size_t i = 0; i < 3; ++i) {
        out.left.gens[i] = u * base.left.gens[i] * udag;
        out.right.gens[i] = u * base.right.gens[i] * udag;
    }
    out.label = "transport(" + base.label + ")";
    return out;
}

// Resolves the stable preset tokens.
inline BellPair preset_pair(const std::string& name) {
    if (name == "canonical") return canonical_pair();
    if (name == "paper-AB") return ab_pair();
    if (name == "paper-prime") return prime_pair();
    throw std::invalid_argument("unknown pair preset '" + name +
                                "' (expected canonical, paper-AB or paper-prime)");
}

}  // namespace bellpair
