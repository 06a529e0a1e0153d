#pragma once

#include <optional>
#include <utility>

#include "kq/favard.hpp"

namespace kq {

/// Outcome of a state-aware query analysis.
struct QueryReport {
    std::size_t n_mu = 0;
    double epsilon = 0.0;
    std::vector<std::pair<std::size_t, double>> tail_curve;  // (d, tail error)
    int worst_case_degree = -1;  // -1 when the interval comparison is not well-posed
    std::size_t matvec_count = 0;
    double achieved_error = 0.0;
    std::optional<double> kappa_eff;
    std::optional<double> kappa_global;
};

/// Smallest d with tail(d) <= epsilon. For epsilon = 0 returns the exact
/// interpolation degree: the largest n with |c_n| above the coefficient
/// noise floor 1e-10 * sqrt(f_norm_sq).
std::size_t degree_functional(const FavardExpansion& exp, double epsilon);

/// Best L2(mu) error over ALL polynomials of degree <= d, by weighted
/// least squares in a scaled Chebyshev basis (QR, no use of the Favard
/// coefficients). Independent validation route for the duality theorem.
double least_squares_oracle(const TargetFunction& f, const DiscreteMeasure& mu, std::size_t d);

struct CountedApplication {
    cvec state;                // sum_{n<=d} c_n P_n(H) |psi0>
    std::size_t matvecs = 0;   // exactly d
};

/// Evaluates the degree-d truncation on the state by the three-term
/// recurrence on ambient vectors; each new Krylov vector costs exactly
/// one product with H, so matvecs = d certifies the query count.
CountedApplication apply_polynomial_counted(const HermitianOperator& h, const StateVector& psi0,
                                     const FavardExpansion& exp, std::size_t d);

/// Smallest d whose Chebyshev interpolant of f on [lo, hi] has sup error
/// <= epsilon on a 1000-point grid. Upper-bound proxy for the minimax
/// degree of the state-oblivious setting.
std::size_t worst_case_degree(const TargetFunction& f, double lo, double hi, double epsilon);

/// Full state-aware pipeline for f = 1/x, reporting the effective and
/// global condition numbers alongside the query counts.
QueryReport hhl_analysis(const HermitianOperator& a, const StateVector& b, double epsilon);

/// End-to-end state-aware query procedure: Lanczos -> measure -> Favard
/// expansion -> degree functional -> counted application.
QueryReport run_duality_scenario(const HermitianOperator& h, const StateVector& psi0,
                                 const TargetFunction& f, double epsilon);

/// Dense-oracle f(H)|psi0> (eigendecomposition route). For Tabulated f
/// the occupied eigenvalues are matched to the atoms of mu.
cvec apply_function_dense(const HermitianOperator& h, const StateVector& psi0,
                          const TargetFunction& f, const DiscreteMeasure* mu = nullptr);

}  // namespace kq
