#pragma once

#include "kq/measure.hpp"

namespace kq {

/// Target function f to be applied to the operator.
struct TargetFunction {
    enum class Kind { Inverse, TimeEvolution, GaussianFilter, StepFilter, Monomial, Tabulated };

    Kind kind = Kind::Monomial;
    double time = 0.0;       // TimeEvolution
    double center = 0.0;     // GaussianFilter
    double width = 1.0;      // GaussianFilter
    double threshold = 0.0;  // StepFilter: indicator(lambda <= threshold)
    unsigned power = 0;      // Monomial
    cvec table;              // Tabulated: values aligned with measure atoms

    static TargetFunction inverse();
    static TargetFunction time_evolution(double t);
    static TargetFunction gaussian_filter(double center, double width);
    static TargetFunction step_filter(double threshold);
    static TargetFunction monomial(unsigned k);
    static TargetFunction tabulated(cvec values);

    /// Pointwise evaluation; Tabulated has no pointwise form and throws.
    cplx operator()(double lambda) const;

    /// Value on the i-th atom of mu (handles Tabulated alignment).
    cplx at_atom(const DiscreteMeasure& mu, std::size_t i) const;
};

/// f expanded in the orthonormal polynomials of mu:
/// coeffs[n] = sum_i w_i f(lambda_i) P_n(lambda_i).
struct FavardExpansion {
    DiscreteMeasure measure;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<cplx> coeffs;
    double f_norm_sq = 0.0;

    std::size_t size() const { return coeffs.size(); }
};

/// (P_0(lambda), ..., P_n(lambda)) by the forward three-term recurrence,
/// P_0 = 1, b_{n+1} P_{n+1} = (lambda - a_n) P_n - b_n P_{n-1}.
std::vector<double> eval_orthonormal_polys(const std::vector<double>& a,
                                           const std::vector<double>& b, double lambda,
                                           std::size_t up_to);

FavardExpansion expand(const TargetFunction& f, const DiscreteMeasure& mu,
                       const std::vector<double>& a, const std::vector<double>& b);

struct Truncation {
    std::vector<cplx> coeffs;  // c_0 .. c_d
    double tail_error = 0.0;   // sqrt(sum_{n>d} |c_n|^2)
};

Truncation truncate(const FavardExpansion& exp, std::size_t d);

/// sqrt(sum_{n>d} |c_n|^2) without copying coefficients.
double tail_error(const FavardExpansion& exp, std::size_t d);

}  // namespace kq
