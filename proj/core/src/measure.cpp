#include "kq/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kq {

double DiscreteMeasure::spectral_radius() const {
    double r = 0.0;
    for (double x : atoms) r = std::max(r, std::abs(x));
    return r;
}

DiscreteMeasure make_measure(std::vector<double> atoms, std::vector<double> weights) {
    if (atoms.empty() || atoms.size() != weights.size())
        throw DimensionMismatch("make_measure: atoms/weights size mismatch");
    std::vector<std::size_t> idx(atoms.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return atoms[i] < atoms[j]; });

    double radius = 0.0;
    for (double x : atoms) radius = std::max(radius, std::abs(x));
    const double merge_tol = 1e-10 * std::max(radius, 1e-300);

    DiscreteMeasure mu;
    for (std::size_t i : idx) {
        if (!mu.atoms.empty() && atoms[i] - mu.atoms.back() <= merge_tol) {
            // numerical twin: fold weight into the existing atom
            mu.weights.back() += weights[i];
        } else {
            mu.atoms.push_back(atoms[i]);
            mu.weights.push_back(weights[i]);
        }
    }
    double total = std::accumulate(mu.weights.begin(), mu.weights.end(), 0.0);
    if (!(total > 0.0)) throw EmptySpan("make_measure: zero total weight");
    for (double& w : mu.weights) w /= total;
    return mu;
}

DiscreteMeasure measure_from_decomposition(const KrylovDecomposition& k) {
    TridiagonalEigen eig = eig_tridiagonal(k.jacobi());
    std::vector<double> weights(eig.first_components.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        weights[i] = eig.first_components[i] * eig.first_components[i];
    return make_measure(std::move(eig.eigenvalues), std::move(weights));
}

double moment(const DiscreteMeasure& mu, unsigned k) {
    double s = 0.0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        s += mu.weights[i] * std::pow(mu.atoms[i], static_cast<double>(k));
    return s;
}

cplx survival_amplitude(const DiscreteMeasure& mu, double t) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        s += mu.weights[i] * std::exp(cplx(0.0, -mu.atoms[i] * t));
    return s;
}

double partition_function(const DiscreteMeasure& mu, double beta) {
    if (std::abs(beta) * mu.spectral_radius() > 700.0)
        throw OverflowGuard("partition_function: beta * |lambda|_max > 700");
    double s = 0.0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i)
        s += mu.weights[i] * std::exp(-beta * mu.atoms[i]);
    return s;
}

cplx greens_function_sum(const DiscreteMeasure& mu, cplx z) {
    const double pole_tol = 1e-10 * std::max(mu.spectral_radius(), 1e-300);
    cplx s = 0.0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        cplx denom = z - mu.atoms[i];
        if (std::abs(denom) < pole_tol) throw PoleProximity(i);
        s += mu.weights[i] / denom;
    }
    return s;
}

cplx greens_function_cfrac(const std::vector<double>& a, const std::vector<double>& b,
                           cplx z, std::size_t depth) {
    if (depth == 0 || depth > a.size())
        throw IndexOutOfRange("greens_function_cfrac: depth out of range");
    if (b.size() + 1 < depth)
        throw DimensionMismatch("greens_function_cfrac: not enough off-diagonal coefficients");
    // bottom-up: G = 1 / (z - a0 - b1^2 / (z - a1 - ...))
    cplx tail = 0.0;
    for (std::size_t level = depth; level-- > 0;) {
        cplx denom = z - a[level] - tail;
        if (std::abs(denom) < 1e-300)
            throw ZeroDenominator("greens_function_cfrac: vanishing denominator");
        tail = (level > 0) ? b[level - 1] * b[level - 1] / denom : 1.0 / denom;
    }
    return tail;
}

}  // namespace kq
