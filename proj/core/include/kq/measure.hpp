#pragma once

#include "kq/lanczos.hpp"

namespace kq {

/// Finite spectral measure: weighted atoms on the occupied eigenvalues.
struct DiscreteMeasure {
    std::vector<double> atoms;    // strictly ascending
    std::vector<double> weights;  // nonnegative, sum to 1

    std::size_t support_size() const { return atoms.size(); }
    double spectral_radius() const;
};

/// Atoms = eigenvalues of J, weights = squared first eigenvector
/// components. Eigenvalues within 1e-10 * spectral_radius are merged.
DiscreteMeasure measure_from_decomposition(const KrylovDecomposition& k);

/// Measure built directly from (atoms, weights); merges close atoms and
/// renormalizes. Used for family mixtures and tests.
DiscreteMeasure make_measure(std::vector<double> atoms, std::vector<double> weights);

double moment(const DiscreteMeasure& mu, unsigned k);
cplx survival_amplitude(const DiscreteMeasure& mu, double t);
double partition_function(const DiscreteMeasure& mu, double beta);
cplx greens_function_sum(const DiscreteMeasure& mu, cplx z);

/// Finite continued fraction in the Lanczos coefficients, evaluated
/// bottom-up. depth <= a.size().
cplx greens_function_cfrac(const std::vector<double>& a, const std::vector<double>& b,
                           cplx z, std::size_t depth);

}  // namespace kq
