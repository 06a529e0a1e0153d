#pragma once

#include "kq/lanczos.hpp"
#include "kq/measure.hpp"

namespace kq {

/// Wavefunction on the Krylov chain at a fixed time.
struct ChainState {
    cvec amplitudes;  // psi_n(t), unit norm
    double time = 0.0;
};

/// Site-disorder specification for the Krylov chain; off-diagonal
/// perturbations are clamped at half the clean value to keep b_n > 0.
struct DisorderSpec {
    double strength_a = 0.0;
    double strength_b = 0.0;
    std::uint64_t seed = 0;
};

/// exp(-iHt)|psi0> via dense eigendecomposition.
cvec evolve_full(const HermitianOperator& h, const StateVector& psi0, double t);

/// exp(-iJt)|e1> via tridiagonal eigendecomposition.
ChainState evolve_chain(const KrylovDecomposition& k, double t);

/// Chain evolution from e1 for bare coefficients (a, b).
ChainState evolve_chain_coeffs(const std::vector<double>& a, const std::vector<double>& b,
                               double t);

/// C(t) = sum_n n |psi_n|^2, the spread on the chain.
double mean_position(const ChainState& state);

/// <e1| prod_s exp(iJ t_s) A_s exp(-iJ t_s) |e1> for compressed observables.
cplx correlator(const KrylovDecomposition& k, const std::vector<Matrix>& observables,
                const std::vector<double>& times);

struct DisorderCurves {
    std::vector<double> t_grid;
    std::vector<double> clean;       // C(t) for the clean chain
    std::vector<double> disordered;  // C(t) for the perturbed chain
};

DisorderCurves disorder_experiment(const std::vector<double>& a, const std::vector<double>& b,
                                   const DisorderSpec& spec, const std::vector<double>& t_grid);

}  // namespace kq
