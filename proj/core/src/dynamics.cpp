#include "kq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace kq {

cvec evolve_full(const HermitianOperator& h, const StateVector& psi0, double t) {
    if (h.dim() != psi0.dim()) throw DimensionMismatch("evolve_full: dimension mismatch");
    HermitianEigen eig = eig_hermitian_dense(h);
    const std::size_t n = h.dim();
    cvec out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cvec vi(n);
        for (std::size_t r = 0; r < n; ++r) vi[r] = eig.vectors(r, i);
        cplx amp = std::exp(cplx(0.0, -eig.eigenvalues[i] * t)) * dot(vi, psi0.amplitudes);
        for (std::size_t r = 0; r < n; ++r) out[r] += amp * vi[r];
    }
    return out;
}

ChainState evolve_chain_coeffs(const std::vector<double>& a, const std::vector<double>& b,
                               double t) {
    const std::size_t m = a.size();
    ChainState state;
    state.time = t;
    state.amplitudes.assign(m, 0.0);
    if (m == 1) {
        state.amplitudes[0] = std::exp(cplx(0.0, -a[0] * t));
        return state;
    }
    TridiagonalEigenFull eig = eig_tridiagonal_full(TridiagonalReal{a, b});
    for (std::size_t i = 0; i < m; ++i) {
        cplx phase = std::exp(cplx(0.0, -eig.eigenvalues[i] * t)) * eig.vectors[i][0];
        for (std::size_t n = 0; n < m; ++n) state.amplitudes[n] += phase * eig.vectors[i][n];
    }
    return state;
}

ChainState evolve_chain(const KrylovDecomposition& k, double t) {
    return evolve_chain_coeffs(k.a, k.b, t);
}

double mean_position(const ChainState& state) {
    double c = 0.0;
    for (std::size_t n = 0; n < state.amplitudes.size(); ++n)
        c += static_cast<double>(n) * std::norm(state.amplitudes[n]);
    return c;
}

namespace {

// exp(-iJt) as a dense m x m matrix from the eigendecomposition of J.
Matrix chain_propagator(const TridiagonalEigenFull& eig, double t) {
    const std::size_t m = eig.eigenvalues.size();
    Matrix u(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        cplx phase = std::exp(cplx(0.0, -eig.eigenvalues[i] * t));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                u(r, c) += phase * eig.vectors[i][r] * eig.vectors[i][c];
    }
    return u;
}

}  // namespace

cplx correlator(const KrylovDecomposition& k, const std::vector<Matrix>& observables,
                const std::vector<double>& times) {
    if (observables.size() != times.size())
        throw DimensionMismatch("correlator: observables/times length mismatch");
    const std::size_t m = k.m;
    for (const Matrix& obs : observables)
        if (obs.rows != m || obs.cols != m)
            throw DimensionMismatch("correlator: observable not m x m");

    TridiagonalEigenFull eig;
    if (m == 1) {
        eig.eigenvalues = {k.a[0]};
        eig.vectors = {{1.0}};
    } else {
        eig = eig_tridiagonal_full(k.jacobi());
    }

    cvec v(m, 0.0);
    v[0] = 1.0;  // |e1>
    for (std::size_t s = observables.size(); s-- > 0;) {
        v = matvec(chain_propagator(eig, times[s]), v);
        v = matvec(observables[s], v);
        v = matvec(chain_propagator(eig, -times[s]), v);
    }
    return v[0];
}

DisorderCurves disorder_experiment(const std::vector<double>& a, const std::vector<double>& b,
                                   const DisorderSpec& spec, const std::vector<double>& t_grid) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    std::vector<double> da = a, db = b;
    for (double& x : da) x += spec.strength_a * unit(rng);
    for (double& x : db) {
        double delta = spec.strength_b * unit(rng);
        delta = std::clamp(delta, -0.5 * x, 0.5 * x);  // keep hopping positive
        x += delta;
    }

    DisorderCurves curves;
    curves.t_grid = t_grid;
    for (double t : t_grid) {
        curves.clean.push_back(mean_position(evolve_chain_coeffs(a, b, t)));
        curves.disordered.push_back(mean_position(evolve_chain_coeffs(da, db, t)));
    }
    return curves;
}

}  // namespace kq
