#pragma once

#include "kq/linalg.hpp"

namespace kq {

/// Krylov basis, Lanczos coefficients and Jacobi matrix of (H, psi0).
/// basis[n] is |K_n>, the n-th column of the isometry V.
struct KrylovDecomposition {
    std::size_t m = 0;
    std::size_t source_dim = 0;
    std::vector<cvec> basis;
    std::vector<double> a;  // m entries
    std::vector<double> b;  // m-1 entries, strictly positive

    TridiagonalReal jacobi() const { return TridiagonalReal{a, b}; }
};

/// Lanczos with full two-pass reorthogonalization. Terminates when the
/// residual norm drops below breakdown_tol (pass <= 0 for the default
/// 1e-12 * scale) or the ambient dimension is exhausted.
KrylovDecomposition lanczos_decompose(const HermitianOperator& h, const StateVector& psi0,
                               double breakdown_tol = 0.0);

std::size_t krylov_dimension(const HermitianOperator& h, const StateVector& psi0);

/// V v = sum_j v[j] |K_j>.
cvec apply_isometry(const KrylovDecomposition& k, const cvec& v);

/// Compression V' A V of an ambient observable.
Matrix compress_observable(const KrylovDecomposition& k, const HermitianOperator& a);

}  // namespace kq
