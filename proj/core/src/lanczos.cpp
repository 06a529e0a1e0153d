#include "kq/lanczos.hpp"

#include <cmath>

namespace kq {

KrylovDecomposition lanczos_decompose(const HermitianOperator& h, const StateVector& psi0,
                               double breakdown_tol) {
    const std::size_t dim = h.dim();
    if (psi0.dim() != dim)
        throw DimensionMismatch("lanczos_decompose: state/operator dimension mismatch");
    if (breakdown_tol <= 0.0) breakdown_tol = 1e-12 * std::max(h.scale, 1.0);

    KrylovDecomposition k;
    k.source_dim = dim;
    k.basis.push_back(psi0.amplitudes);

    for (std::size_t n = 0;; ++n) {
        cvec w = h.apply(k.basis[n]);
        double an = dot(k.basis[n], w).real();
        k.a.push_back(an);
        // residual, fully reorthogonalized twice against the whole basis
        for (int pass = 0; pass < 2; ++pass)
            for (const cvec& kv : k.basis) {
                cplx proj = dot(kv, w);
                for (std::size_t i = 0; i < dim; ++i) w[i] -= proj * kv[i];
            }
        double bn = norm(w);
        if (bn < breakdown_tol || n + 1 == dim) break;
        k.b.push_back(bn);
        for (cplx& x : w) x /= bn;
        k.basis.push_back(std::move(w));
    }
    k.m = k.basis.size();
    return k;
}

std::size_t krylov_dimension(const HermitianOperator& h, const StateVector& psi0) {
    return lanczos_decompose(h, psi0).m;
}

cvec apply_isometry(const KrylovDecomposition& k, const cvec& v) {
    if (v.size() != k.m) throw DimensionMismatch("apply_isometry: coefficient length != m");
    cvec out(k.source_dim, 0.0);
    for (std::size_t j = 0; j < k.m; ++j)
        for (std::size_t i = 0; i < k.source_dim; ++i) out[i] += v[j] * k.basis[j][i];
    return out;
}

Matrix compress_observable(const KrylovDecomposition& k, const HermitianOperator& a) {
    if (a.dim() != k.source_dim)
        throw DimensionMismatch("compress_observable: observable dimension mismatch");
    Matrix c(k.m, k.m);
    std::vector<cvec> av(k.m);
    for (std::size_t j = 0; j < k.m; ++j) av[j] = a.apply(k.basis[j]);
    for (std::size_t i = 0; i < k.m; ++i)
        for (std::size_t j = 0; j < k.m; ++j) c(i, j) = dot(k.basis[i], av[j]);
    return c;
}

}  // namespace kq
