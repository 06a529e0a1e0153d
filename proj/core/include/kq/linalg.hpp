#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "kq/errors.hpp"

namespace kq {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Dense row-major complex matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Matrix identity(std::size_t n);
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
cvec matvec(const Matrix& a, const cvec& x);

/// Conjugated inner product <a|b>.
cplx dot(const cvec& a, const cvec& b);
double norm(const cvec& v);

/// Validated Hermitian operator. `scale` is the max absolute row sum,
/// used as the reference magnitude for all relative tolerances.
struct HermitianOperator {
    Matrix mat;
    double scale = 0.0;

    std::size_t dim() const { return mat.rows; }
    cvec apply(const cvec& x) const { return matvec(mat, x); }
};

/// Checks entrywise Hermiticity within 1e-12 * max|entry|; throws NotHermitian.
HermitianOperator assert_hermitian(const Matrix& m);

/// Unit-norm state; normalization applied on construction.
struct StateVector {
    cvec amplitudes;
    std::size_t dim() const { return amplitudes.size(); }
};

StateVector make_state(cvec amplitudes);

/// Real symmetric tridiagonal matrix with strictly positive off-diagonal.
struct TridiagonalReal {
    std::vector<double> diag;
    std::vector<double> offdiag;  // size() - 1 entries, all > 0

    std::size_t size() const { return diag.size(); }
};

struct TridiagonalEigen {
    std::vector<double> eigenvalues;       // ascending
    std::vector<double> first_components;  // nonnegative, sum of squares = 1
};

struct TridiagonalEigenFull {
    std::vector<double> eigenvalues;            // ascending
    std::vector<std::vector<double>> vectors;   // vectors[i] is the i-th unit eigenvector
};

/// Eigenvalues and first eigenvector components (Golub-Welsch data)
/// by implicit-shift QL iteration.
TridiagonalEigen eig_tridiagonal(const TridiagonalReal& j);

/// Same kernel, full eigenvector accumulation.
TridiagonalEigenFull eig_tridiagonal_full(const TridiagonalReal& j);

struct HermitianEigen {
    std::vector<double> eigenvalues;  // ascending
    Matrix vectors;                   // eigenvectors in columns
};

/// Full dense eigendecomposition: Householder reduction to real
/// tridiagonal, then the QL kernel. Oracle-grade, O(n^3).
HermitianEigen eig_hermitian_dense(const HermitianOperator& h);

struct Orthonormalized {
    std::vector<cvec> basis;
    std::size_t rank = 0;
};

/// Two-pass Gram-Schmidt; vectors with residual below
/// rank_tol * (largest input norm) are dropped.
Orthonormalized orthonormalize(const std::vector<cvec>& vectors, double rank_tol);

}  // namespace kq
