#include "kq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kq {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matmul: inner dimensions differ");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix adjoint(const Matrix& a) {
    Matrix c(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

cvec matvec(const Matrix& a, const cvec& x) {
    if (a.cols != x.size()) throw DimensionMismatch("matvec: size mismatch");
    cvec y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

cplx dot(const cvec& a, const cvec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const cvec& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

HermitianOperator assert_hermitian(const Matrix& m) {
    if (m.rows != m.cols) throw DimensionMismatch("assert_hermitian: matrix not square");
    if (m.rows == 0) throw DimensionMismatch("assert_hermitian: empty matrix");
    double max_entry = 0.0;
    for (const cplx& x : m.data) max_entry = std::max(max_entry, std::abs(x));
    double max_dev = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i; j < m.cols; ++j)
            max_dev = std::max(max_dev, std::abs(m(i, j) - std::conj(m(j, i))));
    if (max_dev > 1e-12 * std::max(max_entry, 1e-300)) throw NotHermitian(max_dev);

    HermitianOperator h;
    h.mat = m;
    // symmetrize so downstream arithmetic sees an exactly Hermitian matrix
    for (std::size_t i = 0; i < m.rows; ++i) {
        h.mat(i, i) = cplx(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < m.cols; ++j) {
            cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h.mat(i, j) = avg;
            h.mat(j, i) = std::conj(avg);
        }
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) row += std::abs(h.mat(i, j));
        h.scale = std::max(h.scale, row);
    }
    return h;
}

StateVector make_state(cvec amplitudes) {
    double n = norm(amplitudes);
    if (!(n > 0.0)) throw EmptySpan("make_state: zero amplitude vector");
    for (cplx& x : amplitudes) x /= n;
    return StateVector{std::move(amplitudes)};
}

namespace {

// Implicit-shift QL on (d, e); plane rotations are accumulated into the
// zrows x n row-major matrix z (columns of z follow the eigenvectors).
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& z, std::size_t zrows) {
    const std::size_t n = d.size();
    if (n == 0) return;
    e.resize(n, 0.0);  // e[n-1] used as workspace
    const long max_sweeps = 50 * static_cast<long>(n);
    long sweeps = 0;
    for (std::size_t l = 0; l < n; ++l) {
        for (;;) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m == l) break;
            if (++sweeps > max_sweeps)
                throw ConvergenceFailure("eig_tridiagonal: QL iteration cap exceeded");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                double f = s * e[ii];
                double b = c * e[ii];
                r = std::hypot(f, g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                for (std::size_t k = 0; k < zrows; ++k) {
                    double zk1 = z[k * n + ii + 1];
                    z[k * n + ii + 1] = s * z[k * n + ii] + c * zk1;
                    z[k * n + ii] = c * z[k * n + ii] - s * zk1;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

// Sort eigenvalues ascending, permuting columns of z alongside.
void sort_ascending(std::vector<double>& d, std::vector<double>& z, std::size_t zrows) {
    const std::size_t n = d.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    std::vector<double> zs(z.size());
    for (std::size_t i = 0; i < n; ++i) {
        ds[i] = d[idx[i]];
        for (std::size_t k = 0; k < zrows; ++k) zs[k * n + i] = z[k * n + idx[i]];
    }
    d = std::move(ds);
    z = std::move(zs);
}

void check_tridiagonal(const TridiagonalReal& j) {
    if (j.diag.empty()) throw DimensionMismatch("tridiagonal: empty");
    if (j.offdiag.size() + 1 != j.diag.size())
        throw DimensionMismatch("tridiagonal: offdiag size must be size-1");
    for (double b : j.offdiag)
        if (!(b > 0.0)) throw DimensionMismatch("tridiagonal: offdiag entries must be positive");
}

}  // namespace

TridiagonalEigen eig_tridiagonal(const TridiagonalReal& j) {
    check_tridiagonal(j);
    const std::size_t n = j.size();
    std::vector<double> d = j.diag;
    std::vector<double> e = j.offdiag;
    std::vector<double> z(n, 0.0);  // single row: first components
    z[0] = 1.0;
    ql_implicit(d, e, z, 1);
    sort_ascending(d, z, 1);
    for (double& f : z)
        if (f < 0.0) f = -f;
    return TridiagonalEigen{std::move(d), std::move(z)};
}

TridiagonalEigenFull eig_tridiagonal_full(const TridiagonalReal& j) {
    check_tridiagonal(j);
    const std::size_t n = j.size();
    std::vector<double> d = j.diag;
    std::vector<double> e = j.offdiag;
    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
    ql_implicit(d, e, z, n);
    sort_ascending(d, z, n);
    TridiagonalEigenFull out;
    out.eigenvalues = std::move(d);
    out.vectors.assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) out.vectors[i][k] = z[k * n + i];
        if (out.vectors[i][0] < 0.0)
            for (double& x : out.vectors[i]) x = -x;
    }
    return out;
}

HermitianEigen eig_hermitian_dense(const HermitianOperator& h) {
    const std::size_t n = h.dim();
    Matrix a = h.mat;
    Matrix q = Matrix::identity(n);

    // Householder reduction to Hermitian tridiagonal form.
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;

        cplx x0 = a(k + 1, k);
        cplx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cplx(1.0, 0.0);
        cplx beta = -phase * xnorm;

        cvec v(n - k - 1);
        for (std::size_t i = k + 1; i < n; ++i) v[i - k - 1] = a(i, k);
        v[0] -= beta;
        double vnorm2 = 0.0;
        for (const cplx& x : v) vnorm2 += std::norm(x);
        if (vnorm2 == 0.0) continue;
        double tau = 2.0 / vnorm2;

        // w = tau*A22*v - (tau^2/2)(v' A22 v) v;  A22 <- A22 - v w' - w v'
        const std::size_t s = k + 1;
        cvec w(n - s, 0.0);
        for (std::size_t i = s; i < n; ++i) {
            cplx acc = 0.0;
            for (std::size_t jj = s; jj < n; ++jj) acc += a(i, jj) * v[jj - s];
            w[i - s] = tau * acc;
        }
        cplx vw = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) vw += std::conj(v[i]) * w[i];
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= 0.5 * tau * vw.real() * v[i];
        for (std::size_t i = s; i < n; ++i)
            for (std::size_t jj = s; jj < n; ++jj)
                a(i, jj) -= v[i - s] * std::conj(w[jj - s]) + w[i - s] * std::conj(v[jj - s]);

        a(k + 1, k) = beta;
        a(k, k + 1) = std::conj(beta);
        for (std::size_t i = k + 2; i < n; ++i) {
            a(i, k) = 0.0;
            a(k, i) = 0.0;
        }

        // Q <- Q (I - tau v v')
        for (std::size_t r = 0; r < n; ++r) {
            cplx acc = 0.0;
            for (std::size_t jj = s; jj < n; ++jj) acc += q(r, jj) * v[jj - s];
            acc *= tau;
            for (std::size_t jj = s; jj < n; ++jj) q(r, jj) -= acc * std::conj(v[jj - s]);
        }
    }

    // Phase similarity: make the off-diagonal real nonnegative.
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    cvec dphase(n, cplx(1.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        cplx sub = a(k + 1, k);
        double mag = std::abs(sub);
        e[k] = mag;
        dphase[k + 1] = (mag > 0.0) ? dphase[k] * (sub / mag) : dphase[k];
    }

    std::vector<double> z(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
    std::vector<double> ework(e);
    ql_implicit(d, ework, z, n);
    sort_ascending(d, z, n);

    // eigenvectors = Q * diag(phase) * Z
    HermitianEigen out;
    out.eigenvalues = std::move(d);
    out.vectors = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            cplx acc = 0.0;
            for (std::size_t jj = 0; jj < n; ++jj)
                acc += q(r, jj) * dphase[jj] * z[jj * n + c];
            out.vectors(r, c) = acc;
        }
    return out;
}

Orthonormalized orthonormalize(const std::vector<cvec>& vectors, double rank_tol) {
    if (vectors.empty()) throw EmptySpan("orthonormalize: empty input");
    const std::size_t dim = vectors[0].size();
    double max_norm = 0.0;
    for (const cvec& v : vectors) {
        if (v.size() != dim) throw DimensionMismatch("orthonormalize: ragged input");
        max_norm = std::max(max_norm, norm(v));
    }
    if (!(max_norm > 0.0)) throw EmptySpan("orthonormalize: all inputs zero");

    Orthonormalized out;
    for (const cvec& v : vectors) {
        cvec w = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const cvec& b : out.basis) {
                cplx proj = dot(b, w);
                for (std::size_t i = 0; i < dim; ++i) w[i] -= proj * b[i];
            }
        double r = norm(w);
        if (r < rank_tol * max_norm) continue;
        for (cplx& x : w) x /= r;
        out.basis.push_back(std::move(w));
    }
    out.rank = out.basis.size();
    if (out.rank == 0) throw EmptySpan("orthonormalize: rank zero");
    return out;
}

}  // namespace kq
