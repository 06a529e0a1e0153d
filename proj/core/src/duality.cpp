#include "kq/duality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kq {

std::size_t degree_functional(const FavardExpansion& exp, double epsilon) {
    const std::size_t last = exp.size() - 1;
    if (epsilon <= 0.0) {
        const double zero_tol = 1e-10 * std::sqrt(std::max(exp.f_norm_sq, 1e-300));
        std::size_t top = 0;
        for (std::size_t n = 0; n < exp.size(); ++n)
            if (std::abs(exp.coeffs[n]) > zero_tol) top = n;
        return top;
    }
    for (std::size_t d = 0; d < last; ++d)
        if (tail_error(exp, d) <= epsilon) return d;
    return last;
}

namespace {

// Least squares min ||A q - r||_2 for real A via Householder QR, complex
// rhs handled by splitting. Returns the residual norm; throws
// IllConditioned when the R diagonal ratio exceeds 1e12.
double qr_residual(std::vector<double> a, std::size_t rows, std::size_t cols, cvec rhs) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * cols + j]; };
    for (std::size_t k = 0; k < cols && k < rows; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k; i < rows; ++i) xnorm += at(i, k) * at(i, k);
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        double alpha = (at(k, k) >= 0.0) ? -xnorm : xnorm;
        std::vector<double> v(rows - k);
        for (std::size_t i = k; i < rows; ++i) v[i - k] = at(i, k);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (double x : v) vnorm2 += x * x;
        if (vnorm2 == 0.0) continue;
        double tau = 2.0 / vnorm2;
        for (std::size_t j = k; j < cols; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < rows; ++i) s += v[i - k] * at(i, j);
            s *= tau;
            for (std::size_t i = k; i < rows; ++i) at(i, j) -= s * v[i - k];
        }
        cplx s = 0.0;
        for (std::size_t i = k; i < rows; ++i) s += v[i - k] * rhs[i];
        s *= tau;
        for (std::size_t i = k; i < rows; ++i) rhs[i] -= s * v[i - k];
    }
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cols && k < rows; ++k) {
        double r = std::abs(at(k, k));
        dmax = std::max(dmax, r);
        dmin = std::min(dmin, r);
    }
    if (!(dmin > 0.0) || dmax / dmin > 1e12)
        throw IllConditioned("least_squares_oracle: Gram system condition exceeds 1e12");
    double res = 0.0;
    for (std::size_t i = cols; i < rows; ++i) res += std::norm(rhs[i]);
    return std::sqrt(res);
}

}  // namespace

double least_squares_oracle(const TargetFunction& f, const DiscreteMeasure& mu, std::size_t d) {
    const std::size_t s = mu.support_size();
    // degree >= s-1 interpolates exactly on s atoms
    const std::size_t cols = std::min(d + 1, s);

    double lo = mu.atoms.front(), hi = mu.atoms.back();
    double mid = 0.5 * (lo + hi), half = std::max(0.5 * (hi - lo), 1e-300);

    std::vector<double> design(s * cols);
    cvec rhs(s);
    for (std::size_t i = 0; i < s; ++i) {
        double sw = std::sqrt(mu.weights[i]);
        double x = (mu.atoms[i] - mid) / half;
        double t0 = 1.0, t1 = x;
        for (std::size_t j = 0; j < cols; ++j) {
            double tj = (j == 0) ? 1.0 : (j == 1 ? x : 0.0);
            if (j >= 2) {
                tj = 2.0 * x * t1 - t0;
                t0 = t1;
                t1 = tj;
            }
            design[i * cols + j] = sw * tj;
        }
        rhs[i] = sw * f.at_atom(mu, i);
    }
    if (cols >= s) return 0.0;  // exact interpolation, residual identically zero
    return qr_residual(std::move(design), s, cols, std::move(rhs));
}

CountedApplication apply_polynomial_counted(const HermitianOperator& h, const StateVector& psi0,
                                     const FavardExpansion& exp, std::size_t d) {
    if (d >= exp.size()) throw IndexOutOfRange("apply_polynomial_counted: degree exceeds expansion");
    if (h.dim() != psi0.dim())
        throw DimensionMismatch("apply_polynomial_counted: dimension mismatch");

    const std::size_t dim = h.dim();
    CountedApplication out;
    cvec prev(dim, 0.0);          // P_{n-1}(H) psi0
    cvec cur = psi0.amplitudes;   // P_n(H) psi0
    out.state.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) out.state[i] = exp.coeffs[0] * cur[i];
    for (std::size_t n = 0; n < d; ++n) {
        cvec w = h.apply(cur);  // the one counted query per degree
        ++out.matvecs;
        const double bn = (n > 0) ? exp.b[n - 1] : 0.0;
        cvec next(dim);
        for (std::size_t i = 0; i < dim; ++i)
            next[i] = (w[i] - exp.a[n] * cur[i] - bn * prev[i]) / exp.b[n];
        for (std::size_t i = 0; i < dim; ++i) out.state[i] += exp.coeffs[n + 1] * next[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

namespace {

// Sup error of the degree-d Chebyshev interpolant of f on [lo, hi],
// sampled on a 1000-point grid.
double chebyshev_interp_error(const TargetFunction& f, double lo, double hi, std::size_t d) {
    const std::size_t np = d + 1;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    std::vector<double> theta(np);
    cvec fvals(np);
    for (std::size_t j = 0; j < np; ++j) {
        theta[j] = std::numbers::pi * (2.0 * j + 1.0) / (2.0 * np);
        fvals[j] = f(mid + half * std::cos(theta[j]));
    }
    cvec coef(np);
    for (std::size_t k = 0; k < np; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < np; ++j) s += fvals[j] * std::cos(k * theta[j]);
        coef[k] = s * ((k == 0 ? 1.0 : 2.0) / static_cast<double>(np));
    }
    const std::size_t grid = 1000;
    double err = 0.0;
    for (std::size_t g = 0; g < grid; ++g) {
        double x = -1.0 + 2.0 * static_cast<double>(g) / (grid - 1);
        // Clenshaw
        cplx b1 = 0.0, b2 = 0.0;
        for (std::size_t k = np; k-- > 1;) {
            cplx bk = 2.0 * x * b1 - b2 + coef[k];
            b2 = b1;
            b1 = bk;
        }
        cplx p = x * b1 - b2 + coef[0];
        err = std::max(err, std::abs(f(mid + half * x) - p));
    }
    return err;
}

}  // namespace

std::size_t worst_case_degree(const TargetFunction& f, double lo, double hi, double epsilon) {
    if (!(lo < hi)) throw SingularOnInterval("worst_case_degree: empty interval");
    if (f.kind == TargetFunction::Kind::Tabulated)
        throw SingularOnInterval("worst_case_degree: Tabulated f has no interval version");
    if (f.kind == TargetFunction::Kind::Inverse && lo <= 0.0 && hi >= 0.0)
        throw SingularOnInterval("worst_case_degree: 1/x singular on the interval");

    const std::size_t cap = 4000;
    std::size_t hi_d = 0;
    bool found = false;
    for (std::size_t d = 0; d <= cap; d = (d == 0 ? 1 : 2 * d)) {
        if (chebyshev_interp_error(f, lo, hi, d) <= epsilon) {
            hi_d = d;
            found = true;
            break;
        }
    }
    if (!found) throw ConvergenceFailure("worst_case_degree: degree cap exceeded");
    for (std::size_t d = 0; d < hi_d; ++d)
        if (chebyshev_interp_error(f, lo, hi, d) <= epsilon) return d;
    return hi_d;
}

cvec apply_function_dense(const HermitianOperator& h, const StateVector& psi0,
                          const TargetFunction& f, const DiscreteMeasure* mu) {
    HermitianEigen eig = eig_hermitian_dense(h);
    const std::size_t n = h.dim();
    cvec out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cvec vi(n);
        for (std::size_t r = 0; r < n; ++r) vi[r] = eig.vectors(r, i);
        cplx overlap = dot(vi, psi0.amplitudes);
        if (overlap == cplx{}) continue;
        cplx fv;
        if (f.kind == TargetFunction::Kind::Tabulated) {
            if (mu == nullptr)
                throw DimensionMismatch("apply_function_dense: Tabulated f needs a measure");
            // match occupied eigenvalue to its atom; unmatched modes carry
            // negligible overlap by construction
            std::size_t best = 0;
            double bestd = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < mu->support_size(); ++k) {
                double dist = std::abs(eig.eigenvalues[i] - mu->atoms[k]);
                if (dist < bestd) {
                    bestd = dist;
                    best = k;
                }
            }
            double match_tol = 1e-6 * std::max(mu->spectral_radius(), 1.0);
            if (bestd > match_tol && std::abs(overlap) < 1e-8) continue;
            fv = f.table[best];
        } else {
            fv = f(eig.eigenvalues[i]);
        }
        for (std::size_t r = 0; r < n; ++r) out[r] += fv * overlap * vi[r];
    }
    return out;
}

namespace {

QueryReport build_report(const HermitianOperator& h, const StateVector& psi0,
                         const TargetFunction& f, double epsilon) {
    KrylovDecomposition k = lanczos_decompose(h, psi0);
    DiscreteMeasure mu = measure_from_decomposition(k);
    FavardExpansion exp = expand(f, mu, k.a, k.b);

    QueryReport rep;
    rep.epsilon = epsilon;
    for (std::size_t d = 0; d < exp.size(); ++d) rep.tail_curve.emplace_back(d, tail_error(exp, d));
    rep.n_mu = degree_functional(exp, epsilon);

    CountedApplication app = apply_polynomial_counted(h, psi0, exp, rep.n_mu);
    rep.matvec_count = app.matvecs;

    cvec target = apply_function_dense(h, psi0, f, &mu);
    cvec diff(target.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = app.state[i] - target[i];
    rep.achieved_error = norm(diff);
    return rep;
}

}  // namespace

QueryReport run_duality_scenario(const HermitianOperator& h, const StateVector& psi0,
                                 const TargetFunction& f, double epsilon) {
    QueryReport rep = build_report(h, psi0, f, epsilon);
    // state-oblivious comparison on the full-spectrum hull, when well-posed
    try {
        HermitianEigen eig = eig_hermitian_dense(h);
        double lo = eig.eigenvalues.front(), hi = eig.eigenvalues.back();
        rep.worst_case_degree =
            static_cast<int>(worst_case_degree(f, lo, hi, std::max(epsilon, 1e-12)));
    } catch (const Error&) {
        rep.worst_case_degree = -1;
    }
    return rep;
}

QueryReport hhl_analysis(const HermitianOperator& a, const StateVector& b, double epsilon) {
    TargetFunction inv = TargetFunction::inverse();
    QueryReport rep = build_report(a, b, inv, epsilon);

    KrylovDecomposition k = lanczos_decompose(a, b);
    DiscreteMeasure mu = measure_from_decomposition(k);
    double occ_min = std::numeric_limits<double>::infinity(), occ_max = 0.0;
    for (double atom : mu.atoms) {
        occ_min = std::min(occ_min, std::abs(atom));
        occ_max = std::max(occ_max, std::abs(atom));
    }
    rep.kappa_eff = occ_max / occ_min;

    HermitianEigen eig = eig_hermitian_dense(a);
    double g_min = std::numeric_limits<double>::infinity(), g_max = 0.0;
    for (double ev : eig.eigenvalues) {
        g_min = std::min(g_min, std::abs(ev));
        g_max = std::max(g_max, std::abs(ev));
    }
    if (!(g_min > 0.0)) throw SingularOnInterval("hhl_analysis: singular operator");
    rep.kappa_global = g_max / g_min;

    // the interval comparator is informational; 1/x may be unreachable at
    // tiny budgets on wide spectra, reported as -1
    try {
        double lo = eig.eigenvalues.front(), hi = eig.eigenvalues.back();
        rep.worst_case_degree =
            static_cast<int>(worst_case_degree(inv, lo, hi, std::max(epsilon, 1e-12)));
    } catch (const Error&) {
        rep.worst_case_degree = -1;
    }
    return rep;
}

}  // namespace kq
