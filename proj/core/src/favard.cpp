#include "kq/favard.hpp"

#include <cmath>

namespace kq {

TargetFunction TargetFunction::inverse() {
    TargetFunction f;
    f.kind = Kind::Inverse;
    return f;
}
TargetFunction TargetFunction::time_evolution(double t) {
    TargetFunction f;
    f.kind = Kind::TimeEvolution;
    f.time = t;
    return f;
}
TargetFunction TargetFunction::gaussian_filter(double center, double width) {
    TargetFunction f;
    f.kind = Kind::GaussianFilter;
    f.center = center;
    f.width = width;
    return f;
}
TargetFunction TargetFunction::step_filter(double threshold) {
    TargetFunction f;
    f.kind = Kind::StepFilter;
    f.threshold = threshold;
    return f;
}
TargetFunction TargetFunction::monomial(unsigned k) {
    TargetFunction f;
    f.kind = Kind::Monomial;
    f.power = k;
    return f;
}
TargetFunction TargetFunction::tabulated(cvec values) {
    TargetFunction f;
    f.kind = Kind::Tabulated;
    f.table = std::move(values);
    return f;
}

cplx TargetFunction::operator()(double lambda) const {
    switch (kind) {
        case Kind::Inverse:
            return 1.0 / lambda;
        case Kind::TimeEvolution:
            return std::exp(cplx(0.0, -lambda * time));
        case Kind::GaussianFilter: {
            double u = (lambda - center) / width;
            return std::exp(-0.5 * u * u);
        }
        case Kind::StepFilter:
            return lambda <= threshold ? 1.0 : 0.0;
        case Kind::Monomial:
            return std::pow(lambda, static_cast<double>(power));
        case Kind::Tabulated:
            throw IndexOutOfRange("Tabulated function has no pointwise form");
    }
    return 0.0;
}

cplx TargetFunction::at_atom(const DiscreteMeasure& mu, std::size_t i) const {
    if (i >= mu.support_size()) throw IndexOutOfRange("at_atom: atom index out of range");
    if (kind == Kind::Tabulated) {
        if (table.size() != mu.support_size())
            throw DimensionMismatch("Tabulated values not aligned with measure atoms");
        return table[i];
    }
    return (*this)(mu.atoms[i]);
}

std::vector<double> eval_orthonormal_polys(const std::vector<double>& a,
                                           const std::vector<double>& b, double lambda,
                                           std::size_t up_to) {
    if (up_to >= a.size()) throw IndexOutOfRange("eval_orthonormal_polys: degree exceeds m-1");
    std::vector<double> p(up_to + 1);
    p[0] = 1.0;
    double prev = 0.0;
    for (std::size_t n = 0; n < up_to; ++n) {
        double next = ((lambda - a[n]) * p[n] - (n > 0 ? b[n - 1] : 0.0) * prev) / b[n];
        prev = p[n];
        p[n + 1] = next;
    }
    return p;
}

FavardExpansion expand(const TargetFunction& f, const DiscreteMeasure& mu,
                       const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t s = mu.support_size();
    if (a.size() < s || b.size() + 1 < s)
        throw DimensionMismatch("expand: fewer recurrence coefficients than atoms");

    if (f.kind == TargetFunction::Kind::Inverse) {
        const double guard = 1e-8 * std::max(mu.spectral_radius(), 1e-300);
        for (std::size_t i = 0; i < s; ++i)
            if (std::abs(mu.atoms[i]) < guard)
                throw SingularAtom("expand: Inverse target with atom near zero");
    }

    FavardExpansion exp;
    exp.measure = mu;
    exp.a = a;
    exp.b = b;
    exp.coeffs.assign(s, 0.0);

    // c_n = sum_i w_i f(atom_i) P_n(atom_i). With u the i-th unit Jacobi
    // eigenvector, sqrt(w_i) P_n(atom_i) = u[n] (sign fixed by u[0] >= 0),
    // so the coefficient map is an orthogonal transform of sqrt(w_i) f_i;
    // this keeps Parseval exact where the raw recurrence values lose
    // several digits at high order.
    TridiagonalReal j;
    j.diag.assign(a.begin(), a.begin() + static_cast<long>(s));
    j.offdiag.assign(b.begin(), b.begin() + static_cast<long>(s) - 1);
    TridiagonalEigenFull eig = eig_tridiagonal_full(j);
    for (std::size_t i = 0; i < s; ++i) {
        cplx fi = f.at_atom(mu, i);
        exp.f_norm_sq += mu.weights[i] * std::norm(fi);
        const std::vector<double>& u = eig.vectors[i];
        const double sign = u[0] < 0.0 ? -1.0 : 1.0;
        const double sw = std::sqrt(mu.weights[i]);
        for (std::size_t n = 0; n < s; ++n) exp.coeffs[n] += sw * fi * sign * u[n];
    }
    return exp;
}

double tail_error(const FavardExpansion& exp, std::size_t d) {
    double s = 0.0;
    for (std::size_t n = d + 1; n < exp.size(); ++n) s += std::norm(exp.coeffs[n]);
    return std::sqrt(s);
}

Truncation truncate(const FavardExpansion& exp, std::size_t d) {
    if (d >= exp.size()) throw IndexOutOfRange("truncate: degree exceeds expansion length");
    Truncation t;
    t.coeffs.assign(exp.coeffs.begin(), exp.coeffs.begin() + static_cast<long>(d) + 1);
    t.tail_error = tail_error(exp, d);
    return t;
}

}  // namespace kq
