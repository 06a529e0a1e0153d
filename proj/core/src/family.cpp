#include "kq/family.hpp"

#include <algorithm>
#include <cmath>

namespace kq {

FamilyDecomposition family_decompose(const HermitianOperator& h, const StateFamily& fam,
                                     double rank_tol) {
    if (fam.size() == 0) throw EmptySpan("family_decompose: empty family");
    std::vector<cvec> pool;
    FamilyDecomposition out;
    for (const StateVector& psi : fam.states) {
        KrylovDecomposition k = lanczos_decompose(h, psi);
        out.per_state_dims.push_back(k.m);
        for (cvec& v : k.basis) pool.push_back(std::move(v));
    }
    Orthonormalized on = orthonormalize(pool, rank_tol);
    out.basis = std::move(on.basis);

    const std::size_t m = out.basis.size();
    out.compressed = Matrix(m, m);
    std::vector<cvec> hv(m);
    for (std::size_t j = 0; j < m; ++j) hv[j] = h.apply(out.basis[j]);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.compressed(i, j) = dot(out.basis[i], hv[j]);
    return out;
}

DiscreteMeasure family_measure(const HermitianOperator& h, const StateFamily& fam) {
    if (fam.size() == 0) throw EmptySpan("family_measure: empty family");
    std::vector<double> atoms, weights;
    const double r = static_cast<double>(fam.size());
    for (const StateVector& psi : fam.states) {
        DiscreteMeasure mu = measure_from_decomposition(lanczos_decompose(h, psi));
        for (std::size_t i = 0; i < mu.support_size(); ++i) {
            atoms.push_back(mu.atoms[i]);
            weights.push_back(mu.weights[i] / r);
        }
    }
    return make_measure(std::move(atoms), std::move(weights));
}

namespace {

// Recurrence coefficients of a discrete measure: Lanczos of the diagonal
// operator of atoms started from the sqrt-weight vector.
std::pair<std::vector<double>, std::vector<double>> measure_recurrence(
    const DiscreteMeasure& mu) {
    const std::size_t s = mu.support_size();
    Matrix d(s, s);
    for (std::size_t i = 0; i < s; ++i) d(i, i) = mu.atoms[i];
    cvec start(s);
    for (std::size_t i = 0; i < s; ++i) start[i] = std::sqrt(mu.weights[i]);
    KrylovDecomposition k = lanczos_decompose(assert_hermitian(d), make_state(std::move(start)));
    return {k.a, k.b};
}

cplx value_on_support(const TargetFunction& f, const DiscreteMeasure& ref, double lambda) {
    if (f.kind != TargetFunction::Kind::Tabulated) return f(lambda);
    // Tabulated values are aligned with the reference (mixture) atoms.
    std::size_t best = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ref.support_size(); ++k) {
        double dist = std::abs(lambda - ref.atoms[k]);
        if (dist < bestd) {
            bestd = dist;
            best = k;
        }
    }
    return f.table[best];
}

}  // namespace

std::size_t family_query_complexity(const HermitianOperator& h, const StateFamily& fam,
                                    const TargetFunction& f, double epsilon,
                                    FamilyCriterion criterion) {
    DiscreteMeasure mixture = family_measure(h, fam);
    auto [a, b] = measure_recurrence(mixture);
    FavardExpansion exp = expand(f, mixture, a, b);

    if (criterion == FamilyCriterion::Averaged) return degree_functional(exp, epsilon);

    // MaxState: smallest d whose mixture-basis truncation is within the
    // budget in every member's own norm.
    const std::size_t s = exp.size();
    const double floor = 1e-10 * std::sqrt(std::max(exp.f_norm_sq, 1e-300));
    const double budget = std::max(epsilon, floor);

    std::vector<DiscreteMeasure> member;
    for (const StateVector& psi : fam.states)
        member.push_back(measure_from_decomposition(lanczos_decompose(h, psi)));

    for (std::size_t d = 0; d < s; ++d) {
        bool ok = true;
        for (const DiscreteMeasure& mu : member) {
            double err2 = 0.0;
            for (std::size_t i = 0; i < mu.support_size(); ++i) {
                std::vector<double> p = eval_orthonormal_polys(a, b, mu.atoms[i], s - 1);
                cplx pd = 0.0;
                for (std::size_t n = 0; n <= d; ++n) pd += exp.coeffs[n] * p[n];
                err2 += mu.weights[i] * std::norm(value_on_support(f, mixture, mu.atoms[i]) - pd);
            }
            if (std::sqrt(err2) > budget) {
                ok = false;
                break;
            }
        }
        if (ok) return d;
    }
    return s - 1;
}

}  // namespace kq
