#pragma once

#include "kq/duality.hpp"

namespace kq {

struct StateFamily {
    std::vector<StateVector> states;

    std::size_t size() const { return states.size(); }
};

/// Joint Krylov space of a state family: orthonormal basis of
/// span(union of per-state Krylov subspaces) and the compression V'HV
/// (banded Hermitian, not re-tridiagonalized).
struct FamilyDecomposition {
    std::vector<cvec> basis;
    Matrix compressed;
    std::vector<std::size_t> per_state_dims;

    std::size_t m_fam() const { return basis.size(); }
};

enum class FamilyCriterion { MaxState, Averaged };

FamilyDecomposition family_decompose(const HermitianOperator& h, const StateFamily& fam,
                                     double rank_tol = 1e-10);

/// Family query complexity Q_opt^fam:
///  - MaxState: smallest d whose family-measure truncation meets the
///    error budget in every member state's own L2(mu_j) norm;
///  - Averaged: degree functional of the uniform mixture (1/r) sum mu_j.
std::size_t family_query_complexity(const HermitianOperator& h, const StateFamily& fam,
                                    const TargetFunction& f, double epsilon,
                                    FamilyCriterion criterion = FamilyCriterion::MaxState);

/// Mixture measure (1/r) sum_j mu_j of the family.
DiscreteMeasure family_measure(const HermitianOperator& h, const StateFamily& fam);

}  // namespace kq
