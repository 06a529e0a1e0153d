#pragma once

#include <random>

#include "kq/linalg.hpp"

namespace kqtest {

using kq::cplx;
using kq::cvec;
using kq::Matrix;

inline Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = gauss(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = cplx(gauss(rng), gauss(rng)) / std::sqrt(2.0);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

inline cvec random_cvec(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cvec v(n);
    for (cplx& x : v) x = cplx(gauss(rng), gauss(rng));
    return v;
}

inline Matrix diag_matrix(const std::vector<double>& values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

}  // namespace kqtest
