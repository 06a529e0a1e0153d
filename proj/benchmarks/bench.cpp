#include <benchmark/benchmark.h>

#include <random>

#include "kq/duality.hpp"
#include "kq/dynamics.hpp"

namespace {

using namespace kq;

Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
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

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cvec v(n);
    for (cplx& x : v) x = cplx(gauss(rng), gauss(rng));
    return make_state(std::move(v));
}

void bm_lanczos_decompose(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    HermitianOperator h = assert_hermitian(random_hermitian(dim, rng));
    StateVector psi = random_state(dim, rng);
    for (auto _ : state) {
        KrylovDecomposition k = lanczos_decompose(h, psi);
        benchmark::DoNotOptimize(k.a.data());
    }
}
BENCHMARK(bm_lanczos_decompose)->Arg(16)->Arg(64)->Arg(128);

void bm_eig_tridiagonal(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    TridiagonalReal j;
    j.diag.resize(m);
    j.offdiag.resize(m - 1);
    for (double& x : j.diag) x = unif(rng);
    for (double& x : j.offdiag) x = unif(rng);
    for (auto _ : state) {
        TridiagonalEigen e = eig_tridiagonal(j);
        benchmark::DoNotOptimize(e.eigenvalues.data());
    }
}
BENCHMARK(bm_eig_tridiagonal)->Arg(16)->Arg(64)->Arg(256);

void bm_expand_inverse(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.5, 2.0);
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = unif(rng);
    HermitianOperator h = assert_hermitian(std::move(m));
    StateVector psi = random_state(dim, rng);
    KrylovDecomposition k = lanczos_decompose(h, psi);
    DiscreteMeasure mu = measure_from_decomposition(k);
    TargetFunction f = TargetFunction::inverse();
    for (auto _ : state) {
        FavardExpansion e = expand(f, mu, k.a, k.b);
        benchmark::DoNotOptimize(e.coeffs.data());
    }
}
BENCHMARK(bm_expand_inverse)->Arg(16)->Arg(64)->Arg(128);

void bm_apply_polynomial_counted(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(4);
    HermitianOperator h = assert_hermitian(random_hermitian(dim, rng));
    StateVector psi = random_state(dim, rng);
    KrylovDecomposition k = lanczos_decompose(h, psi);
    DiscreteMeasure mu = measure_from_decomposition(k);
    FavardExpansion e = expand(TargetFunction::time_evolution(1.0), mu, k.a, k.b);
    for (auto _ : state) {
        CountedApplication app = apply_polynomial_counted(h, psi, e, e.size() - 1);
        benchmark::DoNotOptimize(app.state.data());
    }
}
BENCHMARK(bm_apply_polynomial_counted)->Arg(16)->Arg(64)->Arg(128);

void bm_evolve_chain(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    std::vector<double> a(m, 0.0), b(m - 1, 1.0);
    for (auto _ : state) {
        ChainState s = evolve_chain_coeffs(a, b, 5.0);
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
}
BENCHMARK(bm_evolve_chain)->Arg(32)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
