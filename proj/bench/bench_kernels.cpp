// Serial reference kernels against their OpenMP counterparts.

#include "schurforge/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace schurforge;

namespace {

MatrixQ random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed)
{
	std::mt19937_64 g(seed);
	std::uniform_int_distribution<int> entry(-9, 9), den(1, 4);
	MatrixQ m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			m(i, j) = Rational(entry(g), den(g));
	return m;
}

std::vector<Bidegree> mixed_basis(int dim)
{
	std::vector<Bidegree> b;
	for (int i = 0; i < dim; ++i)
		b.push_back({0, i % 3});
	return b;
}

template <bool Parallel>
void bareiss(benchmark::State &state)
{
	auto n = static_cast<std::size_t>(state.range(0));
	MatrixQ m = random_matrix(n, n, 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(Parallel ? kernels::parallel::bareiss_rank(m) : kernels::serial::bareiss_rank(m));
}

template <bool Parallel>
void schur_dims(benchmark::State &state)
{
	auto basis = mixed_basis(static_cast<int>(state.range(0)));
	Partition pi{2, 1, 1};
	for (auto _ : state)
		benchmark::DoNotOptimize(Parallel ? kernels::parallel::schur_dims(basis, pi)
		                                  : kernels::serial::schur_dims(basis, pi));
}

template <bool Parallel>
void permuted_trace(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	MatrixQ f = random_matrix(3, 3, 2);
	std::vector<int> parity{0, 1, 0};
	Permutation sigma = Permutation::of_cycle_type(Partition(std::vector<int>{n - 1, 1}));
	for (auto _ : state)
		benchmark::DoNotOptimize(Parallel ? kernels::parallel::permuted_trace(f, parity, sigma)
		                                  : kernels::serial::permuted_trace(f, parity, sigma));
}

} // namespace

BENCHMARK(bareiss<false>)->Name("bareiss_rank/serial")->Arg(20)->Arg(40)->Arg(80);
BENCHMARK(bareiss<true>)->Name("bareiss_rank/parallel")->Arg(20)->Arg(40)->Arg(80);
BENCHMARK(schur_dims<false>)->Name("schur_dims/serial")->Arg(3)->Arg(4);
BENCHMARK(schur_dims<true>)->Name("schur_dims/parallel")->Arg(3)->Arg(4);
BENCHMARK(permuted_trace<false>)->Name("permuted_trace/serial")->Arg(6)->Arg(8);
BENCHMARK(permuted_trace<true>)->Name("permuted_trace/parallel")->Arg(6)->Arg(8);

BENCHMARK_MAIN();
