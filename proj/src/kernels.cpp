#include "schurforge/kernels.hpp"

#include "schurforge/characters.hpp"

#include <algorithm>
#include <omp.h>

namespace schurforge::kernels {

namespace {

// Clears denominators row by row so elimination can stay in Z.
std::vector<std::vector<BigInt>> integer_rows(MatrixQ const &m)
{
	std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		BigInt l = 1;
		for (std::size_t j = 0; j < m.cols(); ++j)
			mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
		for (std::size_t j = 0; j < m.cols(); ++j)
			a[i][j] = m(i, j).num() * (l / m(i, j).den());
	}
	return a;
}

template <bool Parallel>
std::size_t bareiss(MatrixQ const &m)
{
	auto a = integer_rows(m);
	std::size_t rows = m.rows(), cols = m.cols(), r = 0;
	BigInt prev = 1;
	for (std::size_t c = 0; c < cols && r < rows; ++c)
	{
		std::size_t p = r;
		while (p < rows && sgn(a[p][c]) == 0)
			++p;
		if (p == rows)
			continue;
		std::swap(a[p], a[r]);
		BigInt const piv = a[r][c];
		long const lo = static_cast<long>(r + 1), hi = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic) if (Parallel && hi - lo > 8)
		for (long i = lo; i < hi; ++i)
		{
			auto &row = a[i];
			BigInt f = row[c];
			for (std::size_t j = c + 1; j < cols; ++j)
			{
				row[j] = piv * row[j] - f * a[r][j];
				mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
			}
			row[c] = 0;
		}
		prev = piv;
		++r;
	}
	return r;
}

struct Orbit
{
	std::vector<std::vector<int>> members; // distinct arrangements of one content
	Bidegree degree;
};

std::vector<Orbit> orbits(std::vector<Bidegree> const &basis, int n)
{
	std::vector<Orbit> out;
	int d = static_cast<int>(basis.size());
	if (d == 0)
		return n == 0 ? std::vector<Orbit>{Orbit{{{}}, {}}} : out;
	std::vector<int> content(n, 0);
	while (true)
	{
		Orbit o;
		for (int i : content)
			o.degree = o.degree + basis[i];
		std::vector<int> arr = content;
		do
			o.members.push_back(arr);
		while (std::next_permutation(arr.begin(), arr.end()));
		out.push_back(std::move(o));
		// next non-decreasing sequence
		int k = n - 1;
		while (k >= 0 && content[k] == d - 1)
			--k;
		if (k < 0)
			break;
		int v = content[k] + 1;
		for (int j = k; j < n; ++j)
			content[j] = v;
	}
	return out;
}

// Rank of sum_sigma chi(sigma) sigma restricted to one orbit.
long orbit_rank(Orbit const &o, std::vector<Bidegree> const &basis, std::vector<Permutation> const &perms,
                std::vector<long> const &chi)
{
	std::size_t k = o.members.size();
	int n = static_cast<int>(o.members.front().size());
	MatrixQ m(k, k);
	std::vector<int> target(n), parities(n);
	for (std::size_t col = 0; col < k; ++col)
	{
		auto const &idx = o.members[col];
		for (int p = 0; p < n; ++p)
			parities[p] = basis[idx[p]].parity();
		for (std::size_t s = 0; s < perms.size(); ++s)
		{
			if (chi[s] == 0)
				continue;
			auto const &sigma = perms[s];
			for (int p = 0; p < n; ++p)
				target[sigma(p)] = idx[p];
			auto row = static_cast<std::size_t>(
				std::lower_bound(o.members.begin(), o.members.end(), target) - o.members.begin());
			m(row, col) += Rational(koszul_sign(sigma, parities) * chi[s]);
		}
	}
	return static_cast<long>(serial::bareiss_rank(m));
}

template <bool Parallel>
BidegreeDims schur_dims_impl(std::vector<Bidegree> const &basis, Partition const &pi)
{
	int n = pi.size();
	auto perms = all_permutations(n);
	std::vector<long> chi(perms.size());
	for (std::size_t s = 0; s < perms.size(); ++s)
		chi[s] = character(pi, perms[s].cycle_type());
	long chi1 = pi.dimension().get_si();
	auto os = orbits(basis, n);
	std::vector<long> ranks(os.size());
	long const count = static_cast<long>(os.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
	for (long i = 0; i < count; ++i)
		ranks[i] = orbit_rank(os[i], basis, perms, chi);
	BidegreeDims dims;
	for (std::size_t i = 0; i < os.size(); ++i)
		if (ranks[i])
			dims[os[i].degree] += ranks[i];
	for (auto it = dims.begin(); it != dims.end();)
	{
		if (it->second % chi1 != 0)
			fail(ErrorKind::NonIntegral, "isotypic rank is not divisible by the character degree");
		it->second /= chi1;
		it = it->second ? std::next(it) : dims.erase(it);
	}
	return dims;
}

Rational diagonal_term(MatrixQ const &f, std::vector<int> const &parity, Permutation const &sigma,
                       std::vector<int> const &idx, std::vector<int> &j, std::vector<int> &par)
{
	int n = sigma.degree();
	Rational prod = 1;
	int total = 0;
	for (int m = 0; m < n; ++m)
	{
		Rational const &x = f(idx[sigma(m)], idx[m]);
		if (x.is_zero())
			return 0;
		prod *= x;
		j[m] = idx[sigma(m)];
		par[m] = parity[j[m]];
		total += parity[idx[m]];
	}
	int s = koszul_sign(sigma, par) * (total % 2 ? -1 : 1);
	return s > 0 ? prod : -prod;
}

void check_trace_args(MatrixQ const &f, std::vector<int> const &parity)
{
	if (!f.is_square() || f.rows() != parity.size())
		fail(ErrorKind::SizeMismatch, "permuted trace: matrix and parity vector disagree");
}

// Multi-index with the given mixed-radix number.
void decode(long code, int d, std::vector<int> &idx)
{
	for (auto &x : idx)
	{
		x = static_cast<int>(code % d);
		code /= d;
	}
}

long power(long d, int n)
{
	long r = 1;
	for (int i = 0; i < n; ++i)
		r *= d;
	return r;
}

} // namespace

int koszul_sign(Permutation const &sigma, std::vector<int> const &parities)
{
	int n = sigma.degree(), s = 1;
	for (int a = 0; a < n; ++a)
		if (parities[a])
			for (int b = a + 1; b < n; ++b)
				if (parities[b] && sigma(a) > sigma(b))
					s = -s;
	return s;
}

namespace serial {

std::size_t bareiss_rank(MatrixQ const &m) { return bareiss<false>(m); }

BidegreeDims schur_dims(std::vector<Bidegree> const &basis, Partition const &pi)
{
	return schur_dims_impl<false>(basis, pi);
}

Rational permuted_trace(MatrixQ const &f, std::vector<int> const &parity, Permutation const &sigma)
{
	check_trace_args(f, parity);
	int n = sigma.degree(), d = static_cast<int>(f.rows());
	if (d == 0)
		return n == 0 ? 1 : 0;
	std::vector<int> idx(n), j(n), par(n);
	Rational sum;
	for (long code = 0, total = power(d, n); code < total; ++code)
	{
		decode(code, d, idx);
		sum += diagonal_term(f, parity, sigma, idx, j, par);
	}
	return sum;
}

} // namespace serial

namespace parallel {

std::size_t bareiss_rank(MatrixQ const &m) { return bareiss<true>(m); }

BidegreeDims schur_dims(std::vector<Bidegree> const &basis, Partition const &pi)
{
	return schur_dims_impl<true>(basis, pi);
}

Rational permuted_trace(MatrixQ const &f, std::vector<int> const &parity, Permutation const &sigma)
{
	check_trace_args(f, parity);
	int n = sigma.degree(), d = static_cast<int>(f.rows());
	if (d == 0)
		return n == 0 ? 1 : 0;
	long const total = power(d, n);
	int threads = omp_get_max_threads();
	std::vector<Rational> partial(threads);
#pragma omp parallel num_threads(threads)
	{
		std::vector<int> idx(n), j(n), par(n);
		Rational local;
#pragma omp for schedule(static)
		for (long code = 0; code < total; ++code)
		{
			decode(code, d, idx);
			local += diagonal_term(f, parity, sigma, idx, j, par);
		}
		partial[omp_get_thread_num()] = local;
	}
	Rational sum;
	for (auto const &p : partial)
		sum += p;
	return sum;
}

} // namespace parallel

} // namespace schurforge::kernels
