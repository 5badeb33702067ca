#include "schurforge/schur_functor.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"

namespace schurforge {

namespace {

void check_power_bound(std::size_t dim, int n, std::size_t bound)
{
	std::size_t total = 1;
	for (int i = 0; i < n; ++i)
	{
		total *= dim;
		if (total > bound)
			fail(ErrorKind::BoundExceeded,
			     "(dim X)^n = " + std::to_string(dim) + "^" + std::to_string(n) + " exceeds bound " +
			         std::to_string(bound));
	}
}

} // namespace

kernels::BidegreeDims schur_bidegree_dims(std::vector<Bidegree> const &basis, Partition const &pi, std::size_t bound)
{
	check_power_bound(basis.size(), pi.size(), bound);
	return kernels::parallel::schur_dims(basis, pi);
}

GradedObject schur_object(GradedObject const &x, Partition const &pi, std::size_t bound)
{
	std::vector<Bidegree> basis;
	for (int d : x.basis_degrees())
		basis.push_back({0, d});
	std::map<int, int> dims;
	for (auto const &[b, n] : schur_bidegree_dims(basis, pi, bound))
		dims[b.internal] += static_cast<int>(n);
	return GradedObject(std::move(dims));
}

GradedMap isotypic_projector_map(GObject const &x, Partition const &pi)
{
	auto const &group = *x.group();
	if (group.symmetric_degree() != pi.size() || !group.has_permutations())
		fail(ErrorKind::InvalidArgument, "isotypic projector needs an action of S_" + std::to_string(pi.size()));
	Rational scale(pi.dimension(), factorial(pi.size()));
	GradedMap p = GradedMap::zero(x.object(), x.object());
	for (int g = 0; g < group.size(); ++g)
	{
		long chi = character(pi, group.permutation(g).cycle_type());
		if (chi != 0)
			p = p + (scale * Rational(chi)) * x.action(g);
	}
	return p;
}

Rational permuted_tensor_trace(GObject const &x, int g, Permutation const &sigma, std::size_t bound)
{
	check_power_bound(static_cast<std::size_t>(x.object().total_dim()), sigma.degree(), bound);
	std::vector<int> parity;
	for (int d : x.object().basis_degrees())
		parity.push_back(((d % 2) + 2) % 2);
	return kernels::parallel::permuted_trace(x.action(g).dense(), parity, sigma);
}

Rational trace_schur(GObject const &x, int g, Partition const &v, std::size_t bound)
{
	int n = v.size();
	check_power_bound(static_cast<std::size_t>(x.object().total_dim()), n, bound);
	// tr(s g^{(x)n}) only depends on the conjugacy class of s
	Rational sum;
	for (auto const &mu : partitions_of(n))
	{
		long chi = character(v, mu);
		if (chi == 0)
			continue;
		Rational t = permuted_tensor_trace(x, g, Permutation::of_cycle_type(mu), bound);
		sum += Rational(chi) * t / Rational(mu.centralizer_order());
	}
	return sum;
}

WittSeries<Rational> char_series(GObject const &x, int g, std::size_t order, std::size_t bound)
{
	Series<Rational> s = Series<Rational>::one(order);
	for (std::size_t n = 1; n <= order; ++n)
		s[n] = trace_schur(x, g, column_partition(static_cast<int>(n)), bound);
	return WittSeries<Rational>(s);
}

} // namespace schurforge
