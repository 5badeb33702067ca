#include "schurforge/complex.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"

#include <algorithm>

namespace schurforge {

ComplexObject::ComplexObject(std::map<int, GradedObject> terms, std::map<int, GradedMap> differentials)
{
	for (auto &[n, x] : terms)
		if (!x.is_zero())
			terms_.emplace(n, std::move(x));
	for (auto &[n, d] : differentials)
	{
		if (!(d.source() == term(n)) || !(d.target() == term(n + 1)))
			fail(ErrorKind::SizeMismatch, "differential d^" + std::to_string(n) + " does not map X^" +
			                                  std::to_string(n) + " to X^" + std::to_string(n + 1));
		if (!d.is_zero())
			d_.emplace(n, std::move(d));
	}
	for (auto const &[n, d] : d_)
		if (auto next = d_.find(n + 1); next != d_.end() && !(next->second * d).is_zero())
			fail(ErrorKind::NotAComplex, "d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " is not zero");
}

ComplexObject ComplexObject::concentrated(GradedObject const &x, int degree)
{
	return ComplexObject({{degree, x}}, {});
}

GradedObject ComplexObject::term(int n) const
{
	auto it = terms_.find(n);
	return it == terms_.end() ? GradedObject() : it->second;
}

GradedMap ComplexObject::differential(int n) const
{
	auto it = d_.find(n);
	return it == d_.end() ? GradedMap::zero(term(n), term(n + 1)) : it->second;
}

std::vector<Bidegree> ComplexObject::basis() const
{
	std::vector<Bidegree> out;
	for (auto const &[n, x] : terms_)
		for (int d : x.basis_degrees())
			out.push_back({n, d});
	return out;
}

MatrixQ ComplexObject::total_differential() const
{
	std::map<int, std::size_t> offset;
	std::size_t total = 0;
	for (auto const &[n, x] : terms_)
	{
		offset[n] = total;
		total += x.total_dim();
	}
	MatrixQ m(total, total);
	for (auto const &[n, d] : d_)
	{
		MatrixQ b = d.dense();
		std::size_t r0 = offset.at(n + 1), c0 = offset.at(n);
		for (std::size_t i = 0; i < b.rows(); ++i)
			for (std::size_t j = 0; j < b.cols(); ++j)
				m(r0 + i, c0 + j) = b(i, j);
	}
	return m;
}

ComplexObject ComplexObject::shifted(int k) const
{
	std::map<int, GradedObject> terms;
	std::map<int, GradedMap> d;
	for (auto const &[n, x] : terms_)
		terms.emplace(n - k, x);
	Rational sign = k % 2 ? -1 : 1;
	for (auto const &[n, f] : d_)
		d.emplace(n - k, sign * f);
	return ComplexObject(std::move(terms), std::move(d));
}

std::map<int, GradedObject> cohomology(ComplexObject const &z)
{
	std::map<int, GradedObject> out;
	for (auto const &[n, x] : z.terms())
	{
		GradedMap out_d = z.differential(n), in_d = z.differential(n - 1);
		std::map<int, int> dims;
		for (auto const &[i, dim] : x.dims())
		{
			long h = dim - static_cast<long>(rank(out_d.block(i))) - static_cast<long>(rank(in_d.block(i)));
			if (h > 0)
				dims[i] = static_cast<int>(h);
		}
		if (!dims.empty())
			out.emplace(n, GradedObject(dims));
	}
	return out;
}

ComplexObject gr_S(ComplexObject const &z) { return ComplexObject(z.terms(), {}); }

ComplexObject gr_tau(ComplexObject const &z) { return ComplexObject(cohomology(z), {}); }

namespace {

MatrixQ block_diagonal(MatrixQ const &a, MatrixQ const &b)
{
	MatrixQ m(a.rows() + b.rows(), a.cols() + b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			m(i, j) = a(i, j);
	for (std::size_t i = 0; i < b.rows(); ++i)
		for (std::size_t j = 0; j < b.cols(); ++j)
			m(a.rows() + i, a.cols() + j) = b(i, j);
	return m;
}

} // namespace

ComplexObject direct_sum(ComplexObject const &a, ComplexObject const &b)
{
	std::map<int, GradedObject> terms;
	for (auto const &[n, x] : a.terms())
		terms[n] = x;
	for (auto const &[n, x] : b.terms())
		terms[n] = terms[n] + x;
	std::map<int, GradedMap> d;
	for (auto const &[n, x] : terms)
	{
		GradedObject src = x, dst = terms.count(n + 1) ? terms.at(n + 1) : GradedObject();
		GradedMap da = a.differential(n), db = b.differential(n);
		std::map<int, MatrixQ> blocks;
		for (auto const &[i, dim] : src.dims())
			if (dst.dim(i) > 0)
				blocks.emplace(i, block_diagonal(da.block(i), db.block(i)));
		d.emplace(n, GradedMap(src, dst, std::move(blocks)));
	}
	return ComplexObject(std::move(terms), std::move(d));
}

kernels::BidegreeDims schur_complex_cohomology(ComplexObject const &z, Partition const &pi, std::size_t bound)
{
	auto basis = z.basis();
	int n = pi.size();
	std::size_t dim = basis.size(), total = 1;
	for (int i = 0; i < n; ++i)
	{
		total *= dim;
		if (total > bound)
			fail(ErrorKind::BoundExceeded, "(dim Z)^n exceeds bound " + std::to_string(bound));
	}
	MatrixQ dz = z.total_differential();

	// multi-indices, grouped by bidegree
	std::vector<std::vector<int>> index(total, std::vector<int>(n));
	std::map<Bidegree, std::vector<std::size_t>> by_degree;
	std::vector<Bidegree> degree_of(total);
	for (std::size_t code = 0; code < total; ++code)
	{
		std::size_t c = code;
		Bidegree b;
		for (int p = n - 1; p >= 0; --p)
		{
			index[code][p] = static_cast<int>(c % dim);
			c /= dim;
			b = b + basis[index[code][p]];
		}
		degree_of[code] = b;
		by_degree[b].push_back(code);
	}
	auto encode = [&](std::vector<int> const &v) {
		std::size_t code = 0;
		for (int x : v)
			code = code * dim + static_cast<std::size_t>(x);
		return code;
	};
	std::map<std::size_t, std::size_t> local; // code -> position within its bidegree
	for (auto const &[b, codes] : by_degree)
		for (std::size_t k = 0; k < codes.size(); ++k)
			local[codes[k]] = k;

	auto perms = all_permutations(n);
	std::vector<long> chi(perms.size());
	for (std::size_t s = 0; s < perms.size(); ++s)
		chi[s] = character(pi, perms[s].cycle_type());
	long chi1 = pi.dimension().get_si();

	// image of the (unnormalized) isotypic projector, per bidegree
	std::map<Bidegree, MatrixQ> image;
	std::vector<int> target(n), par(n);
	for (auto const &[b, codes] : by_degree)
	{
		MatrixQ p(codes.size(), codes.size());
		for (std::size_t col = 0; col < codes.size(); ++col)
		{
			auto const &v = index[codes[col]];
			for (int m = 0; m < n; ++m)
				par[m] = basis[v[m]].parity();
			for (std::size_t s = 0; s < perms.size(); ++s)
			{
				if (chi[s] == 0)
					continue;
				for (int m = 0; m < n; ++m)
					target[perms[s](m)] = v[m];
				p(local.at(encode(target)), col) += Rational(chi[s] * kernels::koszul_sign(perms[s], par));
			}
		}
		MatrixQ img = p.select_columns(independent_columns(p));
		if (img.cols() > 0)
			image.emplace(b, std::move(img));
	}

	// D on a vector of bidegree b, landing in bidegree b + (1, 0)
	auto apply_d = [&](Bidegree b, MatrixQ const &vecs) {
		Bidegree up{b.homological + 1, b.internal};
		auto it = by_degree.find(up);
		MatrixQ out(it == by_degree.end() ? 0 : it->second.size(), vecs.cols());
		if (it == by_degree.end())
			return out;
		auto const &codes = by_degree.at(b);
		std::vector<int> w(n);
		for (std::size_t row = 0; row < codes.size(); ++row)
		{
			auto const &v = index[codes[row]];
			int sign = 1;
			for (int m = 0; m < n; ++m)
			{
				for (std::size_t j = 0; j < dim; ++j)
				{
					Rational const &entry = dz(j, v[m]);
					if (entry.is_zero())
						continue;
					w = v;
					w[m] = static_cast<int>(j);
					std::size_t r = local.at(encode(w));
					Rational c = sign > 0 ? entry : -entry;
					for (std::size_t k = 0; k < vecs.cols(); ++k)
						if (!vecs(row, k).is_zero())
							out(r, k) += c * vecs(row, k);
				}
				if (basis[v[m]].parity())
					sign = -sign;
			}
		}
		return out;
	};

	std::map<Bidegree, long> d_rank;
	for (auto const &[b, img] : image)
		d_rank[b] = static_cast<long>(rank(apply_d(b, img)));

	kernels::BidegreeDims dims;
	for (auto const &[b, img] : image)
	{
		Bidegree down{b.homological - 1, b.internal};
		long h = static_cast<long>(img.cols()) - d_rank[b] - (d_rank.count(down) ? d_rank.at(down) : 0);
		if (h % chi1 != 0)
			fail(ErrorKind::NonIntegral, "cohomology rank is not divisible by the character degree");
		if (h > 0)
			dims[b] = h / chi1;
	}
	return dims;
}

EquivariantComplex::EquivariantComplex(std::map<int, GObject> terms, std::map<int, GradedMap> differentials)
	: terms_(std::move(terms)), d_(std::move(differentials))
{
	if (terms_.empty())
		fail(ErrorKind::InvalidArgument, "equivariant complex needs at least one term");
	group_ = terms_.begin()->second.group();
	for (auto const &[n, x] : terms_)
		if (x.group() != group_ && x.group()->name() != group_->name())
			fail(ErrorKind::GroupMismatch, "terms carry actions of different groups");
	for (auto const &[n, d] : d_)
	{
		auto src = terms_.find(n), dst = terms_.find(n + 1);
		if (src == terms_.end() || dst == terms_.end())
		{
			if (!d.is_zero())
				fail(ErrorKind::SizeMismatch, "nonzero differential out of or into a missing term");
			continue;
		}
		if (!is_equivariant(src->second, dst->second, d))
			fail(ErrorKind::NotEquivariant, "d^" + std::to_string(n) + " does not commute with the action");
	}
	underlying(); // validates d d = 0
}

ComplexObject EquivariantComplex::underlying() const
{
	std::map<int, GradedObject> terms;
	for (auto const &[n, x] : terms_)
		terms.emplace(n, x.object());
	std::map<int, GradedMap> d;
	for (auto const &[n, f] : d_)
		if (terms_.count(n) && terms_.count(n + 1))
			d.emplace(n, f);
	return ComplexObject(std::move(terms), std::move(d));
}

std::map<int, GObject> cohomology(EquivariantComplex const &z)
{
	ComplexObject u = z.underlying();
	std::map<int, GObject> out;
	int order = z.group()->size();
	for (auto const &[n, x] : z.terms())
	{
		GradedMap out_d = u.differential(n), in_d = u.differential(n - 1);
		std::map<int, int> dims;
		std::map<int, std::vector<MatrixQ>> blocks; // degree -> action matrix per element
		for (auto const &[i, dim] : x.object().dims())
		{
			MatrixQ ker = nullspace(out_d.block(i));
			if (ker.cols() == 0)
				continue;
			MatrixQ in = in_d.block(i);
			MatrixQ img = in.select_columns(independent_columns(in));
			MatrixQ img_k = solve(ker, img); // image in kernel coordinates
			std::size_t k = ker.cols(), r = img_k.cols();
			if (k == r)
				continue;
			// complement of the image spanned by standard vectors of the kernel
			MatrixQ ext(k, r + k);
			for (std::size_t a = 0; a < k; ++a)
			{
				for (std::size_t b = 0; b < r; ++b)
					ext(a, b) = img_k(a, b);
				ext(a, r + a) = 1;
			}
			auto cols = independent_columns(ext);
			MatrixQ frame = ext.select_columns(cols);
			std::vector<std::size_t> comp(cols.begin() + static_cast<long>(r), cols.end());
			MatrixQ complement = ext.select_columns(comp);
			dims[i] = static_cast<int>(comp.size());
			for (int g = 0; g < order; ++g)
			{
				MatrixQ on_ker = solve(ker, x.action(g).block(i) * ker);
				MatrixQ coords = solve(frame, on_ker * complement);
				std::vector<std::size_t> rows;
				for (std::size_t a = r; a < frame.cols(); ++a)
					rows.push_back(a);
				blocks[i].push_back(coords.select_rows(rows));
			}
		}
		if (dims.empty())
			continue;
		GradedObject h(dims);
		std::vector<GradedMap> action;
		for (int g = 0; g < order; ++g)
		{
			std::map<int, MatrixQ> b;
			for (auto const &[i, mats] : blocks)
				b.emplace(i, mats[g]);
			action.emplace_back(h, h, std::move(b));
		}
		out.emplace(n, GObject(h, z.group(), std::move(action), GObject::Check::no));
	}
	return out;
}

} // namespace schurforge
