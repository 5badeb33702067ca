#include "schurforge/graded.hpp"

#include "schurforge/error.hpp"
#include "text.hpp"

#include <algorithm>

namespace schurforge {

GradedObject::GradedObject(std::map<int, int> dims)
{
	for (auto const &[d, n] : dims)
	{
		if (n < 0)
			fail(ErrorKind::InvalidArgument, "negative dimension in degree " + std::to_string(d));
		if (n > 0)
			dims_.emplace(d, n);
	}
}

GradedObject GradedObject::parse(std::string_view input)
{
	std::string s = text::remove_spaces(input);
	if (s.size() < 2 || s.front() != '{' || s.back() != '}')
		text::parse_error("graded object must be written {degree:dim, ...}", input);
	s = s.substr(1, s.size() - 2);
	std::map<int, int> dims;
	std::size_t pos = 0;
	while (pos < s.size())
	{
		auto comma = s.find(',', pos);
		std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
		auto colon = item.find(':');
		if (colon == std::string::npos)
			text::parse_error("expected degree:dim", input);
		int d = static_cast<int>(text::parse_long(item.substr(0, colon)));
		long n = text::parse_long(item.substr(colon + 1));
		if (n < 0)
			text::parse_error("negative dimension", input);
		dims[d] += static_cast<int>(n);
		if (comma == std::string::npos)
			break;
		pos = comma + 1;
	}
	return GradedObject(std::move(dims));
}

int GradedObject::dim(int degree) const
{
	auto it = dims_.find(degree);
	return it == dims_.end() ? 0 : it->second;
}

int GradedObject::total_dim() const
{
	int n = 0;
	for (auto const &[d, k] : dims_)
		n += k;
	return n;
}

bool GradedObject::is_even() const
{
	return std::all_of(dims_.begin(), dims_.end(), [](auto const &e) { return e.first % 2 == 0; });
}

std::vector<int> GradedObject::basis_degrees() const
{
	std::vector<int> out;
	for (auto const &[d, k] : dims_)
		out.insert(out.end(), k, d);
	return out;
}

int GradedObject::offset(int degree) const
{
	int n = 0;
	for (auto const &[d, k] : dims_)
		if (d < degree)
			n += k;
	return n;
}

GradedObject GradedObject::shifted(int k) const
{
	std::map<int, int> dims;
	for (auto const &[d, n] : dims_)
		dims.emplace(d + k, n);
	return GradedObject(std::move(dims));
}

std::string GradedObject::str() const
{
	std::string out = "{";
	bool first = true;
	for (auto const &[d, n] : dims_)
	{
		out += (first ? "" : ", ") + std::to_string(d) + ":" + std::to_string(n);
		first = false;
	}
	return out + "}";
}

GradedObject operator+(GradedObject const &a, GradedObject const &b)
{
	std::map<int, int> dims = a.dims_;
	for (auto const &[d, n] : b.dims_)
		dims[d] += n;
	return GradedObject(std::move(dims));
}

GradedObject tensor(GradedObject const &x, GradedObject const &y)
{
	std::map<int, int> dims;
	for (auto const &[d, n] : x.dims())
		for (auto const &[e, m] : y.dims())
			dims[d + e] += n * m;
	return GradedObject(std::move(dims));
}

std::vector<std::pair<int, int>> tensor_basis(GradedObject const &x, GradedObject const &y)
{
	auto dx = x.basis_degrees(), dy = y.basis_degrees();
	std::vector<std::pair<int, int>> out;
	for (int i = 0; i < static_cast<int>(dx.size()); ++i)
		for (int j = 0; j < static_cast<int>(dy.size()); ++j)
			out.emplace_back(i, j);
	std::stable_sort(out.begin(), out.end(),
	                 [&](auto const &a, auto const &b) { return dx[a.first] + dy[a.second] < dx[b.first] + dy[b.second]; });
	return out;
}

GradedMap::GradedMap(GradedObject source, GradedObject target, std::map<int, MatrixQ> blocks)
	: source_(std::move(source)), target_(std::move(target))
{
	for (auto &[d, m] : blocks)
	{
		auto rows = static_cast<std::size_t>(target_.dim(d)), cols = static_cast<std::size_t>(source_.dim(d));
		if (m.rows() != rows || m.cols() != cols)
			fail(ErrorKind::SizeMismatch, "block in degree " + std::to_string(d) + " has the wrong shape");
	}
	for (auto const &[d, n] : source_.dims())
	{
		int t = target_.dim(d);
		if (t == 0)
			continue;
		auto it = blocks.find(d);
		blocks_.emplace(d, it == blocks.end() ? MatrixQ(t, n) : std::move(it->second));
	}
}

GradedMap GradedMap::identity(GradedObject const &x)
{
	std::map<int, MatrixQ> blocks;
	for (auto const &[d, n] : x.dims())
		blocks.emplace(d, MatrixQ::identity(n));
	return GradedMap(x, x, std::move(blocks));
}

GradedMap GradedMap::zero(GradedObject const &source, GradedObject const &target)
{
	return GradedMap(source, target, {});
}

GradedMap GradedMap::from_dense(GradedObject const &source, GradedObject const &target, MatrixQ const &m)
{
	auto sd = source.basis_degrees(), td = target.basis_degrees();
	if (m.rows() != td.size() || m.cols() != sd.size())
		fail(ErrorKind::SizeMismatch, "dense matrix does not match the graded objects");
	std::map<int, MatrixQ> blocks;
	for (std::size_t i = 0; i < td.size(); ++i)
		for (std::size_t j = 0; j < sd.size(); ++j)
		{
			if (m(i, j).is_zero())
				continue;
			if (td[i] != sd[j])
				fail(ErrorKind::InvalidArgument, "matrix does not preserve degree");
			int d = td[i];
			auto it = blocks.find(d);
			if (it == blocks.end())
				it = blocks.emplace(d, MatrixQ(target.dim(d), source.dim(d))).first;
			it->second(i - target.offset(d), j - source.offset(d)) = m(i, j);
		}
	return GradedMap(source, target, std::move(blocks));
}

MatrixQ GradedMap::block(int degree) const
{
	auto it = blocks_.find(degree);
	if (it != blocks_.end())
		return it->second;
	return MatrixQ(target_.dim(degree), source_.dim(degree));
}

MatrixQ GradedMap::dense() const
{
	MatrixQ m(target_.total_dim(), source_.total_dim());
	for (auto const &[d, b] : blocks_)
	{
		std::size_t r0 = target_.offset(d), c0 = source_.offset(d);
		for (std::size_t i = 0; i < b.rows(); ++i)
			for (std::size_t j = 0; j < b.cols(); ++j)
				m(r0 + i, c0 + j) = b(i, j);
	}
	return m;
}

bool GradedMap::is_zero() const
{
	return std::all_of(blocks_.begin(), blocks_.end(), [](auto const &e) { return e.second.is_zero(); });
}

GradedMap operator*(GradedMap const &g, GradedMap const &f)
{
	if (!(f.target_ == g.source_))
		fail(ErrorKind::SizeMismatch, "composition of maps whose objects do not match");
	std::map<int, MatrixQ> blocks;
	for (auto const &[d, fb] : f.blocks_)
	{
		auto it = g.blocks_.find(d);
		if (it != g.blocks_.end())
			blocks.emplace(d, it->second * fb);
	}
	return GradedMap(f.source_, g.target_, std::move(blocks));
}

GradedMap operator+(GradedMap const &a, GradedMap const &b)
{
	if (!(a.source_ == b.source_) || !(a.target_ == b.target_))
		fail(ErrorKind::SizeMismatch, "sum of maps between different objects");
	std::map<int, MatrixQ> blocks = a.blocks_;
	for (auto const &[d, m] : b.blocks_)
		blocks[d] = blocks[d] + m;
	return GradedMap(a.source_, a.target_, std::move(blocks));
}

GradedMap operator*(Rational const &s, GradedMap const &f)
{
	std::map<int, MatrixQ> blocks;
	for (auto const &[d, m] : f.blocks_)
		blocks.emplace(d, s * m);
	return GradedMap(f.source_, f.target_, std::move(blocks));
}

bool operator==(GradedMap const &a, GradedMap const &b)
{
	return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

GradedMap tensor(GradedMap const &f, GradedMap const &g)
{
	MatrixQ k = kron(f.dense(), g.dense());
	auto rows = tensor_basis(f.target(), g.target());
	auto cols = tensor_basis(f.source(), g.source());
	std::size_t gr = g.target().total_dim(), gc = g.source().total_dim();
	MatrixQ m(rows.size(), cols.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (std::size_t j = 0; j < cols.size(); ++j)
			m(i, j) = k(rows[i].first * gr + rows[i].second, cols[j].first * gc + cols[j].second);
	return GradedMap::from_dense(tensor(f.source(), g.source()), tensor(f.target(), g.target()), m);
}

Rational categorical_trace(GradedMap const &f)
{
	if (!f.is_endomorphism())
		fail(ErrorKind::NotEndomorphism, "trace of a map between different objects");
	Rational t;
	for (auto const &[d, m] : f.blocks())
		t += d % 2 ? -m.trace() : m.trace();
	return t;
}

LaurentZ graded_trace(GradedMap const &f)
{
	if (!f.is_endomorphism())
		fail(ErrorKind::NotEndomorphism, "trace of a map between different objects");
	LaurentZ t;
	for (auto const &[d, m] : f.blocks())
	{
		Rational tr = m.trace();
		if (!tr.is_integer())
			fail(ErrorKind::NonIntegral, "block trace " + tr.str() + " is not an integer");
		t.add_term(d, d % 2 ? BigInt(-tr.num()) : tr.num());
	}
	return t;
}

} // namespace schurforge
