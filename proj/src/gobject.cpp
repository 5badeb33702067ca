#include "schurforge/gobject.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"
#include "schurforge/kernels.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace schurforge {

GObject::GObject(GradedObject object, GroupPtr group, std::vector<GradedMap> action, Check check)
	: object_(std::move(object)), group_(std::move(group)), action_(std::move(action))
{
	if (!group_)
		fail(ErrorKind::InvalidArgument, "G-object without a group");
	if (static_cast<int>(action_.size()) != group_->size())
		fail(ErrorKind::SizeMismatch, "need one action map per group element");
	for (auto const &a : action_)
		if (!(a.source() == object_) || !(a.target() == object_))
			fail(ErrorKind::NotEndomorphism, "action map is not an endomorphism of the object");
	if (check == Check::no)
		return;
	if (!(action_[group_->identity()] == GradedMap::identity(object_)))
		fail(ErrorKind::InvalidArgument, "identity element does not act as the identity");
	for (int g = 0; g < group_->size(); ++g)
		for (int h = 0; h < group_->size(); ++h)
			if (!(action_[g] * action_[h] == action_[group_->mul(g, h)]))
				fail(ErrorKind::InvalidArgument,
				     "action is not a homomorphism at (" + group_->label(g) + ", " + group_->label(h) + ")");
}

GObject GObject::trivial(GradedObject const &object, GroupPtr group)
{
	std::vector<GradedMap> action(group->size(), GradedMap::identity(object));
	return GObject(object, std::move(group), std::move(action), Check::no);
}

namespace {

void same_group(GObject const &x, GObject const &y)
{
	if (x.group() != y.group() && x.group()->name() != y.group()->name())
		fail(ErrorKind::GroupMismatch, "objects carry actions of " + x.group()->name() + " and " + y.group()->name());
}

} // namespace

GObject tensor(GObject const &x, GObject const &y)
{
	same_group(x, y);
	std::vector<GradedMap> action;
	for (int g = 0; g < x.group()->size(); ++g)
		action.push_back(tensor(x.action(g), y.action(g)));
	return GObject(tensor(x.object(), y.object()), x.group(), std::move(action), GObject::Check::no);
}

GObject direct_sum(GObject const &x, GObject const &y)
{
	same_group(x, y);
	GradedObject sum = x.object() + y.object();
	std::vector<GradedMap> action;
	for (int g = 0; g < x.group()->size(); ++g)
	{
		std::map<int, MatrixQ> blocks;
		for (auto const &[d, n] : sum.dims())
		{
			MatrixQ a = x.action(g).block(d), b = y.action(g).block(d), m(n, n);
			for (std::size_t i = 0; i < a.rows(); ++i)
				for (std::size_t j = 0; j < a.cols(); ++j)
					m(i, j) = a(i, j);
			for (std::size_t i = 0; i < b.rows(); ++i)
				for (std::size_t j = 0; j < b.cols(); ++j)
					m(a.rows() + i, a.cols() + j) = b(i, j);
			blocks.emplace(d, std::move(m));
		}
		action.emplace_back(sum, sum, std::move(blocks));
	}
	return GObject(sum, x.group(), std::move(action), GObject::Check::no);
}

bool is_equivariant(GObject const &x, GObject const &y, GradedMap const &f)
{
	same_group(x, y);
	if (!(f.source() == x.object()) || !(f.target() == y.object()))
		fail(ErrorKind::SizeMismatch, "map does not go between the given objects");
	for (int g = 0; g < x.group()->size(); ++g)
		if (!(f * x.action(g) == y.action(g) * f))
			return false;
	return true;
}

GObject equivariant_kernel(GObject const &x, GObject const &y, GradedMap const &f)
{
	if (!is_equivariant(x, y, f))
		fail(ErrorKind::NotEquivariant, "map does not commute with the group action");
	std::map<int, MatrixQ> bases;
	std::map<int, int> dims;
	for (auto const &[d, n] : x.object().dims())
	{
		MatrixQ k = nullspace(f.block(d));
		if (k.cols() > 0)
		{
			dims[d] = static_cast<int>(k.cols());
			bases.emplace(d, std::move(k));
		}
	}
	GradedObject ker(dims);
	std::vector<GradedMap> action;
	for (int g = 0; g < x.group()->size(); ++g)
	{
		std::map<int, MatrixQ> blocks;
		for (auto const &[d, b] : bases)
			blocks.emplace(d, solve(b, x.action(g).block(d) * b));
		action.emplace_back(ker, ker, std::move(blocks));
	}
	return GObject(ker, x.group(), std::move(action), GObject::Check::no);
}

GObject sym_action(GradedObject const &x, int n, std::size_t bound)
{
	if (n < 0)
		fail(ErrorKind::InvalidArgument, "negative tensor power");
	auto deg = x.basis_degrees();
	std::size_t d = deg.size(), total = 1;
	for (int i = 0; i < n; ++i)
	{
		total *= d;
		if (total > bound)
			fail(ErrorKind::BoundExceeded,
			     "tensor power of dimension " + std::to_string(d) + "^" + std::to_string(n) + " exceeds bound " +
			         std::to_string(bound));
	}
	// multi-indices in lexicographic order, then stably sorted by degree
	std::vector<std::vector<int>> basis;
	std::vector<int> idx(n, 0);
	for (std::size_t code = 0; code < total; ++code)
	{
		std::size_t c = code;
		for (int p = n - 1; p >= 0; --p)
		{
			idx[p] = static_cast<int>(c % d);
			c /= d;
		}
		basis.push_back(idx);
	}
	auto degree_of = [&](std::vector<int> const &v) {
		int s = 0;
		for (int i : v)
			s += deg[i];
		return s;
	};
	std::stable_sort(basis.begin(), basis.end(),
	                 [&](auto const &a, auto const &b) { return degree_of(a) < degree_of(b); });
	std::map<std::vector<int>, std::size_t> position;
	for (std::size_t i = 0; i < basis.size(); ++i)
		position.emplace(basis[i], i);

	GradedObject power = GradedObject::unit();
	for (int i = 0; i < n; ++i)
		power = tensor(power, x);
	auto group = FiniteGroup::symmetric(n);
	std::vector<GradedMap> action;
	std::vector<int> target(n), parities(n);
	for (int g = 0; g < group->size(); ++g)
	{
		Permutation const &sigma = group->permutation(g);
		MatrixQ m(total, total);
		for (std::size_t col = 0; col < total; ++col)
		{
			auto const &v = basis[col];
			for (int p = 0; p < n; ++p)
			{
				target[sigma(p)] = v[p];
				parities[p] = ((deg[v[p]] % 2) + 2) % 2;
			}
			m(position.at(target), col) = kernels::koszul_sign(sigma, parities);
		}
		action.push_back(GradedMap::from_dense(power, power, m));
	}
	return GObject(power, group, std::move(action), GObject::Check::no);
}

namespace {

// Q[S_n] elements as coordinate vectors over all_permutations(n).
struct GroupAlgebraCoords
{
	std::vector<Permutation> perms;
	std::map<Permutation, std::size_t> index;

	explicit GroupAlgebraCoords(int n) : perms(all_permutations(n))
	{
		for (std::size_t i = 0; i < perms.size(); ++i)
			index.emplace(perms[i], i);
	}

	MatrixQ column(GroupAlgebraElement const &a) const
	{
		MatrixQ v(perms.size(), 1);
		for (auto const &[s, c] : a.terms())
			v(index.at(s), 0) = c;
		return v;
	}
};

GroupAlgebraElement young_symmetrizer(Partition const &pi)
{
	int n = pi.size();
	std::vector<int> row_of(n), col_of(n);
	for (int i = 0, cell = 0; i < pi.length(); ++i)
		for (int j = 0; j < pi[i]; ++j, ++cell)
		{
			row_of[cell] = i;
			col_of[cell] = j;
		}
	GroupAlgebraElement rows(n), cols(n);
	for (auto const &s : all_permutations(n))
	{
		bool keeps_rows = true, keeps_cols = true;
		for (int c = 0; c < n; ++c)
		{
			keeps_rows = keeps_rows && row_of[s(c)] == row_of[c];
			keeps_cols = keeps_cols && col_of[s(c)] == col_of[c];
		}
		if (keeps_rows)
			rows.add(s, 1);
		if (keeps_cols)
			cols.add(s, s.sign());
	}
	return rows * cols;
}

} // namespace

GObject irreducible_representation(Partition const &pi)
{
	int n = pi.size();
	GroupAlgebraCoords coords(n);
	GroupAlgebraElement c = young_symmetrizer(pi);
	std::size_t N = coords.perms.size();
	MatrixQ span(N, N);
	for (std::size_t k = 0; k < N; ++k)
	{
		GroupAlgebraElement s(n);
		s.add(coords.perms[k], 1);
		MatrixQ v = coords.column(s * c);
		for (std::size_t i = 0; i < N; ++i)
			span(i, k) = v(i, 0);
	}
	MatrixQ basis = span.select_columns(independent_columns(span));
	if (BigInt(static_cast<long>(basis.cols())) != pi.dimension())
		fail(ErrorKind::InvalidArgument, "Young symmetrizer ideal has the wrong dimension");
	GradedObject obj(std::map<int, int>{{0, static_cast<int>(basis.cols())}});
	auto group = FiniteGroup::symmetric(n);
	std::vector<GradedMap> action;
	for (int g = 0; g < group->size(); ++g)
	{
		// left multiplication by g permutes coordinates: s -> g s
		MatrixQ moved(N, basis.cols());
		Permutation const &p = group->permutation(g);
		for (std::size_t i = 0; i < N; ++i)
		{
			std::size_t target = coords.index.at(p * coords.perms[i]);
			for (std::size_t j = 0; j < basis.cols(); ++j)
				moved(target, j) = basis(i, j);
		}
		action.emplace_back(obj, obj, std::map<int, MatrixQ>{{0, solve(basis, moved)}});
	}
	return GObject(obj, group, std::move(action), GObject::Check::no);
}

namespace {

GObject permutation_action(GroupPtr const &group, int degree)
{
	GradedObject obj(std::map<int, int>{{0, degree}});
	std::vector<GradedMap> action;
	for (int g = 0; g < group->size(); ++g)
	{
		MatrixQ m(degree, degree);
		Permutation const &p = group->permutation(g);
		for (int i = 0; i < degree; ++i)
			m(p(i), i) = 1;
		action.emplace_back(obj, obj, std::map<int, MatrixQ>{{0, m}});
	}
	return GObject(obj, group, std::move(action), GObject::Check::no);
}

GObject regular_action(GroupPtr const &group)
{
	int n = group->size();
	GradedObject obj(std::map<int, int>{{0, n}});
	std::vector<GradedMap> action;
	for (int g = 0; g < n; ++g)
	{
		MatrixQ m(n, n);
		for (int h = 0; h < n; ++h)
			m(group->mul(g, h), h) = 1;
		action.emplace_back(obj, obj, std::map<int, MatrixQ>{{0, m}});
	}
	return GObject(obj, group, std::move(action), GObject::Check::no);
}

GObject sign_action(GroupPtr const &group)
{
	GradedObject obj = GradedObject::unit();
	std::vector<GradedMap> action;
	for (int g = 0; g < group->size(); ++g)
		action.emplace_back(obj, obj, std::map<int, MatrixQ>{{0, MatrixQ{{group->permutation(g).sign()}}}});
	return GObject(obj, group, std::move(action), GObject::Check::no);
}

} // namespace

GObject preset(std::string_view name)
{
	auto colon = name.find(':');
	if (colon == std::string_view::npos)
		fail(ErrorKind::Parse, "preset must look like kind:groupN, got \"" + std::string(name) + "\"");
	std::string kind(name.substr(0, colon)), grp(name.substr(colon + 1));
	auto number = [&](std::size_t prefix) {
		std::string digits = grp.substr(prefix);
		if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
			fail(ErrorKind::Parse, "bad group in preset \"" + std::string(name) + "\"");
		int n = std::stoi(digits);
		if (n < 1 || n > 6)
			fail(ErrorKind::BoundExceeded, "preset groups are limited to degree 1..6");
		return n;
	};
	if (grp.rfind("sym", 0) == 0)
	{
		int n = number(3);
		auto group = FiniteGroup::symmetric(n);
		if (kind == "perm")
			return permutation_action(group, n);
		if (kind == "sign")
			return sign_action(group);
		if (kind == "twisted")
			return tensor(permutation_action(group, n), sign_action(group));
		if (kind == "trivial")
			return GObject::trivial(GradedObject::unit(), group);
		if (kind == "reg")
			return regular_action(group);
	}
	else if (grp.rfind("cyc", 0) == 0)
	{
		int n = number(3);
		auto group = FiniteGroup::cyclic(n);
		if (kind == "reg")
			return regular_action(group);
		if (kind == "perm")
			return permutation_action(group, n);
		if (kind == "trivial")
			return GObject::trivial(GradedObject::unit(), group);
	}
	fail(ErrorKind::Parse, "unknown preset \"" + std::string(name) + "\"");
}

namespace {

Rational json_rational(nlohmann::json const &v)
{
	if (v.is_number_integer())
		return Rational(v.get<long>());
	if (v.is_string())
		return Rational::parse(v.get<std::string>());
	fail(ErrorKind::Parse, "matrix entries must be integers or \"p/q\" strings");
}

GroupPtr json_group(nlohmann::json const &g)
{
	if (g.contains("symmetric"))
		return FiniteGroup::symmetric(g.at("symmetric").get<int>());
	if (g.contains("cyclic"))
		return FiniteGroup::cyclic(g.at("cyclic").get<int>());
	if (g.contains("elements") && g.contains("table"))
		return std::make_shared<FiniteGroup const>("G", g.at("elements").get<std::vector<std::string>>(),
		                                           g.at("table").get<std::vector<std::vector<int>>>());
	fail(ErrorKind::Parse, "group must give \"symmetric\", \"cyclic\" or \"elements\" and \"table\"");
}

} // namespace

GObject parse_gobject_json(std::string const &text)
{
	nlohmann::json doc;
	try
	{
		doc = nlohmann::json::parse(text);
	}
	catch (nlohmann::json::exception const &e)
	{
		fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
	}
	try
	{
		GroupPtr group = json_group(doc.at("group"));
		std::map<int, int> dims;
		for (auto const &[k, v] : doc.at("dims").items())
			dims[std::stoi(k)] += v.get<int>();
		GradedObject obj(dims);
		if (!doc.contains("action"))
			return GObject::trivial(obj, group);
		auto const &acts = doc.at("action");
		if (!acts.is_array() || static_cast<int>(acts.size()) != group->size())
			fail(ErrorKind::SizeMismatch, "\"action\" needs one entry per group element");
		std::vector<GradedMap> action;
		for (auto const &a : acts)
		{
			std::map<int, MatrixQ> blocks;
			for (auto const &[d, n] : obj.dims())
			{
				std::string key = std::to_string(d);
				if (!a.contains(key))
					fail(ErrorKind::Parse, "action entry is missing degree " + key);
				auto const &rows = a.at(key);
				if (!rows.is_array() || static_cast<int>(rows.size()) != n)
					fail(ErrorKind::SizeMismatch, "block in degree " + key + " has the wrong number of rows");
				MatrixQ m(n, n);
				for (int i = 0; i < n; ++i)
				{
					if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
						fail(ErrorKind::SizeMismatch, "block in degree " + key + " has a row of the wrong length");
					for (int j = 0; j < n; ++j)
						m(i, j) = json_rational(rows[i][j]);
				}
				blocks.emplace(d, std::move(m));
			}
			action.emplace_back(obj, obj, std::move(blocks));
		}
		return GObject(obj, group, std::move(action));
	}
	catch (nlohmann::json::exception const &e)
	{
		fail(ErrorKind::Parse, std::string("malformed G-object JSON: ") + e.what());
	}
	catch (std::invalid_argument const &)
	{
		fail(ErrorKind::Parse, "degree keys must be integers");
	}
}

} // namespace schurforge
