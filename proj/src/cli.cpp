#include "schurforge/cli.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"
#include "schurforge/rep_ring.hpp"
#include "schurforge/schur_functor.hpp"
#include "schurforge/symfunc.hpp"
#include "schurforge/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace schurforge::cli {

namespace {

using json = nlohmann::ordered_json;

std::string label(Partition const &pi) { return pi.empty() ? "[]" : "[" + pi.str() + "]"; }

json parts(Partition const &pi) { return json(pi.parts()); }

struct Globals
{
	bool json_mode = false;
	std::uint64_t seed = verify::kDefaultSeed;
	std::size_t bound = kDefaultTensorBound;
};

GObject load_rep(std::string const &source)
{
	if (std::filesystem::is_regular_file(source))
	{
		std::ifstream in(source);
		std::stringstream buffer;
		buffer << in.rdbuf();
		return parse_gobject_json(buffer.str());
	}
	return preset(source);
}

SymFunc parse_schur_argument(std::string const &text)
{
	if (text.find('s') != std::string::npos)
		return SymFunc::parse(text);
	return SymFunc::schur(Partition::parse(text));
}

int cmd_partitions(Globals const &g, int n, std::ostream &out)
{
	if (n < 0)
		fail(ErrorKind::InvalidArgument, "partitions of a negative number");
	auto ps = partitions_of(n);
	if (g.json_mode)
	{
		json list = json::array();
		for (auto const &pi : ps)
			list.push_back(parts(pi));
		out << json{{"n", n}, {"count", ps.size()}, {"partitions", list}}.dump() << '\n';
		return 0;
	}
	for (auto const &pi : ps)
		out << label(pi) << '\n';
	return 0;
}

int cmd_char_table(Globals const &g, int n, std::ostream &out)
{
	auto t = character_table(n);
	if (g.json_mode)
	{
		json labels = json::array(), sizes = json::array();
		for (std::size_t i = 0; i < t->labels.size(); ++i)
		{
			labels.push_back(parts(t->labels[i]));
			sizes.push_back(to_string(t->class_sizes[i]));
		}
		out << json{{"n", n}, {"labels", labels}, {"class_sizes", sizes}, {"values", t->values}}.dump() << '\n';
		return 0;
	}
	std::vector<std::string> header{""};
	for (auto const &mu : t->labels)
		header.push_back(label(mu));
	std::vector<std::vector<std::string>> rows{header};
	for (std::size_t i = 0; i < t->labels.size(); ++i)
	{
		std::vector<std::string> row{label(t->labels[i])};
		for (long v : t->values[i])
			row.push_back(std::to_string(v));
		rows.push_back(row);
	}
	std::vector<std::size_t> width(header.size(), 0);
	for (auto const &row : rows)
		for (std::size_t j = 0; j < row.size(); ++j)
			width[j] = std::max(width[j], row[j].size());
	for (auto const &row : rows)
	{
		std::string line;
		for (std::size_t j = 0; j < row.size(); ++j)
		{
			std::string cell = row[j];
			if (j == 0)
				cell += std::string(width[j] - cell.size(), ' ');
			else
				cell = std::string(width[j] - cell.size() + 1, ' ') + cell;
			line += cell;
		}
		out << line << '\n';
	}
	return 0;
}

int cmd_lr(Globals const &g, std::string const &mu, std::string const &eta, std::string const &pi, std::ostream &out)
{
	long c = lr(Partition::parse(mu), Partition::parse(eta), Partition::parse(pi));
	if (g.json_mode)
		out << json{{"lr", c}}.dump() << '\n';
	else
		out << c << '\n';
	return 0;
}

int cmd_schur_dim(Globals const &g, std::string const &pi_text, long m, std::ostream &out)
{
	if (m < 0)
		fail(ErrorKind::InvalidArgument, "dimension must be nonnegative");
	BigInt d = dim_poly_eval(Partition::parse(pi_text), m);
	if (g.json_mode)
		out << json{{"dim", to_string(d)}}.dump() << '\n';
	else
		out << to_string(d) << '\n';
	return 0;
}

int cmd_schur_decompose(Globals const &g, std::string const &dims, int n, std::ostream &out)
{
	if (n < 0)
		fail(ErrorKind::InvalidArgument, "tensor power must be nonnegative");
	GradedObject x = GradedObject::parse(dims);
	for (auto const &pi : partitions_of(n))
	{
		GradedObject s = schur_object(x, pi, g.bound);
		K0Class c = k0_class(s);
		if (g.json_mode)
		{
			json d = json::object();
			for (auto const &[deg, k] : s.dims())
				d[std::to_string(deg)] = k;
			out << json{{"partition", parts(pi)}, {"multiplicity", to_string(pi.dimension())}, {"dims", d},
			            {"class", c.str()}}
			           .dump()
			    << '\n';
		}
		else
			out << label(pi) << " x" << to_string(pi.dimension()) << ": " << s.str() << "  class " << c.str() << '\n';
	}
	return 0;
}

int cmd_char_series(Globals const &g, std::string const &rep, std::string const &element, std::size_t order,
                    std::ostream &out)
{
	GObject x = load_rep(rep);
	int e = x.group()->find(element);
	auto chi = char_series(x, e, order);
	if (g.json_mode)
	{
		json coeffs = json::array();
		for (auto const &c : chi.series().coeffs())
			coeffs.push_back(c.str());
		out << json{{"group", x.group()->name()}, {"element", x.group()->label(e)}, {"series", chi.str()},
		            {"coefficients", coeffs}}
		           .dump()
		    << '\n';
	}
	else
		out << chi.str() << '\n';
	return 0;
}

int cmd_adams(Globals const &g, std::string const &series, int n, std::optional<std::size_t> order, std::ostream &out)
{
	Series<Rational> f = parse_series(series);
	if (!(f[0] == Rational(1)))
		fail(ErrorKind::InvalidArgument, "a lambda series must have constant term 1");
	if (n < 1)
		fail(ErrorKind::InvalidArgument, "Adams operations are indexed by n >= 1");
	std::size_t want = order.value_or(std::max<std::size_t>(f.order(), 1));
	// the input is read as a polynomial, so padding with zeros is exact
	WittSeries<Rational> padded(f.extended(want * static_cast<std::size_t>(n)));
	auto psi = adams_on_witt(padded, n).series().truncated(want);
	if (g.json_mode)
	{
		json coeffs = json::array();
		for (auto const &c : psi.coeffs())
			coeffs.push_back(c.str());
		out << json{{"n", n}, {"series", psi.str()}, {"coefficients", coeffs}}.dump() << '\n';
	}
	else
		out << psi.str() << '\n';
	return 0;
}

int cmd_ev(Globals const &g, std::string const &cls, std::string const &schur, std::ostream &out)
{
	K0Class r = ev(K0Class::parse(cls), parse_schur_argument(schur));
	if (g.json_mode)
		out << json{{"class", r.str()}}.dump() << '\n';
	else
		out << r.str() << '\n';
	return 0;
}

int cmd_verify(Globals const &g, std::string const &suite, std::ostream &out)
{
	verify::Options options;
	options.seed = g.seed;
	options.bound = g.bound;
	auto results = verify::run(suite, options);
	std::map<std::string, std::pair<int, int>> per_suite;
	int passed = 0;
	for (auto const &r : results)
	{
		auto &[ok, total] = per_suite[r.suite];
		++total;
		if (r.passed)
		{
			++ok;
			++passed;
		}
		if (g.json_mode)
		{
			json line{{"suite", r.suite}, {"check", r.check}, {"passed", r.passed}, {"cases", r.cases},
			          {"covers", r.covers}};
			if (!r.detail.empty())
				line["detail"] = r.detail;
			out << line.dump() << '\n';
		}
		else
		{
			out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.check << " (" << r.cases << " cases)";
			if (!r.passed)
				out << ": " << r.detail;
			out << '\n';
		}
	}
	int total = static_cast<int>(results.size());
	if (g.json_mode)
	{
		for (auto const &name : verify::suite_names())
			if (auto it = per_suite.find(name); it != per_suite.end())
				out << json{{"summary", name}, {"passed", it->second.first}, {"total", it->second.second}}.dump() << '\n';
		json manifest = json::object();
		json uncovered = json::array();
		for (auto const &[op, checks] : verify::coverage(results))
		{
			manifest[op] = checks;
			if (checks.empty())
				uncovered.push_back(op);
		}
		out << json{{"coverage", manifest}, {"uncovered", uncovered}, {"seed", g.seed}}.dump() << '\n';
		out << json{{"summary", "total"}, {"passed", passed}, {"total", total}}.dump() << '\n';
	}
	else
	{
		for (auto const &name : verify::suite_names())
			if (auto it = per_suite.find(name); it != per_suite.end())
				out << name << ": " << it->second.first << '/' << it->second.second << " passed\n";
		out << "total: " << passed << '/' << total << " passed (seed " << g.seed << ")\n";
	}
	return passed == total ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact lambda-ring and Schur functor computations", "schurforge"};
	app.require_subcommand(1);
	app.fallthrough();
	Globals g;
	app.add_flag("--json", g.json_mode, "JSON output, one object per line");
	app.add_option("--seed", g.seed, "seed for randomized checks")->envname("SCHURFORGE_SEED");
	app.add_option("--bound", g.bound, "cap on the dimension of materialized tensor powers");

	std::function<int()> action;

	int n = 0;
	auto *partitions = app.add_subcommand("partitions", "list the partitions of n");
	partitions->add_option("n", n)->required();
	partitions->callback([&] { action = [&] { return cmd_partitions(g, n, out); }; });

	auto *table = app.add_subcommand("char-table", "character table of the symmetric group");
	table->add_option("n", n)->required();
	table->callback([&] { action = [&] { return cmd_char_table(g, n, out); }; });

	std::string mu, eta, pi;
	auto *lrc = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
	lrc->add_option("mu", mu)->required();
	lrc->add_option("eta", eta)->required();
	lrc->add_option("pi", pi)->required();
	lrc->callback([&] { action = [&] { return cmd_lr(g, mu, eta, pi, out); }; });

	long m = 0;
	auto *sdim = app.add_subcommand("schur-dim", "dimension of S_pi of an m-dimensional even space");
	sdim->add_option("pi", pi)->required();
	sdim->add_option("m", m)->required();
	sdim->callback([&] { action = [&] { return cmd_schur_dim(g, pi, m, out); }; });

	std::string dims;
	auto *sdec = app.add_subcommand("schur-decompose", "graded dimensions of every S_pi(X) with |pi| = n");
	sdec->add_option("--dims", dims, "graded object, e.g. {0:2, 1:1}")->required();
	sdec->add_option("--n", n)->required();
	sdec->callback([&] { action = [&] { return cmd_schur_decompose(g, dims, n, out); }; });

	std::string rep, element;
	std::size_t order = 0;
	auto *cs = app.add_subcommand("char-series", "sum tr(g; Alt^k X) t^k");
	cs->add_option("--rep", rep, "preset name or JSON file")->required();
	cs->add_option("--element", element, "group element, cycle notation or label")->required();
	cs->add_option("--order", order)->required();
	cs->callback([&] { action = [&] { return cmd_char_series(g, rep, element, order, out); }; });

	std::string series;
	std::optional<std::size_t> adams_order;
	auto *ad = app.add_subcommand("adams", "Frobenius operator on a lambda series");
	ad->add_option("--series", series, "polynomial in t with constant term 1")->required();
	ad->add_option("--n", n)->required();
	ad->add_option("--order", adams_order);
	ad->callback([&] { action = [&] { return cmd_adams(g, series, n, adams_order, out); }; });

	std::string cls, schur;
	auto *evc = app.add_subcommand("ev", "evaluate a Schur function at a class");
	evc->add_option("--class", cls, "Laurent polynomial in q")->required();
	evc->add_option("--schur", schur, "partition or Schur-basis expression")->required();
	evc->callback([&] { action = [&] { return cmd_ev(g, cls, schur, out); }; });

	std::string suite = "all";
	auto *ver = app.add_subcommand("verify", "run verification suites");
	ver->add_option("suite", suite)->check(CLI::IsMember([] {
		auto names = verify::suite_names();
		names.push_back("all");
		return names;
	}()));
	ver->callback([&] { action = [&] { return cmd_verify(g, suite, out); }; });

	try
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return 0;
	}
	catch (CLI::CallForAllHelp const &)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return 0;
	}
	catch (CLI::ParseError const &e)
	{
		err << "ParseError: " << e.what() << '\n';
		return 2;
	}
	try
	{
		return action();
	}
	catch (Error const &e)
	{
		err << e.what() << '\n';
		return 2;
	}
}

} // namespace schurforge::cli
