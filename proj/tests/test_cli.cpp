#include "schurforge/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Outcome
{
	int code;
	std::string out;
	std::string err;
};

Outcome run(std::vector<std::string> const &args)
{
	std::ostringstream out, err;
	int code = schurforge::cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("basic commands", "[cli]")
{
	CHECK(run({"lr", "1", "1", "2"}).out == "1\n");
	CHECK(run({"lr", "2,1", "1", "2,2"}).out == "1\n");
	CHECK(run({"schur-dim", "2,1", "2"}).out == "2\n");
	CHECK(run({"schur-dim", "[2,1]", "3"}).out == "8\n");
	CHECK(run({"partitions", "3"}).out == "[3]\n[2,1]\n[1,1,1]\n");
	CHECK(run({"ev", "--class", "1 + q^2", "--schur", "1,1"}).out == "q^2\n");
	CHECK(run({"ev", "--class", "2", "--schur", "s[2] - s[1,1]"}).out == "2\n");
	CHECK(run({"char-series", "--rep", "perm:sym3", "--element", "(1 2)", "--order", "3"}).out == "1 + t - t^2 - t^3\n");
	CHECK(run({"char-series", "--rep", "reg:cyc4", "--element", "g", "--order", "4"}).out == "1 - t^4\n");
	CHECK(run({"adams", "--series", "1 - t^2", "--n", "2", "--order", "3"}).out == "1 + 2*t + t^2\n");
	CHECK(run({"schur-decompose", "--dims", "{0:2}", "--n", "2"}).out == "[2] x1: {0:3}  class 3\n[1,1] x1: {0:1}  class 1\n");
}

TEST_CASE("json output is one object per line", "[cli]")
{
	CHECK(run({"--json", "lr", "1", "1", "2"}).out == "{\"lr\":1}\n");
	CHECK(run({"schur-dim", "2", "2", "--json"}).out == "{\"dim\":\"3\"}\n");
	auto v = run({"--json", "verify", "witt"});
	CHECK(v.code == 0);
	CHECK(v.out.find("\"coverage\"") != std::string::npos);
	CHECK(v.out.find("{\"summary\":\"total\"") != std::string::npos);
}

TEST_CASE("rep files are read as JSON", "[cli]")
{
	std::string path = "schurforge_cli_test_rep.json";
	{
		std::ofstream f(path);
		f << R"({"group": {"symmetric": 2}, "dims": {"0": 2}, "action": [{"0": [[1,0],[0,1]]}, {"0": [[0,1],[1,0]]}]})";
	}
	CHECK(run({"char-series", "--rep", path, "--element", "(1 2)", "--order", "2"}).out == "1 - t^2\n");
	std::remove(path.c_str());
}

TEST_CASE("exit codes", "[cli]")
{
	CHECK(run({"lr", "1", "1"}).code == 2);
	CHECK(run({"lr", "1", "x", "2"}).code == 2);
	CHECK(run({"--frobnicate", "lr", "1", "1", "2"}).code == 2);
	CHECK(run({"ev", "--class", "1 +", "--schur", "1"}).code == 2);
	CHECK(run({"verify", "nonsense"}).code == 2);
	CHECK(run({}).code == 2);
	CHECK(run({"schur-decompose", "--dims", "{0:4}", "--n", "6"}).code == 2);
	CHECK(run({"--bound", "100000", "schur-decompose", "--dims", "{0:4}", "--n", "2"}).code == 0);
	CHECK(run({"--help"}).code == 0);
	auto v = run({"verify", "adams"});
	CHECK(v.code == 0);
	CHECK(v.out.find("adams: 4/4 passed") != std::string::npos);
}

TEST_CASE("output is deterministic", "[cli]")
{
	CHECK(run({"verify", "symfunc"}).out == run({"verify", "symfunc"}).out);
	CHECK(run({"--seed", "7", "verify", "witt"}).out == run({"--seed", "7", "verify", "witt"}).out);
	CHECK(run({"--seed", "7", "verify", "witt"}).out.find("seed 7") != std::string::npos);
}
