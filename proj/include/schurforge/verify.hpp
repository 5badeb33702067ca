#pragma once

#include "schurforge/gobject.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace schurforge::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options
{
	std::uint64_t seed = kDefaultSeed;
	std::size_t bound = kDefaultTensorBound;
};

struct CheckResult
{
	std::string suite;
	std::string check;
	/// operations exercised, as "module.operation"
	std::vector<std::string> covers;
	bool passed = false;
	long cases = 0;
	std::string detail; ///< first failure, or an exception message
};

/// Suite names in run order, without "all".
std::vector<std::string> const &suite_names();

/// Every operation the checks are expected to cover.
std::vector<std::string> const &operations();

/// Runs one suite, or every suite for "all". Results come back in a fixed
/// order regardless of scheduling. Throws InvalidArgument for unknown names.
std::vector<CheckResult> run(std::string_view suite, Options const &options = {});

/// operation -> names of the checks covering it ("suite/check").
std::map<std::string, std::vector<std::string>> coverage(std::vector<CheckResult> const &results);

} // namespace schurforge::verify
