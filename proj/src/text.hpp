#pragma once

// Small helpers shared by the literal parsers.

#include "schurforge/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace schurforge::text {

std::string strip(std::string_view s);
std::string remove_spaces(std::string_view s);

/// Splits "a + b - c" into {+a, +b, -c} at top level (outside (), [] and {}).
/// A leading sign belongs to the first term. Each term comes back with its
/// sign folded in as a leading '-' when negative.
std::vector<std::string> split_terms(std::string_view s);

long parse_long(std::string_view s);

[[noreturn]] inline void parse_error(std::string_view what, std::string_view input)
{
	fail(ErrorKind::Parse, std::string(what) + " in \"" + std::string(input) + "\"");
}

} // namespace schurforge::text
