#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurforge {

enum class ErrorKind {
	DivisionByZero,
	NonUnitConstantTerm,
	NonQAlgebra,
	SizeMismatch,
	BoundExceeded,
	IncompleteClassFunction,
	NotEndomorphism,
	GroupMismatch,
	NotEquivariant,
	NotAComplex,
	NotEffective,
	NonIntegral,
	InvalidArgument,
	Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error
{
  public:
	Error(ErrorKind kind, std::string const &what)
	    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
	{}

	ErrorKind kind() const noexcept { return kind_; }

  private:
	ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string const &what)
{
	throw Error(kind, what);
}

} // namespace schurforge
