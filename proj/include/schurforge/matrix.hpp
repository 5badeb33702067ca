#pragma once

#include "schurforge/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace schurforge {

/// Dense row-major matrix over Q.
class MatrixQ
{
  public:
	MatrixQ() = default;
	MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
	MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
	MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

	static MatrixQ identity(std::size_t n);
	static MatrixQ zero(std::size_t rows, std::size_t cols) { return MatrixQ(rows, cols); }

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool is_square() const { return rows_ == cols_; }
	Rational &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
	Rational const &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
	std::vector<Rational> const &entries() const { return a_; }

	bool is_zero() const;
	Rational trace() const;
	MatrixQ transpose() const;
	/// Columns listed in `cols`, in order.
	MatrixQ select_columns(std::vector<std::size_t> const &cols) const;
	MatrixQ select_rows(std::vector<std::size_t> const &rows) const;

	friend MatrixQ operator*(MatrixQ const &a, MatrixQ const &b);
	friend MatrixQ operator+(MatrixQ const &a, MatrixQ const &b);
	friend MatrixQ operator-(MatrixQ const &a, MatrixQ const &b);
	friend MatrixQ operator*(Rational const &s, MatrixQ const &m);
	friend bool operator==(MatrixQ const &a, MatrixQ const &b) = default;

	std::string str() const;

  private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<Rational> a_;
};

MatrixQ kron(MatrixQ const &a, MatrixQ const &b);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(MatrixQ const &m);

struct RowEchelon
{
	MatrixQ reduced;                  ///< reduced row echelon form
	std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};
RowEchelon rref(MatrixQ const &m);

/// Basis of {x : m x = 0} as the columns of the result. The basis vectors
/// restricted to the free coordinates form an identity matrix.
MatrixQ nullspace(MatrixQ const &m);
/// Free coordinates of nullspace(m), in the order of its columns.
std::vector<std::size_t> free_columns(MatrixQ const &m);

/// Solves a x = b for x, where a has full column rank. Throws InvalidArgument
/// if the system is inconsistent or a is rank deficient.
MatrixQ solve(MatrixQ const &a, MatrixQ const &b);

/// Columns of m that form a basis of its column space (greedy, left to right).
std::vector<std::size_t> independent_columns(MatrixQ const &m);

} // namespace schurforge
