#include "schurforge/matrix.hpp"

#include "schurforge/error.hpp"
#include "schurforge/kernels.hpp"

#include <sstream>

namespace schurforge {

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
	: rows_(rows), cols_(cols), a_(std::move(entries))
{
	if (a_.size() != rows * cols)
		fail(ErrorKind::SizeMismatch, "matrix entry count does not match its shape");
}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows)
	: rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
	for (auto const &row : rows)
	{
		if (row.size() != cols_)
			fail(ErrorKind::SizeMismatch, "ragged matrix literal");
		a_.insert(a_.end(), row.begin(), row.end());
	}
}

MatrixQ MatrixQ::identity(std::size_t n)
{
	MatrixQ m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

bool MatrixQ::is_zero() const
{
	for (auto const &x : a_)
		if (!x.is_zero())
			return false;
	return true;
}

Rational MatrixQ::trace() const
{
	if (!is_square())
		fail(ErrorKind::NotEndomorphism, "trace of a non-square matrix");
	Rational t;
	for (std::size_t i = 0; i < rows_; ++i)
		t += (*this)(i, i);
	return t;
}

MatrixQ MatrixQ::transpose() const
{
	MatrixQ t(cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

MatrixQ MatrixQ::select_columns(std::vector<std::size_t> const &cols) const
{
	MatrixQ r(rows_, cols.size());
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols.size(); ++k)
			r(i, k) = (*this)(i, cols[k]);
	return r;
}

MatrixQ MatrixQ::select_rows(std::vector<std::size_t> const &rows) const
{
	MatrixQ r(rows.size(), cols_);
	for (std::size_t k = 0; k < rows.size(); ++k)
		for (std::size_t j = 0; j < cols_; ++j)
			r(k, j) = (*this)(rows[k], j);
	return r;
}

MatrixQ operator*(MatrixQ const &a, MatrixQ const &b)
{
	if (a.cols_ != b.rows_)
		fail(ErrorKind::SizeMismatch, "matrix product of incompatible shapes");
	MatrixQ r(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			Rational const &x = a(i, k);
			if (x.is_zero())
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				if (!b(k, j).is_zero())
					r(i, j) += x * b(k, j);
		}
	return r;
}

MatrixQ operator+(MatrixQ const &a, MatrixQ const &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		fail(ErrorKind::SizeMismatch, "matrix sum of different shapes");
	MatrixQ r(a);
	for (std::size_t k = 0; k < r.a_.size(); ++k)
		r.a_[k] += b.a_[k];
	return r;
}

MatrixQ operator-(MatrixQ const &a, MatrixQ const &b) { return a + Rational(-1) * b; }

MatrixQ operator*(Rational const &s, MatrixQ const &m)
{
	MatrixQ r(m);
	for (auto &x : r.a_)
		x *= s;
	return r;
}

std::string MatrixQ::str() const
{
	std::ostringstream out;
	out << '[';
	for (std::size_t i = 0; i < rows_; ++i)
	{
		out << (i ? ", [" : "[");
		for (std::size_t j = 0; j < cols_; ++j)
			out << (j ? ", " : "") << (*this)(i, j).str();
		out << ']';
	}
	out << ']';
	return out.str();
}

MatrixQ kron(MatrixQ const &a, MatrixQ const &b)
{
	MatrixQ r(a.rows() * b.rows(), a.cols() * b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
		{
			if (a(i, j).is_zero())
				continue;
			for (std::size_t k = 0; k < b.rows(); ++k)
				for (std::size_t l = 0; l < b.cols(); ++l)
					r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
		}
	return r;
}

std::size_t rank(MatrixQ const &m) { return kernels::parallel::bareiss_rank(m); }

RowEchelon rref(MatrixQ const &m)
{
	RowEchelon e{m, {}};
	MatrixQ &a = e.reduced;
	std::size_t row = 0;
	for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col)
	{
		std::size_t p = row;
		while (p < a.rows() && a(p, col).is_zero())
			++p;
		if (p == a.rows())
			continue;
		if (p != row)
			for (std::size_t j = 0; j < a.cols(); ++j)
				std::swap(a(p, j), a(row, j));
		Rational inv = Rational(1) / a(row, col);
		for (std::size_t j = col; j < a.cols(); ++j)
			a(row, j) *= inv;
		for (std::size_t i = 0; i < a.rows(); ++i)
		{
			if (i == row || a(i, col).is_zero())
				continue;
			Rational f = a(i, col);
			for (std::size_t j = col; j < a.cols(); ++j)
				if (!a(row, j).is_zero())
					a(i, j) -= f * a(row, j);
		}
		e.pivots.push_back(col);
		++row;
	}
	return e;
}

std::vector<std::size_t> free_columns(MatrixQ const &m)
{
	auto pivots = rref(m).pivots;
	std::vector<std::size_t> free;
	std::size_t k = 0;
	for (std::size_t j = 0; j < m.cols(); ++j)
	{
		if (k < pivots.size() && pivots[k] == j)
			++k;
		else
			free.push_back(j);
	}
	return free;
}

MatrixQ nullspace(MatrixQ const &m)
{
	auto e = rref(m);
	auto free = free_columns(m);
	MatrixQ basis(m.cols(), free.size());
	for (std::size_t k = 0; k < free.size(); ++k)
	{
		basis(free[k], k) = 1;
		for (std::size_t r = 0; r < e.pivots.size(); ++r)
			basis(e.pivots[r], k) = -e.reduced(r, free[k]);
	}
	return basis;
}

MatrixQ solve(MatrixQ const &a, MatrixQ const &b)
{
	if (a.rows() != b.rows())
		fail(ErrorKind::SizeMismatch, "solve: row counts differ");
	std::size_t n = a.cols();
	MatrixQ aug(a.rows(), n + b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
	{
		for (std::size_t j = 0; j < n; ++j)
			aug(i, j) = a(i, j);
		for (std::size_t j = 0; j < b.cols(); ++j)
			aug(i, n + j) = b(i, j);
	}
	auto e = rref(aug);
	if (e.pivots.size() < n || (e.pivots.size() > n) || (n > 0 && e.pivots[n - 1] != n - 1))
		fail(ErrorKind::InvalidArgument, "solve: system is inconsistent or underdetermined");
	MatrixQ x(n, b.cols());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < b.cols(); ++j)
			x(i, j) = e.reduced(i, n + j);
	return x;
}

std::vector<std::size_t> independent_columns(MatrixQ const &m) { return rref(m).pivots; }

} // namespace schurforge
