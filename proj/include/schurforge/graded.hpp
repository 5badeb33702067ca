#pragma once

#include "schurforge/laurent.hpp"
#include "schurforge/matrix.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace schurforge {

/// Label of a basis vector: homological degree (0 outside complexes) and
/// internal degree. The Koszul parity is the total degree mod 2.
struct Bidegree
{
	int homological = 0;
	int internal = 0;

	int parity() const { return ((homological + internal) % 2 + 2) % 2; }
	friend Bidegree operator+(Bidegree a, Bidegree b)
	{
		return {a.homological + b.homological, a.internal + b.internal};
	}
	friend auto operator<=>(Bidegree const &, Bidegree const &) = default;
};

/// Finite-dimensional Z-graded Q-vector space; a line of degree d is even or
/// odd according to d mod 2. Basis vectors are ordered by degree.
class GradedObject
{
  public:
	GradedObject() = default;
	explicit GradedObject(std::map<int, int> dims);

	static GradedObject line(int degree) { return GradedObject(std::map<int, int>{{degree, 1}}); }
	static GradedObject unit() { return line(0); }
	/// "{0:2, 1:1}" (degree:dimension); "{}" is the zero object.
	static GradedObject parse(std::string_view text);

	std::map<int, int> const &dims() const { return dims_; }
	int dim(int degree) const;
	int total_dim() const;
	bool is_zero() const { return dims_.empty(); }
	bool is_even() const;
	/// Degree of each basis vector, ascending.
	std::vector<int> basis_degrees() const;
	/// Offset of the first basis vector of the given degree.
	int offset(int degree) const;
	/// X[k]: every degree raised by k.
	GradedObject shifted(int k) const;

	std::string str() const;

	friend GradedObject operator+(GradedObject const &a, GradedObject const &b);
	friend bool operator==(GradedObject const &, GradedObject const &) = default;

  private:
	std::map<int, int> dims_;
};

GradedObject tensor(GradedObject const &x, GradedObject const &y);

/// Basis of x (x) y ordered by degree, then lexicographically by (i, j).
std::vector<std::pair<int, int>> tensor_basis(GradedObject const &x, GradedObject const &y);

/// Degree-preserving linear map, one matrix block per degree.
class GradedMap
{
  public:
	GradedMap() = default;
	/// Missing blocks are zero. Throws SizeMismatch on a wrongly shaped block.
	GradedMap(GradedObject source, GradedObject target, std::map<int, MatrixQ> blocks);

	static GradedMap identity(GradedObject const &x);
	static GradedMap zero(GradedObject const &source, GradedObject const &target);
	/// Extracts degree blocks from a dense matrix in basis order; throws
	/// InvalidArgument if the matrix mixes degrees.
	static GradedMap from_dense(GradedObject const &source, GradedObject const &target, MatrixQ const &m);

	GradedObject const &source() const { return source_; }
	GradedObject const &target() const { return target_; }
	MatrixQ block(int degree) const;
	std::map<int, MatrixQ> const &blocks() const { return blocks_; }
	MatrixQ dense() const;
	bool is_endomorphism() const { return source_ == target_; }
	bool is_zero() const;

	/// g * f is g after f.
	friend GradedMap operator*(GradedMap const &g, GradedMap const &f);
	friend GradedMap operator+(GradedMap const &a, GradedMap const &b);
	friend GradedMap operator*(Rational const &s, GradedMap const &f);
	friend bool operator==(GradedMap const &a, GradedMap const &b);

  private:
	GradedObject source_, target_;
	std::map<int, MatrixQ> blocks_;
};

/// f (x) g on the tensor objects, basis as in tensor_basis().
GradedMap tensor(GradedMap const &f, GradedMap const &g);

/// Supertrace sum_d (-1)^d tr(f_d). Throws NotEndomorphism.
Rational categorical_trace(GradedMap const &f);
/// sum_d (-1)^d tr(f_d) q^d. Throws NotEndomorphism, or NonIntegral when a
/// block trace is not an integer.
LaurentZ graded_trace(GradedMap const &f);

} // namespace schurforge
