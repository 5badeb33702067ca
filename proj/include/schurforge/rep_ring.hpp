#pragma once

#include "schurforge/complex.hpp"
#include "schurforge/gobject.hpp"
#include "schurforge/laurent.hpp"
#include "schurforge/lambda.hpp"
#include "schurforge/partition.hpp"
#include "schurforge/series.hpp"
#include "schurforge/symfunc.hpp"

#include <map>
#include <string>
#include <string_view>

namespace schurforge {

/// Class in K_0 of the graded model, a Laurent polynomial in q. A line of
/// degree d has class (-1)^d q^d.
class K0Class
{
  public:
	K0Class() = default;
	K0Class(LaurentZ v) : v_(std::move(v)) {}
	K0Class(long c) : v_(c) {}
	static K0Class parse(std::string_view text) { return K0Class(LaurentZ::parse(text)); }

	LaurentZ const &value() const { return v_; }
	std::string str() const { return v_.str(); }

	friend K0Class operator+(K0Class const &a, K0Class const &b) { return K0Class(a.v_ + b.v_); }
	friend K0Class operator-(K0Class const &a, K0Class const &b) { return K0Class(a.v_ - b.v_); }
	friend K0Class operator*(K0Class const &a, K0Class const &b) { return K0Class(a.v_ * b.v_); }
	K0Class operator-() const { return K0Class(-v_); }
	friend bool operator==(K0Class const &, K0Class const &) = default;

  private:
	LaurentZ v_;
};

K0Class k0_class(GradedObject const &x);
/// sum_n (-1)^n k0_class(Z^n).
K0Class k0_class(ComplexObject const &z);
/// Class of a bidegree-labelled dimension table: sum (-1)^{n+d} q^d dim.
K0Class k0_class(kernels::BidegreeDims const &dims);

/// lambda(x) = prod (1 + q^d t)^{c_d} for x = sum c_d q^d.
WittSeries<LaurentZ> lambda_of_class(K0Class const &x, std::size_t order);

/// S_pi(x) by the Jacobi-Trudi determinant det(h_{pi_i - i + j}(x)).
K0Class schur_class(K0Class const &x, Partition const &pi);
/// Linear extension of s_pi -> S_pi(x). f must be integral.
K0Class ev(K0Class const &x, SymFunc const &f);

/// Element of R (x) K_0: Schur-basis label -> class.
class RDElement
{
  public:
	RDElement() = default;
	RDElement(long c); // c * [empty]
	static RDElement basis(Partition const &pi, LaurentZ const &c = LaurentZ(1));
	/// "[2]⊗(1) + [1,1]⊗(-q)"; "0" is zero. "(x)" is accepted for "⊗".
	static RDElement parse(std::string_view text);

	std::map<Partition, LaurentZ> const &terms() const { return terms_; }
	LaurentZ coeff(Partition const &pi) const;
	bool is_zero() const { return terms_.empty(); }
	void add(Partition const &pi, LaurentZ const &c);
	/// Keeps only labels of size n.
	RDElement graded_part(int n) const;

	std::string str() const;

	RDElement operator-() const;
	RDElement &operator+=(RDElement const &o);
	RDElement &operator-=(RDElement const &o) { return *this += -o; }
	friend RDElement operator+(RDElement a, RDElement const &b) { return a += b; }
	friend RDElement operator-(RDElement a, RDElement const &b) { return a += -b; }
	/// Induction product: (mu -> u)(eta -> v) = sum_pi c^pi_{mu eta} (pi -> uv).
	friend RDElement operator*(RDElement const &a, RDElement const &b);
	friend bool operator==(RDElement const &, RDElement const &) = default;

  private:
	std::map<Partition, LaurentZ> terms_;
};

RDElement induction_product(RDElement const &a, RDElement const &b);
/// sum_pi chi_pi(1) u_pi, the class of the underlying object.
LaurentZ total_class(RDElement const &a);

template <>
struct RingTraits<RDElement>
{
	static RDElement zero() { return {}; }
	static RDElement one() { return RDElement(1); }
	static bool is_zero(RDElement const &a) { return a.is_zero(); }
	static bool is_unit(RDElement const &a);
	static RDElement unit_inverse(RDElement const &a);
	static RDElement from_int(long n) { return RDElement(n); }
	static std::string str(RDElement const &a) { return a.str(); }
	static bool compound(RDElement const &) { return true; }
};

/// Series whose t^n coefficient is supported on partitions of n.
using SchurSeries = Series<RDElement>;

/// lambda_Sigma(X) = sum_mu cl(S_mu(X)) (x) [mu] t^|mu|.
SchurSeries lambda_sigma(GradedObject const &x, std::size_t order, std::size_t bound = kDefaultTensorBound);
/// Termwise on the underlying graded object of the complex (gr_S).
SchurSeries lambda_sigma(ComplexObject const &z, std::size_t order, std::size_t bound = kDefaultTensorBound);
/// From the cohomology of each subcomplex S_mu(Z) of Z^{(x)n}.
SchurSeries lambda_sigma_via_cohomology(ComplexObject const &z, std::size_t order,
                                        std::size_t bound = kDefaultTensorBound);

/// V_pi (x) X for each term (pi -> cl X); the grade must be homogeneous and
/// every class effective (a nonnegative count of lines in each degree).
/// Throws NotEffective otherwise.
GObject h_map(RDElement const &a);
/// sum_V cl(S_V(X)) (x) [V] for a representation of the full group S_n.
RDElement g_map(GObject const &x);

/// sum_n cl(X^{(x)n}) t^n with the S_n-decomposition of each coefficient.
SchurSeries mu_series(GradedObject const &x, std::size_t order, std::size_t bound = kDefaultTensorBound);

/// sum_n (-1)^n g_map(H^n(Z)).
RDElement euler_xi(EquivariantComplex const &z);

/// Per degree, sum_pi chi_pi(1) dim S_pi(X) == dim X^{(x)n}.
bool aw_check(GradedObject const &x, int n, std::size_t bound = kDefaultTensorBound);

} // namespace schurforge
