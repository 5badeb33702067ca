#pragma once

#include "schurforge/partition.hpp"
#include "schurforge/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace schurforge {

/// Coefficients in the power-sum basis p_mu.
using PowerSumExpansion = std::map<Partition, Rational>;
/// Values of a class function of S_n, keyed by cycle type.
using ClassFunction = std::map<Partition, Rational>;

/// Element of the ring of symmetric functions in the Schur basis.
class SymFunc
{
  public:
	SymFunc() = default;
	SymFunc(Rational const &c); // c * s_[]
	static SymFunc schur(Partition const &pi, Rational const &c = 1);
	/// "s[2,1] + 3*s[1,1,1]"; "s[]" is the unit.
	static SymFunc parse(std::string_view text);

	std::map<Partition, Rational> const &terms() const { return terms_; }
	Rational coeff(Partition const &pi) const;
	bool is_zero() const { return terms_.empty(); }
	bool is_integral() const;
	bool is_homogeneous(int degree) const;
	void add(Partition const &pi, Rational const &c);

	std::string str() const;

	SymFunc operator-() const;
	SymFunc &operator+=(SymFunc const &o);
	friend SymFunc operator+(SymFunc a, SymFunc const &b) { return a += b; }
	friend SymFunc operator-(SymFunc a, SymFunc const &b) { return a += -b; }
	friend SymFunc operator*(Rational const &c, SymFunc const &f);
	/// Product via the power-sum basis. Integral inputs must give an integral
	/// result; NonIntegral is raised otherwise.
	friend SymFunc operator*(SymFunc const &f, SymFunc const &g);
	friend bool operator==(SymFunc const &, SymFunc const &) = default;

  private:
	std::map<Partition, Rational> terms_;
};

/// s_pi = sum_mu z_mu^-1 chi_pi(mu) p_mu.
PowerSumExpansion schur_to_powersum(Partition const &pi);
PowerSumExpansion to_powersum(SymFunc const &f);
/// p_mu = sum_pi chi_pi(mu) s_pi, extended linearly.
SymFunc from_powersum(PowerSumExpansion const &p);
std::string powersum_str(PowerSumExpansion const &p);

SymFunc elementary(int k); ///< e_k = s_(1^k)
SymFunc complete(int k);   ///< h_k = s_(k)
SymFunc power_sum(int k);  ///< p_k in the Schur basis
/// p_k -> (-1)^{k-1} p_k.
SymFunc omega(SymFunc const &f);

/// Coefficient of s_pi in s_mu s_eta (0 unless |pi| = |mu| + |eta|).
long lr(Partition const &mu, Partition const &eta, Partition const &pi);
/// Memoized s_mu * s_eta.
SymFunc const &schur_product(Partition const &mu, Partition const &eta);

/// sum_{k=1}^n (-1)^k p_k e_{n-k} == -n e_n, checked exactly.
bool newton_check(int n);
/// sum_{mu,eta} (-1)^{|eta|} c^pi_{mu,eta} s_mu s_{eta^t}; always zero.
SymFunc vanishing_schur_sum(Partition const &pi);

/// Characteristic map: sum_mu z_mu^-1 values(mu) p_mu in the Schur basis.
/// Throws IncompleteClassFunction when a cycle type of S_n is missing.
SymFunc ch(int n, ClassFunction const &values);

} // namespace schurforge
