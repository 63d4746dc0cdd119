#pragma once

#include <map>
#include <optional>
#include <string>

#include "orbivertex/rational.hpp"

namespace orbivertex {

// Limit convention for Gamma(x+z1)/Gamma(x+z2) as x -> 0, for z1 - z2 an integer.
// Poles of Gamma at nonpositive integers are handled by the limit: a pole in the
// denominator gives 0, pole-over-pole cancels to the finite residue ratio.
Rat gamma_ratio(const Rat& z1, const Rat& z2);

// 1/Gamma(z) for integer z under the same convention: 0 for z <= 0.
Rat reciprocal_gamma_int(const Rat& z);

// (x)_n = x(x-1)...(x-n+1)
Rat falling_factorial(const Rat& x, long n);

// limit of Psi/Gamma at -n: (-1)^(n+1) * n!
Rat psi_gamma_limit(long n);

// Coefficient value * (-1)^(phase + l2 * lambda2).  phase is kept in [0,1)
// with its integer part folded into the sign of value; l2 in {0,1} tracks the
// parity of a formal symbol whose square is +1.
struct Coef {
	Rat value;
	Rat phase;  // in [0,1)
	int l2 = 0;

	Coef() : value(0) {}
	Coef(Rat v, Rat ph = Rat(0), int l = 0);
	bool is_real() const { return phase == 0 && l2 == 0; }
	Coef operator*(const Coef& o) const;
	bool operator==(const Coef& o) const {
		return value == o.value && phase == o.phase && l2 == o.l2;
	}
};

// A monomial with unit-magnitude coefficient, used as substitution target.
struct Monomial {
	Coef coef;                      // typically value +-1 with a phase
	std::map<std::string, Rat> exps;
};

// Truncated multivariate series with rational (Puiseux) exponents.
class QSeries {
 public:
	QSeries() : trunc_(0) {}
	QSeries(std::vector<std::string> vars, Rat trunc);

	const std::vector<std::string>& vars() const { return vars_; }
	const Rat& truncation() const { return trunc_; }
	const std::map<RVec, Coef>& terms() const { return terms_; }
	int var_index(const std::string& name) const;

	void add_term(RVec exps, const Coef& c);
	void add_term(RVec exps, const Rat& value) { add_term(std::move(exps), Coef(value)); }

	QSeries operator+(const QSeries& o) const;
	QSeries operator-(const QSeries& o) const;
	QSeries operator*(const QSeries& o) const;
	QSeries scalar_mul(const Rat& c) const;
	QSeries mul_monomial(const RVec& exps, const Coef& c) const;

	// q d/dq for variable v: multiplies each term by its exponent of v
	QSeries theta(int v) const;

	// exp of a series with no constant term and real coefficients
	QSeries exp() const;

	// Substitute each variable by a monomial in new variables; terms landing
	// above the given truncation are dropped.
	QSeries substitute(const std::vector<std::string>& new_vars,
	                   const std::map<std::string, Monomial>& subs,
	                   const Rat& new_trunc) const;

	// Substitute each variable by a full series; all exponents of *this must be
	// nonnegative integers.
	QSeries compose(const std::vector<std::string>& new_vars,
	                const std::map<std::string, QSeries>& subs,
	                const Rat& new_trunc) const;

	Coef extract(const RVec& exps) const;
	bool is_zero() const { return terms_.empty(); }
	bool operator==(const QSeries& o) const;

	// Coefficients as plain rationals; throws if any phase is non-integral.
	std::map<RVec, Rat> real_terms() const;

 private:
	std::vector<std::string> vars_;
	Rat trunc_;
	std::map<RVec, Coef> terms_;
};

}  // namespace orbivertex
