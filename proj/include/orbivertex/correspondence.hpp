#pragma once

#include "orbivertex/orbifold.hpp"

namespace orbivertex {

// exact inverse of the pairing matrix (l^(g)_h), both-sided identity asserted
RMat b_matrix(const ChargeSystem& cs);

// rational framing a determined by the integer framing f
Rat framing_correspondence(const GroupModel& g, const ChargeSystem& cs);

struct ChangeOfVariables {
	RMat b;
	Rat a;
	std::map<std::string, Monomial> subs;  // x variable -> monomial in (q..., q0)
};

ChangeOfVariables change_of_variables(const GroupModel& g, const ChargeSystem& cs);

struct AnalyticSplit {
	QSeries analytic;
	std::vector<std::pair<RVec, Coef>> dropped;
};

// terms whose exponents are all nonnegative integers; the rest is logged
AnalyticSplit analytic_part(const QSeries& s);

struct CoefficientVerdict {
	RVec exps;
	Rat left, right;  // W side, disc-potential side
};

struct CorrespondenceReport {
	long f = 0;
	Rat a;
	RMat b;
	std::string case_tag;  // effective | ineffective-i1 | ineffective-i2 | disjoint
	std::string status;    // match | mismatch | disjoint
	std::vector<CoefficientVerdict> mismatches;
	// disc-potential terms (k,d) whose image has a non-integral or negative exponent
	std::vector<std::pair<std::vector<long>, long>> dropped;
	std::vector<int> sign_twist;  // per variable (q..., q0); empty if identity works
	long matched_terms = 0;
};

CorrespondenceReport compare(const GroupModel& g, const ChargeSystem& cs,
                             const Potential& w, const Potential& forb, long D,
                             bool sign_search);

struct ConjectureReport {
	std::vector<int> order;  // small point order used, i0 first
	RMat matrix, inverse;
	bool integral = true;
	bool nonnegative = true;
};

ConjectureReport conjecture_check(const GroupModel& g, const ChargeSystem& cs);

// Gauss-Jordan inverse; throws Singular
RMat invert(const RMat& m);

}  // namespace orbivertex
