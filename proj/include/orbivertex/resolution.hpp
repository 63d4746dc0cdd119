#pragma once

#include "orbivertex/charges.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

// variable names: one per small element plus the open modulus last
std::string qvar_name(int element_id);
std::vector<std::string> resolution_vars(const ChargeSystem& cs);

struct MirrorMap {
	std::vector<std::string> qvars;  // closed-modulus variables, canonical order
	std::vector<QSeries> corrections;  // C_l, one per small element
	QSeries c0;
};

struct Potential {
	QSeries series;
	std::string side;  // "resolution" | "orbifold" | "flat"
	long f = 0;
	Rat a;
};

// A_{m,m0}(r,r0) of the Frobenius solution
Rat frobenius_coefficient(const ChargeSystem& cs, const std::vector<long>& m, long m0,
                          const RVec& r, const Rat& r0);

MirrorMap mirror_corrections(const ChargeSystem& cs, long D);

// superpotential W(q,q0;f) from the constrained-domain closed form
Potential superpotential(const ChargeSystem& cs, long D);
// same series from the sign-split form (one Gamma ratio per term); cross-check
Potential superpotential_signed(const ChargeSystem& cs, long D);

struct PFReport {
	bool ok = true;
	std::string first_failure;
};

// applies the full operator system to {1, Omega_l, Omega_0} and checks vanishing
PFReport pf_annihilation_check(const ChargeSystem& cs, long D);

// W rewritten in flat coordinates Q = q e^C, Q0 = q0 e^{C0} (disc invariants)
Potential flat_disc_potential(const ChargeSystem& cs, const MirrorMap& mm,
                              const Potential& w, long D);

}  // namespace orbivertex
