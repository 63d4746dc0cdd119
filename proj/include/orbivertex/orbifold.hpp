#pragma once

#include "orbivertex/lattice.hpp"
#include "orbivertex/resolution.hpp"

namespace orbivertex {

struct TorusWeights {
	Rat lambda0, lambda1, lambda2;
	Rat a;
};

// a must lie in (1/|G/G_0|) Z
TorusWeights torus_weights(const GroupModel& g, const Rat& a);

std::string xvar_name(int element_id);
std::vector<std::string> orbifold_vars(const GroupModel& g);  // x_g..., x0

// localization weight of a degree-d disc with twisted-sector label k
Rat disc_function(const GroupModel& g, int k, long d, const TorusWeights& w);

struct OrbifoldMirror {
	std::vector<std::string> xvars;  // closed-string variables
	std::vector<QSeries> x_map;      // X_h per small element
};

OrbifoldMirror orbifold_mirror_map(const GroupModel& g, long D);

// coefficient C(k;d) of prod x^k * x0^d in |G_0| * F_{0,1}; the factor
// ((-1)^{1+lambda2})^d is held formally in the Coef phase.  Zero when the
// sector constraint fails.
Coef orbifold_coefficient(const GroupModel& g, const TorusWeights& w,
                          const std::vector<long>& k, long d);

Potential orbifold_disc_potential(const GroupModel& g, const TorusWeights& w, long D);

struct OrbifoldCharges {
	RMat lg;  // one row per small element, length 3+s
	RVec l0;  // length 3+s+2, last two entries for the brane pair
};

OrbifoldCharges orbifold_charge_vectors(const GroupModel& g, const TorusWeights& w);

}  // namespace orbivertex
