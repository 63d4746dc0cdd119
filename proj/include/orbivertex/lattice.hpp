#pragma once

#include <array>
#include <map>

#include "orbivertex/group.hpp"

namespace orbivertex {

struct InvariantBasis {
	std::array<std::array<Int, 3>, 3> epsilon;  // epsilon[j] = column eps_j
	Int m1_star, m2_star;
	Int det;
};

// Index set S = {0,1,2} u G_s.  Points are addressed by an int: 0,1,2 are the
// cone corners, and 3..2+s are the small-part elements in canonical order.
struct TrianglePoints {
	std::array<std::array<Int, 3>, 3> vtilde_corner;  // vtilde_0, vtilde_1, vtilde_2
	std::vector<std::array<Int, 3>> vtilde_small;     // one per element of G_s
	std::vector<int> small;                           // group element ids, canonical order
	int s = 0;

	int point_count() const { return 3 + s; }
	std::array<Int, 3> vtilde(int p) const {
		return p < 3 ? vtilde_corner[p] : vtilde_small[p - 3];
	}
	std::array<Int, 2> v(int p) const {
		auto t = vtilde(p);
		return {t[0], t[1]};
	}
	// group element id for point p (>= 3), or -1 for corners
	int element_of(int p) const { return p < 3 ? -1 : small[p - 3]; }
	// point index for a group element id, or -1
	int point_of_element(int id) const {
		for (int i = 0; i < s; ++i)
			if (small[i] == id) return 3 + i;
		return -1;
	}
};

struct PickAudit {
	long interior = 0;
	long boundary = 0;
	Rat area;
};

InvariantBasis invariant_basis(const GroupModel& g);
TrianglePoints triangle_points(const GroupModel& g, const InvariantBasis& b);
PickAudit pick_audit(const GroupModel& g, const TrianglePoints& t);

// true iff the age-1 element sits in the interior of the triangle
bool is_interior(const GroupModel& g, int element_id);

}  // namespace orbivertex
