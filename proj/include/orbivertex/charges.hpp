#pragma once

#include "orbivertex/triangulation.hpp"

namespace orbivertex {

// Charge data attached to one triangulation.  Vectors are indexed by the
// point set S: entries 0,1,2 are the corners, entry 3+i the i-th element of
// the small part in canonical order.
struct ChargeSystem {
	std::vector<int> small;                     // group element ids
	std::vector<IVec> charges;                  // l^(g), one per small element
	std::vector<std::pair<int, int>> chosen_curves;  // star edge used per small element
	IVec l0;                                    // brane-extended vector over S
	int i0 = -1, i1 = -1, i2 = -1;              // point indices of Eq-11 support
	long f = 0;
	std::string triangulation_id;

	int s() const { return static_cast<int>(small.size()); }
	const IVec& charge_of(int element_id) const;
};

// unique relation with both apex coefficients equal to 1
IVec curve_relation(const TrianglePoints& t, const Triangulation& tr,
                    std::pair<int, int> edge);

// rows (edge, relation vector) for all compact curves, edges sorted
std::vector<std::pair<std::pair<int, int>, IVec>> intersection_table(
    const TrianglePoints& t, const Triangulation& tr);

// one star edge per small element such that the relations form a Z-basis of L
std::vector<std::pair<std::pair<int, int>, IVec>> charge_basis(
    const GroupModel& g, const TrianglePoints& t, const Triangulation& tr);

// boundary edges of the v1v2 side, ordered from v1 to v2
std::vector<std::pair<int, int>> v1v2_segments(const TrianglePoints& t,
                                               const Triangulation& tr);
std::pair<int, int> default_brane_segment(const TrianglePoints& t,
                                          const Triangulation& tr);

ChargeSystem brane_extension(const GroupModel& g, const TrianglePoints& t,
                             const Triangulation& tr, std::pair<int, int> segment, long f);

// Hermite normal form of the lattice generated by the rows
IMat hnf(IMat rows);

// primitive integer generators of L tensor Q from the shift data (one per small element)
IMat reference_relation_basis(const GroupModel& g, const TrianglePoints& t);

}  // namespace orbivertex
