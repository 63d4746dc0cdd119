#include "orbivertex/lattice.hpp"

#include <set>

namespace orbivertex {

InvariantBasis invariant_basis(const GroupModel& g) {
	Int G1(g.g1_order), G2(g.g2_order), n(g.size());
	Int cB = Int(g.c) * G2;
	Int gcd1;
	mpz_gcd(gcd1.get_mpz_t(), G1.get_mpz_t(), cB.get_mpz_t());
	Int A = G1 / gcd1;

	InvariantBasis ib;
	if (cB == 0) {
		// only solution family of A*m1 + 0*m2 = 1 with A = 1
		if (A != 1) throw Error("InternalInconsistency", "gcd structure broken");
		ib.m1_star = 1;
		ib.m2_star = 0;
	} else {
		Int x, y;
		Int gg = ext_gcd(A, cB, x, y);
		if (gg != 1) throw Error("InternalInconsistency", "A and c|G2| not coprime");
		// canonicalize 0 <= m1* < c|G2|
		Int m1;
		mpz_fdiv_r(m1.get_mpz_t(), x.get_mpz_t(), cB.get_mpz_t());
		ib.m1_star = m1;
		ib.m2_star = (1 - A * m1) / cB;
	}

	ib.epsilon[0] = {Int(0), ib.m1_star * n / gcd1, ib.m2_star * n};
	ib.epsilon[1] = {Int(0), -cB, G1};
	ib.epsilon[2] = {Int(1), Int(1), Int(1)};

	// det of the column matrix [eps0 eps1 eps2]
	auto& e = ib.epsilon;
	ib.det = e[0][0] * (e[1][1] * e[2][2] - e[2][1] * e[1][2]) -
	         e[1][0] * (e[0][1] * e[2][2] - e[2][1] * e[0][2]) +
	         e[2][0] * (e[0][1] * e[1][2] - e[1][1] * e[0][2]);
	Int ad = ib.det < 0 ? Int(-ib.det) : ib.det;
	if (ad != n) throw Error("InternalInconsistency", "basis determinant != |G|");

	// membership of each column in the lattice of invariants
	for (int j = 0; j < 3; ++j) {
		for (const auto& el : g.elements) {
			Rat dot = 0;
			for (int k = 0; k < 3; ++k) dot += Rat(e[j][k]) * el.shifts[k];
			if (!is_integer(dot))
				throw Error("InternalInconsistency", "basis column not invariant");
		}
	}
	return ib;
}

TrianglePoints triangle_points(const GroupModel& g, const InvariantBasis& b) {
	TrianglePoints t;
	Int n(g.size()), G1(g.g1_order), G2(g.g2_order);
	Int cB = Int(g.c) * G2;
	Int gcd1;
	mpz_gcd(gcd1.get_mpz_t(), G1.get_mpz_t(), cB.get_mpz_t());
	t.vtilde_corner[0] = {Int(0), Int(0), Int(1)};
	t.vtilde_corner[1] = {b.m1_star * n / gcd1, -cB, Int(1)};
	t.vtilde_corner[2] = {b.m2_star * n, G1, Int(1)};
	t.small = g.small;
	t.s = static_cast<int>(g.small.size());
	for (int id : g.small) {
		const auto& sh = g.elem(id).shifts;
		std::array<Int, 3> w;
		for (int k = 0; k < 3; ++k) {
			Rat x = sh[0] * Rat(t.vtilde_corner[0][k]) + sh[1] * Rat(t.vtilde_corner[1][k]) +
			        sh[2] * Rat(t.vtilde_corner[2][k]);
			if (!is_integer(x)) throw Error("InternalInconsistency", "vtilde_g not integral");
			w[k] = Int(x.get_num());
		}
		t.vtilde_small.push_back(w);
	}
	// distinctness
	std::set<std::array<Int, 2>> seen;
	for (int p = 0; p < t.point_count(); ++p)
		if (!seen.insert(t.v(p)).second)
			throw Error("InternalInconsistency", "duplicate lattice point");
	// area
	auto v0 = t.v(0), v1 = t.v(1), v2 = t.v(2);
	Int two_area = (v1[0] - v0[0]) * (v2[1] - v0[1]) - (v2[0] - v0[0]) * (v1[1] - v0[1]);
	if (two_area < 0) two_area = -two_area;
	if (two_area != n) throw Error("InternalInconsistency", "area != |G|/2");
	return t;
}

bool is_interior(const GroupModel& g, int element_id) {
	const auto& s = g.elem(element_id).shifts;
	return s[0] != 0 && s[1] != 0 && s[2] != 0;
}

PickAudit pick_audit(const GroupModel& g, const TrianglePoints& t) {
	PickAudit p;
	p.boundary = 3;
	for (int id : t.small) {
		if (is_interior(g, id))
			++p.interior;
		else
			++p.boundary;
	}
	p.area = Rat(g.size()) / 2;
	Rat pick = Rat(p.interior) + Rat(p.boundary) / 2 - 1;
	if (pick != p.area) throw Error("InternalInconsistency", "Pick count mismatch");
	return p;
}

}  // namespace orbivertex
