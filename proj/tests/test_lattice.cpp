#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbivertex/lattice.hpp"

using namespace orbivertex;

static GroupModel make(const std::string& label) {
	return build_group(parse_group_label(label));
}

TEST_CASE("Z3 invariant basis") {
	GroupModel g = make("Z3(1,1,1)");
	InvariantBasis b = invariant_basis(g);
	CHECK(b.m1_star == 0);
	CHECK(b.m2_star == 1);
	CHECK(b.epsilon[0] == std::array<Int, 3>{Int(0), Int(0), Int(3)});
	CHECK(b.epsilon[1] == std::array<Int, 3>{Int(0), Int(-1), Int(1)});
	CHECK(b.epsilon[2] == std::array<Int, 3>{Int(1), Int(1), Int(1)});
	CHECK(b.det == 3);
}

TEST_CASE("Z2xZ2 invariant basis") {
	GroupModel g = make("Z2(1,0,1)xZ2(1,1,0)");
	InvariantBasis b = invariant_basis(g);
	CHECK(b.m1_star == 1);
	CHECK(b.m2_star == 0);
	CHECK(b.epsilon[0] == std::array<Int, 3>{Int(0), Int(2), Int(0)});
	CHECK(b.epsilon[1] == std::array<Int, 3>{Int(0), Int(-2), Int(2)});
	CHECK(b.det == 4);
}

TEST_CASE("basis determinant equals the group order") {
	for (const char* lbl :
	     {"Z3(1,1,1)", "Z4(2,1,1)", "Z5(3,1,1)", "Z6(1,2,3)", "Z2(1,0,1)xZ2(1,1,0)"}) {
		GroupModel g = make(lbl);
		InvariantBasis b = invariant_basis(g);
		CHECK(abs(b.det) == g.size());
	}
}

TEST_CASE("basis columns pair integrally with every shift triple") {
	for (const char* lbl : {"Z5(3,1,1)", "Z6(1,2,3)"}) {
		GroupModel g = make(lbl);
		InvariantBasis b = invariant_basis(g);
		for (int j = 0; j < 3; ++j) {
			for (const auto& e : g.elements) {
				Rat dot = 0;
				for (int k = 0; k < 3; ++k) dot += Rat(b.epsilon[j][k]) * e.shifts[k];
				CHECK(is_integer(dot));
			}
		}
		// and so does any integer combination of the columns
		for (long c0 = -2; c0 <= 2; ++c0) {
			for (long c1 = -2; c1 <= 2; ++c1) {
				for (const auto& e : g.elements) {
					Rat dot = 0;
					for (int k = 0; k < 3; ++k)
						dot += Rat(c0 * b.epsilon[0][k] + c1 * b.epsilon[1][k]) * e.shifts[k];
					CHECK(is_integer(dot));
				}
			}
		}
	}
}

TEST_CASE("Z3 triangle points") {
	GroupModel g = make("Z3(1,1,1)");
	TrianglePoints t = triangle_points(g, invariant_basis(g));
	CHECK(t.s == 1);
	CHECK(t.point_count() == 4);
	CHECK(t.vtilde(0) == std::array<Int, 3>{Int(0), Int(0), Int(1)});
	CHECK(t.vtilde(1) == std::array<Int, 3>{Int(0), Int(-1), Int(1)});
	CHECK(t.vtilde(2) == std::array<Int, 3>{Int(3), Int(1), Int(1)});
	CHECK(t.vtilde(3) == std::array<Int, 3>{Int(1), Int(0), Int(1)});
	CHECK(t.v(3) == std::array<Int, 2>{Int(1), Int(0)});
	CHECK(t.element_of(3) == 1);
	CHECK(t.point_of_element(1) == 3);
}

TEST_CASE("Z4 triangle points") {
	GroupModel g = make("Z4(2,1,1)");
	TrianglePoints t = triangle_points(g, invariant_basis(g));
	CHECK(t.vtilde(3) == std::array<Int, 3>{Int(2), Int(0), Int(1)});  // the z0-fixing involution
	CHECK(t.vtilde(4) == std::array<Int, 3>{Int(1), Int(0), Int(1)});  // the order-4 generator
}

TEST_CASE("each small point is a shift combination of the corners") {
	for (const char* lbl : {"Z5(3,1,1)", "Z6(1,2,3)", "Z2(1,0,1)xZ2(1,1,0)"}) {
		GroupModel g = make(lbl);
		TrianglePoints t = triangle_points(g, invariant_basis(g));
		for (int p = 3; p < t.point_count(); ++p) {
			const auto& sh = g.elem(t.element_of(p)).shifts;
			for (int k = 0; k < 3; ++k) {
				Rat x = sh[0] * Rat(t.vtilde(0)[k]) + sh[1] * Rat(t.vtilde(1)[k]) +
				        sh[2] * Rat(t.vtilde(2)[k]);
				CHECK(x == Rat(t.vtilde(p)[k]));
			}
		}
	}
}

TEST_CASE("interior classification matches nonzero shifts") {
	GroupModel g = make("Z5(3,1,1)");
	CHECK(is_interior(g, 1));
	CHECK(is_interior(g, 3));
	GroupModel g4 = make("Z4(2,1,1)");
	CHECK(!is_interior(g4, 1));  // (0,1/2,1/2) lies on the boundary
	CHECK(is_interior(g4, 2));
}

TEST_CASE("lattice point audit") {
	struct Row {
		const char* label;
		long interior, boundary;
		Rat area;
	};
	for (const Row& r : std::initializer_list<Row>{{"Z3(1,1,1)", 1, 3, Rat(3, 2)},
	                                               {"Z4(2,1,1)", 1, 4, Rat(2)},
	                                               {"Z5(3,1,1)", 2, 3, Rat(5, 2)},
	                                               {"Z6(1,2,3)", 1, 6, Rat(3)},
	                                               {"Z2(1,0,1)xZ2(1,1,0)", 0, 6, Rat(2)}}) {
		GroupModel g = make(r.label);
		TrianglePoints t = triangle_points(g, invariant_basis(g));
		PickAudit p = pick_audit(g, t);
		CHECK(p.interior == r.interior);
		CHECK(p.boundary == r.boundary);
		CHECK(p.area == r.area);
		CHECK(p.area == Rat(g.size()) / 2);
		CHECK(t.point_count() == 3 + t.s);
	}
}
