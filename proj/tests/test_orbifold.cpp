#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbivertex/orbifold.hpp"

using namespace orbivertex;

static GroupModel make(const std::string& label) {
	return build_group(parse_group_label(label));
}

TEST_CASE("torus weights from a framing parameter") {
	GroupModel g = make("Z3(1,1,1)");
	TorusWeights w = torus_weights(g, Rat(-1, 3));
	CHECK(w.lambda0 == Rat(1, 3));
	CHECK(w.lambda1 == Rat(1, 3));
	CHECK(w.lambda2 == Rat(-2, 3));
	CHECK(w.lambda0 + w.lambda1 + w.lambda2 == 0);
	GroupModel g4 = make("Z4(2,1,1)");
	TorusWeights w4 = torus_weights(g4, Rat(-1, 4));
	CHECK(w4.lambda0 == Rat(1, 2));
	CHECK(w4.lambda1 == Rat(1, 4));
	CHECK(w4.lambda2 == Rat(-3, 4));
	CHECK_THROWS_WITH_AS(torus_weights(g, Rat(1, 7)), doctest::Contains("WeightNotAdmissible"),
	                     Error);
}

TEST_CASE("disc function values") {
	GroupModel g = make("Z3(1,1,1)");
	TorusWeights w = torus_weights(g, Rat(-1, 3));
	CHECK(disc_function(g, 0, 3, w) == 1);
	CHECK(disc_function(g, 1, 1, w) == 1);
	// sector constraint: zero when the z0-shift does not match the winding
	CHECK(disc_function(g, 0, 1, w) == 0);
	CHECK(disc_function(g, 1, 2, w) == 0);
	CHECK(disc_function(g, 2, 1, w) == 0);
	CHECK_THROWS_AS(disc_function(g, 0, 0, w), Error);
	GroupModel g5 = make("Z5(3,1,1)");
	TorusWeights w5 = torus_weights(g5, Rat(-2, 5));
	CHECK(disc_function(g5, 1, 1, w5) == 1);
	CHECK(disc_function(g5, 2, 2, w5) == Rat(1, 4));
	CHECK(disc_function(g5, 0, 1, w5) == 0);
}

TEST_CASE("orbifold mirror map leading terms and sector parity") {
	GroupModel g = make("Z3(1,1,1)");
	OrbifoldMirror om = orbifold_mirror_map(g, 8);
	REQUIRE(om.xvars == std::vector<std::string>{"x1"});
	auto xi = om.x_map[0].real_terms();
	CHECK(xi.at({Rat(1)}) == 1);
	CHECK(xi.at({Rat(4)}) == Rat(-1, 648));
	CHECK(xi.at({Rat(7)}) == Rat(4, 229635));
	// only windings congruent to 1 mod 3 contribute
	for (const auto& [e, c] : xi) CHECK(to_long(e[0]) % 3 == 1);
	GroupModel g4 = make("Z4(2,1,1)");
	OrbifoldMirror om4 = orbifold_mirror_map(g4, 6);
	CHECK(om4.x_map[0].real_terms().at({Rat(1), Rat(0)}) == 1);
	CHECK(om4.x_map[1].real_terms().at({Rat(0), Rat(1)}) == 1);
	// the order-2 sector only sees odd powers of its own variable
	for (const auto& [e, c] : om4.x_map[0].real_terms()) {
		CHECK(to_long(e[0]) % 2 == 1);
		CHECK(e[1] == 0);
	}
	CHECK(om4.x_map[0].real_terms().at({Rat(3), Rat(0)}) == Rat(1, 24));
}

TEST_CASE("disc potential coefficients") {
	GroupModel g = make("Z3(1,1,1)");
	TorusWeights w = torus_weights(g, Rat(-1, 3));
	Potential p = orbifold_disc_potential(g, w, 6);
	CHECK(p.side == "orbifold");
	CHECK(p.series.vars() == std::vector<std::string>{"x1", "x0"});
	auto& terms = p.series.terms();
	// winding-only terms match the disc function weight
	for (long d = 1; d <= 6; ++d) {
		Coef c = p.series.extract({Rat(0), Rat(d)});
		Rat want = disc_function(g, 0, d, w) / d;
		Rat got = c.value;
		if (d % 2 != 0) got = -got;  // the formal (-x0) sign on odd windings
		CHECK(got == want);
		if (c.value != 0) CHECK(c.l2 == d % 2);
	}
	CHECK(p.series.extract({Rat(1), Rat(1)}).value == Rat(-1));
	CHECK(p.series.extract({Rat(1), Rat(4)}).value == Rat(1, 2));
	CHECK(p.series.extract({Rat(2), Rat(2)}).value == Rat(1, 4));
	CHECK(p.series.extract({Rat(3), Rat(3)}).value == Rat(1, 9));
	// sector selection rule: k and d agree modulo the group order
	for (const auto& [e, c] : terms) CHECK((to_long(e[0]) - to_long(e[1])) % 3 == 0);
}

TEST_CASE("disc potential coefficients with isotropy normalization") {
	GroupModel g = make("Z4(2,1,1)");
	TorusWeights w = torus_weights(g, Rat(-1, 4));
	Potential p = orbifold_disc_potential(g, w, 4);
	// vars: x for the involution sector, x for the generator sector, winding
	CHECK(p.series.extract({Rat(0), Rat(0), Rat(2)}).value == Rat(1, 4));
	CHECK(p.series.extract({Rat(0), Rat(1), Rat(1)}).value == Rat(-1, 2));
	CHECK(p.series.extract({Rat(1), Rat(1), Rat(1)}).value == Rat(-1, 4));
	CHECK(p.series.extract({Rat(2), Rat(0), Rat(2)}).value == Rat(-3, 32));
	// winding-only terms reduce to the disc function weight
	CHECK(p.series.extract({Rat(0), Rat(0), Rat(2)}).value == disc_function(g, 0, 2, w) / 2);
}

TEST_CASE("per-term coefficient evaluation matches the assembled series") {
	GroupModel g = make("Z5(3,1,1)");
	TorusWeights w = torus_weights(g, Rat(-2, 5));
	Potential p = orbifold_disc_potential(g, w, 5);
	for (long k1 = 0; k1 <= 3; ++k1) {
		for (long k2 = 0; k2 <= 3; ++k2) {
			for (long d = 1; k1 + k2 + d <= 5; ++d) {
				Coef c = orbifold_coefficient(g, w, {k1, k2}, d);
				Coef s = p.series.extract({Rat(k1), Rat(k2), Rat(d)});
				CHECK(c.value == s.value * g.g0_order);
				if (c.value != 0) CHECK(c.l2 == d % 2);
			}
		}
	}
	// sector constraint failure gives a vanishing coefficient
	CHECK(orbifold_coefficient(g, w, {1, 0}, 2).value == 0);
}

TEST_CASE("orbifold charge vectors") {
	GroupModel g = make("Z3(1,1,1)");
	OrbifoldCharges oc = orbifold_charge_vectors(g, torus_weights(g, Rat(-1, 3)));
	REQUIRE(oc.lg.size() == 1);
	CHECK(oc.lg[0] == RVec{Rat(-1), Rat(-1), Rat(-1), Rat(3)});
	CHECK(oc.l0 == RVec{Rat(1), Rat(1), Rat(-2), Rat(0), Rat(3), Rat(-3)});
	GroupModel g5 = make("Z5(3,1,1)");
	OrbifoldCharges oc5 = orbifold_charge_vectors(g5, torus_weights(g5, Rat(-2, 5)));
	CHECK(oc5.lg[0] == RVec{Rat(-1), Rat(-2), Rat(-2), Rat(5), Rat(0)});
	CHECK(oc5.lg[1] == RVec{Rat(-3), Rat(-1), Rat(-1), Rat(0), Rat(5)});
	CHECK(oc5.l0 == RVec{Rat(1), Rat(2), Rat(-3), Rat(0), Rat(0), Rat(5), Rat(-5)});
	GroupModel g4 = make("Z4(2,1,1)");
	OrbifoldCharges oc4 = orbifold_charge_vectors(g4, torus_weights(g4, Rat(-1, 2)));
	CHECK(oc4.lg[0] == RVec{Rat(0), Rat(-1), Rat(-1), Rat(2), Rat(0)});
	CHECK(oc4.lg[1] == RVec{Rat(-2), Rat(-1), Rat(-1), Rat(0), Rat(4)});
	CHECK(oc4.l0 == RVec{Rat(1), Rat(1), Rat(-2), Rat(0), Rat(0), Rat(2), Rat(-2)});
}

TEST_CASE("variable naming") {
	GroupModel g = make("Z4(2,1,1)");
	CHECK(orbifold_vars(g) == std::vector<std::string>{"x1", "x2", "x0"});
	CHECK(xvar_name(3) == "x3");
}
