#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbivertex/resolution.hpp"

using namespace orbivertex;

namespace {

ChargeSystem charge_system(const std::string& label, long f) {
	GroupModel g = build_group(parse_group_label(label));
	TrianglePoints t = triangle_points(g, invariant_basis(g));
	auto ts = enumerate_triangulations(t);
	return brane_extension(g, t, ts[0], default_brane_segment(t, ts[0]), f);
}

}  // namespace

TEST_CASE("variable naming") {
	ChargeSystem cs = charge_system("Z4(2,1,1)", 0);
	CHECK(resolution_vars(cs) == std::vector<std::string>{"q1", "q2", "q0"});
	CHECK(qvar_name(7) == "q7");
}

TEST_CASE("frobenius coefficient base cases") {
	ChargeSystem cs = charge_system("Z3(1,1,1)", 0);
	CHECK(frobenius_coefficient(cs, {0}, 0, {Rat(1, 7)}, Rat(-2, 5)) == 1);
	CHECK(frobenius_coefficient(cs, {0}, 0, {Rat(0)}, Rat(0)) == 1);
	for (long m = 0; m <= 4; ++m)
		for (long m0 = 0; m0 <= 4; ++m0)
			if (m + m0 > 0)
				CHECK(frobenius_coefficient(cs, {m}, m0, {Rat(0)}, Rat(0)) == 0);
	ChargeSystem cs4 = charge_system("Z4(2,1,1)", 1);
	for (long m1 = 0; m1 <= 3; ++m1)
		for (long m2 = 0; m2 <= 3; ++m2)
			if (m1 + m2 > 0)
				CHECK(frobenius_coefficient(cs4, {m1, m2}, 2, {Rat(0), Rat(0)}, Rat(0)) == 0);
}

TEST_CASE("quantum corrections for the single-modulus cone") {
	ChargeSystem cs = charge_system("Z3(1,1,1)", 0);
	MirrorMap mm = mirror_corrections(cs, 8);
	REQUIRE(mm.qvars == std::vector<std::string>{"q1"});
	REQUIRE(mm.corrections.size() == 1);
	auto cxi = mm.corrections[0].real_terms();
	auto c0 = mm.c0.real_terms();
	for (long m = 1; m <= 8; ++m) {
		// closed forms: 3*(3m-1)!/(m!)^3*(-1)^m and -(3m-1)!/(m!)^3*(-1)^m
		Rat base = Rat(factorial(3 * m - 1)) / Rat(factorial(m) * factorial(m) * factorial(m));
		if (m % 2 != 0) base = -base;
		CHECK(cxi.at({Rat(m)}) == 3 * base);
		CHECK(c0.at({Rat(m)}) == -base);
	}
	CHECK(cxi.at({Rat(1)}) == -6);
	CHECK(c0.at({Rat(1)}) == 2);
	// no constant term
	CHECK(mm.corrections[0].extract({Rat(0)}).value == 0);
	CHECK(mm.c0.extract({Rat(0)}).value == 0);
}

TEST_CASE("quantum corrections for the two-modulus cone") {
	ChargeSystem cs = charge_system("Z4(2,1,1)", 0);
	MirrorMap mm = mirror_corrections(cs, 8);
	REQUIRE(mm.corrections.size() == 2);
	auto c1 = mm.corrections[0].real_terms();
	auto c2 = mm.corrections[1].real_terms();
	for (long m = 1; m <= 8; ++m) {
		// closed form: 2*(2m-1)!/(m!)^2, one variable per correction
		Rat want = 2 * Rat(factorial(2 * m - 1)) / Rat(factorial(m) * factorial(m));
		CHECK(c1.at({Rat(m), Rat(0)}) == want);
		CHECK(c2.at({Rat(0), Rat(m)}) == want);
	}
}

TEST_CASE("superpotential series") {
	ChargeSystem cs = charge_system("Z3(1,1,1)", 0);
	Potential w = superpotential(cs, 6);
	CHECK(w.series.vars() == std::vector<std::string>{"q1", "q0"});
	auto terms = w.series.real_terms();
	CHECK(terms.at({Rat(0), Rat(1)}) == 1);
	CHECK(terms.at({Rat(0), Rat(2)}) == Rat(1, 4));
	CHECK(terms.at({Rat(1), Rat(3)}) == Rat(-1, 3));
	CHECK(terms.at({Rat(1), Rat(4)}) == Rat(-1, 2));
	// every term carries a positive open-modulus power
	for (const auto& [e, c] : terms) CHECK(e[1] >= 1);
}

TEST_CASE("both superpotential evaluation routes agree") {
	for (const char* lbl : {"Z3(1,1,1)", "Z4(2,1,1)", "Z5(3,1,1)"}) {
		for (long f : {0L, 1L, -1L}) {
			ChargeSystem cs = charge_system(lbl, f);
			CHECK(superpotential(cs, 5).series == superpotential_signed(cs, 5).series);
		}
	}
}

TEST_CASE("picard-fuchs operators annihilate the solution family") {
	for (const char* lbl : {"Z3(1,1,1)", "Z4(2,1,1)", "Z5(3,1,1)"}) {
		ChargeSystem cs = charge_system(lbl, 0);
		PFReport r = pf_annihilation_check(cs, 6);
		CHECK(r.ok);
		CHECK(r.first_failure.empty());
	}
}

TEST_CASE("flat coordinates reshuffle the superpotential") {
	ChargeSystem cs = charge_system("Z3(1,1,1)", 0);
	MirrorMap mm = mirror_corrections(cs, 6);
	Potential w = superpotential(cs, 6);
	Potential flat = flat_disc_potential(cs, mm, w, 6);
	CHECK(flat.side == "flat");
	auto terms = flat.series.real_terms();
	CHECK(terms.at({Rat(0), Rat(1)}) == 1);
	for (const auto& [e, c] : terms) CHECK(e[1] >= 1);
	// the corrections are nontrivial, so the two series differ
	CHECK(!(flat.series == w.series));
}
