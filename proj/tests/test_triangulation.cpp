#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orbivertex/triangulation.hpp"

using namespace orbivertex;

static TrianglePoints points(const std::string& label) {
	GroupModel g = build_group(parse_group_label(label));
	return triangle_points(g, invariant_basis(g));
}

static Int doubled_area(const TrianglePoints& t, const std::array<int, 3>& tri) {
	auto a = t.v(tri[0]), b = t.v(tri[1]), c = t.v(tri[2]);
	return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
}

TEST_CASE("triangulation counts") {
	CHECK(enumerate_triangulations(points("Z3(1,1,1)")).size() == 1);
	CHECK(enumerate_triangulations(points("Z4(2,1,1)")).size() == 1);
	CHECK(enumerate_triangulations(points("Z5(3,1,1)")).size() == 1);
	CHECK(enumerate_triangulations(points("Z2(1,0,1)xZ2(1,1,0)")).size() == 4);
	CHECK(enumerate_triangulations(points("Z6(1,2,3)")).size() == 5);
}

TEST_CASE("triangles are unit, anticlockwise, and use every point") {
	for (const char* lbl : {"Z5(3,1,1)", "Z6(1,2,3)", "Z2(1,0,1)xZ2(1,1,0)"}) {
		GroupModel g = build_group(parse_group_label(lbl));
		TrianglePoints t = triangle_points(g, invariant_basis(g));
		for (const auto& tr : enumerate_triangulations(t)) {
			CHECK(static_cast<long>(tr.triangles.size()) == g.size());
			std::set<int> used;
			for (const auto& tri : tr.triangles) {
				CHECK(doubled_area(t, tri) == 1);
				for (int v : tri) used.insert(v);
			}
			CHECK(static_cast<int>(used.size()) == t.point_count());
			// Euler characteristic of a triangulated disc
			long V = t.point_count();
			long E = tr.interior_edges().size() + tr.boundary_edges().size();
			long F = tr.triangles.size();
			CHECK(V - E + F == 1);
		}
	}
}

TEST_CASE("enumeration is deterministic") {
	TrianglePoints t = points("Z6(1,2,3)");
	auto a = enumerate_triangulations(t);
	auto b = enumerate_triangulations(t);
	REQUIRE(a.size() == b.size());
	for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].id == b[i].id);
}

TEST_CASE("edge classification and apexes") {
	TrianglePoints t = points("Z3(1,1,1)");
	auto ts = enumerate_triangulations(t);
	REQUIRE(ts.size() == 1);
	const auto& tr = ts[0];
	// the interior point 3 connects to all three corners
	auto in = tr.interior_edges();
	CHECK(in == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}});
	CHECK(tr.boundary_edges().size() == 3);
	auto [a1, a2] = tr.apexes(0, 3);
	CHECK(std::set<int>{a1, a2} == std::set<int>{1, 2});
	CHECK(tr.edge_triangles(1, 2).size() == 1);
	CHECK(tr.edge_triangles(0, 3).size() == 2);
}

TEST_CASE("flop graph connectivity") {
	auto check_connected = [](const FlopGraph& fg) {
		std::vector<int> comp(fg.nodes.size(), -1);
		std::vector<int> stack{0};
		comp[0] = 0;
		while (!stack.empty()) {
			int x = stack.back();
			stack.pop_back();
			for (const auto& [u, v] : fg.arcs) {
				int o = u == x ? v : (v == x ? u : -1);
				if (o >= 0 && comp[o] < 0) {
					comp[o] = 0;
					stack.push_back(o);
				}
			}
		}
		for (int c : comp) CHECK(c == 0);
	};
	auto t3 = points("Z3(1,1,1)");
	auto fg3 = flop_graph(enumerate_triangulations(t3));
	CHECK(fg3.nodes.size() == 1);
	CHECK(fg3.arcs.empty());
	auto t22 = points("Z2(1,0,1)xZ2(1,1,0)");
	auto fg22 = flop_graph(enumerate_triangulations(t22));
	CHECK(fg22.nodes.size() == 4);
	check_connected(fg22);
	auto t6 = points("Z6(1,2,3)");
	auto fg6 = flop_graph(enumerate_triangulations(t6));
	CHECK(fg6.nodes.size() == 5);
	check_connected(fg6);
}

TEST_CASE("flop neighbors differ by exactly two triangles") {
	TrianglePoints t = points("Z6(1,2,3)");
	auto ts = enumerate_triangulations(t);
	auto fg = flop_graph(ts);
	for (const auto& [u, v] : fg.arcs) {
		std::set<std::array<int, 3>> a(ts[u].triangles.begin(), ts[u].triangles.end());
		std::set<std::array<int, 3>> b(ts[v].triangles.begin(), ts[v].triangles.end());
		std::vector<std::array<int, 3>> diff;
		for (const auto& x : a)
			if (!b.count(x)) diff.push_back(x);
		CHECK(diff.size() == 2);
	}
}

TEST_CASE("regularity of the small cases") {
	for (const char* lbl :
	     {"Z3(1,1,1)", "Z4(2,1,1)", "Z5(3,1,1)", "Z6(1,2,3)", "Z2(1,0,1)xZ2(1,1,0)"}) {
		TrianglePoints t = points(lbl);
		for (const auto& tr : enumerate_triangulations(t)) CHECK(is_regular(t, tr));
	}
}

TEST_CASE("search budget is enforced") {
	TrianglePoints t = points("Z6(1,2,3)");
	CHECK_THROWS_WITH_AS(enumerate_triangulations(t, 1), doctest::Contains("TooLarge"), Error);
}
