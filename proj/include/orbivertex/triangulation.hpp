#pragma once

#include <string>

#include "orbivertex/lattice.hpp"

namespace orbivertex {

struct Triangulation {
	// each triangle anticlockwise, rotated so the smallest point index is first;
	// the list is sorted
	std::vector<std::array<int, 3>> triangles;
	std::string id;  // canonical serialization

	// undirected edges, each as an ordered pair (a<b)
	std::vector<std::pair<int, int>> interior_edges() const;
	std::vector<std::pair<int, int>> boundary_edges() const;
	// triangles containing the given undirected edge
	std::vector<int> edge_triangles(int a, int b) const;
	// for an interior edge, the two vertices opposite to it
	std::pair<int, int> apexes(int a, int b) const;
};

struct FlopGraph {
	std::vector<std::string> nodes;
	std::vector<std::pair<int, int>> arcs;
};

std::vector<Triangulation> enumerate_triangulations(const TrianglePoints& t,
                                                    long node_budget = 1000000);
FlopGraph flop_graph(const std::vector<Triangulation>& ts);
bool is_regular(const TrianglePoints& t, const Triangulation& tr);

}  // namespace orbivertex
