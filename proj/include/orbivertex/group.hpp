#pragma once

#include <array>
#include <string>

#include "orbivertex/rational.hpp"

namespace orbivertex {

struct Generator {
	long order;
	std::array<long, 3> weights;
};

struct GroupElement {
	std::array<Rat, 3> shifts;  // each in [0,1)
	int index = 0;              // canonical id
	long order = 1;             // n_g
};

struct GroupModel {
	std::vector<GroupElement> elements;  // sorted lexicographically by shifts; [0] = identity
	long g0_order = 1, g1_order = 1, g2_order = 1;  // |G_j|
	int alpha = 0, beta = 0;
	long a = 0, b = 0, c = 0;
	std::vector<int> small;  // age-1 element ids, canonical order
	int coord_rotation = 0;  // times the cyclic coordinate relabeling was applied

	long size() const { return static_cast<long>(elements.size()); }
	long quot0() const { return size() / g0_order; }  // |G/G_0|
	long quot1() const { return size() / g1_order; }
	long quot2() const { return size() / g2_order; }
	const GroupElement& elem(int id) const { return elements[id]; }
	// id of the sum of two elements
	int add(int x, int y) const;
	int find_by_shifts(const std::array<Rat, 3>& s) const;
};

GroupModel build_group(const std::vector<Generator>& gens, long max_order = 10000);

long age(const GroupElement& e);

std::vector<int> small_part(const GroupModel& g);

// h in G_s with F^(0)_h = 1/|G/G_0|, by exhaustive scan
int find_age_one_with_min_shift(const GroupModel& g);

// "Zn(a,b,c)" or products joined by 'x', e.g. "Z2(1,0,1)xZ2(1,1,0)"
std::vector<Generator> parse_group_label(const std::string& label);

}  // namespace orbivertex
