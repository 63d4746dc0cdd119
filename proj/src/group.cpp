#include "orbivertex/group.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>

namespace orbivertex {

long age(const GroupElement& e) {
	Rat s = e.shifts[0] + e.shifts[1] + e.shifts[2];
	if (!is_integer(s)) throw Error("NonSL", "element has non-integer age");
	return to_long(s);
}

int GroupModel::find_by_shifts(const std::array<Rat, 3>& s) const {
	for (const auto& e : elements)
		if (e.shifts == s) return e.index;
	throw Error("InternalInconsistency", "shifts not found in group");
}

int GroupModel::add(int x, int y) const {
	std::array<Rat, 3> s;
	for (int j = 0; j < 3; ++j)
		s[j] = rat_frac(elements[x].shifts[j] + elements[y].shifts[j]);
	return find_by_shifts(s);
}

static long element_order(const std::array<Rat, 3>& s) {
	Int l = 1;
	for (int j = 0; j < 3; ++j) {
		Int d = s[j].get_den();
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
	}
	return to_long(l);
}

GroupModel build_group(const std::vector<Generator>& gens, long max_order) {
	// shift triples of the generators
	std::vector<std::array<Rat, 3>> gshifts;
	Int formal_order = 1;
	for (const auto& g : gens) {
		if (g.order < 1) throw Error("BadGenerator", "order must be >= 1");
		long wsum = g.weights[0] + g.weights[1] + g.weights[2];
		if (((wsum % g.order) + g.order) % g.order != 0)
			throw Error("NonSL", "generator weights do not sum to 0 mod order");
		std::array<Rat, 3> s;
		for (int j = 0; j < 3; ++j) s[j] = rat_frac(Rat(g.weights[j], g.order));
		gshifts.push_back(s);
		formal_order *= g.order;
	}
	if (formal_order > max_order)
		throw Error("TooLarge", "group order cap exceeded (see ORBIVERTEX_MAX_GROUP)");

	// enumerate the presented abelian group and its shift triples
	std::set<std::array<Rat, 3>> closure;
	std::vector<long> idx(gens.size(), 0);
	Int tuples = 0;
	bool done = gens.empty();
	std::array<Rat, 3> cur{Rat(0), Rat(0), Rat(0)};
	if (gens.empty()) closure.insert(cur);
	while (!done) {
		std::array<Rat, 3> s{Rat(0), Rat(0), Rat(0)};
		for (size_t i = 0; i < gens.size(); ++i)
			for (int j = 0; j < 3; ++j) s[j] = rat_frac(s[j] + idx[i] * gshifts[i][j]);
		closure.insert(s);
		tuples += 1;
		size_t i = 0;
		for (; i < gens.size(); ++i) {
			if (++idx[i] < gens[i].order) break;
			idx[i] = 0;
		}
		done = (i == gens.size());
	}
	if (!gens.empty() && Int(closure.size()) != formal_order)
		throw Error("Ineffective", "a non-identity element fixes all of C^3");
	if (closure.size() == 1) throw Error("TrivialGroup", "group is trivial");

	GroupModel m;
	for (const auto& s : closure) {
		GroupElement e;
		e.shifts = s;
		m.elements.push_back(e);
	}

	// relabel coordinates cyclically until the action on the z1-axis is nontrivial
	auto g1_trivial = [&] {
		for (const auto& e : m.elements)
			if (e.shifts[1] != 0) return false;
		return true;
	};
	while (g1_trivial()) {
		for (auto& e : m.elements) e.shifts = {e.shifts[1], e.shifts[2], e.shifts[0]};
		if (++m.coord_rotation > 2) throw Error("InternalInconsistency", "rotation loop");
	}

	std::sort(m.elements.begin(), m.elements.end(),
	          [](const GroupElement& a, const GroupElement& b) { return a.shifts < b.shifts; });
	for (size_t i = 0; i < m.elements.size(); ++i) {
		m.elements[i].index = static_cast<int>(i);
		m.elements[i].order = element_order(m.elements[i].shifts);
		age(m.elements[i]);  // NonSL check
	}

	long n = m.size();
	m.g0_order = m.g1_order = m.g2_order = 0;
	for (const auto& e : m.elements) {
		if (e.shifts[0] == 0) ++m.g0_order;
		if (e.shifts[1] == 0) ++m.g1_order;
		if (e.shifts[2] == 0) ++m.g2_order;
	}

	// alpha: smallest element with F^(1) = 1/|G/G_1|
	Rat f1(1, n / m.g1_order);
	m.alpha = -1;
	for (const auto& e : m.elements) {
		if (e.shifts[1] == f1) {
			m.alpha = e.index;
			break;
		}
	}
	if (m.alpha < 0) throw Error("InternalInconsistency", "no alpha with F^(1)=1/|G/G1|");
	{
		Rat bb = m.elem(m.alpha).shifts[0] * m.quot0();
		Rat cc = m.elem(m.alpha).shifts[2] * m.quot2();
		if (!is_integer(bb) || !is_integer(cc))
			throw Error("InternalInconsistency", "non-integer b or c");
		m.b = to_long(bb);
		m.c = to_long(cc);
	}

	// beta: generator of G_1 with F^(2) = 1/|G_1| and smallest F^(0)
	if (m.g1_order == 1) {
		m.beta = 0;
		m.a = 0;
	} else {
		Rat f2(1, m.g1_order);
		m.beta = -1;
		for (const auto& e : m.elements) {
			if (e.shifts[1] == 0 && e.shifts[2] == f2) {
				m.beta = e.index;
				break;
			}
		}
		if (m.beta < 0) throw Error("InternalInconsistency", "no beta generating G1");
		if (m.elem(m.beta).order != m.g1_order)
			throw Error("InternalInconsistency", "beta does not generate G1");
		Rat aa = m.elem(m.beta).shifts[0] * m.g1_order;
		if (!is_integer(aa)) throw Error("InternalInconsistency", "non-integer a");
		m.a = to_long(aa);
	}

	// the bijection (k,l) -> k*alpha + l*beta
	{
		std::set<int> seen;
		int ka = 0;
		for (long k = 0; k < m.quot1(); ++k) {
			int kl = ka;
			for (long l = 0; l < m.g1_order; ++l) {
				seen.insert(kl);
				kl = m.add(kl, m.beta);
			}
			ka = m.add(ka, m.alpha);
		}
		if (static_cast<long>(seen.size()) != n)
			throw Error("InternalInconsistency", "(k,l) -> k*alpha+l*beta is not a bijection");
	}

	for (const auto& e : m.elements)
		if (age(e) == 1) m.small.push_back(e.index);
	return m;
}

std::vector<int> small_part(const GroupModel& g) { return g.small; }

int find_age_one_with_min_shift(const GroupModel& g) {
	if (g.quot0() == 1) throw Error("NotApplicable", "|G| = |G_0|");
	Rat want(1, g.quot0());
	for (int id : g.small)
		if (g.elem(id).shifts[0] == want) return id;
	throw Error("InternalInconsistency", "no age-1 element with minimal F^(0)");
}

std::vector<Generator> parse_group_label(const std::string& label) {
	static const std::regex piece(R"(Z(\d+)\((-?\d+),(-?\d+),(-?\d+)\))");
	std::vector<Generator> gens;
	auto begin = std::sregex_iterator(label.begin(), label.end(), piece);
	std::string rest = label;
	size_t matched_len = 0;
	for (auto it = begin; it != std::sregex_iterator(); ++it) {
		const std::smatch& sm = *it;
		Generator g;
		g.order = std::stol(sm[1]);
		g.weights = {std::stol(sm[2]), std::stol(sm[3]), std::stol(sm[4])};
		gens.push_back(g);
		matched_len += sm[0].length();
	}
	size_t seps = gens.empty() ? 0 : gens.size() - 1;
	if (gens.empty() || matched_len + seps != label.size())
		throw Error("ParseError", "bad group label '" + label + "'");
	return gens;
}

}  // namespace orbivertex
