#include "orbivertex/charges.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace orbivertex {

const IVec& ChargeSystem::charge_of(int element_id) const {
	for (size_t i = 0; i < small.size(); ++i)
		if (small[i] == element_id) return charges[i];
	throw Error("UnknownElement", "element not in small part");
}

IVec curve_relation(const TrianglePoints& t, const Triangulation& tr,
                    std::pair<int, int> edge) {
	auto [a1, a2] = tr.apexes(edge.first, edge.second);
	int i1 = edge.first, i2 = edge.second;
	auto w1 = t.vtilde(a1), w2 = t.vtilde(a2), u1 = t.vtilde(i1), u2 = t.vtilde(i2);
	// solve l1*u1 + l2*u2 = -(w1+w2) over the rationals
	Rat l1, l2;
	bool solved = false;
	for (int r1 = 0; r1 < 3 && !solved; ++r1) {
		for (int r2 = r1 + 1; r2 < 3 && !solved; ++r2) {
			Rat det = Rat(u1[r1] * u2[r2] - u1[r2] * u2[r1]);
			if (det == 0) continue;
			Rat b1 = -Rat(w1[r1] + w2[r1]), b2 = -Rat(w1[r2] + w2[r2]);
			l1 = (b1 * Rat(u2[r2]) - Rat(u2[r1]) * b2) / det;
			l2 = (Rat(u1[r1]) * b2 - b1 * Rat(u1[r2])) / det;
			solved = true;
		}
	}
	if (!solved) throw Error("InternalInconsistency", "degenerate edge vectors");
	for (int r = 0; r < 3; ++r)
		if (l1 * Rat(u1[r]) + l2 * Rat(u2[r]) + Rat(w1[r] + w2[r]) != 0)
			throw Error("InternalInconsistency", "curve relation inconsistent");
	if (!is_integer(l1) || !is_integer(l2))
		throw Error("InternalInconsistency", "non-integer curve relation");
	IVec out(t.point_count(), Int(0));
	out[a1] += 1;
	out[a2] += 1;
	out[i1] += Int(l1.get_num());
	out[i2] += Int(l2.get_num());
	return out;
}

std::vector<std::pair<std::pair<int, int>, IVec>> intersection_table(
    const TrianglePoints& t, const Triangulation& tr) {
	std::vector<std::pair<std::pair<int, int>, IVec>> rows;
	for (const auto& e : tr.interior_edges())
		rows.push_back({e, curve_relation(t, tr, e)});
	return rows;
}

IMat hnf(IMat m) {
	if (m.empty()) return m;
	size_t rows = m.size(), cols = m[0].size();
	size_t r = 0;
	for (size_t c = 0; c < cols && r < rows; ++c) {
		// gcd-reduce column c below row r
		while (true) {
			size_t piv = rows;
			for (size_t i = r; i < rows; ++i)
				if (m[i][c] != 0 && (piv == rows || abs(m[i][c]) < abs(m[piv][c]))) piv = i;
			if (piv == rows) break;
			std::swap(m[r], m[piv]);
			bool clean = true;
			for (size_t i = r + 1; i < rows; ++i) {
				if (m[i][c] == 0) continue;
				Int q;
				mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
				for (size_t k = 0; k < cols; ++k) m[i][k] -= q * m[r][k];
				if (m[i][c] != 0) clean = false;
			}
			if (clean) break;
		}
		if (m[r][c] == 0) continue;
		if (m[r][c] < 0)
			for (size_t k = 0; k < cols; ++k) m[r][k] = -m[r][k];
		for (size_t i = 0; i < r; ++i) {
			Int q;
			mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
			for (size_t k = 0; k < cols; ++k) m[i][k] -= q * m[r][k];
		}
		++r;
	}
	m.resize(r);
	return m;
}

IMat reference_relation_basis(const GroupModel& g, const TrianglePoints& t) {
	// saturated left kernel of the point matrix: HNF of [vtilde | I] keeps the
	// row operations unimodular, so rows with vanishing vtilde part are a Z-basis
	int m = t.point_count();
	IMat aug;
	for (int p = 0; p < m; ++p) {
		IVec row(3 + m, Int(0));
		auto w = t.vtilde(p);
		for (int j = 0; j < 3; ++j) row[j] = w[j];
		row[3 + p] = 1;
		aug.push_back(row);
	}
	aug = hnf(std::move(aug));
	IMat out;
	for (const auto& row : aug) {
		if (row[0] != 0 || row[1] != 0 || row[2] != 0) continue;
		out.push_back(IVec(row.begin() + 3, row.end()));
	}
	if (static_cast<int>(out.size()) != t.s)
		throw Error("InternalInconsistency", "relation lattice rank != s");
	(void)g;
	return out;
}

std::vector<std::pair<std::pair<int, int>, IVec>> charge_basis(
    const GroupModel& g, const TrianglePoints& t, const Triangulation& tr) {
	IMat ref = hnf(reference_relation_basis(g, t));
	auto interior = tr.interior_edges();
	// candidate star edges per small element: edges into the small part come
	// before edges to the corners, each block sorted by neighbor point index
	std::vector<std::vector<std::pair<int, int>>> cands(t.s);
	for (int i = 0; i < t.s; ++i) {
		int p = 3 + i;
		std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> c;
		for (const auto& e : interior) {
			int nb = e.first == p ? e.second : (e.second == p ? e.first : -1);
			if (nb >= 0) c.push_back({{nb < 3 ? 1 : 0, nb}, e});
		}
		std::sort(c.begin(), c.end());
		for (const auto& [key, e] : c) cands[i].push_back(e);
	}
	std::vector<std::pair<int, int>> pick(t.s);
	std::vector<IVec> rel(t.s);
	std::set<std::pair<int, int>> taken;
	std::function<bool(int)> dfs = [&](int i) -> bool {
		if (i == t.s) {
			IMat m = rel;
			return hnf(std::move(m)) == ref;
		}
		for (const auto& e : cands[i]) {
			if (taken.count(e)) continue;  // one curve per element
			taken.insert(e);
			pick[i] = e;
			rel[i] = curve_relation(t, tr, e);
			if (dfs(i + 1)) return true;
			taken.erase(e);
		}
		return false;
	};
	if (!dfs(0)) throw Error("NoBasisFound", "no star-edge selection gives a Z-basis");
	std::vector<std::pair<std::pair<int, int>, IVec>> out;
	for (int i = 0; i < t.s; ++i) out.push_back({pick[i], rel[i]});
	return out;
}

std::vector<std::pair<int, int>> v1v2_segments(const TrianglePoints& t,
                                               const Triangulation& tr) {
	auto p1 = t.v(1), p2 = t.v(2);
	auto on_side = [&](int p) {
		auto q = t.v(p);
		Int cr = (p2[0] - p1[0]) * (q[1] - p1[1]) - (q[0] - p1[0]) * (p2[1] - p1[1]);
		if (cr != 0) return false;
		Int d = (q[0] - p1[0]) * (p2[0] - p1[0]) + (q[1] - p1[1]) * (p2[1] - p1[1]);
		Int full = (p2[0] - p1[0]) * (p2[0] - p1[0]) + (p2[1] - p1[1]) * (p2[1] - p1[1]);
		return d >= 0 && d <= full;
	};
	std::vector<std::pair<int, int>> out;
	for (const auto& e : tr.boundary_edges())
		if (on_side(e.first) && on_side(e.second)) out.push_back(e);
	// order each edge and the list from v1 towards v2
	auto along = [&](int p) -> Int {
		auto q = t.v(p);
		return (q[0] - p1[0]) * (p2[0] - p1[0]) + (q[1] - p1[1]) * (p2[1] - p1[1]);
	};
	for (auto& e : out)
		if (along(e.first) > along(e.second)) std::swap(e.first, e.second);
	std::sort(out.begin(), out.end(),
	          [&](const auto& a, const auto& b) { return along(a.first) < along(b.first); });
	return out;
}

std::pair<int, int> default_brane_segment(const TrianglePoints& t, const Triangulation& tr) {
	auto segs = v1v2_segments(t, tr);
	if (segs.empty()) throw Error("InternalInconsistency", "no boundary segment on v1v2");
	auto p1 = t.v(1), p2 = t.v(2);
	Rat mx = Rat(p1[0] + p2[0], 2), my = Rat(p1[1] + p2[1], 2);
	mx.canonicalize();
	my.canonicalize();
	for (const auto& e : segs) {
		auto a = t.v(e.first), b = t.v(e.second);
		// strict containment of the midpoint in the open segment
		Rat ta = (b[0] != a[0]) ? (mx - Rat(a[0])) / Rat(b[0] - a[0])
		                        : (my - Rat(a[1])) / Rat(b[1] - a[1]);
		if (ta > 0 && ta < 1 && Rat(a[0]) + ta * Rat(b[0] - a[0]) == mx &&
		    Rat(a[1]) + ta * Rat(b[1] - a[1]) == my)
			return e;
	}
	return segs.back();  // segment adjacent to v2
}

ChargeSystem brane_extension(const GroupModel& g, const TrianglePoints& t,
                             const Triangulation& tr, std::pair<int, int> segment, long f) {
	auto segs = v1v2_segments(t, tr);
	std::pair<int, int> seg{-1, -1};
	for (const auto& e : segs)
		if ((e.first == segment.first && e.second == segment.second) ||
		    (e.first == segment.second && e.second == segment.first))
			seg = e;
	if (seg.first < 0) throw Error("NotOnV1V2", "segment is not a boundary edge on v1v2");

	ChargeSystem cs;
	cs.small = g.small;
	cs.triangulation_id = tr.id;
	cs.f = f;
	for (const auto& [e, rel] : charge_basis(g, t, tr)) {
		cs.chosen_curves.push_back(e);
		cs.charges.push_back(rel);
	}
	auto ts = tr.edge_triangles(seg.first, seg.second);
	if (ts.size() != 1) throw Error("InternalInconsistency", "brane segment not boundary");
	int apex = -1;
	for (int v : tr.triangles[ts[0]])
		if (v != seg.first && v != seg.second) apex = v;
	cs.i0 = apex;
	cs.i1 = seg.first;
	cs.i2 = seg.second;
	cs.l0.assign(t.point_count(), Int(0));
	cs.l0[cs.i0] += 1;
	cs.l0[cs.i1] += Int(f);
	cs.l0[cs.i2] += Int(-f - 1);
	// shift condition on i0 when it is not the corner v0
	if (cs.i0 != 0) {
		int id = t.element_of(cs.i0);
		Rat want(g.g0_order, g.size());
		want.canonicalize();
		if (id < 0 || g.elem(id).shifts[0] != want)
			throw Error("InternalInconsistency", "apex does not carry the minimal z0-shift");
	}
	return cs;
}

}  // namespace orbivertex
