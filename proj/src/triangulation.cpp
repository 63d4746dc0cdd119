#include "orbivertex/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbivertex {

std::vector<std::pair<int, int>> Triangulation::interior_edges() const {
	std::map<std::pair<int, int>, int> count;
	for (const auto& t : triangles)
		for (int k = 0; k < 3; ++k)
			++count[std::minmax(t[k], t[(k + 1) % 3])];
	std::vector<std::pair<int, int>> out;
	for (const auto& [e, c] : count)
		if (c == 2) out.push_back(e);
	return out;
}

std::vector<std::pair<int, int>> Triangulation::boundary_edges() const {
	std::map<std::pair<int, int>, int> count;
	for (const auto& t : triangles)
		for (int k = 0; k < 3; ++k)
			++count[std::minmax(t[k], t[(k + 1) % 3])];
	std::vector<std::pair<int, int>> out;
	for (const auto& [e, c] : count)
		if (c == 1) out.push_back(e);
	return out;
}

std::vector<int> Triangulation::edge_triangles(int a, int b) const {
	std::vector<int> out;
	for (size_t i = 0; i < triangles.size(); ++i) {
		const auto& t = triangles[i];
		int hit = 0;
		for (int v : t)
			if (v == a || v == b) ++hit;
		if (hit == 2) out.push_back(static_cast<int>(i));
	}
	return out;
}

std::pair<int, int> Triangulation::apexes(int a, int b) const {
	auto ts = edge_triangles(a, b);
	if (ts.size() != 2) throw Error("NotCompact", "edge is not interior");
	std::array<int, 2> ap;
	for (int k = 0; k < 2; ++k)
		for (int v : triangles[ts[k]])
			if (v != a && v != b) ap[k] = v;
	return {ap[0], ap[1]};
}

namespace {

using Pt = std::array<Int, 2>;

Int cross(const Pt& o, const Pt& p, const Pt& q) {
	return (p[0] - o[0]) * (q[1] - o[1]) - (q[0] - o[0]) * (p[1] - o[1]);
}

struct Enumerator {
	const TrianglePoints& tp;
	std::vector<Pt> pts;
	long budget;
	long visited = 0;
	std::set<std::pair<int, int>> need, used;
	std::vector<std::array<int, 3>> cur;
	std::vector<Triangulation> out;

	Enumerator(const TrianglePoints& t, long b) : tp(t), budget(b) {
		for (int p = 0; p < t.point_count(); ++p) pts.push_back(t.v(p));
	}

	void seed_boundary() {
		// corners anticlockwise
		std::array<int, 3> c{0, 1, 2};
		if (cross(pts[0], pts[1], pts[2]) < 0) std::swap(c[1], c[2]);
		for (int k = 0; k < 3; ++k) {
			int a = c[k], b = c[(k + 1) % 3];
			// lattice points strictly between a and b, sorted along the side
			std::vector<int> on;
			for (int p = 3; p < tp.point_count(); ++p) {
				if (cross(pts[a], pts[b], pts[p]) != 0) continue;
				Int d1 = (pts[p][0] - pts[a][0]) * (pts[b][0] - pts[a][0]) +
				         (pts[p][1] - pts[a][1]) * (pts[b][1] - pts[a][1]);
				Int d2 = (pts[b][0] - pts[a][0]) * (pts[b][0] - pts[a][0]) +
				         (pts[b][1] - pts[a][1]) * (pts[b][1] - pts[a][1]);
				if (d1 > 0 && d1 < d2) on.push_back(p);
			}
			std::sort(on.begin(), on.end(), [&](int p, int q) {
				Int dp = (pts[p][0] - pts[a][0]) * (pts[p][0] - pts[a][0]) +
				         (pts[p][1] - pts[a][1]) * (pts[p][1] - pts[a][1]);
				Int dq = (pts[q][0] - pts[a][0]) * (pts[q][0] - pts[a][0]) +
				         (pts[q][1] - pts[a][1]) * (pts[q][1] - pts[a][1]);
				return dp < dq;
			});
			int prev = a;
			for (int p : on) {
				need.insert({prev, p});
				prev = p;
			}
			need.insert({prev, b});
		}
	}

	void record() {
		Triangulation t;
		t.triangles = cur;
		for (auto& tri : t.triangles) {
			int mi = std::min({tri[0], tri[1], tri[2]});
			while (tri[0] != mi) tri = {tri[1], tri[2], tri[0]};
		}
		std::sort(t.triangles.begin(), t.triangles.end());
		for (const auto& tri : t.triangles)
			t.id += std::to_string(tri[0]) + "." + std::to_string(tri[1]) + "." +
			        std::to_string(tri[2]) + ";";
		out.push_back(std::move(t));
	}

	void dfs() {
		if (++visited > budget) throw Error("TooLarge", "triangulation search budget exceeded");
		if (need.empty()) {
			record();
			return;
		}
		auto [u, v] = *need.begin();
		for (int w = 0; w < tp.point_count(); ++w) {
			if (w == u || w == v) continue;
			if (cross(pts[u], pts[v], pts[w]) != 1) continue;  // unimodular, left of u->v
			std::array<std::pair<int, int>, 3> es{{{u, v}, {v, w}, {w, u}}};
			bool clash = false;
			for (const auto& e : es)
				if (used.count(e)) clash = true;
			if (clash) continue;
			std::vector<std::pair<int, int>> erased, inserted;
			for (const auto& e : es) {
				used.insert(e);
				if (need.count(e)) {
					need.erase(e);
					erased.push_back(e);
				} else if (!used.count({e.second, e.first})) {
					need.insert({e.second, e.first});
					inserted.push_back({e.second, e.first});
				}
			}
			cur.push_back({u, v, w});
			dfs();
			cur.pop_back();
			for (const auto& e : inserted) need.erase(e);
			for (const auto& e : erased) need.insert(e);
			for (const auto& e : es) used.erase(e);
		}
	}
};

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const TrianglePoints& t, long node_budget) {
	Enumerator en(t, node_budget);
	en.seed_boundary();
	en.dfs();
	Int two_area = cross(t.v(0), t.v(1), t.v(2));
	if (two_area < 0) two_area = -two_area;
	for (const auto& tr : en.out) {
		if (Int(tr.triangles.size()) != two_area)
			throw Error("InternalInconsistency", "triangle count != |G|");
		// fineness: every point appears
		std::set<int> vs;
		for (const auto& tri : tr.triangles)
			vs.insert(tri.begin(), tri.end());
		if (static_cast<int>(vs.size()) != t.point_count())
			throw Error("InternalInconsistency", "triangulation not fine");
	}
	std::sort(en.out.begin(), en.out.end(),
	          [](const Triangulation& a, const Triangulation& b) { return a.id < b.id; });
	for (size_t i = 1; i < en.out.size(); ++i)
		if (en.out[i].id == en.out[i - 1].id)
			throw Error("InternalInconsistency", "duplicate triangulation");
	return en.out;
}

FlopGraph flop_graph(const std::vector<Triangulation>& ts) {
	FlopGraph g;
	for (const auto& t : ts) g.nodes.push_back(t.id);
	for (size_t i = 0; i < ts.size(); ++i) {
		for (size_t j = i + 1; j < ts.size(); ++j) {
			std::vector<std::array<int, 3>> di, dj;
			std::set_difference(ts[i].triangles.begin(), ts[i].triangles.end(),
			                    ts[j].triangles.begin(), ts[j].triangles.end(),
			                    std::back_inserter(di));
			std::set_difference(ts[j].triangles.begin(), ts[j].triangles.end(),
			                    ts[i].triangles.begin(), ts[i].triangles.end(),
			                    std::back_inserter(dj));
			if (di.size() != 2 || dj.size() != 2) continue;
			std::set<int> vi, vj;
			for (const auto& tr : di) vi.insert(tr.begin(), tr.end());
			for (const auto& tr : dj) vj.insert(tr.begin(), tr.end());
			if (vi == vj && vi.size() == 4) g.arcs.push_back({(int)i, (int)j});
		}
	}
	// connectivity
	if (!ts.empty()) {
		std::vector<int> comp(ts.size(), -1);
		std::vector<int> stack{0};
		comp[0] = 0;
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			for (const auto& [x, y] : g.arcs) {
				int o = (x == u) ? y : (y == u ? x : -1);
				if (o >= 0 && comp[o] < 0) {
					comp[o] = 0;
					stack.push_back(o);
				}
			}
		}
		for (int c : comp)
			if (c < 0) throw Error("InternalInconsistency", "flop graph disconnected");
	}
	return g;
}

bool is_regular(const TrianglePoints& t, const Triangulation& tr) {
	int nv = t.point_count() - 3;  // heights of non-corner points; corners pinned at 0
	// constraints: sum c_i h_i >= rhs
	std::vector<std::pair<RVec, Rat>> cons;
	for (const auto& [a, b] : tr.interior_edges()) {
		auto [c, d] = tr.apexes(a, b);
		// barycentric coordinates of v_d with respect to (v_a, v_b, v_c)
		auto pa = t.v(a), pb = t.v(b), pc = t.v(c), pd = t.v(d);
		auto cr = [](const std::array<Int, 2>& o, const std::array<Int, 2>& p,
		             const std::array<Int, 2>& q) -> Int {
			return (p[0] - o[0]) * (q[1] - o[1]) - (q[0] - o[0]) * (p[1] - o[1]);
		};
		Rat den(cr(pa, pb, pc));
		Rat ma = Rat(cr(pd, pb, pc)) / den;
		Rat mb = Rat(cr(pa, pd, pc)) / den;
		Rat mc = Rat(cr(pa, pb, pd)) / den;
		RVec row(nv, Rat(0));
		Rat rhs = 1;
		auto put = [&](int p, const Rat& coef) {
			if (p >= 3) row[p - 3] += coef;  // corner heights are 0
		};
		put(d, Rat(1));
		put(a, -ma);
		put(b, -mb);
		put(c, -mc);
		cons.push_back({row, rhs});
	}
	// Fourier-Motzkin elimination
	for (int v = 0; v < nv; ++v) {
		std::vector<std::pair<RVec, Rat>> pos, neg, zero;
		for (auto& cn : cons) {
			if (cn.first[v] > 0)
				pos.push_back(cn);
			else if (cn.first[v] < 0)
				neg.push_back(cn);
			else
				zero.push_back(cn);
		}
		cons = zero;
		for (const auto& p : pos) {
			for (const auto& ng : neg) {
				Rat s = -ng.first[v] / p.first[v];
				RVec row(nv, Rat(0));
				for (int k = 0; k < nv; ++k) row[k] = p.first[k] * s + ng.first[k];
				cons.push_back({row, p.second * s + ng.second});
			}
		}
	}
	for (const auto& cn : cons)
		if (cn.second > 0) return false;
	return true;
}

}  // namespace orbivertex
