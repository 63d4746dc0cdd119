#include "orbivertex/orbifold.hpp"

#include <functional>

namespace orbivertex {

TorusWeights torus_weights(const GroupModel& g, const Rat& a) {
	// the framing formula lands in (1/|G/G1|)Z, which can be finer than (1/|G/G0|)Z
	if (!is_integer(a * Rat(g.size())))
		throw Error("WeightNotAdmissible", "framing a must lie in (1/|G|)Z");
	TorusWeights w;
	w.a = a;
	w.lambda0 = Rat(g.g0_order, g.size());
	w.lambda0.canonicalize();
	w.lambda1 = -a;
	w.lambda2 = a - w.lambda0;
	return w;
}

std::string xvar_name(int element_id) { return "x" + std::to_string(element_id); }

std::vector<std::string> orbifold_vars(const GroupModel& g) {
	std::vector<std::string> v;
	for (int id : g.small) v.push_back(xvar_name(id));
	v.push_back("x0");
	return v;
}

namespace {

bool odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

void for_each_k(int s, long bound, const std::function<void(const std::vector<long>&)>& fn) {
	std::vector<long> k(s, 0);
	std::function<void(int, long)> rec = [&](int i, long left) {
		if (i == s) {
			fn(k);
			return;
		}
		for (long v = 0; v <= left; ++v) {
			k[i] = v;
			rec(i + 1, left - v);
		}
		k[i] = 0;
	};
	rec(0, bound);
}

std::array<Rat, 3> shift_sum(const GroupModel& g, const std::vector<long>& k) {
	std::array<Rat, 3> s{Rat(0), Rat(0), Rat(0)};
	for (size_t i = 0; i < k.size(); ++i) {
		const auto& sh = g.elem(g.small[i]).shifts;
		for (int j = 0; j < 3; ++j) s[j] += Rat(k[i]) * sh[j];
	}
	return s;
}

}  // namespace

Rat disc_function(const GroupModel& g, int k, long d, const TorusWeights& w) {
	if (d < 1) throw Error("WeightNotAdmissible", "winding d must be positive");
	const auto& sh = g.elem(k).shifts;
	if (sh[0] != rat_frac(w.lambda0 * Rat(d))) return Rat(0);
	Rat v(1, g.g0_order);
	long ak = age(g.elem(k));
	for (long j = 0; j < ak; ++j) v /= d;
	v *= reciprocal_gamma_int(1 + w.lambda0 * Rat(d) - sh[0]);
	if (v == 0) return v;
	v *= gamma_ratio(-w.lambda2 * Rat(d) + sh[2], 1 + w.lambda1 * Rat(d) - sh[1]);
	return v;
}

OrbifoldMirror orbifold_mirror_map(const GroupModel& g, long D) {
	int s = static_cast<int>(g.small.size());
	OrbifoldMirror om;
	for (int id : g.small) om.xvars.push_back(xvar_name(id));
	for (int l = 0; l < s; ++l) om.x_map.emplace_back(om.xvars, Rat(D));
	for_each_k(s, D, [&](const std::vector<long>& k) {
		int sum = 0;
		long tot = 0;
		for (int i = 0; i < s; ++i) {
			tot += k[i];
			for (long r = 0; r < k[i]; ++r) sum = g.add(sum, g.small[i]);
		}
		if (tot == 0) return;
		int h = -1;
		for (int l = 0; l < s; ++l)
			if (g.small[l] == sum) h = l;
		if (h < 0) return;  // lands outside the small part
		auto ss = shift_sum(g, k);
		const auto& fh = g.elem(g.small[h]).shifts;
		Rat c = -1;
		for (int j = 0; j < 3 && c != 0; ++j) c *= gamma_ratio(ss[j], fh[j]);
		if (c == 0) return;
		for (int i = 0; i < s; ++i) c /= Rat(factorial(k[i]));
		if (tot % 2 != 0) c = -c;  // prod (-x_g)^{k_g}
		RVec exps;
		for (long v : k) exps.push_back(Rat(v));
		om.x_map[h].add_term(std::move(exps), c);
	});
	return om;
}

Coef orbifold_coefficient(const GroupModel& g, const TorusWeights& w,
                          const std::vector<long>& k, long d) {
	auto ss = shift_sum(g, k);
	if (rat_frac(ss[0]) != rat_frac(w.lambda0 * Rat(d))) return Coef();
	// the Gamma-ratio argument gap is a nonnegative integer
	Rat gap = (ss[2] - w.lambda2 * Rat(d)) - (1 - ss[1] + w.lambda1 * Rat(d));
	if (!is_integer(gap) || gap < 0)
		throw Error("InternalInconsistency", "disc potential argument gap not in Z>=0");
	Rat v = reciprocal_gamma_int(1 - ss[0] + w.lambda0 * Rat(d));
	if (v == 0) return Coef();
	v *= gamma_ratio(ss[2] - w.lambda2 * Rat(d), 1 - ss[1] + w.lambda1 * Rat(d));
	if (v == 0) return Coef();
	for (long kg : k) v /= Rat(factorial(kg));
	v /= d;
	if (odd(rat_floor(ss[2]))) v = -v;
	if (d % 2 != 0) v = -v;  // the (-1)^d part of ((-1)^{1+lambda2})^d
	return Coef(v, Rat(0), static_cast<int>(d % 2));
}

Potential orbifold_disc_potential(const GroupModel& g, const TorusWeights& w, long D) {
	int s = static_cast<int>(g.small.size());
	Potential p;
	p.side = "orbifold";
	p.a = w.a;
	p.series = QSeries(orbifold_vars(g), Rat(D));
	for (long d = 1; d <= D; ++d) {
		for_each_k(s, D - d, [&](const std::vector<long>& k) {
			Coef c = orbifold_coefficient(g, w, k, d);
			if (c.value == 0) return;
			c.value /= g.g0_order;
			RVec exps;
			for (long v : k) exps.push_back(Rat(v));
			exps.push_back(Rat(d));
			p.series.add_term(std::move(exps), c);
		});
	}
	return p;
}

OrbifoldCharges orbifold_charge_vectors(const GroupModel& g, const TorusWeights& w) {
	int s = static_cast<int>(g.small.size());
	OrbifoldCharges oc;
	for (int i = 0; i < s; ++i) {
		const auto& el = g.elem(g.small[i]);
		RVec row(3 + s, Rat(0));
		for (int j = 0; j < 3; ++j) {
			row[j] = -Rat(el.order) * el.shifts[j];
			if (!is_integer(row[j]))
				throw Error("InternalInconsistency", "n_g F_g^(j) not integral");
		}
		row[3 + i] = Rat(el.order);
		oc.lg.push_back(row);
	}
	long quot = g.quot0();
	oc.l0.assign(3 + s + 2, Rat(0));
	oc.l0[0] = w.lambda0 * Rat(quot);
	oc.l0[1] = w.lambda1 * Rat(quot);
	oc.l0[2] = w.lambda2 * Rat(quot);
	oc.l0[3 + s] = Rat(quot);
	oc.l0[3 + s + 1] = Rat(-quot);
	for (int j = 0; j < 3; ++j)
		if (!is_integer(oc.l0[j]))
			throw Error("InternalInconsistency", "scaled weight not integral");

	// each l-hat^(g) is a relation among the cone generators
	TrianglePoints t = triangle_points(g, invariant_basis(g));
	for (int i = 0; i < s; ++i) {
		for (int c = 0; c < 3; ++c) {
			Rat acc = 0;
			for (int p = 0; p < 3 + s; ++p) acc += oc.lg[i][p] * Rat(t.vtilde(p)[c]);
			if (acc != 0)
				throw Error("InternalInconsistency", "orbifold charge row is not a relation");
		}
	}
	// Aganagic-Vafa condition: coordinate sum vanishes
	Rat acc = 0;
	for (const Rat& x : oc.l0) acc += x;
	if (acc != 0) throw Error("InternalInconsistency", "brane charge row does not sum to zero");
	return oc;
}

}  // namespace orbivertex
