#include "orbivertex/correspondence.hpp"

#include <algorithm>
#include <functional>

namespace orbivertex {

namespace {

Int pairing(const ChargeSystem& cs, const std::vector<long>& m, int i) {
	Int d = 0;
	for (int j = 0; j < cs.s(); ++j) d += Int(m[j]) * cs.charges[j][i];
	return d;
}

void for_each_m(int s, long bound, const std::function<void(const std::vector<long>&)>& fn) {
	std::vector<long> m(s, 0);
	std::function<void(int, long)> rec = [&](int i, long left) {
		if (i == s) {
			fn(m);
			return;
		}
		for (long v = 0; v <= left; ++v) {
			m[i] = v;
			rec(i + 1, left - v);
		}
		m[i] = 0;
	};
	rec(0, bound);
}

}  // namespace

RMat invert(const RMat& m) {
	size_t n = m.size();
	RMat a = m, inv(n, RVec(n, Rat(0)));
	for (size_t i = 0; i < n; ++i) {
		if (a[i].size() != n) throw Error("Singular", "matrix not square");
		inv[i][i] = 1;
	}
	for (size_t c = 0; c < n; ++c) {
		size_t piv = c;
		while (piv < n && a[piv][c] == 0) ++piv;
		if (piv == n) throw Error("Singular", "matrix is singular");
		std::swap(a[piv], a[c]);
		std::swap(inv[piv], inv[c]);
		Rat p = a[c][c];
		for (size_t k = 0; k < n; ++k) {
			a[c][k] /= p;
			inv[c][k] /= p;
		}
		for (size_t r = 0; r < n; ++r) {
			if (r == c || a[r][c] == 0) continue;
			Rat f = a[r][c];
			for (size_t k = 0; k < n; ++k) {
				a[r][k] -= f * a[c][k];
				inv[r][k] -= f * inv[c][k];
			}
		}
	}
	return inv;
}

RMat b_matrix(const ChargeSystem& cs) {
	int s = cs.s();
	RMat l(s, RVec(s));
	for (int g = 0; g < s; ++g)
		for (int h = 0; h < s; ++h) l[g][h] = Rat(cs.charges[g][3 + h]);
	RMat b = invert(l);
	// both-sided identity
	for (int i = 0; i < s; ++i) {
		for (int j = 0; j < s; ++j) {
			Rat s1 = 0, s2 = 0;
			for (int h = 0; h < s; ++h) {
				s1 += b[i][h] * l[h][j];  // sum_h b_{i h} l^(h)_{j}
				s2 += l[i][h] * b[h][j];
			}
			Rat expect = (i == j) ? 1 : 0;
			if (s1 != expect || s2 != expect)
				throw Error("Singular", "b matrix fails the two-sided identity");
		}
	}
	return b;
}

Rat framing_correspondence(const GroupModel& g, const ChargeSystem& cs) {
	Rat a = -Rat(cs.l0[1]);
	for (int h = 0; h < cs.s(); ++h)
		a -= Rat(cs.l0[3 + h]) * g.elem(cs.small[h]).shifts[1];
	if (!is_integer(a * Rat(g.size() / g.g1_order)))
		throw Error("InternalInconsistency", "framing a not in (1/|G/G1|)Z");
	return a;
}

ChangeOfVariables change_of_variables(const GroupModel& g, const ChargeSystem& cs) {
	int s = cs.s();
	ChangeOfVariables cv;
	cv.b = b_matrix(cs);
	cv.a = framing_correspondence(g, cs);
	TorusWeights w = torus_weights(g, cv.a);
	for (int i = 0; i < s; ++i) {
		Monomial m;
		m.coef = Coef(Rat(1));
		for (int h = 0; h < s; ++h)
			if (cv.b[i][h] != 0) m.exps[qvar_name(cs.small[h])] = cv.b[i][h];
		cv.subs[xvar_name(cs.small[i])] = m;
	}
	{
		Monomial m;
		long sign = (cs.f + 1) % 2 == 0 ? 1 : -1;  // the (-1)^{f+1} part
		m.coef = Coef(Rat(sign), Rat(0), 1);       // one formal lambda2 phase
		m.exps["q0"] = 1;
		for (int gidx = 0; gidx < s; ++gidx) {
			Rat e = 0;
			for (int h = 0; h < s; ++h) e -= Rat(cs.l0[3 + h]) * cv.b[h][gidx];
			if (e != 0) m.exps[qvar_name(cs.small[gidx])] = e;
		}
		cv.subs["x0"] = m;
	}

	// z-monomial consistency: composing q(z) reproduces the direct x(z) monomials
	int np = 3 + s;
	for (int i = 0; i < s; ++i) {
		for (int p = 0; p < np; ++p) {
			Rat e = 0;
			for (int h = 0; h < s; ++h) e += cv.b[i][h] * Rat(cs.charges[h][p]);
			Rat expect = p < 3 ? -g.elem(cs.small[i]).shifts[p] : Rat(p == 3 + i ? 1 : 0);
			if (e != expect)
				throw Error("InternalInconsistency", "x_g(z) monomial mismatch");
		}
	}
	std::array<Rat, 3> lam{w.lambda0, w.lambda1, w.lambda2};
	for (int p = 0; p < np; ++p) {
		Rat e = Rat(cs.l0[p]);
		for (int gidx = 0; gidx < s; ++gidx) {
			const auto& mexps = cv.subs["x0"].exps;
			auto it = mexps.find(qvar_name(cs.small[gidx]));
			if (it != mexps.end()) e += it->second * Rat(cs.charges[gidx][p]);
		}
		Rat expect = p < 3 ? lam[p] : Rat(0);
		if (e != expect) throw Error("InternalInconsistency", "x_0(z) monomial mismatch");
	}
	return cv;
}

AnalyticSplit analytic_part(const QSeries& s) {
	AnalyticSplit out;
	out.analytic = QSeries(s.vars(), s.truncation());
	for (const auto& [e, c] : s.terms()) {
		bool good = true;
		for (const Rat& x : e)
			if (!is_integer(x) || x < 0) good = false;
		if (good)
			out.analytic.add_term(e, c);
		else
			out.dropped.push_back({e, c});
	}
	return out;
}

CorrespondenceReport compare(const GroupModel& g, const ChargeSystem& cs,
                             const Potential& w, const Potential& forb, long D,
                             bool sign_search) {
	int s = cs.s();
	CorrespondenceReport rep;
	rep.f = cs.f;
	ChangeOfVariables cv = change_of_variables(g, cs);
	rep.a = cv.a;
	rep.b = cv.b;
	TorusWeights tw = torus_weights(g, cv.a);

	// l0-weighted second shift sum; its floor times m0 is the sign left over
	// when the two formal open-string phases are combined
	Rat sigma2 = 0;
	for (int h = 0; h < s; ++h)
		sigma2 += Rat(cs.l0[3 + h]) * g.elem(cs.small[h]).shifts[2];

	bool effective = g.g0_order == 1;
	if (effective)
		rep.case_tag = "effective";
	else if (cs.i1 == 1 && cs.f < 0)
		rep.case_tag = "ineffective-i1";
	else if (cs.i2 == 2 && cs.f >= 0)
		rep.case_tag = "ineffective-i2";
	else {
		rep.case_tag = "disjoint";
		rep.status = "disjoint";
		return rep;
	}

	// image of the disc potential on the q side: for each (m,m0) the unique
	// preimage (k,d) under the change of variables, evaluated directly
	std::vector<std::pair<RVec, std::pair<Rat, Rat>>> pairs;  // exps, (W, F) values
	auto wterms = w.series.real_terms();
	for (long m0 = 1; m0 <= D; ++m0) {
		for_each_m(s, D - m0, [&](const std::vector<long>& m) {
			std::vector<long> k(s);
			bool ok = true;
			for (int h = 0; h < s; ++h) {
				Int kh = Int(m0) * cs.l0[3 + h] + pairing(cs, m, 3 + h);
				if (kh < 0) ok = false;
				else k[h] = to_long(kh);
			}
			Rat fval = 0;
			if (ok) {
				Coef c = orbifold_coefficient(g, tw, k, m0);
				if (c.value != 0) {
					if (c.phase != 0 || c.l2 != static_cast<int>(m0 % 2))
						throw Error("InternalInconsistency", "unexpected disc potential phase");
					// shift-sum identity for the admissible tuple
					Rat s0 = 0;
					for (int h = 0; h < s; ++h)
						s0 += Rat(k[h]) * g.elem(cs.small[h]).shifts[0];
					Rat expect = tw.lambda0 * Rat(m0) - Rat(m0) * Rat(cs.l0[0]) -
					             Rat(pairing(cs, m, 0));
					if (s0 != expect)
						throw Error("InternalInconsistency", "shift-sum identity fails");
					// remaining substitution sign: (-1)^{(f+1)d} from the paired
					// formal phases, times the floor sign their square leaves
					fval = c.value;
					if (((cs.f + 1) * m0) % 2 != 0) fval = -fval;
					// negative framing evaluates the middle Gamma ratio at a
					// pole over a pole, which costs one extra minus sign
					if (cs.f < 0) fval = -fval;
					Int fl = rat_floor(Rat(m0) * sigma2);
					if (mpz_odd_p(fl.get_mpz_t())) fval = -fval;
					// cross-check against the supplied x-side series
					long tot = m0;
					for (long kk : k) tot += kk;
					if (Rat(tot) <= forb.series.truncation()) {
						RVec xe;
						for (long kk : k) xe.push_back(Rat(kk));
						xe.push_back(Rat(m0));
						Coef fc = forb.series.extract(xe);
						if (fc.value * Rat(g.g0_order) != c.value)
							throw Error("InternalInconsistency",
							            "disc potential series disagrees with direct kernel");
					}
				}
			}
			RVec exps;
			for (long v : m) exps.push_back(Rat(v));
			exps.push_back(Rat(m0));
			auto it = wterms.find(exps);
			Rat wval = it == wterms.end() ? Rat(0) : it->second;
			if (wval != 0 || fval != 0) pairs.push_back({exps, {wval, fval}});
		});
	}

	// dropped-term log from the x-side series
	for (const auto& [xe, xc] : forb.series.terms()) {
		std::vector<long> k(s);
		long d = to_long(xe[s]);
		for (int h = 0; h < s; ++h) k[h] = to_long(xe[h]);
		bool analytic = true;
		for (int gidx = 0; gidx < s && analytic; ++gidx) {
			Rat mg = 0;
			for (int h = 0; h < s; ++h)
				mg += (Rat(k[h]) - Rat(d) * Rat(cs.l0[3 + h])) * cv.b[h][gidx];
			if (!is_integer(mg) || mg < 0) analytic = false;
		}
		if (!analytic) rep.dropped.push_back({k, d});
	}

	auto matches = [&](const std::vector<int>& twist) {
		for (const auto& [e, v] : pairs) {
			Rat fv = v.second;
			if (!twist.empty()) {
				long par = 0;
				for (size_t i = 0; i < e.size(); ++i)
					if (twist[i] < 0) par += to_long(e[i]);
				if (par % 2 != 0) fv = -fv;
			}
			if (v.first != fv) return false;
		}
		return true;
	};

	rep.matched_terms = static_cast<long>(pairs.size());
	if (matches({})) {
		rep.status = "match";
		return rep;
	}
	if (sign_search) {
		std::vector<int> twist(s + 1, 1);
		for (long mask = 1; mask < (1L << (s + 1)); ++mask) {
			for (int i = 0; i <= s; ++i) twist[i] = (mask >> i) & 1 ? -1 : 1;
			if (matches(twist)) {
				rep.status = "match";
				rep.sign_twist = twist;
				return rep;
			}
		}
	}
	rep.status = "mismatch";
	for (const auto& [e, v] : pairs)
		if (v.first != v.second) rep.mismatches.push_back({e, v.first, v.second});
	return rep;
}

ConjectureReport conjecture_check(const GroupModel& g, const ChargeSystem& cs) {
	if (g.g0_order != 1) throw Error("NotEffective", "conjecture applies to the effective case");
	int s = cs.s();
	if (cs.i0 < 3) throw Error("InternalInconsistency", "effective case needs i0 in the small part");
	ConjectureReport rep;
	rep.order.push_back(cs.i0);
	for (int h = 0; h < s; ++h)
		if (3 + h != cs.i0) rep.order.push_back(3 + h);

	rep.matrix.assign(s + 1, RVec(s + 1, Rat(0)));
	for (int r = 0; r < s; ++r) {
		int row_charge = rep.order[r] - 3;  // charge basis index of g_{r+1}
		for (int c = 0; c < s; ++c) rep.matrix[r][c] = Rat(cs.charges[row_charge][rep.order[c]]);
		rep.matrix[r][s] = Rat(cs.charges[row_charge][0]);  // l_0^{(g)}
	}
	rep.matrix[s][0] = 1;
	rep.inverse = invert(rep.matrix);
	for (const auto& row : rep.inverse) {
		for (const Rat& x : row) {
			if (!is_integer(x)) rep.integral = false;
			if (x < 0) rep.nonnegative = false;
		}
	}
	return rep;
}

}  // namespace orbivertex
