#include "orbivertex/resolution.hpp"

#include <algorithm>
#include <functional>

namespace orbivertex {

std::string qvar_name(int element_id) { return "q" + std::to_string(element_id); }

std::vector<std::string> resolution_vars(const ChargeSystem& cs) {
	std::vector<std::string> v;
	for (int id : cs.small) v.push_back(qvar_name(id));
	v.push_back("q0");
	return v;
}

namespace {

// <m, l_i> over the charge basis rows
Int pairing(const ChargeSystem& cs, const std::vector<long>& m, int i) {
	Int d = 0;
	for (int j = 0; j < cs.s(); ++j) d += Int(m[j]) * cs.charges[j][i];
	return d;
}

// all m in Z^s_{>=0} with |m|_1 <= bound
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

bool odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

}  // namespace

Rat frobenius_coefficient(const ChargeSystem& cs, const std::vector<long>& m, long m0,
                          const RVec& r, const Rat& r0) {
	int np = 3 + cs.s();
	Rat a = 1;
	for (int i = 0; i < np; ++i) {
		Rat shift = r0 * Rat(cs.l0[i]);
		for (int j = 0; j < cs.s(); ++j) shift += r[j] * Rat(cs.charges[j][i]);
		Rat step = Rat(m0) * Rat(cs.l0[i]) + Rat(pairing(cs, m, i));
		a *= gamma_ratio(1 + shift, 1 + shift + step);
		if (a == 0) return a;
	}
	a *= gamma_ratio(1 + r0, 1 + r0 + Rat(m0));
	a *= gamma_ratio(1 - r0, 1 - r0 - Rat(m0));
	return a;
}

MirrorMap mirror_corrections(const ChargeSystem& cs, long D) {
	int s = cs.s(), np = 3 + s;
	MirrorMap mm;
	for (int id : cs.small) mm.qvars.push_back(qvar_name(id));
	for (int l = 0; l < s; ++l) mm.corrections.emplace_back(mm.qvars, Rat(D));
	mm.c0 = QSeries(mm.qvars, Rat(D));
	for_each_m(s, D, [&](const std::vector<long>& m) {
		bool zero = std::all_of(m.begin(), m.end(), [](long v) { return v == 0; });
		if (zero) return;
		RVec exps;
		for (long v : m) exps.push_back(Rat(v));
		for (int h = 0; h < s; ++h) {
			Int mh = pairing(cs, m, 3 + h);
			if (mh >= 0) continue;
			Rat k = gamma_ratio(Rat(-mh), Rat(1));  // Gamma(-<m,l_h>)
			if (odd(mh)) k = -k;
			for (int i = 0; i < np && k != 0; ++i) {
				if (i == 3 + h) continue;
				k *= reciprocal_gamma_int(Rat(1) + Rat(pairing(cs, m, i)));
			}
			if (k == 0) continue;
			for (int l = 0; l < s; ++l)
				mm.corrections[l].add_term(exps, Rat(-cs.charges[l][3 + h]) * k);
			mm.c0.add_term(exps, Rat(-cs.l0[3 + h]) * k);
		}
	});
	return mm;
}

Potential superpotential(const ChargeSystem& cs, long D) {
	int s = cs.s(), np = 3 + s;
	Potential w;
	w.side = "resolution";
	w.f = cs.f;
	w.series = QSeries(resolution_vars(cs), Rat(D));
	for (long m0 = 1; m0 <= D; ++m0) {
		for_each_m(s, D - m0, [&](const std::vector<long>& m) {
			Rat coef(1, m0);
			if (m0 % 2 != 0) coef = -coef;  // (-q0)^{m0}
			for (int i = 0; i < np; ++i) {
				Int si = Int(m0) * cs.l0[i] + pairing(cs, m, i);
				if (cs.l0[i] >= 0) {
					if (si < 0) return;
					coef *= reciprocal_gamma_int(Rat(1 + si));
				} else {
					if (si >= 0) return;
					coef *= gamma_ratio(Rat(-si), Rat(1));  // Gamma(-s_i)
					if (odd(si)) coef = -coef;
				}
				if (coef == 0) return;
			}
			RVec exps;
			for (long v : m) exps.push_back(Rat(v));
			exps.push_back(Rat(m0));
			w.series.add_term(std::move(exps), coef);
		});
	}
	return w;
}

Potential superpotential_signed(const ChargeSystem& cs, long D) {
	int s = cs.s(), np = 3 + s;
	long f = cs.f;
	Potential w;
	w.side = "resolution";
	w.f = f;
	w.series = QSeries(resolution_vars(cs), Rat(D));
	for (long m0 = 1; m0 <= D; ++m0) {
		for_each_m(s, D - m0, [&](const std::vector<long>& m) {
			Int m1 = pairing(cs, m, cs.i1), m2 = pairing(cs, m, cs.i2);
			if (f >= 0) {
				if (!(Int((f + 1) * m0) > m2)) return;
			} else {
				if (!(Int(f * m0) + m1 < 0)) return;
			}
			Rat coef(1, m0);
			if (f < 0) coef = -coef;
			for (int i = 0; i < np && coef != 0; ++i) {
				if (i == cs.i0 || i == cs.i1 || i == cs.i2) continue;
				coef *= reciprocal_gamma_int(Rat(1) + Rat(pairing(cs, m, i)));
			}
			coef *= reciprocal_gamma_int(Rat(1 + m0) + Rat(pairing(cs, m, cs.i0)));
			coef *= gamma_ratio(Rat((f + 1) * m0) - Rat(m2), Rat(1 + f * m0) + Rat(m1));
			if (coef == 0) return;
			if ((f * m0) % 2 != 0) coef = -coef;  // [(-1)^f q0]^{m0}
			if (odd(m2)) coef = -coef;            // prod [(-1)^{l_{i2}^{(g)}} q_g]^{m_g}
			RVec exps;
			for (long v : m) exps.push_back(Rat(v));
			exps.push_back(Rat(m0));
			w.series.add_term(std::move(exps), coef);
		});
	}
	return w;
}

namespace {

// series with explicit log-coefficient parts: plain + sum_v logs[v] * log(var_v)
struct LogSeries {
	QSeries plain;
	std::vector<QSeries> logs;

	bool is_zero() const {
		if (!plain.is_zero()) return false;
		for (const auto& l : logs)
			if (!l.is_zero()) return false;
		return true;
	}
};

LogSeries log_zero(const std::vector<std::string>& vars, long D) {
	LogSeries r;
	r.plain = QSeries(vars, Rat(D));
	r.logs.assign(vars.size(), QSeries(vars, Rat(D)));
	return r;
}

LogSeries log_theta(const LogSeries& x, int v) {
	LogSeries r;
	r.plain = x.plain.theta(v) + x.logs[v];
	for (const auto& l : x.logs) r.logs.push_back(l.theta(v));
	return r;
}

// (sum_v c_v Theta_v - k) applied to x
LogSeries apply_linear(const LogSeries& x, const RVec& c, const Rat& k) {
	LogSeries r;
	r.plain = x.plain.scalar_mul(-k);
	for (const auto& l : x.logs) r.logs.push_back(l.scalar_mul(-k));
	for (size_t v = 0; v < c.size(); ++v) {
		if (c[v] == 0) continue;
		LogSeries t = log_theta(x, static_cast<int>(v));
		r.plain = r.plain + t.plain.scalar_mul(c[v]);
		for (size_t w = 0; w < r.logs.size(); ++w) r.logs[w] = r.logs[w] + t.logs[w].scalar_mul(c[v]);
	}
	return r;
}

// (T)_n with T = sum_v c_v Theta_v
LogSeries apply_falling(const LogSeries& x, const RVec& c, long n) {
	LogSeries r = x;
	for (long k = 0; k < n; ++k) r = apply_linear(r, c, Rat(k));
	return r;
}

LogSeries log_mul_monomial(const LogSeries& x, const RVec& exps) {
	LogSeries r;
	r.plain = x.plain.mul_monomial(exps, Coef(Rat(1)));
	for (const auto& l : x.logs) r.logs.push_back(l.mul_monomial(exps, Coef(Rat(1))));
	return r;
}

QSeries lift(const QSeries& src, const std::vector<std::string>& vars, const Rat& trunc) {
	std::map<std::string, Monomial> id;
	for (const auto& v : src.vars()) {
		Monomial m;
		m.coef = Coef(Rat(1));
		m.exps[v] = 1;
		id[v] = m;
	}
	return src.substitute(vars, id, trunc);
}

}  // namespace

PFReport pf_annihilation_check(const ChargeSystem& cs, long D) {
	int s = cs.s(), np = 3 + s;
	auto vars = resolution_vars(cs);
	MirrorMap mm = mirror_corrections(cs, D);

	// T_i coefficient rows over (q_{g_1},...,q_{g_s},q0)
	std::vector<RVec> tc(np, RVec(s + 1, Rat(0)));
	for (int i = 0; i < np; ++i) {
		for (int l = 0; l < s; ++l) tc[i][l] = Rat(cs.charges[l][i]);
		tc[i][s] = Rat(cs.l0[i]);
	}

	std::vector<std::pair<std::string, LogSeries>> sols;
	{
		LogSeries one = log_zero(vars, D);
		one.plain.add_term(RVec(vars.size(), Rat(0)), Rat(1));
		sols.push_back({"1", one});
		for (int l = 0; l < s; ++l) {
			LogSeries om = log_zero(vars, D);
			om.plain = lift(mm.corrections[l], vars, Rat(D));
			om.logs[l].add_term(RVec(vars.size(), Rat(0)), Rat(1));
			sols.push_back({"Omega_" + std::to_string(cs.small[l]), om});
		}
		LogSeries om0 = log_zero(vars, D);
		om0.plain = lift(mm.c0, vars, Rat(D));
		om0.logs[s].add_term(RVec(vars.size(), Rat(0)), Rat(1));
		sols.push_back({"Omega_0", om0});
	}

	PFReport rep;
	auto check = [&](const std::string& opname, const LogSeries& res, const std::string& sol) {
		if (res.is_zero() || !rep.ok) return;
		rep.ok = false;
		rep.first_failure = opname + " applied to " + sol + " is nonzero";
	};

	for (const auto& [name, om] : sols) {
		for (int l = 0; l < s; ++l) {
			LogSeries a = om, b = om;
			for (int i = 0; i < np; ++i) {
				Int li = cs.charges[l][i];
				if (li > 0) a = apply_falling(a, tc[i], to_long(li));
				if (li < 0) b = apply_falling(b, tc[i], to_long(Int(-li)));
			}
			RVec mono(vars.size(), Rat(0));
			mono[l] = 1;
			b = log_mul_monomial(b, mono);
			LogSeries res;
			res.plain = a.plain - b.plain;
			for (size_t w = 0; w < a.logs.size(); ++w) res.logs.push_back(a.logs[w] - b.logs[w]);
			check("D_" + std::to_string(cs.small[l]), res, name);
		}
		{
			LogSeries a = om, b = om;
			for (int i = 0; i < np; ++i) {
				Int li = cs.l0[i];
				if (li > 0) a = apply_falling(a, tc[i], to_long(li));
				if (li < 0) b = apply_falling(b, tc[i], to_long(Int(-li)));
			}
			a = log_theta(a, s);
			b = log_theta(b, s);
			RVec mono(vars.size(), Rat(0));
			mono[s] = 1;
			b = log_mul_monomial(b, mono);
			LogSeries res;
			res.plain = a.plain + b.plain;
			for (size_t w = 0; w < a.logs.size(); ++w) res.logs.push_back(a.logs[w] + b.logs[w]);
			check("D_0", res, name);
		}
	}
	return rep;
}

Potential flat_disc_potential(const ChargeSystem& cs, const MirrorMap& mm,
                              const Potential& w, long D) {
	int s = cs.s();
	std::vector<std::string> Qv;
	for (int id : cs.small) Qv.push_back("Q" + std::to_string(id));
	std::vector<std::string> Qfull = Qv;
	Qfull.push_back("Q0");

	// invert Q = q e^{C(q)} by iteration q <- Q e^{-C(q)}
	std::map<std::string, QSeries> cur;
	for (int l = 0; l < s; ++l) {
		QSeries m(Qv, Rat(D));
		RVec e(Qv.size(), Rat(0));
		e[l] = 1;
		m.add_term(e, Rat(1));
		cur[mm.qvars[l]] = m;
	}
	for (long it = 0; it <= D; ++it) {
		std::map<std::string, QSeries> nxt;
		for (int l = 0; l < s; ++l) {
			QSeries c = mm.corrections[l].compose(Qv, cur, Rat(D));
			QSeries m(Qv, Rat(D));
			RVec e(Qv.size(), Rat(0));
			e[l] = 1;
			m.add_term(e, Rat(1));
			nxt[mm.qvars[l]] = m * c.scalar_mul(Rat(-1)).exp();
		}
		bool same = true;
		for (const auto& [k, v] : nxt)
			if (!(cur.at(k) == v)) same = false;
		cur = std::move(nxt);
		if (same) break;
	}

	std::map<std::string, QSeries> full;
	for (const auto& [k, v] : cur) full[k] = lift(v, Qfull, Rat(D));
	{
		QSeries c0 = lift(mm.c0.compose(Qv, cur, Rat(D)), Qfull, Rat(D));
		QSeries m(Qfull, Rat(D));
		RVec e(Qfull.size(), Rat(0));
		e[s] = 1;
		m.add_term(e, Rat(1));
		full["q0"] = m * c0.scalar_mul(Rat(-1)).exp();
	}

	Potential out;
	out.side = "flat";
	out.f = w.f;
	out.a = w.a;
	out.series = w.series.compose(Qfull, full, Rat(D));
	return out;
}

}  // namespace orbivertex
