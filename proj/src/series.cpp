#include "orbivertex/series.hpp"

#include <algorithm>

namespace orbivertex {

Rat gamma_ratio(const Rat& z1, const Rat& z2) {
	Rat diff = z1 - z2;
	if (!is_integer(diff)) throw Error("NonIntegerDifference", "gamma_ratio needs z1-z2 in Z");
	long d = to_long(diff);
	if (d >= 0) {
		Rat p = 1;
		for (long k = 0; k < d; ++k) p *= z2 + k;
		return p;
	}
	// d < 0: zero if Gamma(x+z2) picks up a pole the numerator lacks,
	// i.e. some z1+k vanishes for 0 <= k < -d
	Rat p = 1;
	for (long k = 0; k < -d; ++k) {
		Rat f = z1 + k;
		if (f == 0) return Rat(0);
		p *= f;
	}
	return 1 / p;
}

Rat reciprocal_gamma_int(const Rat& z) {
	if (!is_integer(z)) throw Error("NonIntegerDifference", "reciprocal_gamma_int needs integer z");
	long n = to_long(z);
	if (n <= 0) return Rat(0);
	return Rat(1) / Rat(factorial(n - 1));
}

Rat falling_factorial(const Rat& x, long n) {
	if (n < 0) throw Error("NegativeIndex", "falling factorial needs n >= 0");
	Rat p = 1;
	for (long k = 0; k < n; ++k) p *= x - k;
	return p;
}

Rat psi_gamma_limit(long n) {
	if (n < 0) throw Error("NegativeIndex", "psi_gamma_limit needs n >= 0");
	Rat v(factorial(n));
	return (n % 2 == 0) ? -v : v;
}

Coef::Coef(Rat v, Rat ph, int l) : value(std::move(v)), l2(((l % 2) + 2) % 2) {
	if (value == 0) {
		phase = 0;
		l2 = 0;
		return;
	}
	// reduce phase mod 2, then fold the integer part into the sign
	Rat r = rat_frac(ph / 2) * 2;  // in [0,2)
	if (r >= 1) {
		value = -value;
		r -= 1;
	}
	phase = r;
}

Coef Coef::operator*(const Coef& o) const {
	return Coef(value * o.value, phase + o.phase, l2 + o.l2);
}

QSeries::QSeries(std::vector<std::string> vars, Rat trunc)
    : vars_(std::move(vars)), trunc_(std::move(trunc)) {}

int QSeries::var_index(const std::string& name) const {
	auto it = std::find(vars_.begin(), vars_.end(), name);
	if (it == vars_.end()) throw Error("UnknownVariable", name);
	return static_cast<int>(it - vars_.begin());
}

static Rat total_degree(const RVec& exps) {
	Rat d = 0;
	for (const Rat& e : exps) d += e;
	return d;
}

void QSeries::add_term(RVec exps, const Coef& c) {
	if (exps.size() != vars_.size()) throw Error("BadExponentVector", "arity mismatch");
	if (c.value == 0) return;
	if (total_degree(exps) > trunc_) return;
	auto it = terms_.find(exps);
	if (it == terms_.end()) {
		terms_.emplace(std::move(exps), c);
		return;
	}
	Coef& cur = it->second;
	if (cur.phase != c.phase || cur.l2 != c.l2)
		throw Error("NonAddablePhase", "terms with equal exponents carry different formal phases");
	cur.value += c.value;
	if (cur.value == 0) terms_.erase(it);
}

QSeries QSeries::operator+(const QSeries& o) const {
	if (vars_ != o.vars_ || trunc_ != o.trunc_)
		throw Error("TruncationMismatch", "series shapes differ");
	QSeries r = *this;
	for (const auto& [e, c] : o.terms_) r.add_term(e, c);
	return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.scalar_mul(Rat(-1)); }

QSeries QSeries::operator*(const QSeries& o) const {
	if (vars_ != o.vars_ || trunc_ != o.trunc_)
		throw Error("TruncationMismatch", "series shapes differ");
	QSeries r(vars_, trunc_);
	for (const auto& [e1, c1] : terms_) {
		for (const auto& [e2, c2] : o.terms_) {
			RVec e = e1;
			for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
			r.add_term(std::move(e), c1 * c2);
		}
	}
	return r;
}

QSeries QSeries::scalar_mul(const Rat& c) const {
	QSeries r(vars_, trunc_);
	if (c == 0) return r;
	for (const auto& [e, co] : terms_) r.add_term(e, Coef(co.value * c, co.phase, co.l2));
	return r;
}

QSeries QSeries::mul_monomial(const RVec& exps, const Coef& c) const {
	QSeries r(vars_, trunc_);
	for (const auto& [e, co] : terms_) {
		RVec ne = e;
		for (size_t i = 0; i < ne.size(); ++i) ne[i] += exps[i];
		r.add_term(std::move(ne), co * c);
	}
	return r;
}

QSeries QSeries::theta(int v) const {
	QSeries r(vars_, trunc_);
	for (const auto& [e, co] : terms_) {
		if (e[v] == 0) continue;
		r.add_term(e, Coef(co.value * e[v], co.phase, co.l2));
	}
	return r;
}

QSeries QSeries::exp() const {
	QSeries one(vars_, trunc_);
	one.add_term(RVec(vars_.size(), Rat(0)), Rat(1));
	for (const auto& [e, co] : terms_) {
		if (total_degree(e) <= 0) throw Error("ExpConstantTerm", "exp needs positive-degree terms");
		if (!co.is_real()) throw Error("ExpPhase", "exp needs real coefficients");
	}
	// lowest positive degree present bounds the number of powers needed
	Rat min_deg = trunc_ + 1;
	for (const auto& [e, co] : terms_) min_deg = std::min(min_deg, total_degree(e));
	QSeries acc = one, pw = one;
	Rat fact = 1;
	long kmax = to_long(rat_floor(trunc_ / min_deg));
	for (long k = 1; k <= kmax; ++k) {
		pw = pw * (*this);
		if (pw.is_zero()) break;
		fact *= k;
		acc = acc + pw.scalar_mul(1 / fact);
	}
	return acc;
}

QSeries QSeries::substitute(const std::vector<std::string>& new_vars,
                            const std::map<std::string, Monomial>& subs,
                            const Rat& new_trunc) const {
	QSeries r(new_vars, new_trunc);
	for (const auto& [e, co] : terms_) {
		Coef c = co;
		RVec ne(new_vars.size(), Rat(0));
		for (size_t i = 0; i < vars_.size(); ++i) {
			if (e[i] == 0) continue;
			auto it = subs.find(vars_[i]);
			if (it == subs.end()) throw Error("UnknownVariable", "no substitution for " + vars_[i]);
			const Monomial& m = it->second;
			if ((m.coef.phase != 0 || m.coef.l2 != 0) && !is_integer(e[i]))
				throw Error("NonIntegralPhasePower", "phase raised to non-integer power");
			if (m.coef.value != 1 && !is_integer(e[i]))
				throw Error("NonIntegralPower", "coefficient raised to non-integer power");
			if (is_integer(e[i])) {
				long p = to_long(e[i]);
				Rat v = 1;
				bool neg = p < 0;
				Rat base = m.coef.value;
				for (long k = 0; k < (neg ? -p : p); ++k) v *= base;
				if (neg) v = 1 / v;
				c = c * Coef(v, m.coef.phase * e[i], to_long(Rat(m.coef.l2) * e[i]) % 2);
			} else {
				c = c * Coef(m.coef.value);  // value is +1 here
			}
			for (const auto& [vn, ve] : m.exps) {
				size_t j = std::find(new_vars.begin(), new_vars.end(), vn) - new_vars.begin();
				if (j == new_vars.size()) throw Error("UnknownVariable", vn);
				ne[j] += ve * e[i];
			}
		}
		r.add_term(std::move(ne), c);
	}
	return r;
}

QSeries QSeries::compose(const std::vector<std::string>& new_vars,
                         const std::map<std::string, QSeries>& subs,
                         const Rat& new_trunc) const {
	QSeries r(new_vars, new_trunc);
	QSeries one(new_vars, new_trunc);
	one.add_term(RVec(new_vars.size(), Rat(0)), Rat(1));
	// cached powers: pw[i][k] = subs[var_i]^k
	std::vector<std::vector<QSeries>> pw(vars_.size());
	for (size_t i = 0; i < vars_.size(); ++i) pw[i].push_back(one);
	for (const auto& [e, co] : terms_) {
		QSeries t = one.mul_monomial(RVec(new_vars.size(), Rat(0)), co);
		for (size_t i = 0; i < vars_.size(); ++i) {
			if (e[i] == 0) continue;
			if (!is_integer(e[i]) || e[i] < 0)
				throw Error("NonIntegralPower", "compose needs nonnegative integer exponents");
			auto it = subs.find(vars_[i]);
			if (it == subs.end()) throw Error("UnknownVariable", "no substitution for " + vars_[i]);
			long p = to_long(e[i]);
			while (static_cast<long>(pw[i].size()) <= p) pw[i].push_back(pw[i].back() * it->second);
			t = t * pw[i][p];
		}
		r = r + t;
	}
	return r;
}

Coef QSeries::extract(const RVec& exps) const {
	auto it = terms_.find(exps);
	if (it == terms_.end()) return Coef();
	return it->second;
}

bool QSeries::operator==(const QSeries& o) const {
	return vars_ == o.vars_ && terms_ == o.terms_;
}

std::map<RVec, Rat> QSeries::real_terms() const {
	std::map<RVec, Rat> out;
	for (const auto& [e, c] : terms_) {
		if (!c.is_real())
			throw Error("NonIntegralPhaseInComparison", "coefficient has unresolved formal phase");
		out.emplace(e, c.value);
	}
	return out;
}

}  // namespace orbivertex
