#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>
#include <stdexcept>

namespace orbivertex {

using Rat = mpq_class;
using Int = mpz_class;

// Error with a machine-readable kind tag ("NonSL", "TooLarge", ...).
struct Error : std::runtime_error {
	std::string kind;
	Error(std::string k, const std::string& msg)
	    : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

inline Int rat_floor(const Rat& x) {
	Int q;
	mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
	return q;
}

// fractional part <x> in [0,1)
inline Rat rat_frac(const Rat& x) {
	Rat r = x - Rat(rat_floor(x));
	r.canonicalize();  // two-arg mpq_class construction may leave inputs non-canonical
	return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline long to_long(const Int& n) {
	if (!n.fits_slong_p()) throw Error("Overflow", "integer does not fit in long");
	return n.get_si();
}

inline long to_long(const Rat& x) {
	if (!is_integer(x)) throw Error("NonInteger", "expected integer rational");
	return to_long(Int(x.get_num()));
}

inline Rat parse_rat(const std::string& s) {
	Rat r;
	if (r.set_str(s, 10) != 0) throw Error("ParseError", "bad rational '" + s + "'");
	r.canonicalize();
	return r;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Int factorial(long n) {
	if (n < 0) throw Error("NegativeFactorial", "n < 0");
	Int f;
	mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
	return f;
}

// g = x*a + y*b with g = gcd(a,b) >= 0
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
	Int g;
	mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return g;
}

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

}  // namespace orbivertex
