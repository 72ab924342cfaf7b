#include "cde/rational.hpp"

#include "cde/errors.hpp"

namespace cde {

Rational fraction(const Integer& p, const Integer& q) {
	if(q == 0) {
		throw InputError("zero denominator");
	}
	Rational r(p, q);
	r.canonicalize();
	return r;
}

std::string to_string(const Rational& q) {
	Rational c = q;
	c.canonicalize();
	return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) {
	return z.get_str();
}

Rational parse_rational(const std::string& s) {
	Rational q;
	std::string t = s.find('/') == std::string::npos ? s + "/1" : s;
	if(q.set_str(t, 10) != 0 || q.get_den() == 0) {
		throw InputError("not a rational: '" + s + "'");
	}
	q.canonicalize();
	return q;
}

Integer factorial(long n) {
	Integer r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
	return r;
}

Integer binomial(long n, long k) {
	if(k < 0 || n < 0 || k > n) {
		return 0;
	}
	Integer r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return r;
}

Integer lcm(const Integer& a, const Integer& b) {
	Integer r;
	mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return r;
}

}  // namespace cde
