#ifndef MONOHIER_ARITH_HPP
#define MONOHIER_ARITH_HPP

#include <gmpxx.h>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace monohier {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (2k-1)!! = 1*3*5*...*(2k-1); k = 0 gives 1.
inline BigInt double_factorial_odd(unsigned k) {
    BigInt r = 1;
    for (unsigned j = 1; j <= k; ++j) r *= 2 * j - 1;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt catalan(unsigned k) {
    return binomial(2 * k, k) / BigInt(k + 1);
}

// Number of non-crossing partitions of {1..n} with exactly q blocks.
inline BigInt narayana(unsigned n, unsigned q) {
    if (q == 0 || q > n) return n == 0 && q == 0 ? 1 : 0;
    return binomial(n, q) * binomial(n, q - 1) / BigInt(n);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical "num/den" form; integers print without the denominator.
inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

inline std::string format_double17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace monohier

#endif
