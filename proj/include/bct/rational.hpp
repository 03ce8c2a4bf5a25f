#pragma once

// Arbitrary precision integers and rationals (GMP), plus the handful of
// helpers the rest of the library needs on top of gmpxx.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bct {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced n/d. Throws on d == 0.
inline Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Square root in Q, if it exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const Integer& n = q.get_num();
    const Integer& d = q.get_den();
    if (!is_square(n) || !is_square(d)) return std::nullopt;
    return make_rational(isqrt(n), isqrt(d));
}

inline Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rational rpow(const Rational& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("zero to a negative power");
        return rpow(Rational(1) / b, -e);
    }
    Rational r = make_rational(ipow(b.get_num(), static_cast<unsigned long>(e)),
                               ipow(b.get_den(), static_cast<unsigned long>(e)));
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Residue of n modulo m in [0, m).
inline std::uint64_t mod_u64(const Integer& n, std::uint64_t m) {
    return mpz_fdiv_ui(n.get_mpz_t(), m);
}

inline Integer mod_floor(const Integer& n, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Symmetric residue in (-m/2, m/2].
inline Integer mod_symmetric(const Integer& n, const Integer& m) {
    Integer r = mod_floor(n, m);
    if (2 * r > m) r -= m;
    return r;
}

inline Integer invert_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("element not invertible modulo m");
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace bct
