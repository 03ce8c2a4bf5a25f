#pragma once

// Square classes K^* / (K^*)^2 for K = Q(i) and Q(sqrt(-3)).

#include "bct/numtheory.hpp"
#include "bct/quadratic.hpp"

#include <stdexcept>
#include <vector>

namespace bct {

namespace detail {

inline bool in_ring_of_integers(const QuadElem& z) {
    if (z.D() == -3) {
        Rational a2 = z.a() * 2, b2 = z.b() * 2;
        if (a2.get_den() != 1 || b2.get_den() != 1) return false;
        Integer s = a2.get_num() + b2.get_num();
        return mpz_even_p(s.get_mpz_t()) != 0;
    }
    if (z.D() % 4 == 1) throw std::logic_error("in_ring_of_integers: unsupported field");
    return z.a().get_den() == 1 && z.b().get_den() == 1;
}

// Primes of O_K above the rational prime p, one per prime ideal.
inline std::vector<QuadElem> primes_above(const Integer& p, long D) {
    std::vector<QuadElem> out;
    if (D == -1) {
        if (p == 2) return {QuadElem(1, 1, D)};
        if (mod_u64(p, 4) == 3) return {QuadElem(Rational(p), 0, D)};
    } else if (D == -3) {
        if (p == 3) return {QuadElem(0, 1, D)};
        if (p == 2 || mod_u64(p, 3) == 2) return {QuadElem(Rational(p), 0, D)};
    } else {
        throw std::logic_error("primes_above: only D = -1, -3 supported");
    }
    auto xy = cornacchia(-D, p);
    if (!xy) throw std::logic_error("primes_above: split prime without representation");
    Integer x = xy->first, y = xy->second;
    if (D == -1 && x < y) std::swap(x, y);
    out.emplace_back(Rational(x), Rational(y), D);
    out.emplace_back(Rational(x), Rational(-y), D);
    return out;
}

}  // namespace detail

/// Canonical representative of d modulo squares: a unit from {1, i}
/// (resp. {1, -1}) times the product of the primes occurring to odd power.
inline QuadElem square_class_rep(const QuadElem& d) {
    if (d.is_zero()) throw std::domain_error("square_class_rep: zero has no square class");
    const long D = d.D();
    if (D != -1 && D != -3) throw std::domain_error("square_class_rep: only Q(i) and Q(sqrt(-3)) supported");
    Integer den = lcm(d.a().get_den(), d.b().get_den());
    QuadElem z = d * Rational(den * den);
    QuadElem rep(1, 0, D);
    auto fac = factor_integer(abs(z.norm().get_num()));
    for (const auto& [p, e] : fac) {
        (void)e;
        for (const QuadElem& pi : detail::primes_above(p, D)) {
            int v = 0;
            while (true) {
                QuadElem q = z / pi;
                if (!detail::in_ring_of_integers(q)) break;
                z = q;
                ++v;
            }
            if (v % 2) rep = rep * pi;
        }
    }
    // z is now a unit
    if (z.norm() != 1) throw std::logic_error("square_class_rep: residual is not a unit");
    if (D == -1) {
        if (z.b() != 0) rep = rep * QuadElem(0, 1, D);
    } else {
        QuadElem cube = z * z * z;
        if (cube == QuadElem(-1, 0, D)) rep = -rep;
    }
    return rep;
}

/// K(sqrt d1) = K(sqrt d2).
inline bool same_square_class(const QuadElem& d1, const QuadElem& d2) {
    if (d1.is_zero() || d2.is_zero()) throw std::domain_error("same_square_class: zero input");
    return sqrt_in_quad(d1 * d2).has_value();
}

}  // namespace bct
