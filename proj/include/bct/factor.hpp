#pragma once

// Factorization over Q, over K = Q(sqrt D) (Trager's norm method) and root
// finding over Q, K and L = K(sqrt d).

#include "bct/poly.hpp"
#include "bct/quadratic.hpp"
#include "bct/square_class.hpp"
#include "bct/zassenhaus.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bct {

template <class E>
struct Factorization {
    E unit;
    std::vector<std::pair<Poly<E>, int>> factors;
};

using QPoly = Poly<Rational>;
using KPoly = Poly<QuadElem>;
using LPoly = Poly<RelQuadElem>;

/// Deterministic order: degree, then coefficients from the top.
template <class E>
bool poly_less(const Poly<E>& f, const Poly<E>& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (int i = f.degree(); i >= 0; --i) {
        const E& a = f.coeff(i);
        const E& b = g.coeff(i);
        if (a < b) return true;
        if (b < a) return false;
    }
    return false;
}

inline ZPoly to_zpoly(const QPoly& f) {
    Integer den = 1;
    for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
    ZPoly z;
    z.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) z.push_back(Integer(c * den));
    return zprimitive(z);
}

inline QPoly from_zpoly_monic(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& x : z) c.emplace_back(x);
    return monic(QPoly(RationalField{}, std::move(c)));
}

inline KPoly embed_in_k(const QPoly& f, const QuadField& K) {
    return map_coeffs<QuadElem>(f, K, [&](const Rational& q) { return K.from_rational(q); });
}

inline LPoly embed_in_l(const KPoly& f, const RelQuadField& L) {
    return map_coeffs<RelQuadElem>(f, L, [&](const QuadElem& q) { return L.embed(q); });
}

inline bool has_rational_coeffs(const KPoly& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const QuadElem& c) { return c.is_rational(); });
}

inline QPoly rational_part(const KPoly& f) {
    return map_coeffs<Rational>(f, RationalField{}, [](const QuadElem& c) {
        if (!c.is_rational()) throw std::logic_error("rational_part: coefficient not in Q");
        return c.a();
    });
}

inline KPoly kconj(const KPoly& f) {
    return map_coeffs<QuadElem>(f, f.field(), [](const QuadElem& c) { return quad_conj(c); });
}

/// N(f) = f * conj(f) in Q[x].
inline QPoly norm_poly(const KPoly& f) { return rational_part(f * kconj(f)); }

namespace detail {

// Irreducible monic factors of a squarefree f over Q of degree <= maxdeg.
inline std::vector<QPoly> q_factors_squarefree(const QPoly& f, int maxdeg) {
    std::vector<QPoly> out;
    if (f.degree() < 1) return out;
    ZPoly z = to_zpoly(f);
    if (z[0] == 0) {
        out.push_back(QPoly::x(RationalField{}));
        z.erase(z.begin());
        ztrim(z);
    }
    if (zdeg(z) >= 1)
        for (const auto& g : zassenhaus(z, maxdeg)) out.push_back(from_zpoly_monic(g));
    std::sort(out.begin(), out.end(), poly_less<Rational>);
    return out;
}

// Squarefree test over Q by reduction modulo a few primes, exact gcd as a fallback.
inline bool q_squarefree(const QPoly& f) {
    if (f.degree() < 2) return true;
    ZPoly z = to_zpoly(f);
    int tried = 0;
    for (std::uint64_t p = 5; tried < 6; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (mod_u64(z.back(), p) == 0) continue;
        ++tried;
        if (modp::is_squarefree(modp::reduce(z, p), p)) return true;
    }
    return poly_gcd(f, derivative(f)).degree() == 0;
}

// Trager: factors of a monic squarefree g over K of degree <= maxdeg.
inline std::vector<KPoly> trager(const KPoly& g, int maxdeg) {
    const QuadField& K = g.field();
    const QuadElem alpha = K.generator();
    for (long s = 0;; ++s) {
        KPoly G = compose_linear(g, K.one(), alpha * Rational(-s));  // g(x - s alpha)
        QPoly N = norm_poly(G);
        if (!q_squarefree(N)) continue;
        std::vector<KPoly> out;
        for (const QPoly& Ni : q_factors_squarefree(N, 2 * maxdeg)) {
            KPoly h = poly_gcd(G, embed_in_k(Ni, K));
            if (h.degree() < 1 || h.degree() > maxdeg) continue;
            out.push_back(monic(compose_linear(h, K.one(), alpha * Rational(s))));  // h(x + s alpha)
        }
        std::sort(out.begin(), out.end(), poly_less<QuadElem>);
        return out;
    }
}

// Factors over K of degree <= maxdeg of a monic squarefree g.
inline std::vector<KPoly> k_factors_squarefree(const KPoly& g, int maxdeg) {
    std::vector<KPoly> out;
    if (g.degree() < 1) return out;
    const QuadField& K = g.field();
    if (has_rational_coeffs(g)) {
        // A K-irreducible factor of degree m lies in a Q-irreducible factor of degree m or 2m.
        for (const QPoly& q : q_factors_squarefree(rational_part(g), 2 * maxdeg)) {
            for (const KPoly& h : trager(embed_in_k(q, K), q.degree()))
                if (h.degree() <= maxdeg) out.push_back(h);
        }
    } else {
        out = trager(g, maxdeg);
    }
    std::sort(out.begin(), out.end(), poly_less<QuadElem>);
    return out;
}

}  // namespace detail

/// Complete factorization over Q.
inline Factorization<Rational> factor_over_rationals(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_over_rationals: zero polynomial");
    Factorization<Rational> out{f.lead(), {}};
    for (const auto& [g, m] : squarefree_decomposition(f))
        for (const QPoly& h : detail::q_factors_squarefree(g, g.degree())) out.factors.emplace_back(h, m);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

/// Complete factorization over K.
inline Factorization<QuadElem> factor_over_quad(const KPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_over_quad: zero polynomial");
    Factorization<QuadElem> out{f.lead(), {}};
    for (const auto& [g, m] : squarefree_decomposition(f))
        for (const KPoly& h : detail::k_factors_squarefree(monic(g), g.degree())) out.factors.emplace_back(h, m);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

/// All monic irreducible factors of degree <= maxdeg over Q, without multiplicity.
inline std::vector<QPoly> low_degree_factors(const QPoly& f, int maxdeg) {
    if (f.is_zero()) return {};
    return detail::q_factors_squarefree(monic(squarefree_part(f)), maxdeg);
}

/// All monic irreducible factors of degree <= maxdeg over K, without multiplicity.
inline std::vector<KPoly> low_degree_factors(const KPoly& f, int maxdeg) {
    if (f.is_zero()) return {};
    return detail::k_factors_squarefree(monic(squarefree_part(f)), maxdeg);
}

/// Distinct roots in Q.
inline std::vector<Rational> roots_in_field(const QPoly& f) {
    std::vector<Rational> out;
    for (const QPoly& h : low_degree_factors(f, 1)) out.push_back(-h.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct roots in K.
inline std::vector<QuadElem> roots_in_field(const KPoly& f) {
    std::vector<QuadElem> out;
    for (const KPoly& h : low_degree_factors(f, 1)) out.push_back(-h.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct roots in L.
inline std::vector<RelQuadElem> roots_in_field(const LPoly& f) {
    if (f.is_zero()) return {};
    const RelQuadField& L = f.field();
    const QuadElem& d = L.d();
    const KPoly base = [&] {
        bool in_k = std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const RelQuadElem& c) { return c.beta().is_zero(); });
        std::vector<QuadElem> a, b;
        for (const auto& c : f.coeffs()) {
            a.push_back(c.alpha());
            b.push_back(c.beta());
        }
        KPoly fa(L.base(), a);
        if (in_k) return fa;
        // f * f^sigma = fa^2 - d fb^2
        KPoly fb(L.base(), b);
        return fa * fa - fb * fb * d;
    }();
    std::vector<RelQuadElem> cand;
    for (const KPoly& h : low_degree_factors(base, 2)) {
        if (h.degree() == 1) {
            cand.push_back(L.embed(-h.coeff(0)));
            continue;
        }
        // x^2 + b x + c: roots in L iff disc * d is a square in K
        const QuadElem disc = quadratic_discriminant(h);
        auto r = sqrt_in_quad(disc * d);
        if (!r) continue;
        // sqrt(disc) = (r / d) sqrt(d)
        RelQuadElem s = L.element(L.base().zero(), *r / d);
        RelQuadElem mb = L.embed(-h.coeff(1));
        RelQuadElem half = L.from_rational(Rational(1, 2));
        cand.push_back((mb + s) * half);
        cand.push_back((mb - s) * half);
    }
    std::vector<RelQuadElem> out;
    for (const auto& c : cand)
        if (is_zero(eval(f, c)) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bct
