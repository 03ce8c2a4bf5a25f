#pragma once

// Torsion subgroups over K = Q(i), Q(sqrt(-3)) and over L = K(sqrt d).
// Groups are certified constructively: the result is the subgroup generated
// by explicitly found points; reduction modulo primes only prunes the search.

#include "bct/classification.hpp"
#include "bct/curve.hpp"
#include "bct/factor.hpp"
#include "bct/group.hpp"
#include "bct/numtheory.hpp"
#include "bct/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace bct {

template <class E>
struct TorsionGroup {
    Group invariants;
    /// Points of orders m and n generating the group (fewer when cyclic or trivial).
    std::vector<Point<E>> generators;
    /// All elements, sorted.
    std::vector<Point<E>> elements;

    long order() const { return invariants.order(); }
};

/// Subgroup generated by gens, as a sorted list.
template <class E>
std::vector<Point<E>> generate_subgroup(const WeierstrassCurve<E>& C, const std::vector<Point<E>>& gens,
                                        std::size_t limit = 4096) {
    std::set<Point<E>> seen = {C.infinity()};
    std::vector<Point<E>> frontier = {C.infinity()};
    while (!frontier.empty()) {
        std::vector<Point<E>> next;
        for (const auto& P : frontier)
            for (const auto& g : gens) {
                Point<E> Q = C.add_unchecked(P, g);
                if (seen.insert(Q).second) {
                    next.push_back(Q);
                    if (seen.size() > limit) throw std::logic_error("generate_subgroup: group too large (not torsion?)");
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

template <class E>
long element_order(const WeierstrassCurve<E>& C, const Point<E>& P, long bound) {
    auto o = C.order_of_point(P, bound);
    if (!o) throw std::logic_error("element_order: point of infinite or unexpectedly large order");
    return *o;
}

/// Invariant factors and a generating pair for an explicitly enumerated group.
template <class E>
TorsionGroup<E> structure_of(const WeierstrassCurve<E>& C, std::vector<Point<E>> elements) {
    std::sort(elements.begin(), elements.end());
    const long N = static_cast<long>(elements.size());
    std::vector<long> ord;
    long n = 1;
    for (const auto& P : elements) {
        ord.push_back(element_order(C, P, N));
        n = std::lcm(n, ord.back());
    }
    const long m = N / n;
    TorsionGroup<E> T{Group(m, n), {}, elements};
    if (T.invariants.m != m || T.invariants.n != n) throw std::logic_error("structure_of: invalid invariants");
    if (N == 1) return T;
    std::size_t i1 = 0;
    while (ord[i1] != n) ++i1;
    const Point<E>& P1 = elements[i1];
    T.generators.push_back(P1);
    if (m == 1) return T;
    auto cyc = generate_subgroup(C, {P1});
    for (std::size_t j = 0; j < elements.size(); ++j) {
        if (ord[j] != m) continue;
        auto span = generate_subgroup(C, {P1, elements[j]});
        if (static_cast<long>(span.size()) == N) {
            T.generators.push_back(elements[j]);
            return T;
        }
    }
    throw std::logic_error("structure_of: no complementary generator");
}

/// Representatives of the nonzero classes of G / kG.
template <class E>
std::vector<Point<E>> nonzero_coset_reps(const WeierstrassCurve<E>& C, const std::vector<Point<E>>& G, long k) {
    std::set<Point<E>> kG;
    for (const auto& P : G) kG.insert(C.mul_unchecked(k, P));
    std::set<Point<E>> covered(kG.begin(), kG.end());
    std::vector<Point<E>> reps;
    for (const auto& P : G) {
        if (covered.count(P)) continue;
        reps.push_back(P);
        for (const auto& Q : kG) covered.insert(C.add_unchecked(P, Q));
    }
    return reps;
}

/// gcd of |E(F_q)| over 16 good split primes p >= 5.
inline long torsion_order_bound(const WeierstrassCurve<QuadElem>& C, int primes_wanted = 16) {
    const long D = C.field().D();
    std::uint64_t g = 0;
    int used = 0;
    for (std::uint64_t p = 5; used < primes_wanted; p += 2) {
        if (p > 200000) throw std::runtime_error("torsion_order_bound: not enough primes of good reduction");
        if (!is_prime_u64(p) || ramifies_in(D, p) || !splits_in(D, p)) continue;
        try {
            Reduction R = reduce_at_prime(C, p);
            g = std::gcd(g, count_points_fq(R.curve));
            ++used;
        } catch (const BadReduction&) {
        }
    }
    return static_cast<long>(g);
}

namespace detail {

// Points of E(K) with x among the K-roots of f.
inline std::vector<Point<QuadElem>> points_over_k(const WeierstrassCurve<QuadElem>& S, const KPoly& f) {
    std::vector<Point<QuadElem>> out;
    for (const QuadElem& x : roots_in_field(f)) {
        auto y = sqrt_in_quad(S.rhs(x));
        if (y) out.push_back(Point<QuadElem>::affine(x, *y));
    }
    return out;
}

// Grows G (which contains E(K)[p]) to the full p-primary part of E(K),
// assuming that order divides the bound.
inline std::vector<Point<QuadElem>> p_primary_closure(const WeierstrassCurve<QuadElem>& S, long p, long bound,
                                                      std::vector<Point<QuadElem>> gens) {
    std::vector<Point<QuadElem>> G = generate_subgroup(S, gens);
    for (int iter = 0; iter < 64; ++iter) {
        const long order = static_cast<long>(G.size());
        if (bound % (order * p) != 0) return G;
        bool grown = false;
        for (const auto& R : nonzero_coset_reps(S, G, p)) {
            if (R.infinity) continue;
            KPoly f = p == 2 ? halving_quartic(S, R) : p_division_poly(S, R, static_cast<int>(p));
            for (const auto& Q : points_over_k(S, f)) {
                Point<QuadElem> pQ = S.mul_unchecked(p, Q);
                if (pQ == R || pQ == S.neg(R)) {
                    gens.push_back(Q);
                    grown = true;
                    break;
                }
            }
            if (grown) break;
        }
        if (!grown) return G;
        G = generate_subgroup(S, gens);
    }
    throw std::logic_error("p_primary_closure: no fixed point");
}

inline std::vector<long> odd_prime_divisors(long n) {
    std::vector<long> out;
    while (n % 2 == 0) n /= 2;
    for (long p = 3; p * p <= n; p += 2)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// E(K)_tor for a curve over Q(i) or Q(sqrt(-3)); generators on the input model.
inline TorsionGroup<QuadElem> torsion_over_quad(const WeierstrassCurve<QuadElem>& C) {
    const ShortModel<QuadElem> SM = to_short(C);
    const auto& S = SM.curve;
    const long N = torsion_order_bound(C);
    std::vector<Point<QuadElem>> gens;
    if (N % 2 == 0) {
        std::vector<Point<QuadElem>> two;
        for (const QuadElem& x : roots_in_field(two_division_cubic(S))) two.push_back(Point<QuadElem>::affine(x, S.field().zero()));
        std::vector<Point<QuadElem>> part = detail::p_primary_closure(S, 2, N, two);
        gens.insert(gens.end(), part.begin(), part.end());
    }
    for (long p : detail::odd_prime_divisors(N)) {
        std::vector<Point<QuadElem>> pts = detail::points_over_k(S, division_poly_x(S, static_cast<int>(p)));
        if (pts.empty()) continue;
        std::vector<Point<QuadElem>> part = detail::p_primary_closure(S, p, N, pts);
        gens.insert(gens.end(), part.begin(), part.end());
    }
    std::vector<Point<QuadElem>> elems = generate_subgroup(S, gens);
    TorsionGroup<QuadElem> T = structure_of(S, elems);
    if (N % T.order() != 0) throw std::logic_error("torsion_over_quad: group order does not divide the bound");
    const long D = C.field().D();
    if ((D == -1 || D == -3) && !in_list(T.invariants, najman_list(D)))
        throw std::logic_error("torsion_over_quad: " + T.invariants.name() + " is not a possible torsion group over K");
    for (auto& P : T.generators) P = SM.backward(P);
    for (auto& P : T.elements) P = SM.backward(P);
    std::sort(T.elements.begin(), T.elements.end());
    return T;
}

struct GaloisSplit {
    Point<QuadElem> trace_point;  // R + sigma R on E
    Point<QuadElem> twist_point;  // R - sigma R read on E^d
};

inline QuadElem k_part(const RelQuadElem& x) {
    if (!x.beta().is_zero()) throw std::logic_error("k_part: element not in K");
    return x.alpha();
}

/// (R + sigma R, phi(R - sigma R)) for R on the short curve S over L.
inline GaloisSplit galois_split(const WeierstrassCurve<QuadElem>& S, const Point<RelQuadElem>& R, const RelQuadField& L) {
    const auto SL = base_change(S, L);
    if (!SL.contains(R)) throw OffCurve("galois_split: point not on curve");
    const Point<RelQuadElem> sR = galois_conj(R);
    const Point<RelQuadElem> T = SL.add_unchecked(R, sR);
    const Point<RelQuadElem> U = SL.add_unchecked(R, SL.neg(sR));
    const auto& K = L.base();
    GaloisSplit out{Point<QuadElem>::at_infinity(K), Point<QuadElem>::at_infinity(K)};
    if (!T.infinity) out.trace_point = Point<QuadElem>::affine(k_part(T.x), k_part(T.y));
    if (!U.infinity) {
        if (!U.y.alpha().is_zero()) throw std::logic_error("galois_split: R - sigma R not anti-invariant");
        const QuadElem& d = L.d();
        out.twist_point = Point<QuadElem>::affine(d * k_part(U.x), d * d * U.y.beta());
    }
    return out;
}

struct RelTorsion {
    QuadElem d;
    TorsionGroup<RelQuadElem> group;  // E(L)_tor on the input model over L
    TorsionGroup<QuadElem> base;      // E(K)_tor on the input model
    TorsionGroup<QuadElem> twist;     // E^d(K)_tor on the short twist [d^2 A, d^3 B]
};

namespace detail {

inline std::vector<Point<RelQuadElem>> points_over_l(const WeierstrassCurve<RelQuadElem>& S, const LPoly& f) {
    std::vector<Point<RelQuadElem>> out;
    for (const RelQuadElem& x : roots_in_field(f)) {
        auto y = sqrt_in_relquad(S.rhs(x));
        if (y) out.push_back(Point<RelQuadElem>::affine(x, *y));
    }
    return out;
}

}  // namespace detail

/// E(L)_tor for L = K(sqrt d), given E(K)_tor (as computed by torsion_over_quad on C).
inline RelTorsion torsion_over_relquad(const WeierstrassCurve<QuadElem>& C, const QuadElem& d,
                                       const TorsionGroup<QuadElem>& TK) {
    if (d.is_zero() || is_square_in_quad(d)) throw std::invalid_argument("torsion_over_relquad: d is a square in K");
    const RelQuadField L(C.field(), d);
    const ShortModel<QuadElem> SM = to_short(C);
    const auto& S = SM.curve;
    const auto Ed = quadratic_twist(S, d);
    TorsionGroup<QuadElem> Td = torsion_over_quad(Ed);
    const auto SL = base_change(S, L);

    std::vector<Point<RelQuadElem>> gens;
    for (const auto& P : TK.generators) gens.push_back(base_change(SM.forward(P), L));
    for (const auto& P : Td.generators) gens.push_back(twist_transfer(P, L));
    for (const RelQuadElem& x : roots_in_field(embed_in_l(two_division_cubic(S), L)))
        gens.push_back(Point<RelQuadElem>::affine(x, L.zero()));

    // E(L)_tor / G has exponent <= 2 and G contains E(L)[2]
    std::vector<Point<RelQuadElem>> G = generate_subgroup(SL, gens);
    constexpr int cap = 6;
    for (int iter = 0;; ++iter) {
        bool grown = false;
        for (const auto& R : nonzero_coset_reps(SL, G, 2)) {
            for (const auto& Q : detail::points_over_l(SL, halving_quartic(SL, R))) {
                Point<RelQuadElem> Q2 = SL.add_unchecked(Q, Q);
                if (Q2 == R || Q2 == SL.neg(R)) {
                    gens.push_back(Q);
                    grown = true;
                    break;
                }
            }
            if (grown) break;
        }
        if (!grown) break;
        if (iter >= cap) throw std::logic_error("torsion_over_relquad: halving closure exceeded its cap");
        G = generate_subgroup(SL, gens);
    }
    TorsionGroup<RelQuadElem> TL = structure_of(SL, G);
    const ShortModel<RelQuadElem> SML = to_short(base_change(C, L));
    for (auto& P : TL.generators) P = SML.backward(P);
    for (auto& P : TL.elements) P = SML.backward(P);
    std::sort(TL.elements.begin(), TL.elements.end());
    return RelTorsion{d, TL, TK, Td};
}

inline RelTorsion torsion_over_relquad(const WeierstrassCurve<QuadElem>& C, const QuadElem& d) {
    return torsion_over_relquad(C, d, torsion_over_quad(C));
}

}  // namespace bct
