#pragma once

// Weierstrass curves over an arbitrary field of characteristic != 2, 3:
// invariants, group law, short models, quadratic twists, division
// polynomials and the Kubert family with a point of order 7.

#include "bct/field.hpp"
#include "bct/poly.hpp"
#include "bct/quadratic.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bct {

struct SingularCurve : std::domain_error {
    using std::domain_error::domain_error;
};

struct OffCurve : std::domain_error {
    using std::domain_error::domain_error;
};

template <class E>
struct Point {
    bool infinity;
    E x;
    E y;

    static Point at_infinity(const field_of_t<E>& F) { return {true, F.zero(), F.zero()}; }
    static Point affine(E x, E y) { return {false, std::move(x), std::move(y)}; }

    friend bool operator==(const Point& P, const Point& Q) {
        if (P.infinity || Q.infinity) return P.infinity == Q.infinity;
        return P.x == Q.x && P.y == Q.y;
    }
    friend bool operator!=(const Point& P, const Point& Q) { return !(P == Q); }
    friend bool operator<(const Point& P, const Point& Q) {
        if (P.infinity != Q.infinity) return P.infinity;
        if (P.infinity) return false;
        if (P.x < Q.x) return true;
        if (Q.x < P.x) return false;
        return P.y < Q.y;
    }
};

template <class E>
class WeierstrassCurve {
  public:
    using Field = field_of_t<E>;
    using P = Point<E>;

    /// [a1, a2, a3, a4, a6]; throws SingularCurve if the discriminant vanishes.
    WeierstrassCurve(const Field& F, std::array<E, 5> a)
        : F_(F), a_(std::move(a)), b_(b_invariants(F, a_)), c4_(F.zero()), c6_(F.zero()), disc_(F.zero()) {
        const E &b2 = b_[0], &b4 = b_[1], &b6 = b_[2], &b8 = b_[3];
        c4_ = b2 * b2 - b4 * F.from_int(24);
        c6_ = -(b2 * b2 * b2) + b2 * b4 * F.from_int(36) - b6 * F.from_int(216);
        disc_ = -(b2 * b2 * b8) - b4 * b4 * b4 * F.from_int(8) - b6 * b6 * F.from_int(27) + b2 * b4 * b6 * F.from_int(9);
        if (is_zero(disc_)) throw SingularCurve("singular Weierstrass model (discriminant 0)");
    }

    /// y^2 = x^3 + A x + B.
    static WeierstrassCurve short_model(const Field& F, const E& A, const E& B) {
        return WeierstrassCurve(F, {F.zero(), F.zero(), F.zero(), A, B});
    }

    const Field& field() const { return F_; }
    const std::array<E, 5>& a() const { return a_; }
    const E& a1() const { return a_[0]; }
    const E& a2() const { return a_[1]; }
    const E& a3() const { return a_[2]; }
    const E& a4() const { return a_[3]; }
    const E& a6() const { return a_[4]; }
    const E& b2() const { return b_[0]; }
    const E& b4() const { return b_[1]; }
    const E& b6() const { return b_[2]; }
    const E& b8() const { return b_[3]; }
    const E& c4() const { return c4_; }
    const E& c6() const { return c6_; }
    const E& discriminant() const { return disc_; }
    E j_invariant() const { return c4_ * c4_ * c4_ / disc_; }

    bool is_short() const { return is_zero(a1()) && is_zero(a2()) && is_zero(a3()); }
    /// Short-model coefficients; only meaningful when is_short().
    const E& A() const { return a_[3]; }
    const E& B() const { return a_[4]; }

    P infinity() const { return P::at_infinity(F_); }

    bool contains(const P& Q) const {
        if (Q.infinity) return true;
        const E &x = Q.x, &y = Q.y;
        E lhs = y * y + a1() * x * y + a3() * y;
        E rhs = x * x * x + a2() * x * x + a4() * x + a6();
        return lhs == rhs;
    }

    /// x^3 + a2 x^2 + a4 x + a6 evaluated at x, short models: x^3 + A x + B.
    E rhs(const E& x) const { return x * x * x + a2() * x * x + a4() * x + a6(); }

    P neg(const P& Q) const {
        if (Q.infinity) return Q;
        return P::affine(Q.x, -Q.y - a1() * Q.x - a3());
    }

    P add(const P& Q, const P& R) const {
        if (!contains(Q) || !contains(R)) throw OffCurve("add: point not on curve");
        return add_unchecked(Q, R);
    }

    P add_unchecked(const P& Q, const P& R) const {
        if (Q.infinity) return R;
        if (R.infinity) return Q;
        E lambda = F_.zero(), nu = F_.zero();
        if (Q.x == R.x) {
            E ysum = Q.y + R.y + a1() * R.x + a3();
            if (is_zero(ysum)) return infinity();
            const E& x = Q.x;
            E num = x * x * F_.from_int(3) + a2() * x * F_.from_int(2) + a4() - a1() * Q.y;
            E den = Q.y * F_.from_int(2) + a1() * x + a3();
            lambda = num / den;
            nu = (-(x * x * x) + a4() * x + a6() * F_.from_int(2) - a3() * Q.y) / den;
        } else {
            E dx = R.x - Q.x;
            lambda = (R.y - Q.y) / dx;
            nu = (Q.y * R.x - R.y * Q.x) / dx;
        }
        E x3 = lambda * lambda + a1() * lambda - a2() - Q.x - R.x;
        E y3 = -(lambda + a1()) * x3 - nu - a3();
        return P::affine(x3, y3);
    }

    P sub(const P& Q, const P& R) const { return add(Q, neg(R)); }

    P mul(long n, const P& Q) const {
        if (!contains(Q)) throw OffCurve("mul: point not on curve");
        return mul_unchecked(n, Q);
    }

    P mul_unchecked(long n, const P& Q) const {
        P base = n < 0 ? neg(Q) : Q;
        unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
        P acc = infinity();
        while (k) {
            if (k & 1) acc = add_unchecked(acc, base);
            k >>= 1;
            if (k) base = add_unchecked(base, base);
        }
        return acc;
    }

    /// Least n <= bound with n Q = O.
    std::optional<long> order_of_point(const P& Q, long bound) const {
        if (!contains(Q)) throw OffCurve("order_of_point: point not on curve");
        P acc = Q;
        for (long n = 1; n <= bound; ++n) {
            if (acc.infinity) return n;
            acc = add_unchecked(acc, Q);
        }
        return std::nullopt;
    }

    friend bool operator==(const WeierstrassCurve& E1, const WeierstrassCurve& E2) { return E1.a_ == E2.a_; }

  private:
    static std::array<E, 4> b_invariants(const Field& F, const std::array<E, 5>& a) {
        const E &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
        return {E(a1 * a1 + a2 * F.from_int(4)), E(a1 * a3 + a4 * F.from_int(2)), E(a3 * a3 + a6 * F.from_int(4)),
                E(a1 * a1 * a6 + a2 * a6 * F.from_int(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4)};
    }

    Field F_;
    std::array<E, 5> a_;
    std::array<E, 4> b_;
    E c4_, c6_, disc_;
};

/// Change of variables to Y^2 = X^3 - 27 c4 X - 54 c6 with
/// X = 36 x + 3 b2, Y = 108 (2 y + a1 x + a3).
template <class E>
struct ShortModel {
    WeierstrassCurve<E> curve;
    WeierstrassCurve<E> original;

    Point<E> forward(const Point<E>& P) const {
        if (P.infinity) return P;
        const auto& F = original.field();
        E X = P.x * F.from_int(36) + original.b2() * F.from_int(3);
        E Y = (P.y * F.from_int(2) + original.a1() * P.x + original.a3()) * F.from_int(108);
        return Point<E>::affine(X, Y);
    }

    Point<E> backward(const Point<E>& P) const {
        if (P.infinity) return P;
        const auto& F = original.field();
        E x = (P.x - original.b2() * F.from_int(3)) / F.from_int(36);
        E y = (P.y / F.from_int(108) - original.a1() * x - original.a3()) / F.from_int(2);
        return Point<E>::affine(x, y);
    }
};

template <class E>
ShortModel<E> to_short(const WeierstrassCurve<E>& C) {
    const auto& F = C.field();
    auto S = WeierstrassCurve<E>::short_model(F, C.c4() * F.from_int(-27), C.c6() * F.from_int(-54));
    return ShortModel<E>{S, C};
}

/// [d^2 A, d^3 B], the normalized model of d y^2 = x^3 + A x + B.
template <class E>
WeierstrassCurve<E> quadratic_twist(const WeierstrassCurve<E>& C, const E& d) {
    if (!C.is_short()) throw std::invalid_argument("quadratic_twist: short model required");
    if (is_zero(d)) throw std::domain_error("quadratic_twist: d = 0");
    return WeierstrassCurve<E>::short_model(C.field(), d * d * C.A(), d * d * d * C.B());
}

/// Base change of a curve over K to L.
inline WeierstrassCurve<RelQuadElem> base_change(const WeierstrassCurve<QuadElem>& C, const RelQuadField& L) {
    const auto& a = C.a();
    return WeierstrassCurve<RelQuadElem>(L, {L.embed(a[0]), L.embed(a[1]), L.embed(a[2]), L.embed(a[3]), L.embed(a[4])});
}

inline Point<RelQuadElem> base_change(const Point<QuadElem>& P, const RelQuadField& L) {
    if (P.infinity) return Point<RelQuadElem>::at_infinity(L);
    return Point<RelQuadElem>::affine(L.embed(P.x), L.embed(P.y));
}

/// (x, y) on E^d(K) to (x/d, y/(d sqrt d)) on E(L).
inline Point<RelQuadElem> twist_transfer(const Point<QuadElem>& P, const RelQuadField& L) {
    if (P.infinity) return Point<RelQuadElem>::at_infinity(L);
    const QuadElem& d = L.d();
    // 1/(d sqrt d) = sqrt d / d^2
    return Point<RelQuadElem>::affine(L.embed(P.x / d), L.element(L.base().zero(), P.y / (d * d)));
}

inline Point<RelQuadElem> galois_conj(const Point<RelQuadElem>& P) {
    if (P.infinity) return P;
    return Point<RelQuadElem>::affine(rel_conj(P.x), rel_conj(P.y));
}

/// x-parts g_n of the division polynomials of y^2 = x^3 + A x + B:
/// psi_n = g_n for odd n and psi_n = 2 y g_n for even n. Returns g_0..g_n.
template <class E>
std::vector<Poly<E>> division_polys_x(const WeierstrassCurve<E>& C, int n) {
    if (!C.is_short()) throw std::invalid_argument("division_poly_x: short model required");
    const auto& F = C.field();
    const E &A = C.A(), &B = C.B();
    auto k = [&](long v) { return F.from_int(v); };
    using PE = Poly<E>;
    std::vector<PE> g;
    g.push_back(PE(F));
    g.push_back(PE::constant(F, F.one()));
    g.push_back(PE::constant(F, F.one()));
    g.push_back(PE(F, {-(A * A), B * k(12), A * k(6), F.zero(), k(3)}));
    g.push_back(PE(F, {(B * B * k(-8) - A * A * A) * k(2), A * B * k(-8), A * A * k(-10), B * k(40), A * k(10), F.zero(),
                       k(2)}));
    const PE Fx(F, {B, A, F.zero(), F.one()});
    const PE F2x16 = Fx * Fx * k(16);
    for (int i = 5; i <= n; ++i) {
        const int m = i / 2;
        if (i % 2) {
            const PE& gm = g[static_cast<std::size_t>(m)];
            const PE& gm1 = g[static_cast<std::size_t>(m + 1)];
            PE t1 = g[static_cast<std::size_t>(m + 2)] * gm * gm * gm;
            PE t2 = g[static_cast<std::size_t>(m - 1)] * gm1 * gm1 * gm1;
            g.push_back(m % 2 == 0 ? F2x16 * t1 - t2 : t1 - F2x16 * t2);
        } else {
            const PE& gm1 = g[static_cast<std::size_t>(m - 1)];
            const PE& gp1 = g[static_cast<std::size_t>(m + 1)];
            g.push_back(g[static_cast<std::size_t>(m)] *
                        (g[static_cast<std::size_t>(m + 2)] * gm1 * gm1 - g[static_cast<std::size_t>(m - 2)] * gp1 * gp1));
        }
    }
    g.resize(static_cast<std::size_t>(std::max(n, 0) + 1), PE(F));
    return g;
}

template <class E>
Poly<E> division_poly_x(const WeierstrassCurve<E>& C, int n) {
    if (n < 1) throw std::invalid_argument("division_poly_x: n >= 1 required");
    return division_polys_x(C, n)[static_cast<std::size_t>(n)];
}

/// x^3 + A x + B.
template <class E>
Poly<E> two_division_cubic(const WeierstrassCurve<E>& C) {
    const auto& F = C.field();
    return Poly<E>(F, {C.B(), C.A(), F.zero(), F.one()});
}

/// Roots are the x(Q) with x(2Q) = x(P).
template <class E>
Poly<E> halving_quartic(const WeierstrassCurve<E>& C, const Point<E>& P) {
    if (!C.is_short()) throw std::invalid_argument("halving_quartic: short model required");
    if (P.infinity) throw std::invalid_argument("halving_quartic: affine point required");
    const auto& F = C.field();
    const E &A = C.A(), &B = C.B(), &x = P.x;
    return Poly<E>(F, {A * A - B * x * F.from_int(4), -(B * F.from_int(8) + A * x * F.from_int(4)), A * F.from_int(-2),
                       x * F.from_int(-4), F.one()});
}

/// Roots are the x(Q) with x(p Q) = x(P), p odd: x g_p^2 - 4 F g_{p-1} g_{p+1} - x(P) g_p^2.
template <class E>
Poly<E> p_division_poly(const WeierstrassCurve<E>& C, const Point<E>& P, int p) {
    if (P.infinity) throw std::invalid_argument("p_division_poly: affine point required");
    if (p == 2) return halving_quartic(C, P);
    const auto& F = C.field();
    auto g = division_polys_x(C, p + 1);
    const Poly<E> X = Poly<E>::x(F);
    const Poly<E> Fx(F, {C.B(), C.A(), F.zero(), F.one()});
    const Poly<E>& gp = g[static_cast<std::size_t>(p)];
    Poly<E> gp2 = gp * gp;
    return X * gp2 - Fx * g[static_cast<std::size_t>(p - 1)] * g[static_cast<std::size_t>(p + 1)] * F.from_int(4) -
           gp2 * P.x;
}

/// y^2 + (1 - c) x y - b y = x^3 - b x^2 with b = t^3 - t^2, c = t^2 - t;
/// (0, 0) has order 7.
template <class E>
WeierstrassCurve<E> kubert_curve_7(const E& t) {
    const auto F = field_of(t);
    if (is_zero(t) || t == F.one()) throw SingularCurve("kubert_curve_7: t must not be 0 or 1");
    E b = t * t * t - t * t;
    E c = t * t - t;
    return WeierstrassCurve<E>(F, {F.one() - c, -b, -b, F.zero(), F.zero()});
}

}  // namespace bct
