#include "bct/curve.hpp"
#include "bct/factor.hpp"
#include "bct/reduction.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace bct;

namespace {

using QCurve = WeierstrassCurve<QuadElem>;
using FCurve = WeierstrassCurve<FqElem>;

QCurve long_model(const QuadField& K, std::array<long, 5> a) {
    return QCurve(K, {K.from_int(a[0]), K.from_int(a[1]), K.from_int(a[2]), K.from_int(a[3]), K.from_int(a[4])});
}

FCurve short_fp(const FqField& F, long A, long B) { return FCurve::short_model(F, F.from_int(A), F.from_int(B)); }

// All affine points of a short curve over F_p, by testing every (x, y).
std::vector<Point<FqElem>> brute_points(const FCurve& C) {
    const FqField& F = C.field();
    std::vector<Point<FqElem>> pts;
    for (std::uint64_t i = 0; i < F.order(); ++i)
        for (std::uint64_t j = 0; j < F.order(); ++j) {
            FqElem x = F.at(i), y = F.at(j);
            if (y * y + C.a1() * x * y + C.a3() * y == x * x * x + C.a2() * x * x + C.a4() * x + C.a6())
                pts.push_back(Point<FqElem>::affine(x, y));
        }
    return pts;
}

}  // namespace

TEST(Curve, Invariants) {
    const QuadField Qi(-1);
    auto E1 = long_model(Qi, {0, 0, 0, 0, -27});
    EXPECT_FALSE(E1.discriminant().is_zero());
    EXPECT_EQ(E1.j_invariant(), Qi.zero());
    EXPECT_EQ(long_model(Qi, {0, 0, 0, -1, 0}).j_invariant(), Qi.from_int(1728));
    EXPECT_THROW(long_model(Qi, {0, 0, 0, 0, 0}), SingularCurve);
}

TEST(Curve, ShortModelPreservesInvariants) {
    const QuadField Qi(-1);
    for (auto a : std::vector<std::array<long, 5>>{{1, 0, 1, -454, -544}, {1, -1, 0, -24, -64}, {1, 1, 1, -80, 242}}) {
        auto C = long_model(Qi, a);
        auto SM = to_short(C);
        EXPECT_EQ(SM.curve.j_invariant(), C.j_invariant());
        // the discriminant changes by u^-12 with u = 1/6
        EXPECT_EQ(SM.curve.discriminant(), C.discriminant() * Qi.from_int(2176782336));
    }
}

TEST(Curve, GroupLawExamples) {
    const QuadField K(-1);
    auto C = QCurve::short_model(K, K.zero(), K.one());
    auto P = Point<QuadElem>::affine(K.zero(), K.one());
    EXPECT_EQ(C.add(P, P), Point<QuadElem>::affine(K.zero(), -K.one()));
    EXPECT_EQ(C.order_of_point(P, 12), 3);
    EXPECT_TRUE(C.add(P, C.neg(P)).infinity);
    EXPECT_TRUE(C.mul(0, P).infinity);
    EXPECT_EQ(C.order_of_point(C.infinity(), 5), 1);
    auto Q = Point<QuadElem>::affine(K.from_int(2), K.from_int(3));
    EXPECT_EQ(C.order_of_point(Q, 12), 6);
    EXPECT_EQ(C.mul(2, Q), P);
    EXPECT_THROW(C.add(P, Point<QuadElem>::affine(K.one(), K.one())), OffCurve);
}

TEST(Curve, GroupAxiomsOverFiniteFields) {
    std::mt19937_64 rng(31);
    for (std::uint64_t p : {23ULL, 29ULL, 31ULL}) {
        const FqField F(p, 1);
        for (int t = 0; t < 4; ++t) {
            FCurve C = [&] {
                while (true) {
                    try {
                        return FCurve(F, {F.from_int(rng() % p), F.from_int(rng() % p), F.from_int(rng() % p),
                                          F.from_int(rng() % p), F.from_int(rng() % p)});
                    } catch (const SingularCurve&) {
                    }
                }
            }();
            auto pts = brute_points(C);
            pts.push_back(C.infinity());
            EXPECT_EQ(pts.size(), count_points_fq(C));
            for (int s = 0; s < 60; ++s) {
                const auto& P = pts[rng() % pts.size()];
                const auto& Q = pts[rng() % pts.size()];
                const auto& R = pts[rng() % pts.size()];
                EXPECT_EQ(C.add(P, Q), C.add(Q, P));
                EXPECT_EQ(C.add(C.add(P, Q), R), C.add(P, C.add(Q, R)));
                EXPECT_TRUE(C.add(P, C.neg(P)).infinity);
                EXPECT_TRUE(C.contains(C.add(P, Q)));
                // Lagrange
                EXPECT_TRUE(C.mul(static_cast<long>(pts.size()), P).infinity);
            }
        }
    }
}

TEST(Curve, QuadraticTwist) {
    const QuadField K(-1);
    auto C = QCurve::short_model(K, K.zero(), K.from_int(-27));
    EXPECT_EQ(quadratic_twist(C, K.one()).a(), C.a());
    auto T = quadratic_twist(C, K.from_int(-3));
    EXPECT_EQ(T.B(), K.from_int(729));
    std::mt19937_64 rng(33);
    auto E = QCurve::short_model(K, K.from_int(-675), K.from_int(-79650));
    for (int t = 0; t < 50; ++t) {
        QuadElem d = K.element(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20);
        if (d.is_zero()) continue;
        EXPECT_EQ(quadratic_twist(E, d).j_invariant(), E.j_invariant());
    }
}

TEST(Curve, TwistTransfer) {
    const QuadField K(-1);
    auto E = QCurve::short_model(K, K.zero(), K.from_int(-27));
    const RelQuadField L(K, K.from_int(-3));
    auto Ed = quadratic_twist(E, L.d());
    // E^d = [0, 729]; take its small integral points
    int found = 0;
    for (long x = -30; x <= 30; ++x) {
        QuadElem r = Ed.rhs(K.from_int(x));
        auto y = sqrt_in_quad(r);
        if (!y) continue;
        auto P = Point<QuadElem>::affine(K.from_int(x), *y);
        auto R = twist_transfer(P, L);
        const auto EL = base_change(E, L);
        ASSERT_TRUE(EL.contains(R));
        auto oP = Ed.order_of_point(P, 24);
        EXPECT_EQ(EL.order_of_point(R, 24), oP);
        if (oP && *oP % 2 == 1 && !R.y.beta().is_zero()) {
            EXPECT_EQ(galois_conj(R), EL.neg(R));
            ++found;
        }
    }
    EXPECT_GT(found, 0);
    EXPECT_TRUE(twist_transfer(Ed.infinity(), L).infinity);
}

TEST(DivisionPoly, Examples) {
    const QuadField K(-1);
    auto C = QCurve::short_model(K, K.zero(), K.one());
    EXPECT_EQ(division_poly_x(C, 3), KPoly::from_ints(K, {0, 12, 0, 0, 3}));
    EXPECT_EQ(division_poly_x(C, 1), KPoly::from_ints(K, {1}));
    auto C2 = QCurve::short_model(K, K.from_int(-1), K.zero());
    auto h = halving_quartic(C2, Point<QuadElem>::affine(K.zero(), K.zero()));
    EXPECT_EQ(monic(h), KPoly::from_ints(K, {1, 0, 2, 0, 1}));
    for (const QuadElem& x : roots_in_field(h)) {
        auto y = sqrt_in_quad(C2.rhs(x));
        ASSERT_TRUE(y);
        EXPECT_EQ(C2.mul(2, Point<QuadElem>::affine(x, *y)), Point<QuadElem>::affine(K.zero(), K.zero()));
    }
    auto hq = halving_quartic(C, Point<QuadElem>::affine(K.zero(), K.one()));
    EXPECT_EQ(monic(hq), KPoly::from_ints(K, {0, -8, 0, 0, 1}));
    EXPECT_EQ(C.mul(2, Point<QuadElem>::affine(K.from_int(2), K.from_int(3))), Point<QuadElem>::affine(K.zero(), K.one()));
}

TEST(DivisionPoly, MatchesBruteForceTorsion) {
    std::mt19937_64 rng(35);
    const auto primes = primes_up_to(101);
    for (int t = 0; t < 20; ++t) {
        std::uint64_t p = primes[3 + rng() % (primes.size() - 3)];
        const FqField F(p, 1), F2(p, 2);
        long A = 0, B = 0;
        while (true) {
            A = static_cast<long>(rng() % p);
            B = static_cast<long>(rng() % p);
            if ((4 * A * A * A + 27 * B * B) % static_cast<long>(p) != 0) break;
        }
        const FCurve C = short_fp(F, A, B), C2 = short_fp(F2, A, B);
        // points over F_{p^2} with x in F_p: every x in F_p lies under one of them
        std::vector<Point<FqElem>> pts;
        for (std::uint64_t i = 0; i < p; ++i)
            for (std::uint64_t j = 0; j < F2.order(); ++j) {
                FqElem x = F2.at(i), y = F2.at(j);
                if (y * y == x * x * x + C2.A() * x + C2.B()) pts.push_back(Point<FqElem>::affine(x, y));
            }
        for (int n = 1; n <= 8; ++n) {
            std::set<std::uint64_t> want, got;
            for (const auto& P : pts)
                if (C2.mul(n, P).infinity) want.insert(P.x.index());
            auto g = division_poly_x(C, n);
            if (n % 2 == 0) g = g * two_division_cubic(C);
            for (std::uint64_t i = 0; i < p; ++i)
                if (eval(g, F.at(i)).is_zero()) got.insert(i);
            EXPECT_EQ(got, want) << "p=" << p << " n=" << n;
            const int deg = n % 2 ? (n * n - 1) / 2 : (n * n - 4) / 2;
            if (n % static_cast<int>(p) != 0) {
                EXPECT_EQ(division_poly_x(C, n).degree(), deg);
            }
        }
    }
}

TEST(Reduction, SplitAndInertPrimes) {
    const QuadField Qi(-1);
    auto C = QCurve::short_model(Qi, Qi.zero(), Qi.from_int(-27));
    auto r5 = reduce_at_prime(C, 5);
    EXPECT_TRUE(r5.split);
    EXPECT_EQ(r5.q, 5u);
    auto r7 = reduce_at_prime(C, 7);
    EXPECT_FALSE(r7.split);
    EXPECT_EQ(r7.q, 49u);
    EXPECT_THROW(reduce_at_prime(C, 2), std::invalid_argument);
    EXPECT_THROW(reduce_at_prime(C, 3), BadReduction);
    // 5 = (2+i)(2-i): i maps to a square root of -1 mod 5
    auto Ci = QCurve::short_model(Qi, Qi.generator(), Qi.zero());
    auto ri = reduce_at_prime(Ci, 5);
    EXPECT_EQ(ri.curve.A() * ri.curve.A(), ri.field.from_int(-1));
}

TEST(Reduction, PointCounts) {
    const FqField F5(5, 1), F25(5, 2);
    EXPECT_EQ(count_points_fq(short_fp(F5, 0, 1)), 6u);
    EXPECT_EQ(count_points_fq(short_fp(F25, 0, 1)), 36u);
    const FqField F7(7, 1);
    EXPECT_EQ(count_points_fq(short_fp(F7, -1, 0)), 8u);
    std::mt19937_64 rng(37);
    for (std::uint64_t p : {11ULL, 13ULL, 17ULL}) {
        const FqField F(p, 1);
        for (int t = 0; t < 5; ++t) {
            long A = rng() % p, B = rng() % p;
            try {
                auto C = short_fp(F, A, B);
                EXPECT_EQ(count_points_fq(C), brute_points(C).size() + 1);
            } catch (const SingularCurve&) {
            }
        }
    }
}

TEST(Kubert, PointOfOrderSeven) {
    const QuadField K(-1);
    auto C = kubert_curve_7(K.from_int(2));
    EXPECT_EQ(C.a(), long_model(K, {-1, -4, -4, 0, 0}).a());
    EXPECT_EQ(C.order_of_point(Point<QuadElem>::affine(K.zero(), K.zero()), 10), 7);
    auto D = kubert_curve_7(K.from_int(-1));
    EXPECT_EQ(D.order_of_point(Point<QuadElem>::affine(K.zero(), K.zero()), 10), 7);
    EXPECT_ANY_THROW(kubert_curve_7(K.one()));
}
