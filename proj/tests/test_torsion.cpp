#include "bct/classification.hpp"
#include "bct/parse.hpp"
#include "bct/reduction.hpp"
#include "bct/torsion.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bct;

namespace {

WeierstrassCurve<QuadElem> curve(long D, const std::string& model) { return parse_curve(model, QuadField(D)); }

Group G(const std::string& s) {
    auto g = parse_group(s);
    if (!g) throw std::invalid_argument("bad group " + s);
    return *g;
}

// Number of points of order dividing n in a list of group elements.
template <class E>
long kernel_count(const WeierstrassCurve<E>& C, const std::vector<Point<E>>& elems, long n) {
    long c = 0;
    for (const auto& P : elems)
        if (C.mul(n, P).infinity) ++c;
    return c;
}

}  // namespace

TEST(Group, Names) {
    EXPECT_EQ(Group(2, 8).name(), "C2xC8");
    EXPECT_EQ(Group(1, 6).name(), "C6");
    EXPECT_EQ(G("C3xC5"), Group(1, 15));
    EXPECT_EQ(G("Z/2Z x Z/8Z"), Group(2, 8));
    EXPECT_EQ(G("C2+C6"), Group(2, 6));
    EXPECT_EQ(Group(2, 8).summand_count(2), 2);
    EXPECT_EQ(Group(1, 12).summand_count(3), 1);
    EXPECT_EQ(Group(1, 5).summand_count(7), 0);
    EXPECT_TRUE(Group(2, 8).contains(Group(1, 4)));
    EXPECT_FALSE(Group(1, 8).contains(Group(2, 2)));
    EXPECT_FALSE(parse_group("C0"));
}

TEST(Torsion, OrderBound) {
    for (const char* m : {"[0,0,0,0,-27]", "[1,0,1,-454,-544]"}) {
        auto C = curve(-1, m);
        long b = torsion_order_bound(C);
        EXPECT_EQ(b % 2, 0);
        EXPECT_EQ(b % torsion_over_quad(C).order(), 0);
    }
}

TEST(Torsion, OverK) {
    EXPECT_EQ(torsion_over_quad(curve(-1, "[0,1,1,-769,-8470]")).invariants, G("C1"));
    EXPECT_EQ(torsion_over_quad(curve(-1, "[1,1,1,-80,242]")).invariants, G("C4"));
    EXPECT_EQ(torsion_over_quad(curve(-3, "[0,-1,1,217,-282]")).invariants, G("C1"));
    EXPECT_EQ(torsion_over_quad(curve(-1, "[0,0,0,0,-27]")).invariants, G("C2"));
    EXPECT_EQ(torsion_over_quad(curve(-3, "[1,0,1,4,-6]")).invariants, G("C3xC6"));
    // y^2 = x^3 - x over Q(i): full 2-torsion and (i, 1-i) of order 4
    EXPECT_EQ(torsion_over_quad(curve(-1, "[-1,0]")).invariants, G("C2xC4"));
    // y^2 = x^3 + 1 over Q(sqrt -3): x^3 + 1 splits, and x^3 = -4 has no root
    EXPECT_EQ(torsion_over_quad(curve(-3, "[0,1]")).invariants, G("C2xC6"));
}

TEST(Torsion, ElementsFormTheClaimedGroup) {
    std::mt19937_64 rng(41);
    for (long D : {-1L, -3L}) {
        const QuadField K(D);
        int done = 0;
        while (done < 25) {
            const QuadElem a = K.element(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) - 3);
            const QuadElem b = K.element(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) - 3);
            const auto C = WeierstrassCurve<QuadElem>::short_model(K, a, b);
            if (C.discriminant().is_zero()) continue;
            ++done;
            const auto T = torsion_over_quad(C);
            ASSERT_EQ(static_cast<long>(T.elements.size()), T.order());
            EXPECT_TRUE(in_list(T.invariants, najman_list(D)));
            // each kernel size agrees with the abstract group
            for (long n : {2L, 3L, 4L, 5L, 6L})
                EXPECT_EQ(kernel_count(C, T.elements, n), T.invariants.kernel_size(n));
            // closed under addition
            for (std::size_t i = 0; i < T.elements.size(); ++i)
                for (std::size_t j = 0; j < T.elements.size(); ++j) {
                    auto S = C.add(T.elements[i], T.elements[j]);
                    EXPECT_TRUE(std::binary_search(T.elements.begin(), T.elements.end(), S));
                }
            // the order divides every good-reduction count
            for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
                try {
                    auto R = reduce_at_prime(C, p);
                    EXPECT_EQ(count_points_fq(R.curve) % T.order(), 0u);
                } catch (const std::domain_error&) {
                }
            }
        }
    }
}

TEST(Torsion, ComplexMultiplicationCases) {
    // j = 0: no point of order 5 or 7; j = 1728: none of order 3, 5, 7
    std::mt19937_64 rng(43);
    for (long D : {-1L, -3L}) {
        const QuadField K(D);
        for (int t = 0; t < 15; ++t) {
            const QuadElem c = K.element(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) - 4);
            if (c.is_zero()) continue;
            const auto T0 = torsion_over_quad(WeierstrassCurve<QuadElem>::short_model(K, K.zero(), c));
            EXPECT_NE(T0.order() % 5, 0);
            EXPECT_NE(T0.order() % 7, 0);
            const auto T1 = torsion_over_quad(WeierstrassCurve<QuadElem>::short_model(K, c, K.zero()));
            EXPECT_NE(T1.order() % 3, 0);
            EXPECT_NE(T1.order() % 5, 0);
            EXPECT_NE(T1.order() % 7, 0);
        }
    }
}

TEST(Torsion, OverRelativeQuadratic) {
    const QuadField Qi(-1), Qs(-3);
    EXPECT_EQ(torsion_over_relquad(curve(-1, "[1,0,1,-454,-544]"), Qi.from_int(2)).group.invariants, G("C4"));
    EXPECT_EQ(torsion_over_relquad(curve(-3, "[0,0,0,13,-34]"), Qs.from_int(-1)).group.invariants, G("C4xC4"));
    EXPECT_EQ(torsion_over_relquad(curve(-3, "[1,0,0,-39,90]"), Qs.element(-30, 6)).group.invariants, G("C16"));
    EXPECT_EQ(torsion_over_relquad(curve(-1, "[0,0,0,0,-27]"), Qi.from_int(-3)).group.invariants, G("C2xC6"));
}

TEST(Torsion, RelativeGroupIsConsistent) {
    const QuadField Qi(-1), Qs(-3);
    struct Case {
        long D;
        const char* model;
        QuadElem d;
    };
    std::vector<Case> cases{{-1, "[1,-1,0,-24,-64]", Qi.from_int(-3)},
                            {-1, "[1,1,1,-80,242]", Qi.from_int(5)},
                            {-3, "[1,1,0,220,2192]", Qs.from_int(-7)},
                            {-3, "[0,-1,1,217,-282]", Qs.from_int(-15)}};
    for (const auto& c : cases) {
        const auto C = curve(c.D, c.model);
        const RelTorsion R = torsion_over_relquad(C, c.d);
        const RelQuadField L(C.field(), c.d);
        const auto CL = base_change(C, L);
        ASSERT_EQ(static_cast<long>(R.group.elements.size()), R.group.order());
        for (const auto& P : R.group.elements) EXPECT_TRUE(CL.contains(P));
        // the Galois conjugate of a torsion point is a torsion point
        for (const auto& P : R.group.elements)
            EXPECT_TRUE(std::binary_search(R.group.elements.begin(), R.group.elements.end(), galois_conj(P)));
        // E(K) and E^d(K) embed
        EXPECT_TRUE(R.group.invariants.contains(R.base.invariants));
        // odd parts split as a direct sum
        for (long n : {3L, 5L, 7L, 9L})
            EXPECT_EQ(R.group.invariants.kernel_size(n), R.base.invariants.kernel_size(n) * R.twist.invariants.kernel_size(n));
        EXPECT_EQ((R.twist.order() * R.base.order()) % R.group.order(), 0);
        // 2-torsion of E and E^d agree
        EXPECT_EQ(R.base.invariants.kernel_size(2), R.twist.invariants.kernel_size(2));
    }
}

TEST(Torsion, GaloisSplit) {
    const QuadField Qi(-1);
    const auto C = curve(-1, "[1,-1,0,-24,-64]");
    const RelTorsion R = torsion_over_relquad(C, Qi.from_int(-3));
    const RelQuadField L(Qi, Qi.from_int(-3));
    const auto S = to_short(C).curve;
    const auto SL = base_change(S, L);
    const auto SM = to_short(base_change(C, L));
    for (const auto& P : R.group.elements) {
        const auto Q = SM.forward(P);
        const auto g = galois_split(S, Q, L);
        // trace part lies over K and equals Q + sigma Q
        EXPECT_EQ(base_change(g.trace_point, L), SL.add(Q, galois_conj(Q)));
        if (g.trace_point.infinity && g.twist_point.infinity && !Q.infinity) {
            EXPECT_TRUE(SL.mul(2, Q).infinity);
        }
    }
}
