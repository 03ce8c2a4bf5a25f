#include "bct/factor.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace bct;

namespace {

QPoly qp(std::initializer_list<long> c) { return QPoly::from_ints(RationalField{}, c); }
KPoly kp(const QuadField& K, std::vector<QuadElem> c) { return KPoly(K, std::move(c)); }

// Rational root test on an integer polynomial: candidates are +-p/q with p | a0, q | an.
bool has_rational_root(const QPoly& f) {
    const ZPoly z = to_zpoly(f);
    if (z.front() == 0) return true;
    auto divisors = [](Integer n) {
        std::vector<Integer> ds;
        n = abs(n);
        for (Integer k = 1; k * k <= n; ++k)
            if (n % k == 0) {
                ds.push_back(k);
                ds.push_back(n / k);
            }
        return ds;
    };
    for (const Integer& p : divisors(z.front()))
        for (const Integer& q : divisors(z.back()))
            for (int s : {1, -1})
                if (eval(f, make_rational(s * p, q)) == 0) return true;
    return false;
}

template <class E>
std::vector<Poly<E>> sorted_monic(std::vector<Poly<E>> v) {
    for (auto& p : v) p = monic(p);
    std::sort(v.begin(), v.end(), [](const Poly<E>& a, const Poly<E>& b) { return poly_less(a, b); });
    return v;
}

template <class E>
std::vector<Poly<E>> expand(const Factorization<E>& f) {
    std::vector<Poly<E>> out;
    for (const auto& [p, e] : f.factors)
        for (int k = 0; k < e; ++k) out.push_back(p);
    return out;
}

// A random monic irreducible of degree 1, 2 or 3 over Q with small coefficients.
QPoly random_q_irreducible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(-12, 12);
    while (true) {
        const int deg = 1 + rng() % 3;
        std::vector<Rational> c;
        for (int j = 0; j < deg; ++j) c.push_back(Rational(u(rng)));
        c.push_back(Rational(1));
        QPoly f(RationalField{}, c);
        if (deg == 1 || !has_rational_root(f)) return f;
    }
}

// A random monic irreducible of degree 1 or 2 over K.
KPoly random_k_irreducible(const QuadField& K, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> u(-6, 6);
    while (true) {
        KPoly f = kp(K, {K.element(u(rng), u(rng)), K.one()});
        if (rng() % 2) f = kp(K, {K.element(u(rng), u(rng)), K.element(u(rng), u(rng)), K.one()});
        if (f.degree() == 1 || !sqrt_in_quad(quadratic_discriminant(f))) return f;
    }
}

}  // namespace

TEST(FactorQ, Examples) {
    auto f = factor_over_rationals(qp({-1, 0, 0, 0, 1}));
    EXPECT_EQ(sorted_monic(expand(f)), sorted_monic(std::vector<QPoly>{qp({-1, 1}), qp({1, 1}), qp({1, 0, 1})}));
    auto g = factor_over_rationals(qp({0, 12, 0, 0, 3}));
    EXPECT_EQ(g.unit, 3);
    EXPECT_EQ(sorted_monic(expand(g)), sorted_monic(std::vector<QPoly>{qp({0, 1}), qp({4, 0, 0, 1})}));
    EXPECT_FALSE(has_rational_root(qp({4, 0, 0, 1})));
    auto h = factor_over_rationals(qp({1, 0, 1}));
    ASSERT_EQ(h.factors.size(), 1u);
    EXPECT_EQ(h.factors[0].first, qp({1, 0, 1}));
}

TEST(FactorQ, CyclotomicAndSwinnertonDyerStyleInputs) {
    // x^24 - 1 has one factor per divisor of 24
    std::vector<long> c(25, 0);
    c[0] = -1;
    c[24] = 1;
    QPoly f(RationalField{}, std::vector<Rational>(c.begin(), c.end()));
    EXPECT_EQ(factor_over_rationals(f).factors.size(), 8u);
    // (x^2-2)(x^2-3) and the irreducible x^4 - 10x^2 + 1
    EXPECT_EQ(factor_over_rationals(qp({6, 0, -5, 0, 1})).factors.size(), 2u);
    EXPECT_EQ(factor_over_rationals(qp({1, 0, -10, 0, 1})).factors.size(), 1u);
}

TEST(FactorQ, RandomProductsOfKnownIrreducibles) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        std::vector<QPoly> parts;
        QPoly prod = QPoly::constant(RationalField{}, Rational(1 + rng() % 5));
        const int k = 1 + rng() % 5;
        for (int j = 0; j < k; ++j) {
            parts.push_back(random_q_irreducible(rng));
            prod = prod * parts.back();
        }
        auto fac = factor_over_rationals(prod);
        EXPECT_EQ(sorted_monic(expand(fac)), sorted_monic(parts)) << t;
        EXPECT_EQ(fac.unit, prod.lead());
    }
}

TEST(FactorK, Examples) {
    const QuadField Qi(-1), Qs(-3);
    auto f = factor_over_quad(KPoly::from_ints(Qi, {1, 0, 1}));
    EXPECT_EQ(sorted_monic(expand(f)),
              sorted_monic(std::vector<KPoly>{kp(Qi, {Qi.element(0, 1), Qi.one()}), kp(Qi, {Qi.element(0, -1), Qi.one()})}));
    EXPECT_EQ(factor_over_quad(KPoly::from_ints(Qi, {-2, 0, 1})).factors.size(), 1u);
    auto r = roots_in_field(KPoly::from_ints(Qs, {1, 1, 1}));
    ASSERT_EQ(r.size(), 2u);
    for (const auto& x : r) {
        EXPECT_EQ(x * x + x + Qs.one(), Qs.zero());
        EXPECT_EQ(x.a(), make_rational(-1, 2));
    }
}

TEST(FactorK, RandomProductsOfKnownIrreducibles) {
    std::mt19937_64 rng(22);
    for (long D : {-1L, -3L}) {
        const QuadField K(D);
        for (int t = 0; t < 60; ++t) {
            std::vector<KPoly> parts;
            KPoly prod = KPoly::constant(K, K.element(1 + rng() % 3, rng() % 3));
            const int k = 1 + rng() % 4;
            for (int j = 0; j < k; ++j) {
                parts.push_back(random_k_irreducible(K, rng));
                prod = prod * parts.back();
            }
            auto fac = factor_over_quad(prod);
            EXPECT_EQ(sorted_monic(expand(fac)), sorted_monic(parts)) << D << " " << t;
        }
    }
}

TEST(FactorK, RationalPolynomialsSplitFurther) {
    const QuadField Qi(-1);
    // x^4 + 4 = (x^2+2x+2)(x^2-2x+2) over Q, and each splits over Q(i)
    auto f = factor_over_quad(KPoly::from_ints(Qi, {4, 0, 0, 0, 1}));
    EXPECT_EQ(f.factors.size(), 4u);
    // x^3 + 4 has no root in Q(sqrt -3) and no quadratic factor
    const QuadField Qs(-3);
    EXPECT_TRUE(roots_in_field(KPoly::from_ints(Qs, {4, 0, 0, 1})).empty());
    EXPECT_EQ(factor_over_quad(KPoly::from_ints(Qs, {4, 0, 0, 1})).factors.size(), 1u);
}

TEST(LowDegree, Examples) {
    const QuadField Qi(-1);
    auto lo = low_degree_factors(KPoly::from_ints(Qi, {0, 12, 0, 0, 3}), 1);
    ASSERT_EQ(lo.size(), 1u);
    EXPECT_EQ(lo[0], KPoly::from_ints(Qi, {0, 1}));
    auto q = low_degree_factors(qp({1, 0, 1}) * qp({1, 1, 0, 1}), 2);
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q[0], qp({1, 0, 1}));
    EXPECT_TRUE(low_degree_factors(qp({-1, -1, 0, 0, 0, 1}), 2).empty());
}

TEST(LowDegree, AgreesWithFullFactorization) {
    std::mt19937_64 rng(23);
    for (long D : {-1L, -3L}) {
        const QuadField K(D);
        for (int t = 0; t < 40; ++t) {
            KPoly prod = KPoly::constant(K, K.one());
            while (prod.degree() < 6) prod = prod * random_k_irreducible(K, rng);
            // an extra factor of degree 4 over Q that usually stays irreducible or splits into quadratics
            prod = prod * embed_in_k(qp({static_cast<long>(rng() % 7) + 1, 0, static_cast<long>(rng() % 5), 0, 1}), K);
            std::vector<KPoly> want;
            for (const auto& [p, e] : factor_over_quad(prod).factors)
                if (p.degree() <= 2) want.push_back(p);
            EXPECT_EQ(sorted_monic(low_degree_factors(prod, 2)), sorted_monic(want));
        }
    }
}

TEST(Roots, OverQAndK) {
    const QuadField Qi(-1);
    auto r = roots_in_field(KPoly::from_ints(Qi, {1, 0, 2, 0, 1}));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0] * r[0], -Qi.one());
    EXPECT_EQ(r[1], -r[0]);
    auto rq = roots_in_field(qp({-6, 11, -6, 1}));
    EXPECT_EQ(rq, (std::vector<Rational>{1, 2, 3}));
}

TEST(Roots, OverRelativeQuadratic) {
    std::mt19937_64 rng(24);
    for (long D : {-1L, -3L}) {
        const QuadField K(D);
        const RelQuadField L(K, K.from_int(D == -1 ? 2 : 5));
        std::uniform_int_distribution<int> u(-5, 5);
        for (int t = 0; t < 30; ++t) {
            RelQuadElem a = L.element(K.element(u(rng), u(rng)), K.element(u(rng), u(rng)));
            RelQuadElem b = L.element(K.element(u(rng), u(rng)), K.from_int(u(rng)));
            // (x - a)(x - b)(x^2 - g) with g a generator of L over K, so x^2 - g has no roots in L
            LPoly f(L, {-a, L.one()});
            f = f * LPoly(L, {-b, L.one()}) * LPoly(L, {-L.generator(), L.zero(), L.one()});
            auto r = roots_in_field(f);
            std::vector<RelQuadElem> want{a, b};
            std::sort(want.begin(), want.end());
            want.erase(std::unique(want.begin(), want.end()), want.end());
            EXPECT_EQ(r, want);
        }
    }
}
