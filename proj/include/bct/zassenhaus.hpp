#pragma once

// Factorization of squarefree primitive integer polynomials: distinct and
// equal degree factorization modulo a small prime, multifactor Hensel
// lifting, and subset recombination. A "low degree" mode finds every
// irreducible factor of degree <= maxdeg without splitting the rest.

#include "bct/numtheory.hpp"
#include "bct/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bct {

/// Integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;

inline void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline Integer zcontent(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly zprimitive(ZPoly f) {
    ztrim(f);
    if (f.empty()) return f;
    Integer g = zcontent(f);
    if (f.back() < 0) g = -g;
    for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return f;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    return r;
}

/// f / g over Z if g divides f exactly.
inline std::optional<ZPoly> zexact_div(const ZPoly& f, const ZPoly& g) {
    if (g.empty()) throw std::domain_error("zexact_div by zero");
    if (f.empty()) return ZPoly{};
    if (f.size() < g.size()) return std::nullopt;
    ZPoly r = f;
    const std::size_t dg = g.size() - 1;
    ZPoly q(f.size() - dg, 0);
    Integer t;
    for (std::size_t i = f.size(); i-- > dg;) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
        mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), g.back().get_mpz_t());
        for (std::size_t j = 0; j <= dg; ++j)
            mpz_submul(r[i - dg + j].get_mpz_t(), t.get_mpz_t(), g[j].get_mpz_t());
        q[i - dg] = t;
    }
    for (std::size_t i = 0; i < dg; ++i)
        if (r[i] != 0) return std::nullopt;
    ztrim(q);
    return q;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p with word-size p.

namespace modp {

using NPoly = std::vector<std::uint64_t>;

inline void trim(NPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const NPoly& f) { return static_cast<int>(f.size()) - 1; }

inline NPoly reduce(const ZPoly& f, std::uint64_t p) {
    NPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_u64(f[i], p);
    trim(r);
    return r;
}

inline NPoly add(const NPoly& a, const NPoly& b, std::uint64_t p) {
    NPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % p;
    }
    trim(r);
    return r;
}

inline NPoly sub(const NPoly& a, const NPoly& b, std::uint64_t p) {
    NPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

inline NPoly mul(const NPoly& a, const NPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    NPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

inline NPoly scale(const NPoly& a, std::uint64_t s, std::uint64_t p) {
    NPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * (s % p) % p;
    trim(r);
    return r;
}

inline std::pair<NPoly, NPoly> divrem(const NPoly& a, const NPoly& b, std::uint64_t p) {
    if (b.empty()) throw std::domain_error("modp::divrem by zero");
    if (a.size() < b.size()) return {{}, a};
    NPoly r = a;
    const std::size_t db = b.size() - 1;
    NPoly q(a.size() - db, 0);
    const std::uint64_t inv = invmod(b.back(), p);
    for (std::size_t i = a.size(); i-- > db;) {
        if (!r[i]) continue;
        std::uint64_t t = r[i] * inv % p;
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - t * b[j] % p) % p;
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

inline NPoly rem(const NPoly& a, const NPoly& b, std::uint64_t p) { return divrem(a, b, p).second; }

inline NPoly make_monic(const NPoly& a, std::uint64_t p) {
    if (a.empty()) return a;
    return scale(a, invmod(a.back(), p), p);
}

inline NPoly gcd(NPoly a, NPoly b, std::uint64_t p) {
    while (!b.empty()) {
        NPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

/// s a + t b = gcd (monic).
inline void egcd(const NPoly& a, const NPoly& b, std::uint64_t p, NPoly& g, NPoly& s, NPoly& t) {
    NPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        NPoly s2 = sub(s0, mul(q, s1, p), p);
        NPoly t2 = sub(t0, mul(q, t1, p), p);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    const std::uint64_t inv = invmod(r0.back(), p);
    g = scale(r0, inv, p);
    s = scale(s0, inv, p);
    t = scale(t0, inv, p);
}

inline NPoly derivative(const NPoly& a, std::uint64_t p) {
    NPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    trim(r);
    return r;
}

inline NPoly powmod(NPoly base, std::uint64_t e, const NPoly& m, std::uint64_t p) {
    NPoly r = {1};
    base = rem(base, m, p);
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

inline bool is_squarefree(const NPoly& f, std::uint64_t p) {
    NPoly d = derivative(f, p);
    if (d.empty()) return false;
    return deg(gcd(f, d, p)) == 0;
}

/// Distinct degree factorization of a monic squarefree f. Returns
/// (degree, product of all irreducible factors of that degree) for degrees
/// <= maxdeg, and leaves the product of the higher degree factors in rest.
inline std::vector<std::pair<int, NPoly>> distinct_degree(const NPoly& f, std::uint64_t p, int maxdeg, NPoly& rest) {
    std::vector<std::pair<int, NPoly>> out;
    rest = f;
    NPoly x = {0, 1};
    NPoly h = rem(x, rest, p);
    for (int i = 1; deg(rest) > 0; ++i) {
        if (2 * i > deg(rest)) {
            if (deg(rest) <= maxdeg) {
                out.emplace_back(deg(rest), rest);
                rest = {1};
            }
            break;
        }
        if (i > maxdeg) break;
        h = powmod(h, p, rest, p);
        NPoly g = gcd(sub(h, x, p), rest, p);
        if (deg(g) > 0) {
            out.emplace_back(i, g);
            rest = divrem(rest, g, p).first;
            h = rem(h, rest, p);
        }
    }
    return out;
}

/// Splits a product of distinct monic irreducibles of degree d (Cantor-Zassenhaus).
inline void equal_degree(const NPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<NPoly>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (true) {
        NPoly a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (deg(a) < 1) continue;
        // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
        NPoly t = rem(a, g, p), frob = t;
        for (int i = 1; i < d; ++i) {
            frob = powmod(frob, p, g, p);
            t = rem(mul(t, frob, p), g, p);
        }
        t = powmod(t, (p - 1) / 2, g, p);
        NPoly c = gcd(sub(t, {1}, p), g, p);
        if (deg(c) > 0 && deg(c) < deg(g)) {
            equal_degree(c, d, p, rng, out);
            equal_degree(divrem(g, c, p).first, d, p, rng, out);
            return;
        }
    }
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Arithmetic in (Z / m)[x] with GMP coefficients.

namespace modm {

inline ZPoly reduce(const ZPoly& f, const Integer& m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], m);
    ztrim(r);
    return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce(zmul(a, b), m); }

inline ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return reduce(r, m);
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return reduce(r, m);
}

/// Division by a monic b.
inline std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (b.empty() || b.back() != 1) throw std::logic_error("modm::divrem_monic needs a monic divisor");
    ZPoly r = reduce(a, m);
    if (r.size() < b.size()) return {{}, r};
    const std::size_t db = b.size() - 1;
    ZPoly q(r.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        Integer t = mod_floor(r[i], m);
        if (t == 0) continue;
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    r.resize(db);
    return {reduce(q, m), reduce(r, m)};
}

inline ZPoly from_modp(const modp::NPoly& f) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = Integer(static_cast<unsigned long>(f[i]));
    return r;
}

}  // namespace modm

// ---------------------------------------------------------------------------

namespace detail {

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, g and h
// monic; afterwards the same relations hold modulo m^2.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
    using namespace modm;
    ZPoly e = sub(f, mul(g, h, m2), m2);
    auto [q, r] = divrem_monic(mul(s, e, m2), h, m2);
    ZPoly g2 = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
    ZPoly h2 = add(h, r, m2);
    ZPoly b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), ZPoly{1}, m2);
    auto [c, d] = divrem_monic(mul(s, b, m2), h2, m2);
    s = sub(s, d, m2);
    t = sub(t, add(mul(t, b, m2), mul(c, g2, m2), m2), m2);
    g = std::move(g2);
    h = std::move(h2);
}

// Lifts the monic factorization target = prod(factors) mod p to modulus
// p^(2^levels). target must be monic and correct modulo that modulus.
inline std::vector<ZPoly> hensel_lift(const ZPoly& target, const std::vector<modp::NPoly>& factors, std::uint64_t p,
                                      int levels, const Integer& modulus) {
    if (factors.size() == 1) return {modm::reduce(target, modulus)};
    const std::size_t half = factors.size() / 2;
    std::vector<modp::NPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<modp::NPoly> right(factors.begin() + static_cast<long>(half), factors.end());
    modp::NPoly g0 = {1}, h0 = {1};
    for (const auto& f : left) g0 = modp::mul(g0, f, p);
    for (const auto& f : right) h0 = modp::mul(h0, f, p);
    modp::NPoly gg, s0, t0;
    modp::egcd(g0, h0, p, gg, s0, t0);
    if (modp::deg(gg) != 0) throw std::logic_error("hensel_lift: factors not coprime mod p");
    ZPoly g = modm::from_modp(g0), h = modm::from_modp(h0), s = modm::from_modp(s0), t = modm::from_modp(t0);
    // hensel_step wants h monic with deg s < deg h; our roles: (g, h) with h
    // the right half and s paired with g.
    Integer m = Integer(static_cast<unsigned long>(p));
    for (int lvl = 0; lvl < levels; ++lvl) {
        Integer m2 = m * m;
        hensel_step(modm::reduce(target, m2), g, h, s, t, m2);
        m = m2;
    }
    auto a = hensel_lift(g, left, p, levels, modulus);
    auto b = hensel_lift(h, right, p, levels, modulus);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline long long bitlen(const Integer& z) {
    if (z == 0) return 0;
    return static_cast<long long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

// Upper bound on log2 of max |coefficient| of lc(f)/lc(h) * h for any
// factor h of f of degree <= m: the smaller of a Fujiwara root bound and a
// Mignotte bound.
inline long long factor_coeff_bits(const ZPoly& f, int m) {
    const int n = zdeg(f);
    const long long lbits = bitlen(f.back());
    long long rbits = 0;  // log2 of root radius upper bound, at least 0
    for (int k = 1; k <= n; ++k) {
        const Integer& a = f[static_cast<std::size_t>(n - k)];
        if (a == 0) continue;
        long long num = bitlen(a) - lbits + 1;
        long long v = num <= 0 ? 0 : (num + k - 1) / k;
        rbits = std::max(rbits, v);
    }
    rbits += 1;
    const long long root_bound = lbits + m + static_cast<long long>(m) * rbits;
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    const long long mignotte = lbits + m + bitlen(norm2) / 2 + 1;
    return std::min(root_bound, mignotte);
}

inline unsigned long long factor_budget() {
    static const unsigned long long budget = [] {
        if (const char* env = std::getenv("TORSION_FACTOR_BUDGET")) {
            try {
                return std::stoull(env);
            } catch (...) {
            }
        }
        return 50'000'000ull;
    }();
    return budget;
}

struct PrimeChoice {
    std::uint64_t p = 0;
    std::vector<modp::NPoly> low;  // irreducible factors of degree <= maxdeg
    modp::NPoly rest;              // product of the others (monic)
};

// Degrees d <= maxdeg that are sums of sub-multisets of the given degrees.
inline std::set<int> subset_sums(const std::vector<int>& degs, int maxdeg) {
    std::vector<bool> reach(static_cast<std::size_t>(maxdeg + 1), false);
    reach[0] = true;
    for (int d : degs) {
        for (int s = maxdeg; s >= d; --s)
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
    }
    std::set<int> out;
    for (int s = 1; s <= maxdeg; ++s)
        if (reach[static_cast<std::size_t>(s)]) out.insert(s);
    return out;
}

}  // namespace detail

/// Irreducible factors of a squarefree primitive f (deg >= 1, f(0) != 0
/// unless f = x) of degree <= maxdeg. With maxdeg >= deg f this is the
/// complete factorization. Factors are primitive with positive leading
/// coefficient, sorted by (degree, coefficients).
inline std::vector<ZPoly> zassenhaus(ZPoly f, int maxdeg) {
    f = zprimitive(f);
    const int n = zdeg(f);
    if (n < 1) return {};
    const bool full = maxdeg >= n;
    if (full) maxdeg = n;
    if (n == 1) return {f};

    // Candidate primes: p does not divide lc(f), f squarefree mod p.
    std::vector<detail::PrimeChoice> choices;
    std::set<int> possible;
    bool first = true;
    std::uint64_t p = 5;
    int tried = 0;
    const int wanted = full ? 5 : 4;
    for (; choices.size() < static_cast<std::size_t>(wanted) && p < 100000; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (mod_u64(f.back(), p) == 0) continue;
        modp::NPoly fp = modp::make_monic(modp::reduce(f, p), p);
        if (!modp::is_squarefree(fp, p)) {
            if (++tried > 400) break;
            continue;
        }
        detail::PrimeChoice c;
        c.p = p;
        auto parts = modp::distinct_degree(fp, p, maxdeg, c.rest);
        std::vector<int> degs;
        std::mt19937_64 rng(0x5eed ^ p);
        for (auto& [d, g] : parts) {
            std::vector<modp::NPoly> split;
            modp::equal_degree(g, d, p, rng, split);
            for (auto& s : split) {
                degs.push_back(d);
                c.low.push_back(std::move(s));
            }
        }
        std::set<int> sums = detail::subset_sums(degs, maxdeg);
        if (first) {
            possible = sums;
            first = false;
        } else {
            std::set<int> inter;
            std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            possible = std::move(inter);
        }
        choices.push_back(std::move(c));
        if (full && choices.back().low.size() == 1) break;  // irreducible mod p
        if (!full && possible.empty()) break;
    }
    if (choices.empty()) throw std::runtime_error("zassenhaus: no suitable prime (input not squarefree?)");
    if (full) possible.insert(n);
    if (possible.empty()) return {};

    const auto best = std::min_element(choices.begin(), choices.end(), [](const auto& a, const auto& b) {
        return a.low.size() < b.low.size();
    });
    p = best->p;
    if (full && best->low.size() == 1) return {f};

    // Precision p^(2^levels) > 2 * coefficient bound.
    const long long bits = detail::factor_coeff_bits(f, full ? n : maxdeg) + 2;
    Integer P(static_cast<unsigned long>(p));
    int levels = 0;
    Integer M = P;
    while (static_cast<long long>(mpz_sizeinbase(M.get_mpz_t(), 2)) <= bits) {
        M = M * M;
        ++levels;
    }

    std::vector<modp::NPoly> to_lift = best->low;
    const bool has_rest = modp::deg(best->rest) > 0;
    if (has_rest) to_lift.push_back(best->rest);
    ZPoly target = modm::reduce(f, M);
    {
        Integer inv = invert_mod(f.back(), M);
        for (auto& c : target) c = mod_floor(c * inv, M);
    }
    std::vector<ZPoly> lifted = detail::hensel_lift(target, to_lift, p, levels, M);
    if (has_rest) lifted.pop_back();

    std::vector<ZPoly> found;
    std::vector<int> alive(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
    ZPoly cur = f;
    unsigned long long work = 0;
    const unsigned long long budget = detail::factor_budget();

    for (std::size_t k = 1; k <= alive.size(); ++k) {
        if (full && 2 * k > alive.size()) break;
        bool restart = true;
        while (restart) {
            restart = false;
            const std::size_t r = alive.size();
            if (k > r) break;
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                int dsum = 0;
                for (auto i : idx) dsum += zdeg(lifted[static_cast<std::size_t>(alive[i])]);
                if (dsum <= maxdeg && possible.count(dsum)) {
                    if (++work > budget)
                        throw FactorizationBudgetExceeded("zassenhaus: recombination budget exceeded");
                    const Integer& lc = cur.back();
                    // constant term test
                    bool ok = true;
                    if (cur[0] != 0) {
                        Integer c0 = lc;
                        for (auto i : idx) c0 = mod_floor(c0 * lifted[static_cast<std::size_t>(alive[i])][0], M);
                        c0 = mod_symmetric(c0, M);
                        if (c0 == 0 || !mpz_divisible_p(Integer(lc * cur[0]).get_mpz_t(), c0.get_mpz_t())) ok = false;
                    }
                    if (ok) {
                        ZPoly cand = {lc};
                        for (auto i : idx) cand = modm::mul(cand, lifted[static_cast<std::size_t>(alive[i])], M);
                        for (auto& c : cand) c = mod_symmetric(c, M);
                        cand = zprimitive(cand);
                        if (auto q = zexact_div(cur, cand)) {
                            found.push_back(cand);
                            cur = zprimitive(*q);
                            std::vector<int> next;
                            for (std::size_t j = 0; j < alive.size(); ++j)
                                if (std::find(idx.begin(), idx.end(), j) == idx.end()) next.push_back(alive[j]);
                            alive = std::move(next);
                            restart = true;
                            break;
                        }
                    }
                }
                // next combination
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == r - k + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if (full && zdeg(cur) > 0) found.push_back(zprimitive(cur));
    std::sort(found.begin(), found.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return found;
}

}  // namespace bct
