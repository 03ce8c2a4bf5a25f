#pragma once

// Elementary number theory on machine words and on GMP integers: sieving,
// modular powers and square roots, integer factorization, Cornacchia.

#include "bct/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace bct {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("zero has no inverse mod p");
    return powmod(a, p - 2, p);  // p prime
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}.
inline int legendre_u64(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline std::uint64_t signed_mod(long long a, std::uint64_t p) {
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

inline bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

/// Tonelli-Shanks: a square root of a modulo an odd prime p.
inline std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
    Integer a = mod_floor(a_in, p);
    if (a == 0) return Integer(0);
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) { q /= 2; ++s; }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    auto pw = [&](const Integer& b, const Integer& e) {
        Integer r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    Integer c = pw(z, q);
    Integer x = pw(a, (q + 1) / 2);
    Integer t = pw(a, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) { tt = mod_floor(tt * tt, p); ++i; }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_floor(b * b, p);
        x = mod_floor(x * b, p);
        c = mod_floor(b * b, p);
        t = mod_floor(t * c, p);
        m = i;
    }
    return x;
}

/// Cornacchia: positive (x, y) with x^2 + d*y^2 = p for prime p, d >= 1.
inline std::optional<std::pair<Integer, Integer>> cornacchia(long d, const Integer& p) {
    auto r0 = sqrt_mod_prime(Integer(-d), p);
    if (!r0) return std::nullopt;
    Integer a = p, b = *r0;
    if (2 * b < p) b = p - b;
    Integer bound = isqrt(p);
    while (b > bound) {
        Integer r = mod_floor(a, b);
        a = b;
        b = r;
    }
    Integer rest = p - b * b;
    if (rest % d != 0) return std::nullopt;
    rest /= d;
    if (!is_square(rest)) return std::nullopt;
    return std::make_pair(Integer(abs(b)), isqrt(rest));
}

class FactorizationBudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
inline Integer pollard_brent(const Integer& n, unsigned long seed, unsigned long max_iter) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer y = seed % 97 + 2, c = seed % 89 + 1, g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1, iter = 0;
    auto f = [&](const Integer& v) { return mod_floor(v * v + c, n); };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mod_floor(q * abs(x - y), n);
            }
            g = gcd(q, n);
            k += m;
            iter += m;
            if (iter > max_iter) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

inline void factor_into(const Integer& n, std::map<Integer, int>& out, int mult) {
    if (n == 1) return;
    if (is_probable_prime(n)) { out[n] += mult; return; }
    if (is_square(n)) { factor_into(isqrt(n), out, 2 * mult); return; }
    for (unsigned long seed = 1; seed < 40; ++seed) {
        Integer g = pollard_brent(n, seed, 20'000'000ul);
        if (g != 0 && g != 1 && g != n) {
            Integer h = n / g;
            Integer c = gcd(g, h);
            if (c == 1) {
                factor_into(g, out, mult);
                factor_into(h, out, mult);
            } else {
                // split into coprime parts so multiplicities stay exact
                std::map<Integer, int> sub;
                factor_into(c, sub, 1);
                Integer rest = n;
                for (auto& [p, e] : sub) {
                    int v = 0;
                    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) { rest /= p; ++v; }
                    out[p] += v * mult;
                }
                factor_into(rest, out, mult);
            }
            return;
        }
    }
    throw FactorizationBudgetExceeded("integer factorization gave up on " + n.get_str());
}

}  // namespace detail

/// Prime factorization of |n| (n != 0).
inline std::map<Integer, int> factor_integer(const Integer& n_in) {
    if (n_in == 0) throw std::domain_error("cannot factor zero");
    Integer n = abs(n_in);
    std::map<Integer, int> out;
    for (unsigned long p = 2; p < 20000; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) { n /= p; ++e; }
            out[Integer(p)] += e;
        }
    }
    detail::factor_into(n, out, 1);
    return out;
}

}  // namespace bct
