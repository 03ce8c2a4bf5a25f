#pragma once

// Reduction of curves over K modulo primes of O_K and naive point counting.

#include "bct/curve.hpp"
#include "bct/finite_field.hpp"
#include "bct/numtheory.hpp"
#include "bct/quadratic.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bct {

struct BadReduction : std::domain_error {
    using std::domain_error::domain_error;
};

struct RamifiedPrime : std::domain_error {
    using std::domain_error::domain_error;
};

struct CountBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Reduction {
    FqField field;
    WeierstrassCurve<FqElem> curve;
    std::uint64_t q;
    bool split;
};

/// True if p splits in Q(sqrt D) (p odd, not dividing D).
inline bool splits_in(long D, std::uint64_t p) { return legendre_u64(signed_mod(D, p), p) == 1; }

inline bool ramifies_in(long D, std::uint64_t p) {
    const long disc = (D % 4 == 1 || D % 4 == -3) ? D : 4 * D;
    return signed_mod(disc, p) == 0;
}

namespace detail {

inline std::uint64_t reduce_rational(const Rational& q, std::uint64_t p) {
    std::uint64_t den = mod_u64(q.get_den(), p);
    if (den == 0) throw BadReduction("coefficient denominator divisible by p");
    return mulmod(mod_u64(q.get_num(), p), invmod(den, p), p);
}

}  // namespace detail

/// Reduction at a prime above p: F_p via a square root of D mod p when p
/// splits, F_p[t]/(t^2 - D) when p is inert.
inline Reduction reduce_at_prime(const WeierstrassCurve<QuadElem>& C, std::uint64_t p) {
    const long D = C.field().D();
    if (p == 2 || !is_prime_u64(p)) throw std::invalid_argument("reduce_at_prime: odd prime required");
    if (p >= (1ull << 31)) throw std::invalid_argument("reduce_at_prime: prime too large");
    if (ramifies_in(D, p)) throw RamifiedPrime("reduce_at_prime: p ramifies in K");
    const bool split = splits_in(D, p);
    std::optional<FqField> Fopt;
    std::uint64_t root = 0;
    if (split) {
        Fopt.emplace(p, 1);
        auto r = sqrt_mod_prime(Integer(signed_mod(D, p)), Integer(static_cast<unsigned long>(p)));
        root = mod_u64(*r, p);
        if (p - root < root) root = p - root;
    } else {
        Fopt.emplace(p, 2, signed_mod(D, p));
    }
    const FqField& F = *Fopt;
    auto map = [&](const QuadElem& x) {
        std::uint64_t a = detail::reduce_rational(x.a(), p), b = detail::reduce_rational(x.b(), p);
        if (split) return F.element((a + mulmod(b, root, p)) % p, 0);
        return F.element(a, b);
    };
    const auto& a = C.a();
    std::array<FqElem, 5> ar = {map(a[0]), map(a[1]), map(a[2]), map(a[3]), map(a[4])};
    try {
        WeierstrassCurve<FqElem> R(F, ar);
        return Reduction{F, R, F.order(), split};
    } catch (const SingularCurve&) {
        throw BadReduction("reduce_at_prime: bad reduction");
    }
}

/// |E(F_q)| by enumeration over x, q <= 10^6.
inline std::uint64_t count_points_fq(const WeierstrassCurve<FqElem>& C) {
    const FqField& F = C.field();
    const std::uint64_t q = F.order();
    if (q > 1'000'000) throw CountBudgetExceeded("count_points_fq: q exceeds the enumeration budget");
    std::vector<bool> square(q, false);
    for (std::uint64_t i = 0; i < q; ++i) {
        FqElem y = F.at(i);
        square[(y * y).index()] = true;
    }
    // y^2 + (a1 x + a3) y = cubic has 1 + chi(4 x^3 + b2 x^2 + 2 b4 x + b6) solutions
    const FqElem four = F.from_int(4), two = F.from_int(2);
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < q; ++i) {
        FqElem x = F.at(i);
        FqElem disc = ((four * x + C.b2()) * x + two * C.b4()) * x + C.b6();
        if (is_zero(disc))
            count += 1;
        else if (square[disc.index()])
            count += 2;
    }
    return count;
}

}  // namespace bct
