#pragma once

// Finite abelian groups of rank <= 2, C_m + C_n with m | n.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace bct {

struct Group {
    long m = 1;
    long n = 1;

    Group() = default;
    Group(long m_, long n_) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw std::invalid_argument("Group: invariants must be positive");
        if (m > n) std::swap(m, n);
        if (n % m != 0) {
            // C_a + C_b = C_gcd + C_lcm
            long g = std::gcd(m, n);
            n = m / g * n;
            m = g;
        }
    }
    static Group cyclic(long n) { return Group(1, n); }

    long order() const { return m * n; }
    long exponent() const { return n; }
    bool is_cyclic() const { return m == 1; }

    /// |G[k]|
    long kernel_size(long k) const { return std::gcd(m, k) * std::gcd(n, k); }
    /// G[k]
    Group kernel(long k) const { return Group(std::gcd(m, k), std::gcd(n, k)); }

    /// Sylow p-subgroup.
    Group p_part(long p) const {
        auto part = [p](long v) {
            long r = 1;
            while (v % p == 0) {
                v /= p;
                r *= p;
            }
            return r;
        };
        return Group(part(m), part(n));
    }

    /// Number of nontrivial cyclic p-factors.
    int summand_count(long p) const { return (m % p == 0) + (n % p == 0); }

    /// H is isomorphic to a subgroup of this group.
    bool contains(const Group& H) const { return m % H.m == 0 && n % H.n == 0; }
    bool has_cyclic(long N) const { return n % N == 0; }

    std::string name() const {
        if (m == 1) return "C" + std::to_string(n);
        return "C" + std::to_string(m) + "xC" + std::to_string(n);
    }

    friend bool operator==(const Group& a, const Group& b) { return a.m == b.m && a.n == b.n; }
    friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }
    friend bool operator<(const Group& a, const Group& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.m < b.m;
    }
};

/// Accepts "C6", "C2xC8", "C2+C8", "C2 (+) C8", "Z/2 x Z/8", "Z/2Z x Z/8Z" style names.
inline std::optional<Group> parse_group(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    auto parse_factor = [](const std::string& f) -> std::optional<long> {
        std::string t = f;
        if (t.rfind("Z/", 0) == 0) {
            t = t.substr(2);
            if (!t.empty() && t.back() == 'Z') t.pop_back();
        }
        else if (!t.empty() && (t[0] == 'C' || t[0] == 'c')) t = t.substr(1);
        else return std::nullopt;
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
        long v = std::stol(t);
        if (v < 1) return std::nullopt;
        return v;
    };
    for (const std::string sep : {"x", "X", "+", "(+)", "*"}) {
        auto pos = s.find(sep);
        if (pos == std::string::npos || pos == 0) continue;
        auto a = parse_factor(s.substr(0, pos));
        auto b = parse_factor(s.substr(pos + sep.size()));
        if (a && b) return Group(*a, *b);
    }
    auto a = parse_factor(s);
    if (a) return Group::cyclic(*a);
    return std::nullopt;
}

}  // namespace bct
