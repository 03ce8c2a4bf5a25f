#pragma once

// Dense univariate polynomials over any field descriptor from field.hpp.
// Coefficients are stored lowest degree first; the zero polynomial has no
// coefficients and degree -1.

#include "bct/field.hpp"

#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bct {

// mpq_class has no member inverse(); route it through one helper.
inline Rational inverse_of(const Rational& q) {
    if (sgn(q) == 0) throw std::domain_error("Rational: division by zero");
    return Rational(1) / q;
}
template <class E>
E inverse_of(const E& e) {
    return e.inverse();
}

namespace detail {
template <class E>
bool elem_is_zero(const E& e) {
    return is_zero(e);
}
}  // namespace detail

template <class E>
class Poly {
  public:
    using Elem = E;
    using Field = field_of_t<E>;

    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<E> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Field& f, const E& c) { return Poly(f, {c}); }
    static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
    /// c * x^k
    static Poly monomial(const Field& f, const E& c, std::size_t k) {
        std::vector<E> v(k + 1, f.zero());
        v[k] = c;
        return Poly(f, std::move(v));
    }
    /// From small integer coefficients, lowest degree first.
    static Poly from_ints(const Field& f, std::initializer_list<long> ints) {
        std::vector<E> v;
        for (long n : ints) v.push_back(f.from_int(n));
        return Poly(f, std::move(v));
    }

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<E>& coeffs() const { return c_; }
    E coeff(int i) const {
        return (i < 0 || i > degree()) ? field_.zero() : c_[static_cast<std::size_t>(i)];
    }
    const E& lead() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

    Poly operator-() const {
        std::vector<E> v;
        v.reserve(c_.size());
        for (const E& e : c_) v.push_back(-e);
        return Poly(field_, std::move(v));
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        const std::size_t n = std::max(f.c_.size(), g.c_.size());
        std::vector<E> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < f.c_.size() && i < g.c_.size()) v.push_back(f.c_[i] + g.c_[i]);
            else if (i < f.c_.size()) v.push_back(f.c_[i]);
            else v.push_back(g.c_[i]);
        }
        return Poly(f.field_, std::move(v));
    }
    friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly(f.field_);
        std::vector<E> v(f.c_.size() + g.c_.size() - 1, f.field_.zero());
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (detail::elem_is_zero(f.c_[i])) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) {
                if (detail::elem_is_zero(g.c_[j])) continue;
                v[i + j] = v[i + j] + f.c_[i] * g.c_[j];
            }
        }
        return Poly(f.field_, std::move(v));
    }
    friend Poly operator*(const Poly& f, const E& s) {
        std::vector<E> v;
        v.reserve(f.c_.size());
        for (const E& e : f.c_) v.push_back(e * s);
        return Poly(f.field_, std::move(v));
    }
    friend Poly operator*(const E& s, const Poly& f) { return f * s; }

    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

  private:
    void trim() {
        while (!c_.empty() && detail::elem_is_zero(c_.back())) c_.pop_back();
    }

    Field field_;
    std::vector<E> c_;
};

template <class E>
Poly<E> monic(const Poly<E>& f) {
    if (f.is_zero()) return f;
    return f * inverse_of(f.lead());
}

/// Quotient and remainder, f = q g + r with deg r < deg g.
template <class E>
std::pair<Poly<E>, Poly<E>> divrem(const Poly<E>& f, const Poly<E>& g) {
    if (g.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    const auto& F = f.field();
    if (f.degree() < g.degree()) return {Poly<E>(F), f};
    std::vector<E> r = f.coeffs();
    const int dg = g.degree();
    std::vector<E> q(static_cast<std::size_t>(f.degree() - dg + 1), F.zero());
    const E inv = inverse_of(g.lead());
    const bool unit_lead = g.lead() == F.one();
    for (int i = f.degree(); i >= dg; --i) {
        const E& top = r[static_cast<std::size_t>(i)];
        if (is_zero(top)) continue;
        E t = unit_lead ? top : E(top * inv);
        for (int j = 0; j < dg; ++j) {
            const E& gj = g.coeffs()[static_cast<std::size_t>(j)];
            if (is_zero(gj)) continue;
            auto& slot = r[static_cast<std::size_t>(i - dg + j)];
            slot = slot - t * gj;
        }
        r[static_cast<std::size_t>(i)] = F.zero();
        q[static_cast<std::size_t>(i - dg)] = t;
    }
    r.erase(r.begin() + dg, r.end());
    return {Poly<E>(F, std::move(q)), Poly<E>(F, std::move(r))};
}

template <class E>
Poly<E> operator%(const Poly<E>& f, const Poly<E>& g) {
    return divrem(f, g).second;
}

template <class E>
Poly<E> operator/(const Poly<E>& f, const Poly<E>& g) {
    return divrem(f, g).first;
}

/// Exact division; throws if g does not divide f.
template <class E>
Poly<E> exact_div(const Poly<E>& f, const Poly<E>& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw std::logic_error("Poly: inexact division");
    return q;
}

template <class E>
Poly<E> derivative(const Poly<E>& f) {
    const auto& F = f.field();
    std::vector<E> v;
    for (int i = 1; i <= f.degree(); ++i) v.push_back(f.coeffs()[static_cast<std::size_t>(i)] * F.from_int(i));
    return Poly<E>(F, std::move(v));
}

/// Horner evaluation.
template <class E>
E eval(const Poly<E>& f, const E& x) {
    const auto& F = f.field();
    E acc = F.zero();
    for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeffs()[static_cast<std::size_t>(i)];
    return acc;
}

/// f(a x + b).
template <class E>
Poly<E> compose_linear(const Poly<E>& f, const E& a, const E& b) {
    const auto& F = f.field();
    Poly<E> lin(F, {b, a});
    Poly<E> acc(F);
    for (int i = f.degree(); i >= 0; --i) acc = acc * lin + Poly<E>::constant(F, f.coeffs()[static_cast<std::size_t>(i)]);
    return acc;
}

template <class E>
Poly<E> compose(const Poly<E>& f, const Poly<E>& g) {
    Poly<E> acc(f.field());
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * g + Poly<E>::constant(f.field(), f.coeffs()[static_cast<std::size_t>(i)]);
    return acc;
}

/// Apply a coefficient map into another field.
template <class To, class From, class Fn>
Poly<To> map_coeffs(const Poly<From>& f, const field_of_t<To>& target, Fn&& fn) {
    std::vector<To> v;
    v.reserve(f.coeffs().size());
    for (const From& c : f.coeffs()) v.push_back(fn(c));
    return Poly<To>(target, std::move(v));
}

template <class E>
Poly<E> pow(const Poly<E>& f, unsigned e) {
    Poly<E> r = Poly<E>::constant(f.field(), f.field().one());
    Poly<E> b = f;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

/// Monic gcd via the subresultant pseudo-remainder sequence.
template <class E>
Poly<E> poly_gcd(Poly<E> a, Poly<E> b) {
    const auto& F = a.field();
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.degree() < b.degree()) std::swap(a, b);
    E g = F.one(), h = F.one();
    while (true) {
        const int delta = a.degree() - b.degree();
        // prem(a, b) = lc(b)^(delta+1) * (a mod b)
        Poly<E> r = (a % b) * power(b.lead(), static_cast<unsigned long>(delta + 1));
        if (r.is_zero()) return monic(b);
        if (r.degree() == 0) return Poly<E>::constant(F, F.one());
        a = b;
        E scale = g * power(h, static_cast<unsigned long>(delta));
        b = r * inverse_of(scale);
        g = a.lead();
        if (delta >= 1) h = power(g, static_cast<unsigned long>(delta)) * inverse_of(power(h, static_cast<unsigned long>(delta - 1)));
    }
}

/// Standard resultant: lc(f)^deg g * prod over roots a of f of g(a).
template <class E>
E resultant_standard(Poly<E> f, Poly<E> g) {
    const auto& F = f.field();
    if (f.is_zero() || g.is_zero()) return F.zero();
    E acc = F.one();
    while (true) {
        const int m = f.degree(), n = g.degree();
        if (n == 0) return acc * power(g.lead(), static_cast<unsigned long>(m));
        if (m == 0) return acc * power(f.lead(), static_cast<unsigned long>(n));
        if (m < n) {
            if ((m * n) % 2) acc = -acc;
            std::swap(f, g);
            continue;
        }
        // Res(f, g) = (-1)^{mn} Res(g, f) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)
        Poly<E> r = f % g;
        if (r.is_zero()) return F.zero();
        if ((m * n) % 2) acc = -acc;
        acc = acc * power(g.lead(), static_cast<unsigned long>(m - r.degree()));
        f = g;
        g = r;
    }
}

/// resultant(f, g) = lc(g)^deg f * prod over roots b of g of f(b).
template <class E>
E resultant(const Poly<E>& f, const Poly<E>& g) {
    return resultant_standard(g, f);
}

/// Product of the distinct irreducible factors, monic. Characteristic 0 only.
template <class E>
Poly<E> squarefree_part(const Poly<E>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part of the zero polynomial");
    if (f.degree() == 0) return Poly<E>::constant(f.field(), f.field().one());
    return monic(exact_div(f, poly_gcd(f, derivative(f))));
}

/// Yun's algorithm: (factor, multiplicity) pairs with monic squarefree
/// pairwise coprime factors. Characteristic 0 only.
template <class E>
std::vector<std::pair<Poly<E>, int>> squarefree_decomposition(const Poly<E>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition of the zero polynomial");
    std::vector<std::pair<Poly<E>, int>> out;
    if (f.degree() == 0) return out;
    Poly<E> fm = monic(f);
    Poly<E> df = derivative(fm);
    Poly<E> a = poly_gcd(fm, df);
    Poly<E> b = exact_div(fm, a);
    Poly<E> c = exact_div(df, a);
    Poly<E> d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        Poly<E> ai = poly_gcd(b, d);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - derivative(b);
        if (ai.degree() > 0) out.emplace_back(monic(ai), i);
    }
    return out;
}

/// b^2 - 4ac for g = a x^2 + b x + c.
template <class E>
E quadratic_discriminant(const Poly<E>& g) {
    if (g.degree() != 2) throw std::invalid_argument("quadratic_discriminant: degree must be 2");
    const auto& F = g.field();
    const E& a = g.coeffs()[2];
    const E& b = g.coeffs()[1];
    const E& c = g.coeffs()[0];
    return b * b - F.from_int(4) * a * c;
}

template <class E, class Render>
std::string render_poly(const Poly<E>& f, Render&& render_coeff, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const E& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << render_coeff(c) << ")";
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace bct
