#pragma once

// Field descriptors. Every element type E used by the generic polynomial and
// curve code has a FieldTraits<E> specialization naming a descriptor type
// with zero(), one(), from_int() and an accessor recovering the descriptor
// from an element.

#include "bct/rational.hpp"

#include <string>

namespace bct {

template <class E>
struct FieldTraits;

struct RationalField {
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }
    Rational from_rational(const Rational& q) const { return q; }
    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <>
struct FieldTraits<Rational> {
    using Field = RationalField;
    static Field field_of(const Rational&) { return {}; }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

template <class E>
using field_of_t = typename FieldTraits<E>::Field;

template <class E>
field_of_t<E> field_of(const E& e) {
    return FieldTraits<E>::field_of(e);
}

/// Integer power by squaring for any field element (e >= 0).
template <class E>
E power(E base, unsigned long e) {
    E result = field_of(base).one();
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace bct
