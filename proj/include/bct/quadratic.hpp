#pragma once

// Quadratic fields K = Q(sqrt D) and relative quadratic extensions
// L = K(sqrt d), with exact arithmetic, conjugations and square roots.

#include "bct/field.hpp"
#include "bct/numtheory.hpp"

#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bct {

class QuadElem;

class QuadField {
  public:
    explicit QuadField(long D) : D_(D) {
        if (D == 0 || D == 1) throw std::invalid_argument("QuadField: D must not be 0 or 1");
        Integer a = abs(Integer(D));
        for (const auto& [p, e] : factor_integer(a)) {
            if (e > 1) throw std::invalid_argument("QuadField: D must be squarefree");
        }
    }

    struct Unchecked {};
    QuadField(long D, Unchecked) : D_(D) {}

    long D() const { return D_; }

    QuadElem zero() const;
    QuadElem one() const;
    QuadElem from_int(long n) const;
    QuadElem from_rational(const Rational& q) const;
    QuadElem element(const Rational& a, const Rational& b) const;
    /// sqrt(D) itself.
    QuadElem generator() const;

    std::string name() const {
        if (D_ == -1) return "Qi";
        return "Qsqrt" + std::to_string(D_);
    }

    friend bool operator==(const QuadField& x, const QuadField& y) { return x.D_ == y.D_; }
    friend bool operator!=(const QuadField& x, const QuadField& y) { return x.D_ != y.D_; }

  private:
    long D_;
};

/// a + b sqrt(D).
class QuadElem {
  public:
    QuadElem(Rational a, Rational b, long D) : a_(std::move(a)), b_(std::move(b)), D_(D) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long D() const { return D_; }
    QuadField field() const { return QuadField(D_, QuadField::Unchecked{}); }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    Rational norm() const { return Rational(a_ * a_ - D_ * b_ * b_); }
    Rational trace() const { return Rational(2 * a_); }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        check(x, y);
        return QuadElem(x.a_ + y.a_, x.b_ + y.b_, x.D_);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        check(x, y);
        return QuadElem(x.a_ - y.a_, x.b_ - y.b_, x.D_);
    }
    friend QuadElem operator-(const QuadElem& x) { return QuadElem(-x.a_, -x.b_, x.D_); }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        check(x, y);
        if (sgn(x.b_) == 0 && sgn(y.b_) == 0) return QuadElem(x.a_ * y.a_, Rational(0), x.D_);
        return QuadElem(x.a_ * y.a_ + x.D_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.D_);
    }
    friend QuadElem operator*(const QuadElem& x, const Rational& q) {
        return QuadElem(x.a_ * q, x.b_ * q, x.D_);
    }
    friend QuadElem operator*(const Rational& q, const QuadElem& x) { return x * q; }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }

    QuadElem inverse() const {
        if (is_zero()) throw std::domain_error("QuadElem: division by zero");
        if (sgn(b_) == 0) return QuadElem(Rational(1) / a_, Rational(0), D_);
        Rational n = norm();
        return QuadElem(a_ / n, -b_ / n, D_);
    }

    QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
    QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
    QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    /// Total order used only for deterministic sorting.
    friend bool operator<(const QuadElem& x, const QuadElem& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

  private:
    static void check(const QuadElem& x, const QuadElem& y) {
        if (x.D_ != y.D_) throw std::invalid_argument("QuadElem: mixed fields");
    }
    Rational a_;
    Rational b_;
    long D_;
};

inline QuadElem QuadField::zero() const { return QuadElem(0, 0, D_); }
inline QuadElem QuadField::one() const { return QuadElem(1, 0, D_); }
inline QuadElem QuadField::from_int(long n) const { return QuadElem(n, 0, D_); }
inline QuadElem QuadField::from_rational(const Rational& q) const { return QuadElem(q, 0, D_); }
inline QuadElem QuadField::element(const Rational& a, const Rational& b) const { return QuadElem(a, b, D_); }
inline QuadElem QuadField::generator() const { return QuadElem(0, 1, D_); }

template <>
struct FieldTraits<QuadElem> {
    using Field = QuadField;
    static Field field_of(const QuadElem& e) { return e.field(); }
};

inline bool is_zero(const QuadElem& x) { return x.is_zero(); }

/// a - b sqrt(D).
inline QuadElem quad_conj(const QuadElem& x) { return QuadElem(x.a(), -x.b(), x.D()); }

std::string render(const QuadElem& x);

inline std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << render(x); }

/// Square root in K when x is a square in K.
inline std::optional<QuadElem> sqrt_in_quad(const QuadElem& x) {
    const long D = x.D();
    if (x.is_zero()) return x;
    if (sgn(x.b()) == 0) {
        if (auto r = rational_sqrt(x.a())) return QuadElem(*r, 0, D);
        if (auto r = rational_sqrt(x.a() / Rational(D))) return QuadElem(0, *r, D);
        return std::nullopt;
    }
    // (u + v sqrt D)^2 = x  <=>  4u^4 - 4a u^2 + D b^2 = 0, v = b / (2u).
    auto n = rational_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (const Rational& s : {*n, Rational(-*n)}) {
        Rational u2 = (x.a() + s) / 2;
        if (sgn(u2) == 0) continue;
        if (auto u = rational_sqrt(u2)) {
            Rational v = x.b() / (2 * *u);
            QuadElem r(*u, v, D);
            if (r * r == x) return r;
        }
    }
    return std::nullopt;
}

inline bool is_square_in_quad(const QuadElem& x) { return sqrt_in_quad(x).has_value(); }

/// K(sqrt d) for d a non-square of K. Cheap to copy; shares its data.
class RelQuadElem;

class RelQuadField {
  public:
    RelQuadField(const QuadField& base, const QuadElem& d) {
        if (d.D() != base.D()) throw std::invalid_argument("RelQuadField: d not in base field");
        if (d.is_zero() || is_square_in_quad(d))
            throw std::invalid_argument("RelQuadField: d = " + render(d) + " is a square in the base field");
        data_ = std::make_shared<const Data>(Data{base, d});
    }

    const QuadField& base() const { return data_->base; }
    const QuadElem& d() const { return data_->d; }

    RelQuadElem zero() const;
    RelQuadElem one() const;
    RelQuadElem from_int(long n) const;
    RelQuadElem from_rational(const Rational& q) const;
    RelQuadElem embed(const QuadElem& x) const;
    RelQuadElem element(const QuadElem& alpha, const QuadElem& beta) const;
    /// sqrt(d) itself.
    RelQuadElem generator() const;

    std::string name() const { return base().name() + "(sqrt(" + render(d()) + "))"; }

    friend bool operator==(const RelQuadField& x, const RelQuadField& y) {
        return x.data_ == y.data_ || (x.base() == y.base() && x.d() == y.d());
    }
    friend bool operator!=(const RelQuadField& x, const RelQuadField& y) { return !(x == y); }

  private:
    struct Data {
        QuadField base;
        QuadElem d;
    };
    std::shared_ptr<const Data> data_;
};

/// alpha + beta sqrt(d).
class RelQuadElem {
  public:
    RelQuadElem(QuadElem alpha, QuadElem beta, RelQuadField field)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), field_(std::move(field)) {}

    const QuadElem& alpha() const { return alpha_; }
    const QuadElem& beta() const { return beta_; }
    const RelQuadField& field() const { return field_; }

    bool is_zero() const { return alpha_.is_zero() && beta_.is_zero(); }
    bool in_base() const { return beta_.is_zero(); }

    /// N_{L/K}.
    QuadElem norm() const { return alpha_ * alpha_ - field_.d() * beta_ * beta_; }

    friend RelQuadElem operator+(const RelQuadElem& x, const RelQuadElem& y) {
        check(x, y);
        return RelQuadElem(x.alpha_ + y.alpha_, x.beta_ + y.beta_, x.field_);
    }
    friend RelQuadElem operator-(const RelQuadElem& x, const RelQuadElem& y) {
        check(x, y);
        return RelQuadElem(x.alpha_ - y.alpha_, x.beta_ - y.beta_, x.field_);
    }
    friend RelQuadElem operator-(const RelQuadElem& x) { return RelQuadElem(-x.alpha_, -x.beta_, x.field_); }
    friend RelQuadElem operator*(const RelQuadElem& x, const RelQuadElem& y) {
        check(x, y);
        if (x.beta_.is_zero() && y.beta_.is_zero())
            return RelQuadElem(x.alpha_ * y.alpha_, x.beta_, x.field_);
        return RelQuadElem(x.alpha_ * y.alpha_ + x.field_.d() * x.beta_ * y.beta_,
                           x.alpha_ * y.beta_ + x.beta_ * y.alpha_, x.field_);
    }
    friend RelQuadElem operator/(const RelQuadElem& x, const RelQuadElem& y) { return x * y.inverse(); }

    RelQuadElem inverse() const {
        if (is_zero()) throw std::domain_error("RelQuadElem: division by zero");
        if (beta_.is_zero()) return RelQuadElem(alpha_.inverse(), beta_, field_);
        QuadElem n = norm().inverse();
        return RelQuadElem(alpha_ * n, -(beta_ * n), field_);
    }

    friend bool operator==(const RelQuadElem& x, const RelQuadElem& y) {
        return x.alpha_ == y.alpha_ && x.beta_ == y.beta_ && x.field_ == y.field_;
    }
    friend bool operator!=(const RelQuadElem& x, const RelQuadElem& y) { return !(x == y); }
    friend bool operator<(const RelQuadElem& x, const RelQuadElem& y) {
        if (x.alpha_ != y.alpha_) return x.alpha_ < y.alpha_;
        return x.beta_ < y.beta_;
    }

  private:
    static void check(const RelQuadElem& x, const RelQuadElem& y) {
        if (x.field_ != y.field_) throw std::invalid_argument("RelQuadElem: mixed fields");
    }
    QuadElem alpha_;
    QuadElem beta_;
    RelQuadField field_;
};

inline RelQuadElem RelQuadField::zero() const { return embed(base().zero()); }
inline RelQuadElem RelQuadField::one() const { return embed(base().one()); }
inline RelQuadElem RelQuadField::from_int(long n) const { return embed(base().from_int(n)); }
inline RelQuadElem RelQuadField::from_rational(const Rational& q) const { return embed(base().from_rational(q)); }
inline RelQuadElem RelQuadField::embed(const QuadElem& x) const { return RelQuadElem(x, base().zero(), *this); }
inline RelQuadElem RelQuadField::element(const QuadElem& a, const QuadElem& b) const {
    return RelQuadElem(a, b, *this);
}
inline RelQuadElem RelQuadField::generator() const { return RelQuadElem(base().zero(), base().one(), *this); }

template <>
struct FieldTraits<RelQuadElem> {
    using Field = RelQuadField;
    static Field field_of(const RelQuadElem& e) { return e.field(); }
};

inline bool is_zero(const RelQuadElem& x) { return x.is_zero(); }

/// The generator of Gal(L/K): alpha + beta sqrt d -> alpha - beta sqrt d.
inline RelQuadElem rel_conj(const RelQuadElem& x) { return RelQuadElem(x.alpha(), -x.beta(), x.field()); }

inline std::string render(const RelQuadElem& x) {
    if (x.beta().is_zero()) return render(x.alpha());
    std::string s = x.alpha().is_zero() ? "" : "(" + render(x.alpha()) + ")+";
    return s + "(" + render(x.beta()) + ")*sqrt(" + render(x.field().d()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RelQuadElem& x) { return os << render(x); }

/// Square root in L when x is a square in L.
inline std::optional<RelQuadElem> sqrt_in_relquad(const RelQuadElem& x) {
    const RelQuadField& L = x.field();
    if (x.is_zero()) return x;
    if (x.in_base()) {
        if (auto r = sqrt_in_quad(x.alpha())) return L.embed(*r);
        // alpha = d w^2  <=>  alpha d is a square; then sqrt(alpha) = w sqrt(d).
        if (auto r = sqrt_in_quad(x.alpha() * L.d())) {
            return RelQuadElem(L.base().zero(), *r / L.d(), L);
        }
        return std::nullopt;
    }
    // (u + v sqrt d)^2 = x  <=>  4u^4 - 4 alpha u^2 + d beta^2 = 0, v = beta / (2u).
    auto n = sqrt_in_quad(x.norm());
    if (!n) return std::nullopt;
    const QuadElem half = L.base().from_rational(Rational(1, 2));
    for (const QuadElem& s : {*n, -*n}) {
        QuadElem u2 = (x.alpha() + s) * half;
        if (u2.is_zero()) continue;
        if (auto u = sqrt_in_quad(u2)) {
            QuadElem v = x.beta() / (L.base().from_int(2) * *u);
            RelQuadElem r(*u, v, L);
            if (r * r == x) return r;
        }
    }
    return std::nullopt;
}

inline std::string render(const QuadElem& x) {
    const std::string sym = x.D() == -1 ? "i" : "s";
    std::ostringstream os;
    const bool has_a = sgn(x.a()) != 0;
    const bool has_b = sgn(x.b()) != 0;
    if (!has_a && !has_b) return "0";
    if (has_a) os << x.a().get_str();
    if (has_b) {
        Rational b = x.b();
        if (has_a) os << (sgn(b) > 0 ? "+" : "-");
        else if (sgn(b) < 0) os << "-";
        Rational ab = abs(b);
        if (ab.get_den() == 1) {
            if (ab != 1) os << ab.get_num().get_str() << "*";
            os << sym;
        } else {
            if (ab.get_num() != 1) os << ab.get_num().get_str() << "*";
            os << sym << "/" << ab.get_den().get_str();
        }
    }
    return os.str();
}

}  // namespace bct
