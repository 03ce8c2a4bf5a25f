#pragma once

// F_p and F_{p^2} = F_p[t]/(t^2 - n) with n a quadratic non-residue.

#include "bct/field.hpp"
#include "bct/numtheory.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bct {

class FqElem;

class FqField {
  public:
    /// F_p (degree 1) or F_{p^2} (degree 2). p must be an odd prime.
    FqField(std::uint64_t p, int degree, std::uint64_t nonresidue = 0) : p_(p), degree_(degree), n_(0) {
        if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("FqField: p must be an odd prime");
        if (p >= (1ull << 31)) throw std::invalid_argument("FqField: p too large");
        if (degree != 1 && degree != 2) throw std::invalid_argument("FqField: degree must be 1 or 2");
        if (degree == 2) {
            if (nonresidue == 0) {
                nonresidue = 2;
                while (legendre_u64(nonresidue, p) != -1) ++nonresidue;
            }
            if (legendre_u64(nonresidue, p) != -1) throw std::invalid_argument("FqField: t^2 - n must be irreducible");
            n_ = nonresidue % p;
        }
    }

    std::uint64_t p() const { return p_; }
    int degree() const { return degree_; }
    /// t^2 = n in F_{p^2}.
    std::uint64_t nonresidue() const { return n_; }
    std::uint64_t order() const { return degree_ == 1 ? p_ : p_ * p_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(long long n) const;
    FqElem element(std::uint64_t a, std::uint64_t b = 0) const;
    /// The element with index i in [0, order()): i = a + b p.
    FqElem at(std::uint64_t i) const;
    FqElem t() const;

    std::string name() const {
        return degree_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(p_) + "^2";
    }

    friend bool operator==(const FqField& x, const FqField& y) {
        return x.p_ == y.p_ && x.degree_ == y.degree_ && x.n_ == y.n_;
    }
    friend bool operator!=(const FqField& x, const FqField& y) { return !(x == y); }

  private:
    std::uint64_t p_;
    int degree_;
    std::uint64_t n_;
};

/// a + b t with a, b reduced modulo p.
class FqElem {
  public:
    FqElem(std::uint64_t a, std::uint64_t b, FqField f) : a_(a % f.p()), b_(b % f.p()), f_(f) {}

    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    const FqField& field() const { return f_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    std::uint64_t index() const { return a_ + b_ * f_.p(); }

    friend FqElem operator+(const FqElem& x, const FqElem& y) {
        const std::uint64_t p = x.f_.p();
        return FqElem((x.a_ + y.a_) % p, (x.b_ + y.b_) % p, x.f_);
    }
    friend FqElem operator-(const FqElem& x, const FqElem& y) {
        const std::uint64_t p = x.f_.p();
        return FqElem((x.a_ + p - y.a_) % p, (x.b_ + p - y.b_) % p, x.f_);
    }
    friend FqElem operator-(const FqElem& x) {
        const std::uint64_t p = x.f_.p();
        return FqElem((p - x.a_) % p, (p - x.b_) % p, x.f_);
    }
    friend FqElem operator*(const FqElem& x, const FqElem& y) {
        const std::uint64_t p = x.f_.p();
        if (x.f_.degree() == 1) return FqElem(x.a_ * y.a_ % p, 0, x.f_);
        std::uint64_t a = (x.a_ * y.a_ + x.b_ * y.b_ % p * x.f_.nonresidue()) % p;
        std::uint64_t b = (x.a_ * y.b_ + x.b_ * y.a_) % p;
        return FqElem(a, b, x.f_);
    }
    friend FqElem operator/(const FqElem& x, const FqElem& y) { return x * y.inverse(); }

    FqElem inverse() const {
        if (is_zero()) throw std::domain_error("FqElem: division by zero");
        const std::uint64_t p = f_.p();
        if (f_.degree() == 1) return FqElem(invmod(a_, p), 0, f_);
        // (a + bt)^-1 = (a - bt) / (a^2 - n b^2)
        std::uint64_t nrm = (a_ * a_ % p + p - b_ * b_ % p * f_.nonresidue() % p) % p;
        std::uint64_t inv = invmod(nrm, p);
        return FqElem(a_ * inv % p, (p - b_) % p * inv % p, f_);
    }

    friend bool operator==(const FqElem& x, const FqElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const FqElem& x, const FqElem& y) { return !(x == y); }
    friend bool operator<(const FqElem& x, const FqElem& y) { return x.index() < y.index(); }

  private:
    std::uint64_t a_;
    std::uint64_t b_;
    FqField f_;
};

inline FqElem FqField::zero() const { return FqElem(0, 0, *this); }
inline FqElem FqField::one() const { return FqElem(1, 0, *this); }
inline FqElem FqField::from_int(long long n) const { return FqElem(signed_mod(n, p_), 0, *this); }
inline FqElem FqField::element(std::uint64_t a, std::uint64_t b) const {
    if (degree_ == 1 && b % p_ != 0) throw std::invalid_argument("FqField: t-component in prime field");
    return FqElem(a, b, *this);
}
inline FqElem FqField::at(std::uint64_t i) const { return FqElem(i % p_, degree_ == 1 ? 0 : i / p_, *this); }
inline FqElem FqField::t() const {
    if (degree_ != 2) throw std::logic_error("FqField: t only exists in F_{p^2}");
    return FqElem(0, 1, *this);
}

template <>
struct FieldTraits<FqElem> {
    using Field = FqField;
    static Field field_of(const FqElem& e) { return e.field(); }
};

inline bool is_zero(const FqElem& x) { return x.is_zero(); }

inline std::string render(const FqElem& x) {
    if (x.field().degree() == 1) return std::to_string(x.a());
    return std::to_string(x.a()) + "+" + std::to_string(x.b()) + "*t";
}

}  // namespace bct
