#pragma once

// Text forms of fields, field elements and curves.
//
//   element := sum
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := atom ('^' ['-'] integer)?
//   atom    := integer | 's' | 'i' | '(' sum ')'
//
// 's' is sqrt(D); 'i' is accepted as an alias when D = -1.

#include "bct/curve.hpp"
#include "bct/quadratic.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace bct {

struct ParseError : std::invalid_argument {
    std::string message;
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), message(msg), position(pos) {}
};

namespace detail {

class ElementParser {
  public:
    ElementParser(const std::string& text, const QuadField& K) : s_(text), K_(K) {}

    QuadElem parse() {
        QuadElem v = sum();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return v;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    QuadElem sum() {
        QuadElem v = product();
        while (true) {
            if (eat('+')) v = v + product();
            else if (eat('-')) v = v - product();
            else return v;
        }
    }

    QuadElem product() {
        QuadElem v = unary();
        while (true) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                skip();
                const std::size_t at = pos_;
                QuadElem w = unary();
                if (w.is_zero()) throw ParseError("division by zero", at);
                v = v / w;
            } else {
                return v;
            }
        }
    }

    QuadElem unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    QuadElem power() {
        QuadElem base = atom();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip();
        const std::size_t at = pos_;
        Integer e = integer();
        if (!e.fits_slong_p() || e > 4096) throw ParseError("exponent too large", at);
        long k = e.get_si();
        if (neg) {
            if (base.is_zero()) throw ParseError("zero to a negative power", at);
            base = base.inverse();
        }
        QuadElem r = K_.one();
        for (long j = 0; j < k; ++j) r = r * base;
        return r;
    }

    Integer integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        return Integer(s_.substr(start, pos_ - start));
    }

    QuadElem atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return K_.from_rational(Rational(integer()));
        if (c == 's') {
            ++pos_;
            return K_.generator();
        }
        if (c == 'i') {
            if (K_.D() != -1) throw ParseError("'i' is only available in Q(i)", pos_);
            ++pos_;
            return K_.generator();
        }
        if (c == '(') {
            ++pos_;
            QuadElem v = sum();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    const std::string& s_;
    const QuadField& K_;
    std::size_t pos_ = 0;
};

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace detail

inline QuadElem parse_element(const std::string& text, const QuadField& K) {
    return detail::ElementParser(text, K).parse();
}

/// "Qi", "Q(i)", "Qsqrt-3", "Qsqrt<D>", "Q(sqrt(D))".
inline QuadField parse_field(const std::string& tag_in) {
    const std::string tag = detail::strip(tag_in);
    if (tag == "Qi" || tag == "Q(i)") return QuadField(-1);
    std::string num;
    if (tag.rfind("Qsqrt", 0) == 0) {
        num = tag.substr(5);
        if (!num.empty() && num.front() == '<' && num.back() == '>') num = num.substr(1, num.size() - 2);
        if (!num.empty() && num.front() == '(' && num.back() == ')') num = num.substr(1, num.size() - 2);
    } else if (tag.rfind("Q(sqrt(", 0) == 0 && tag.size() > 9 && tag.substr(tag.size() - 2) == "))") {
        num = tag.substr(7, tag.size() - 9);
    } else {
        throw ParseError("unknown field '" + tag + "'", 0);
    }
    try {
        std::size_t used = 0;
        long D = std::stol(num, &used);
        if (used != num.size()) throw ParseError("bad field discriminant '" + num + "'", 0);
        return QuadField(D);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad field discriminant '" + num + "'", 0);
    }
}

/// "[a, b]" (short) or "[a1, a2, a3, a4, a6]"; throws SingularCurve for singular models.
inline WeierstrassCurve<QuadElem> parse_curve(const std::string& text, const QuadField& K) {
    const std::size_t open = text.find('[');
    const std::size_t close = text.rfind(']');
    if (open == std::string::npos) throw ParseError("expected '['", 0);
    if (close == std::string::npos || close < open) throw ParseError("expected ']'", text.size());
    for (std::size_t j = 0; j < open; ++j)
        if (!std::isspace(static_cast<unsigned char>(text[j]))) throw ParseError("unexpected text before '['", j);
    for (std::size_t j = close + 1; j < text.size(); ++j)
        if (!std::isspace(static_cast<unsigned char>(text[j]))) throw ParseError("unexpected text after ']'", j);
    std::vector<QuadElem> coeffs;
    int depth = 0;
    std::size_t start = open + 1;
    for (std::size_t j = open + 1; j <= close; ++j) {
        const char c = text[j];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ',' && depth == 0) || j == close) {
            const std::string piece = text.substr(start, j - start);
            try {
                coeffs.push_back(parse_element(piece, K));
            } catch (const ParseError& e) {
                throw ParseError("bad coefficient: " + e.message, start + e.position);
            }
            start = j + 1;
        }
    }
    if (coeffs.size() == 2) return WeierstrassCurve<QuadElem>::short_model(K, coeffs[0], coeffs[1]);
    if (coeffs.size() == 5) return WeierstrassCurve<QuadElem>(K, {coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]});
    throw ParseError("expected 2 or 5 coefficients, got " + std::to_string(coeffs.size()), open);
}

inline std::string render_curve(const WeierstrassCurve<QuadElem>& C) {
    std::string s = "[";
    for (std::size_t j = 0; j < 5; ++j) {
        if (j) s += ",";
        s += render(C.a()[j]);
    }
    return s + "]";
}

}  // namespace bct
