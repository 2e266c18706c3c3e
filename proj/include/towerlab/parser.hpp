#pragma once

/// Recursive-descent parser for field and step-equation expressions.
///
/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := var | const | '(' expr ')'
///   const  := integer | the generator symbol (default 'g')
///
/// Variables are single letters. A univariate expression admits at most one
/// indeterminate besides the generator; step equations use exactly x (lower
/// level) and y (new level).

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bivariate.hpp"

namespace towerlab {

namespace detail {

// Working value during parsing: a quotient of bivariate polynomials.
// No gcd reduction; sizes stay small at expression scale.
struct BiRational {
    BivariatePolynomial num, den;

    static BiRational from(BivariatePolynomial p) {
        BivariatePolynomial one =
            BivariatePolynomial::from_s_poly(Polynomial::constant(p.field().one()), 0);
        return {std::move(p), std::move(one)};
    }
    BiRational operator+(const BiRational& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }
    BiRational operator-(const BiRational& o) const {
        return {num * o.den - o.num * den, den * o.den};
    }
    BiRational operator*(const BiRational& o) const { return {num * o.num, den * o.den}; }
    BiRational neg() const {
        return {num * num.field().from_integer(-1), den};
    }
};

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const FiniteField& field, bool bivariate)
        : text_(text), field_(field), bivariate_(bivariate) {}

    BiRational run() {
        BiRational v = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw syntax_error("unexpected trailing input", pos_);
        return v;
    }

    std::optional<char> variable() const { return var_; }
    std::optional<char> variable2() const { return var2_; }

private:
    std::string_view text_;
    const FiniteField& field_;
    bool bivariate_;
    std::size_t pos_ = 0;
    std::optional<char> var_, var2_;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiRational parse_expr() {
        bool negate = accept('-');
        BiRational v = parse_term();
        if (negate) v = v.neg();
        while (true) {
            if (accept('+'))
                v = v + parse_term();
            else if (accept('-'))
                v = v - parse_term();
            else
                break;
        }
        return v;
    }

    BiRational parse_term() {
        BiRational v = parse_factor();
        while (true) {
            if (accept('*')) {
                v = v * parse_factor();
            } else if (accept('/')) {
                BiRational d = parse_factor();
                if (d.num.is_zero()) throw zero_denominator_error();
                v = BiRational{v.num * d.den, v.den * d.num};
            } else {
                break;
            }
        }
        return v;
    }

    BiRational parse_factor() {
        BiRational v = parse_base();
        if (accept('^')) {
            std::size_t at = pos_;
            long long e = parse_uint();
            if (e > 512) throw syntax_error("exponent too large", at);
            BiRational acc = BiRational::from(
                BivariatePolynomial::from_s_poly(Polynomial::constant(field_.one()), 0));
            for (; e > 0; e >>= 1) {
                if (e & 1) acc = acc * v;
                v = v * v;
            }
            v = std::move(acc);
        }
        return v;
    }

    BiRational parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) throw syntax_error("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            BiRational v = parse_expr();
            skip_ws();
            if (!accept(')')) throw syntax_error("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long n = parse_uint();
            return BiRational::from(BivariatePolynomial::from_s_poly(
                Polynomial::constant(field_.from_integer(n)), 0));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                name += text_[pos_++];
            if (name.size() != 1) throw unknown_symbol_error(name);
            if (name == field_.symbol())
                return BiRational::from(BivariatePolynomial::from_s_poly(
                    Polynomial::constant(field_.generator()), 0));
            return variable_value(name[0], start);
        }
        throw syntax_error(std::string("unexpected character '") + c + "'", pos_);
    }

    BiRational variable_value(char v, std::size_t at) {
        if (bivariate_) {
            if (v == 'x')
                return BiRational::from(
                    BivariatePolynomial::from_s_poly(Polynomial::x(field_), 0));
            if (v == 'y')
                return BiRational::from(
                    BivariatePolynomial::from_t_poly(Polynomial::x(field_), 0));
            throw syntax_error(std::string("step equations use variables x and y, got '") +
                                   v + "'",
                               at);
        }
        if (!var_) var_ = v;
        if (*var_ != v)
            throw syntax_error(std::string("second indeterminate '") + v +
                                   "' (already using '" + *var_ + "')",
                               at);
        return BiRational::from(BivariatePolynomial::from_s_poly(Polynomial::x(field_), 0));
    }

    long long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw syntax_error("expected a nonnegative integer", pos_);
        long long n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            if (n > 1'000'000'000) throw syntax_error("integer too large", pos_);
            ++pos_;
        }
        return n;
    }
};

// Univariate extraction: the parsed value must not involve the T axis.
inline RationalFunction to_univariate(const BiRational& v) {
    if (v.num.deg_t() > 0 || v.den.deg_t() > 0)
        throw spec_error("expression is not univariate");
    return RationalFunction::normalized(v.num.coeff_of_t(0), v.den.coeff_of_t(0));
}

}  // namespace detail

struct ParsedExpression {
    RationalFunction value;
    std::optional<char> variable;  // absent for constant expressions
};

/// Parse a univariate rational expression; result in canonical form.
inline ParsedExpression parse_expression(std::string_view text, const FiniteField& field) {
    detail::ExpressionParser p(text, field, false);
    auto v = p.run();
    return {detail::to_univariate(v), p.variable()};
}

inline RationalFunction parse_rational(std::string_view text, const FiniteField& field) {
    return parse_expression(text, field).value;
}

inline Polynomial parse_polynomial(std::string_view text, const FiniteField& field) {
    RationalFunction r = parse_rational(text, field);
    if (!r.is_polynomial()) throw spec_error("expected a polynomial, got " + r.str());
    return r.num();
}

/// Field constants: integers and polynomials in the generator symbol.
inline FieldElement parse_element(std::string_view text, const FiniteField& field) {
    RationalFunction r = parse_rational(text, field);
    if (!r.is_constant()) throw spec_error("expected a field constant, got " + r.str());
    if (!r.is_polynomial()) throw spec_error("expected a field constant, got " + r.str());
    return r.num().coeff(0);
}

/// A point of P^1: `inf` or a field constant.
inline ProjectiveValue parse_projective(std::string_view text, const FiniteField& field) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (text.substr(b, e - b) == "inf") return ProjectiveValue::infinity(field);
    return ProjectiveValue::finite(parse_element(text, field));
}

namespace detail {

// Strips factors that depend on one variable only: a content c(S) (or c(T))
// dividing every coefficient contributes vertical components, never a step
// relation between the two levels.
inline BivariatePolynomial strip_contents(const BivariatePolynomial& h) {
    const FiniteField& f = h.field();
    Polynomial content_s(f);
    for (int j = 0; j <= h.deg_t(); ++j) {
        Polynomial col = h.coeff_of_t(j);
        if (col.is_zero()) continue;
        content_s = content_s.is_zero() ? col : poly_gcd(content_s, col);
    }
    BivariatePolynomial out(f);
    for (int j = 0; j <= h.deg_t(); ++j) {
        Polynomial col = h.coeff_of_t(j);
        if (col.is_zero()) continue;
        out = out + BivariatePolynomial::from_s_poly(col / content_s, j);
    }
    Polynomial content_t(f);
    BivariatePolynomial tr = out.transpose();
    for (int j = 0; j <= tr.deg_t(); ++j) {
        Polynomial row = tr.coeff_of_t(j);
        if (row.is_zero()) continue;
        content_t = content_t.is_zero() ? row : poly_gcd(content_t, row);
    }
    if (content_t.degree() >= 1) {
        BivariatePolynomial out2(f);
        for (int j = 0; j <= tr.deg_t(); ++j) {
            Polynomial row = tr.coeff_of_t(j);
            if (row.is_zero()) continue;
            out2 = out2 + BivariatePolynomial::from_s_poly(row / content_t, j);
        }
        out = out2.transpose();
    }
    return out;
}

}  // namespace detail

/// Parse a step equation in x (lower level) and y (new variable); denominators
/// are cleared, single-variable contents are stripped, and the resulting
/// defining polynomial is returned.
inline BivariatePolynomial parse_step_equation(std::string_view text,
                                               const FiniteField& field) {
    detail::ExpressionParser p(text, field, true);
    auto v = p.run();
    if (v.den.is_zero()) throw zero_denominator_error();
    if (v.num.is_zero()) throw spec_error("step equation is identically zero");
    return detail::strip_contents(v.num);
}

/// Modulus text for field construction: a polynomial in one letter over F_p,
/// parsed before the extension field exists.
inline std::vector<long long> parse_prime_modulus(std::string_view text, long long p) {
    FiniteField fp(p, {0, 1}, "@");  // prime field; '@' keeps every letter free
    Polynomial m = parse_polynomial(text, fp);
    std::vector<long long> out;
    for (int i = 0; i <= m.degree(); ++i) out.push_back(m.coeff(i).coeffs()[0]);
    return out;
}

}  // namespace towerlab
