#pragma once

/// Rational functions over a FiniteField in canonical form: coprime
/// numerator/denominator with monic denominator. Carries composition,
/// the max-degree convention, and evaluation as a morphism of P^1.

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace towerlab {

/// A point of P^1(F_q): a field element or the point at infinity.
class ProjectiveValue {
public:
    static ProjectiveValue infinity(const FiniteField& f) {
        return ProjectiveValue(true, f.zero());
    }
    static ProjectiveValue finite(FieldElement v) {
        return ProjectiveValue(false, std::move(v));
    }

    bool is_infinity() const { return inf_; }
    const FieldElement& value() const { return v_; }
    const FiniteField& field() const { return v_.field(); }

    friend bool operator==(const ProjectiveValue& a, const ProjectiveValue& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const ProjectiveValue& a, const ProjectiveValue& b) {
        return !(a == b);
    }
    friend bool operator<(const ProjectiveValue& a, const ProjectiveValue& b) {
        if (a.inf_ != b.inf_) return !a.inf_;  // finite values first, infinity last
        if (a.inf_) return false;
        return a.v_ < b.v_;
    }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

private:
    ProjectiveValue(bool inf, FieldElement v) : inf_(inf), v_(std::move(v)) {}
    bool inf_;
    FieldElement v_;
};

class RationalFunction {
public:
    /// Canonicalize num/den: divide out the gcd and rescale the denominator
    /// monic. Idempotent. Throws on a zero denominator.
    static RationalFunction normalized(Polynomial num, Polynomial den) {
        if (den.is_zero()) throw zero_denominator_error();
        if (num.is_zero())
            return RationalFunction(Polynomial(num.field()),
                                    Polynomial::constant(num.field().one()));
        Polynomial g = poly_gcd(num, den);
        if (g.degree() >= 1) {
            num = num / g;
            den = den / g;
        }
        FieldElement scale = den.leading().inv();
        return RationalFunction(scale * num, scale * den);
    }
    static RationalFunction from_polynomial(Polynomial p) {
        Polynomial one = Polynomial::constant(p.field().one());
        return RationalFunction(std::move(p), std::move(one));
    }
    static RationalFunction constant(const FieldElement& e) {
        return from_polynomial(Polynomial::constant(e));
    }
    static RationalFunction x(const FiniteField& f) {
        return from_polynomial(Polynomial::x(f));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const FiniteField& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// deg = max(deg num, deg den); 0 for constants.
    int degree() const {
        if (is_zero()) return 0;
        return std::max(num_.degree(), den_.degree());
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return normalized(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return normalized(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return normalized(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw division_by_zero_error();
        return normalized(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction pow(int e) const {
        if (e < 0) return normalized(den_, num_).pow(-e);
        RationalFunction acc = constant(field().one());
        RationalFunction base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    /// Evaluation as a morphism of the projective line.
    ProjectiveValue eval(const ProjectiveValue& x) const {
        const FiniteField& f = field();
        if (!x.is_infinity()) {
            FieldElement n = num_.eval(x.value());
            FieldElement d = den_.eval(x.value());
            if (!d.is_zero()) return ProjectiveValue::finite(n / d);
            // num and den are coprime, so they share no root
            return ProjectiveValue::infinity(f);
        }
        if (num_.degree() > den_.degree()) return ProjectiveValue::infinity(f);
        if (num_.degree() < den_.degree()) return ProjectiveValue::finite(f.zero());
        return ProjectiveValue::finite(num_.leading() / den_.leading());
    }

    /// Order of vanishing at a point of P^1 (negative at a pole).
    int valuation_at(const ProjectiveValue& beta) const {
        if (is_zero()) throw spec_error("valuation of the zero function");
        if (beta.is_infinity()) return den_.degree() - num_.degree();
        return num_.root_multiplicity(beta.value()) - den_.root_multiplicity(beta.value());
    }

    /// Value of this * pi^(-v) at beta, where pi is the local uniformizer
    /// (X - beta, or 1/X at infinity) and v = valuation_at(beta). Nonzero.
    FieldElement residue_at(const ProjectiveValue& beta) const {
        if (beta.is_infinity()) return num_.leading() / den_.leading();
        const FieldElement& b = beta.value();
        Polynomial lin(field(), {-b, field().one()});
        Polynomial n = num_, d = den_;
        while (n.degree() >= 1 && n.eval(b).is_zero()) n = n / lin;
        while (d.degree() >= 1 && d.eval(b).is_zero()) d = d / lin;
        return n.eval(b) / d.eval(b);
    }

    std::string str(const std::string& var = "T") const {
        if (is_polynomial()) return num_.str(var);
        return wrap(num_, var) + "/" + wrap(den_, var);
    }

private:
    Polynomial num_, den_;

    RationalFunction(Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}

    static std::string wrap(const Polynomial& p, const std::string& var) {
        std::string s = p.str(var);
        return p.term_count() > 1 ? "(" + s + ")" : s;
    }
};

inline RationalFunction rat_normalize(Polynomial num, Polynomial den) {
    return RationalFunction::normalized(std::move(num), std::move(den));
}

inline int rat_degree(const RationalFunction& r) { return r.degree(); }

inline ProjectiveValue rat_eval(const RationalFunction& r, const ProjectiveValue& x) {
    return r.eval(x);
}

/// outer(inner) in canonical form. For nonconstant arguments the degree is
/// deg(outer) * deg(inner).
inline RationalFunction rat_compose(const RationalFunction& outer,
                                    const RationalFunction& inner) {
    const FiniteField& f = outer.field();
    if (f != inner.field()) throw field_mismatch_error();
    const Polynomial &n = inner.num(), &d = inner.den();
    const int M = std::max(outer.num().degree(), outer.den().degree());
    // numerator and denominator of outer, both homogenized by d^M
    Polynomial a(f), b(f);
    Polynomial npow = Polynomial::constant(f.one());
    std::vector<Polynomial> npows;
    for (int i = 0; i <= M; ++i) {
        npows.push_back(npow);
        npow = npow * n;
    }
    Polynomial dpow = Polynomial::constant(f.one());
    for (int i = M; i >= 0; --i) {
        a = a + outer.num().coeff(i) * (npows[static_cast<std::size_t>(i)] * dpow);
        b = b + outer.den().coeff(i) * (npows[static_cast<std::size_t>(i)] * dpow);
        dpow = dpow * d;
    }
    if (b.is_zero()) throw zero_denominator_error();
    return RationalFunction::normalized(std::move(a), std::move(b));
}

}  // namespace towerlab
