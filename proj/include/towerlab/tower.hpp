#pragma once

/// Recursive (a,b)-step definitions and the static checks on them: the
/// degree/coprimality shapes that force total ramification of the place at
/// infinity, separability of the step polynomial, and the symmetry caution
/// (symmetric Galois equations collapse into the first extension).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bivariate.hpp"

namespace towerlab {

/// One recursive step F_{i+1} = F_i(x_{i+1}) with a(x_{i+1}) = b(x_i), or an
/// explicit bivariate step equation H(x_i, x_{i+1}) = 0 when the new-variable
/// side is not a rational function of the new variable alone.
class TowerDef {
public:
    static TowerDef from_ab(const FiniteField& field, RationalFunction a, RationalFunction b,
                            std::string label = "") {
        if (a.is_constant() || b.is_constant())
            throw spec_error("tower sides must be nonconstant");
        BivariatePolynomial h = defining_polynomial(a, b);
        return TowerDef(field, std::move(a), std::move(b), std::move(h), std::move(label));
    }

    static TowerDef from_equation(const FiniteField& field, BivariatePolynomial h,
                                  std::string label = "") {
        if (h.deg_t() < 1)
            throw spec_error("step equation must involve the new variable");
        return TowerDef(field, std::nullopt, std::nullopt, std::move(h), std::move(label));
    }

    const FiniteField& field() const { return field_; }
    bool has_ab() const { return a_.has_value(); }
    const RationalFunction& a() const { return *a_; }
    const RationalFunction& b() const { return *b_; }
    const BivariatePolynomial& equation() const { return h_; }
    const std::string& label() const { return label_; }

    /// Degree of one step, [F_{i+1} : F_i] at most this.
    int step_degree() const { return has_ab() ? a_->degree() : h_.deg_t(); }

private:
    TowerDef(const FiniteField& field, std::optional<RationalFunction> a,
             std::optional<RationalFunction> b, BivariatePolynomial h, std::string label)
        : field_(field), a_(std::move(a)), b_(std::move(b)), h_(std::move(h)),
          label_(std::move(label)) {}

    FiniteField field_;
    std::optional<RationalFunction> a_, b_;
    BivariatePolynomial h_;
    std::string label_;
};

struct DegreeProfile {
    int m;       // deg a
    int deg_b1;  // numerator degree of b
    int deg_b2;  // denominator degree of b
    int r;       // m - min(deg_b1, deg_b2), the valuation jump at infinity
};

enum class LemmaShape { Lemma1, Remark, Neither };

struct NamedCheck {
    std::string name;
    bool pass;
};

struct LemmaOneReport {
    LemmaShape shape = LemmaShape::Neither;
    std::vector<NamedCheck> conditions;
    bool totally_ramified_infinity = false;  // and F_q is then the full constant field
    std::optional<DegreeProfile> profile;

    bool all_pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return !conditions.empty();
    }
    std::string shape_str() const {
        switch (shape) {
            case LemmaShape::Lemma1: return "lemma-1";
            case LemmaShape::Remark: return "power-map";
            default: return "neither";
        }
    }
};

namespace detail {

inline long long igcd(long long a, long long b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a < 0 ? -a : a;
}

inline bool coprime(const Polynomial& u, const Polynomial& v) {
    return poly_gcd(u, v).degree() == 0;
}

inline bool is_power_of_x(const Polynomial& p) {
    if (p.degree() < 1 || !p.is_monic()) return false;
    for (int i = 0; i < p.degree(); ++i)
        if (!p.coeff(i).is_zero()) return false;
    return true;
}

}  // namespace detail

/// Checks the two degree shapes that force total ramification of the place at
/// infinity (hence a full constant field):
///   lemma-1 shape: a polynomial with deg a = deg b1 = m >= 2,
///                  deg b2 = m - r, gcd(m,r) = 1, a coprime to b1;
///   power-map shape: a = T^m with m >= 2, {deg b1, deg b2} = {m, m-r}
///                  in either order, gcd(m,r) = 1, a coprime to b1.
/// Anything else is Neither; that is a verdict, not an error, since the
/// conditions are sufficient only.
inline LemmaOneReport check_lemma1(const TowerDef& t) {
    LemmaOneReport rep;
    if (!t.has_ab()) {
        rep.conditions.push_back({"a,b form available", false});
        return rep;
    }
    const RationalFunction& a = t.a();
    const RationalFunction& b = t.b();
    if (!a.is_polynomial()) {
        rep.conditions.push_back({"a is a polynomial", false});
        return rep;
    }
    const Polynomial& A = a.num();
    const Polynomial& b1 = b.num();
    const Polynomial& b2 = b.den();
    const int m = A.degree();

    const bool power_map = detail::is_power_of_x(A);
    rep.shape = power_map ? LemmaShape::Remark : LemmaShape::Lemma1;

    rep.conditions.push_back({"a is a polynomial", true});
    rep.conditions.push_back({"m = deg a >= 2", m >= 2});

    int r = -1;
    if (power_map) {
        rep.conditions.push_back({"a = T^m", true});
        const bool pole_side = b1.degree() == m && b2.degree() < m;
        const bool zero_side = b2.degree() == m && b1.degree() < m;
        rep.conditions.push_back({"max(deg b1, deg b2) = m", pole_side || zero_side});
        if (pole_side) r = m - b2.degree();
        if (zero_side) r = m - b1.degree();
    } else {
        rep.conditions.push_back({"deg b1 = m", b1.degree() == m});
        if (b1.degree() == m) r = m - b2.degree();
    }
    rep.conditions.push_back(
        {"gcd(m, r) = 1", r >= 1 && m >= 1 && detail::igcd(m, r) == 1});
    rep.conditions.push_back({"gcd(a, b1) = 1", detail::coprime(A, b1)});
    rep.conditions.push_back({"gcd(b1, b2) = 1", detail::coprime(b1, b2)});

    if (rep.all_pass()) {
        rep.totally_ramified_infinity = true;
        rep.profile = DegreeProfile{m, b1.degree(), b2.degree(), r};
    } else {
        rep.shape = LemmaShape::Neither;
    }
    return rep;
}

/// Separability of the step polynomial a(T) - b(x_i) (or of the explicit
/// equation H(x_i, T)). Separable means each step is a separable extension.
inline SeparabilityCertificate check_separability(const TowerDef& t) {
    return separability_from_equation(t.equation());
}

enum class Symmetry { Symmetric, Asymmetric };

struct SymmetryReport {
    Symmetry tag;
    std::string caution;  // nonempty when symmetric
};

/// Tests H(S,T) = u * H(T,S) for a unit u. Symmetric equations whose first
/// step is Galois satisfy F_i subset of F_1 for all i, so they never give a
/// tower; the caution records that.
inline SymmetryReport check_symmetry(const TowerDef& t) {
    const BivariatePolynomial& h = t.equation();
    if (h.equal_up_to_unit(h.transpose()))
        return {Symmetry::Symmetric,
                "symmetric step equation: if the first extension is Galois the sequence "
                "collapses into F_1 and defines no tower"};
    return {Symmetry::Asymmetric, ""};
}

}  // namespace towerlab
