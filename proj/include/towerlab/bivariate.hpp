#pragma once

/// Bivariate polynomials H(S,T) over a FiniteField, the defining polynomial
/// a1(T)b2(S) - a2(T)b1(S) of a recursive step, a Sylvester resultant in T
/// computed by fraction-free (Bareiss) elimination, and the separability
/// certificate built on it.

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace towerlab {

/// Coefficient matrix c[i][j] of S^i T^j, trimmed in both variables.
class BivariatePolynomial {
public:
    explicit BivariatePolynomial(FiniteField field) : field_(std::move(field)) {}
    BivariatePolynomial(FiniteField field, std::vector<std::vector<FieldElement>> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static BivariatePolynomial zero(const FiniteField& f) { return BivariatePolynomial(f); }
    /// p(S) * T^j
    static BivariatePolynomial from_s_poly(const Polynomial& p, int tdeg) {
        std::vector<std::vector<FieldElement>> c;
        for (int i = 0; i <= p.degree(); ++i) {
            std::vector<FieldElement> row(static_cast<std::size_t>(tdeg) + 1,
                                          p.field().zero());
            row.back() = p.coeff(i);
            c.push_back(std::move(row));
        }
        return BivariatePolynomial(p.field(), std::move(c));
    }
    /// p(T) * S^i
    static BivariatePolynomial from_t_poly(const Polynomial& p, int sdeg) {
        std::vector<std::vector<FieldElement>> c(
            static_cast<std::size_t>(sdeg) + 1,
            std::vector<FieldElement>(static_cast<std::size_t>(p.degree()) + 1,
                                      p.field().zero()));
        for (int j = 0; j <= p.degree(); ++j) c.back()[static_cast<std::size_t>(j)] = p.coeff(j);
        return BivariatePolynomial(p.field(), std::move(c));
    }

    const FiniteField& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int deg_s() const { return static_cast<int>(c_.size()) - 1; }
    int deg_t() const {
        int d = -1;
        for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }

    FieldElement coeff(int i, int j) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
        const auto& row = c_[static_cast<std::size_t>(i)];
        if (j < 0 || j >= static_cast<int>(row.size())) return field_.zero();
        return row[static_cast<std::size_t>(j)];
    }

    /// Coefficient of T^j as a polynomial in S.
    Polynomial coeff_of_t(int j) const {
        std::vector<FieldElement> c;
        for (int i = 0; i <= deg_s(); ++i) c.push_back(coeff(i, j));
        return Polynomial(field_, std::move(c));
    }

    Polynomial eval_s(const FieldElement& beta) const {
        std::vector<FieldElement> c;
        for (int j = 0; j <= deg_t(); ++j) c.push_back(coeff_of_t(j).eval(beta));
        return Polynomial(field_, std::move(c));
    }

    BivariatePolynomial transpose() const {
        std::vector<std::vector<FieldElement>> c(
            static_cast<std::size_t>(deg_t()) + 1,
            std::vector<FieldElement>(static_cast<std::size_t>(deg_s()) + 1, field_.zero()));
        for (int i = 0; i <= deg_s(); ++i)
            for (int j = 0; j <= deg_t(); ++j)
                c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = coeff(i, j);
        return BivariatePolynomial(field_, std::move(c));
    }

    BivariatePolynomial derivative_t() const {
        std::vector<std::vector<FieldElement>> c;
        for (int i = 0; i <= deg_s(); ++i) {
            std::vector<FieldElement> row;
            for (int j = 1; j <= deg_t(); ++j)
                row.push_back(field_.from_integer(j) * coeff(i, j));
            c.push_back(std::move(row));
        }
        return BivariatePolynomial(field_, std::move(c));
    }

    friend BivariatePolynomial operator+(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        const int ds = std::max(a.deg_s(), b.deg_s());
        const int dt = std::max(a.deg_t(), b.deg_t());
        std::vector<std::vector<FieldElement>> c(
            static_cast<std::size_t>(ds) + 1,
            std::vector<FieldElement>(static_cast<std::size_t>(dt) + 1, a.field_.zero()));
        for (int i = 0; i <= ds; ++i)
            for (int j = 0; j <= dt; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a.coeff(i, j) + b.coeff(i, j);
        return BivariatePolynomial(a.field_, std::move(c));
    }
    friend BivariatePolynomial operator-(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        return a + (b * a.field_.from_integer(-1));
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const FieldElement& s) {
        std::vector<std::vector<FieldElement>> c = a.c_;
        for (auto& row : c)
            for (auto& e : row) e = e * s;
        return BivariatePolynomial(a.field_, std::move(c));
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return BivariatePolynomial(a.field_);
        std::vector<std::vector<FieldElement>> c(
            static_cast<std::size_t>(a.deg_s() + b.deg_s()) + 1,
            std::vector<FieldElement>(static_cast<std::size_t>(a.deg_t() + b.deg_t()) + 1,
                                      a.field_.zero()));
        for (int i = 0; i <= a.deg_s(); ++i)
            for (int j = 0; j <= a.deg_t(); ++j) {
                if (a.coeff(i, j).is_zero()) continue;
                for (int k = 0; k <= b.deg_s(); ++k)
                    for (int l = 0; l <= b.deg_t(); ++l) {
                        auto& dst = c[static_cast<std::size_t>(i + k)]
                                     [static_cast<std::size_t>(j + l)];
                        dst = dst + a.coeff(i, j) * b.coeff(k, l);
                    }
            }
        return BivariatePolynomial(a.field_, std::move(c));
    }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        if (a.field_ != b.field_) return false;
        const int ds = std::max(a.deg_s(), b.deg_s());
        const int dt = std::max(a.deg_t(), b.deg_t());
        for (int i = 0; i <= ds; ++i)
            for (int j = 0; j <= dt; ++j)
                if (a.coeff(i, j) != b.coeff(i, j)) return false;
        return true;
    }
    friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return !(a == b);
    }

    /// True when this == u * other for some nonzero scalar u.
    bool equal_up_to_unit(const BivariatePolynomial& other) const {
        if (is_zero() || other.is_zero()) return is_zero() == other.is_zero();
        FieldElement u = field_.zero();
        const int ds = std::max(deg_s(), other.deg_s());
        const int dt = std::max(deg_t(), other.deg_t());
        for (int i = 0; i <= ds; ++i)
            for (int j = 0; j <= dt; ++j) {
                const FieldElement x = coeff(i, j), y = other.coeff(i, j);
                if (x.is_zero() != y.is_zero()) return false;
                if (x.is_zero()) continue;
                FieldElement r = x / y;
                if (u.is_zero())
                    u = r;
                else if (u != r)
                    return false;
            }
        return true;
    }

    std::string str(const std::string& vs = "x", const std::string& vt = "y") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = deg_s(); i >= 0; --i)
            for (int j = deg_t(); j >= 0; --j) {
                const FieldElement e = coeff(i, j);
                if (e.is_zero()) continue;
                if (!s.empty()) s += "+";
                std::string term;
                if (i == 0 && j == 0) {
                    term = e.str();
                } else {
                    if (!e.is_one())
                        term += (e.term_count() > 1 ? "(" + e.str() + ")" : e.str()) + "*";
                    if (i >= 1) {
                        term += vs;
                        if (i >= 2) term += "^" + std::to_string(i);
                        if (j >= 1) term += "*";
                    }
                    if (j >= 1) {
                        term += vt;
                        if (j >= 2) term += "^" + std::to_string(j);
                    }
                }
                s += term;
            }
        return s;
    }

private:
    FiniteField field_;
    std::vector<std::vector<FieldElement>> c_;

    void trim() {
        for (auto& row : c_)
            while (!row.empty() && row.back().is_zero()) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
        // zero rows in the middle are kept; width stays ragged internally
    }
};

/// H(S,T) = a1(T) b2(S) - a2(T) b1(S) for canonical a = a1/a2, b = b1/b2.
/// S is the lower-level variable, T the new one.
inline BivariatePolynomial defining_polynomial(const RationalFunction& a,
                                               const RationalFunction& b) {
    if (a.field() != b.field()) throw field_mismatch_error();
    BivariatePolynomial a1 = BivariatePolynomial::from_t_poly(a.num(), 0);
    BivariatePolynomial a2 = BivariatePolynomial::from_t_poly(a.den(), 0);
    BivariatePolynomial b1 = BivariatePolynomial::from_s_poly(b.num(), 0);
    BivariatePolynomial b2 = BivariatePolynomial::from_s_poly(b.den(), 0);
    return a1 * b2 - a2 * b1;
}

namespace detail {

// Determinant of a square matrix of univariate polynomials by fraction-free
// Bareiss elimination; exact divisions stay in F_q[x].
inline Polynomial poly_matrix_det(std::vector<std::vector<Polynomial>> m,
                                  const FiniteField& f) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(f.one());
    Polynomial prev = Polynomial::constant(f.one());
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Polynomial(f);  // singular
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto [q, r] = divmod(t, prev);
                if (!r.is_zero()) throw error("inexact division in Bareiss elimination");
                m[i][j] = std::move(q);
            }
            m[i][k] = Polynomial(f);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace detail

/// Res_T(F, G) for bivariate F, G viewed as polynomials in T with
/// coefficients in F_q[S]; the result is a polynomial in S.
inline Polynomial resultant_in_t(const BivariatePolynomial& F,
                                 const BivariatePolynomial& G) {
    const FiniteField& f = F.field();
    const int m = F.deg_t(), n = G.deg_t();
    if (m < 0 || n < 0) return Polynomial(f);  // resultant with zero
    if (n == 0) return G.coeff_of_t(0).pow(m);
    if (m == 0) return F.coeff_of_t(0).pow(n);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Polynomial>> syl(size, std::vector<Polynomial>(size, Polynomial(f)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                F.coeff_of_t(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j)
            syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] =
                G.coeff_of_t(n - j);
    return detail::poly_matrix_det(std::move(syl), f);
}

struct SeparabilityCertificate {
    bool separable;
    enum class Reason { NonzeroResultant, ZeroResultant, DegenerateDerivative } reason;
    Polynomial resultant;  // Res_T(N, dN/dT) in the lower-level variable

    std::string str() const {
        switch (reason) {
            case Reason::NonzeroResultant:
                return "separable (nonzero resultant " + resultant.str("x") + ")";
            case Reason::ZeroResultant:
                return "inseparable (resultant vanishes identically)";
            default:
                return "inseparable (derivative in T vanishes identically)";
        }
    }
};

/// Separability of the step polynomial defined by a bivariate equation N(S,T).
inline SeparabilityCertificate separability_from_equation(const BivariatePolynomial& N) {
    const FiniteField& f = N.field();
    BivariatePolynomial dN = N.derivative_t();
    if (dN.is_zero())
        return {false, SeparabilityCertificate::Reason::DegenerateDerivative, Polynomial(f)};
    Polynomial res = resultant_in_t(N, dN);
    if (res.is_zero())
        return {false, SeparabilityCertificate::Reason::ZeroResultant, std::move(res)};
    return {true, SeparabilityCertificate::Reason::NonzeroResultant, std::move(res)};
}

/// Separability of a(T) - b(x) via Res_T(N, dN/dT) where
/// N(T,x) = a1(T) b2(x) - a2(T) b1(x).
inline SeparabilityCertificate separability_certificate(const RationalFunction& a,
                                                        const RationalFunction& b) {
    if (a.degree() < 1) throw spec_error("separability requires deg a >= 1");
    return separability_from_equation(defining_polynomial(a, b));
}

}  // namespace towerlab
