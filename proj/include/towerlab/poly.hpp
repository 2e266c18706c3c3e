#pragma once

/// Univariate polynomials over a FiniteField: Euclidean arithmetic, gcd,
/// formal derivative, and complete factorization by exhaustive root
/// stripping plus trial division (adequate for degree <= 6 over small q).

#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace towerlab {

class Polynomial {
public:
    explicit Polynomial(FiniteField field) : field_(std::move(field)) {}
    Polynomial(FiniteField field, std::vector<FieldElement> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Polynomial from_ints(const FiniteField& f, const std::vector<long long>& coeffs) {
        std::vector<FieldElement> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(f.from_integer(v));
        return Polynomial(f, std::move(c));
    }
    static Polynomial constant(const FieldElement& e) {
        return Polynomial(e.field(), {e});
    }
    static Polynomial monomial(const FieldElement& coeff, int deg) {
        std::vector<FieldElement> c(static_cast<std::size_t>(deg) + 1, coeff.field().zero());
        c.back() = coeff;
        return Polynomial(coeff.field(), std::move(c));
    }
    static Polynomial x(const FiniteField& f) { return monomial(f.one(), 1); }

    const FiniteField& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    FieldElement coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
        return c_[static_cast<std::size_t>(i)];
    }
    const FieldElement& leading() const { return c_.back(); }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        std::vector<FieldElement> r;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(int(i)) + b.coeff(int(i)));
        return Polynomial(a.field_, std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        std::vector<FieldElement> r;
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(int(i)) - b.coeff(int(i)));
        return Polynomial(a.field_, std::move(r));
    }
    Polynomial operator-() const {
        std::vector<FieldElement> r;
        r.reserve(c_.size());
        for (const auto& e : c_) r.push_back(-e);
        return Polynomial(field_, std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(a.field_, std::move(r));
    }
    friend Polynomial operator*(const FieldElement& s, const Polynomial& a) {
        std::vector<FieldElement> r;
        r.reserve(a.c_.size());
        for (const auto& e : a.c_) r.push_back(s * e);
        return Polynomial(a.field_, std::move(r));
    }

    /// Division with remainder; divisor nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        if (b.is_zero()) throw division_by_zero_error();
        Polynomial q(a.field_), r = a;
        if (r.degree() >= b.degree())
            q.c_.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, a.field_.zero());
        const FieldElement lead_inv = b.leading().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            FieldElement c = r.leading() * lead_inv;
            int shift = r.degree() - b.degree();
            q.c_[static_cast<std::size_t>(shift)] = c;
            for (int i = 0; i <= b.degree(); ++i) {
                auto& rc = r.c_[static_cast<std::size_t>(shift + i)];
                rc = rc - c * b.c_[static_cast<std::size_t>(i)];
            }
            r.trim();
        }
        q.trim();
        return {std::move(q), std::move(r)};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).second;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return leading().inv() * *this;
    }

    Polynomial pow(int e) const {
        Polynomial acc = constant(field_.one());
        Polynomial base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    /// Formal derivative, with characteristic-p coefficient kill.
    Polynomial derivative() const {
        std::vector<FieldElement> r;
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(field_.from_integer(static_cast<long long>(i)) * c_[i]);
        return Polynomial(field_, std::move(r));
    }

    FieldElement eval(const FieldElement& x) const {
        FieldElement acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Multiplicity of (X - beta) dividing this polynomial.
    int root_multiplicity(const FieldElement& beta) const {
        if (is_zero()) return 0;
        Polynomial lin(field_, {-beta, field_.one()});
        Polynomial cur = *this;
        int mult = 0;
        while (cur.degree() >= 1 && cur.eval(beta).is_zero()) {
            cur = cur / lin;
            ++mult;
        }
        return mult;
    }

    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const FieldElement& e = c_[static_cast<std::size_t>(i)];
            if (e.is_zero()) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += e.str();
                continue;
            }
            if (!e.is_one()) {
                if (e.term_count() > 1)
                    s += "(" + e.str() + ")*";
                else
                    s += e.str() + "*";
            }
            s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

    /// Number of printed terms; used by callers to decide on parentheses.
    int term_count() const {
        int k = 0;
        for (const auto& e : c_) k += !e.is_zero();
        return k;
    }

private:
    FiniteField field_;
    std::vector<FieldElement> c_;

    void check(const Polynomial& o) const {
        if (field_ != o.field_) throw field_mismatch_error();
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Monic gcd via the Euclidean algorithm; errors when both inputs are zero.
inline Polynomial poly_gcd(Polynomial u, Polynomial v) {
    if (u.is_zero() && v.is_zero()) throw both_zero_error();
    while (!v.is_zero()) {
        Polynomial r = u % v;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

inline Polynomial poly_derivative(const Polynomial& u) { return u.derivative(); }

struct Factorization {
    FieldElement unit;                             // leading coefficient
    std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible, multiplicity

    bool squarefree() const {
        for (const auto& [f, m] : factors)
            if (m > 1) return false;
        return true;
    }
    Polynomial expand() const {
        Polynomial acc = Polynomial::constant(unit);
        for (const auto& [f, m] : factors) acc = acc * f.pow(m);
        return acc;
    }
    std::string str(const std::string& var = "T") const {
        std::string s;
        for (const auto& [f, m] : factors) {
            if (!s.empty()) s += "*";
            s += "(" + f.str(var) + ")";
            if (m > 1) s += "^" + std::to_string(m);
        }
        if (s.empty()) return unit.str();
        if (!unit.is_one()) s = (unit.term_count() > 1 ? "(" + unit.str() + ")*" : unit.str() + "*") + s;
        return s;
    }
};

namespace detail {

// All monic polynomials of degree d in counting order of coefficient vectors.
inline std::vector<Polynomial> monic_polys_of_degree(const FiniteField& f, int d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= f.cardinality();
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long k = 0; k < count; ++k) {
        std::vector<FieldElement> c;
        c.reserve(static_cast<std::size_t>(d) + 1);
        long long v = k;
        for (int i = 0; i < d; ++i) {
            c.push_back(f.element_at(v % f.cardinality()));
            v /= f.cardinality();
        }
        c.push_back(f.one());
        out.emplace_back(f, std::move(c));
    }
    return out;
}

}  // namespace detail

/// Complete factorization over F_q: strip roots exhaustively, then certify or
/// break the root-free part by trial division against monic polynomials of
/// ascending degree up to half the remaining degree. O(q^(d/2)) in the worst
/// case; meant for degree <= 6 over small fields.
inline Factorization poly_factor(const Polynomial& u) {
    if (u.is_zero()) throw spec_error("cannot factor the zero polynomial");
    const FiniteField& f = u.field();
    Factorization out{u.leading(), {}};
    Polynomial rest = u.monic();

    // linear factors
    for (const auto& beta : f.enumerate()) {
        if (rest.degree() < 1) break;
        int mult = 0;
        Polynomial lin(f, {-beta, f.one()});
        while (rest.degree() >= 1 && rest.eval(beta).is_zero()) {
            rest = rest / lin;
            ++mult;
        }
        if (mult > 0) out.factors.push_back({lin, mult});
    }

    // root-free part: degrees 2 and 3 are irreducible once root-free
    for (int d = 2; 2 * d <= rest.degree();) {
        if (rest.degree() <= 3) break;
        bool found = false;
        for (const auto& cand : detail::monic_polys_of_degree(f, d)) {
            auto [q, r] = divmod(rest, cand);
            if (r.is_zero()) {
                int mult = 1;
                rest = q;
                while (true) {
                    auto [q2, r2] = divmod(rest, cand);
                    if (!r2.is_zero()) break;
                    rest = q2;
                    ++mult;
                }
                out.factors.push_back({cand, mult});
                found = true;
                break;  // restart scan at the same degree on the quotient
            }
        }
        if (!found) ++d;
    }
    if (rest.degree() >= 1) out.factors.push_back({rest, 1});

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace towerlab
