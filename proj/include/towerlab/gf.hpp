#pragma once

/// Exact arithmetic in F_p and F_{p^n} = F_p[t]/(m(t)) for a user-supplied
/// irreducible monic modulus m. Values are immutable after construction and
/// safe to share between threads.
///
/// Intended for small fields (q = p^n up to about 10^4). Construction checks
/// irreducibility by exhaustive trial division, an O(p^(n/2)) scan.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace towerlab {

class FieldElement;

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Arithmetic on coefficient vectors over F_p (index = degree, trimmed).
inline void fp_trim(std::vector<long long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<long long> fp_mul(const std::vector<long long>& a,
                                     const std::vector<long long>& b, long long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    fp_trim(r);
    return r;
}

// Remainder of a modulo monic b.
inline std::vector<long long> fp_mod(std::vector<long long> a,
                                     const std::vector<long long>& b, long long p) {
    fp_trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        long long c = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        }
        fp_trim(a);
    }
    return a;
}

inline long long fp_inv_scalar(long long a, long long p) {
    // extended Euclid on integers
    long long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long long q = r / nr;
        long long t2 = t - q * nt, r2 = r - q * nr;
        t = nt;
        nt = t2;
        r = nr;
        nr = r2;
    }
    return ((t % p) + p) % p;
}

// Inverse of a modulo monic m in F_p[t]; a nonzero mod m.
inline std::vector<long long> fp_inv_mod(std::vector<long long> a,
                                         std::vector<long long> m, long long p) {
    // extended Euclid in F_p[t]
    std::vector<long long> r0 = std::move(m), r1 = std::move(a);
    std::vector<long long> s0 = {}, s1 = {1};
    fp_trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<long long> q;
        std::vector<long long> rem = r0;
        fp_trim(rem);
        long long lead_inv = fp_inv_scalar(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long long c = (rem.back() * lead_inv) % p;
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = ((rem[shift + i] - c * r1[i]) % p + p) % p;
            fp_trim(rem);
        }
        std::vector<long long> s2 = s0;  // s2 = s0 - q*s1
        std::vector<long long> qs = fp_mul(q, s1, p);
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (std::size_t i = 0; i < qs.size(); ++i)
            s2[i] = ((s2[i] - qs[i]) % p + p) % p;
        fp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, a unit scalar since the modulus is irreducible
    long long u = fp_inv_scalar(r0.back(), p);
    for (auto& c : s0) c = (c * u) % p;
    return s0;
}

}  // namespace detail

/// Descriptor of F_{p^n}, shared by all its elements. Copies are cheap handles;
/// two handles compare equal when p and the modulus agree.
class FiniteField {
public:
    FiniteField(long long p, std::vector<long long> modulus, std::string symbol = "g") {
        if (!detail::is_prime(p)) throw not_prime_error(p);
        for (auto& c : modulus) c = ((c % p) + p) % p;
        detail::fp_trim(modulus);
        if (modulus.size() < 2) throw spec_error("modulus must have degree >= 1");
        if (modulus.back() != 1) throw spec_error("modulus must be monic");
        check_irreducible(p, modulus);
        long long q = 1;
        for (std::size_t i = 0; i + 1 < modulus.size(); ++i) q *= p;
        rep_ = std::make_shared<Rep>(Rep{p, static_cast<int>(modulus.size()) - 1, q,
                                         std::move(modulus), std::move(symbol)});
    }

    long long characteristic() const { return rep_->p; }
    int degree() const { return rep_->n; }
    long long cardinality() const { return rep_->q; }
    const std::vector<long long>& modulus() const { return rep_->modulus; }
    const std::string& symbol() const { return rep_->symbol; }

    bool operator==(const FiniteField& o) const {
        return rep_ == o.rep_ ||
               (rep_->p == o.rep_->p && rep_->modulus == o.rep_->modulus);
    }
    bool operator!=(const FiniteField& o) const { return !(*this == o); }

    FieldElement zero() const;
    FieldElement one() const;
    /// The residue class of t (the root of the modulus).
    FieldElement generator() const;
    FieldElement element(std::vector<long long> coeffs) const;
    FieldElement from_integer(long long v) const;
    /// Element number k in counting order: base-p digits of k, constant term first.
    FieldElement element_at(long long k) const;
    /// All q elements; starts 0, 1, then by increasing coefficient vectors
    /// read most-significant first.
    std::vector<FieldElement> enumerate() const;

private:
    struct Rep {
        long long p;
        int n;
        long long q;
        std::vector<long long> modulus;
        std::string symbol;
    };
    std::shared_ptr<const Rep> rep_;

    static void check_irreducible(long long p, const std::vector<long long>& m) {
        const int n = static_cast<int>(m.size()) - 1;
        // trial division by monic polynomials of degree 1..n/2; a reducible
        // modulus has a monic factor in that range
        for (int d = 1; 2 * d <= n; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            std::vector<long long> cand(d + 1, 0);
            cand[d] = 1;
            for (long long k = 0; k < count; ++k) {
                long long v = k;
                for (int i = 0; i < d; ++i) {
                    cand[i] = v % p;
                    v /= p;
                }
                if (detail::fp_mod(m, cand, p).empty())
                    throw reducible_modulus_error(poly_str(cand));
            }
        }
    }

    static std::string poly_str(const std::vector<long long>& c) {
        std::string s;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
            if (i >= 1) {
                if (c[i] != 1) s += "*";
                s += "t";
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
};

/// An element of F_{p^n}: a residue mod the field modulus, coefficients in [0,p).
class FieldElement {
public:
    FieldElement(FiniteField field, std::vector<long long> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        reduce();
    }

    const FiniteField& field() const { return field_; }
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 0; });
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](long long v) { return v == 0; });
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    /// Counting order: most significant coefficient first.
    friend bool operator<(const FieldElement& a, const FieldElement& b) {
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(),
                                            b.c_.rbegin(), b.c_.rend());
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        std::vector<long long> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = (a.c_[i] + b.c_[i]) % a.p();
        return FieldElement(a.field_, std::move(r));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        std::vector<long long> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = ((a.c_[i] - b.c_[i]) % a.p() + a.p()) % a.p();
        return FieldElement(a.field_, std::move(r));
    }
    FieldElement operator-() const {
        std::vector<long long> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p() - c_[i]) % p();
        return FieldElement(field_, std::move(r));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check(b);
        auto prod = detail::fp_mul(a.c_, b.c_, a.p());
        prod = detail::fp_mod(std::move(prod), a.field_.modulus(), a.p());
        return FieldElement(a.field_, std::move(prod));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inv();
    }

    FieldElement inv() const {
        if (is_zero()) throw division_by_zero_error();
        auto r = detail::fp_inv_mod(trimmed(), field_.modulus(), p());
        return FieldElement(field_, std::move(r));
    }

    FieldElement pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        FieldElement base = *this;
        FieldElement acc = field_.one();
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Printed as a polynomial in the generator symbol, e.g. "g^2+g+1".
    std::string str() const {
        std::string s;
        const std::string& g = field_.symbol();
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
            if (i >= 1) {
                if (c_[i] != 1) s += "*";
                s += g;
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    /// Number of nonzero coefficients (1 means a single monomial in g).
    int term_count() const {
        int k = 0;
        for (auto v : c_) k += (v != 0);
        return k;
    }

private:
    FiniteField field_;
    std::vector<long long> c_;

    long long p() const { return field_.characteristic(); }
    void check(const FieldElement& o) const {
        if (field_ != o.field_) throw field_mismatch_error();
    }
    void reduce() {
        const long long pp = field_.characteristic();
        for (auto& v : c_) v = ((v % pp) + pp) % pp;
        if (static_cast<int>(c_.size()) > field_.degree())
            c_ = detail::fp_mod(std::move(c_), field_.modulus(), pp);
        c_.resize(field_.degree(), 0);
    }
    std::vector<long long> trimmed() const {
        auto t = c_;
        detail::fp_trim(t);
        return t;
    }
};

inline FieldElement FiniteField::zero() const { return FieldElement(*this, {}); }
inline FieldElement FiniteField::one() const { return FieldElement(*this, {1}); }
inline FieldElement FiniteField::generator() const { return FieldElement(*this, {0, 1}); }
inline FieldElement FiniteField::element(std::vector<long long> coeffs) const {
    return FieldElement(*this, std::move(coeffs));
}
inline FieldElement FiniteField::from_integer(long long v) const {
    long long p = characteristic();
    return FieldElement(*this, {((v % p) + p) % p});
}
inline FieldElement FiniteField::element_at(long long k) const {
    std::vector<long long> c(degree(), 0);
    for (int i = 0; i < degree() && k > 0; ++i) {
        c[i] = k % characteristic();
        k /= characteristic();
    }
    return FieldElement(*this, std::move(c));
}
inline std::vector<FieldElement> FiniteField::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (long long k = 0; k < cardinality(); ++k) out.push_back(element_at(k));
    return out;
}

inline FiniteField make_field(long long p, std::vector<long long> modulus,
                              std::string symbol = "g") {
    return FiniteField(p, std::move(modulus), std::move(symbol));
}

}  // namespace towerlab
