#pragma once

/// Verification and discovery of subtower linking identities: given a step
/// a(x_{i+1}) = b(x_i), a triple (f, a~, b~) with
///
///     a~ o f o b = b~ o f o a
///
/// makes z_i = f(a(x_i)) satisfy a~(z_{i+1}) = b~(z_i), so (a~, b~) defines a
/// subsequence. Properness follows from the degree tests deg a >= deg a~ or
/// gcd(deg a, deg a~) = 1, granted the unverified hypothesis
/// [E_{i+1}:E_i] = deg a~.

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace towerlab {

enum class Properness { ProperByDegree, ProperByCoprime, NotGuaranteed };

struct PropernessVerdict {
    Properness tag = Properness::NotGuaranteed;
    std::vector<std::string> assumptions;
    std::string reason;

    std::string str() const {
        switch (tag) {
            case Properness::ProperByDegree: return "proper-by-degree";
            case Properness::ProperByCoprime: return "proper-by-coprime-degrees";
            default: return "not-guaranteed";
        }
    }
};

/// Degree-only properness test; both degrees must be >= 2 for the conclusion
/// to apply. The subextension-degree hypothesis cannot be decided here and is
/// recorded as an explicit assumption instead.
inline PropernessVerdict check_properness(const RationalFunction& a,
                                          const RationalFunction& a_tilde) {
    PropernessVerdict v;
    v.assumptions.push_back("[E_{i+1}:E_i] = deg(a~) assumed, not verified");
    const int d = a.degree(), dt = a_tilde.degree();
    if (d < 2 || dt < 2) {
        v.reason = "requires deg a >= 2 and deg a~ >= 2";
        return v;
    }
    if (d >= dt) {
        v.tag = Properness::ProperByDegree;
    } else if (std::gcd(d, dt) == 1) {
        v.tag = Properness::ProperByCoprime;
    } else {
        v.reason = "deg a < deg a~ and degrees share a factor";
    }
    return v;
}

struct SubtowerWitness {
    RationalFunction f, a_tilde, b_tilde;
    bool equation_holds;
    RationalFunction lhs;  // a~ o f o b
    RationalFunction rhs;  // b~ o f o a
    PropernessVerdict properness;

    /// The common composite; only meaningful when the equation holds.
    const RationalFunction& composite() const { return lhs; }
};

/// Recomputes both composites symbolically and compares canonical forms.
inline SubtowerWitness verify_equation(const RationalFunction& a, const RationalFunction& b,
                                       const RationalFunction& f,
                                       const RationalFunction& a_tilde,
                                       const RationalFunction& b_tilde) {
    RationalFunction lhs = rat_compose(a_tilde, rat_compose(f, b));
    RationalFunction rhs = rat_compose(b_tilde, rat_compose(f, a));
    const bool holds = lhs == rhs;
    return SubtowerWitness{f, a_tilde, b_tilde, holds, std::move(lhs), std::move(rhs),
                           check_properness(a, a_tilde)};
}

/// z_i = f(a(x_i)): the subtower variable expressed in the supertower one.
inline RationalFunction derive_z_relation(const RationalFunction& a,
                                          const RationalFunction& f) {
    return rat_compose(f, a);
}

struct SearchConfig {
    int max_deg_f = 1;
    long long ceiling = 100'000'000;  // reject larger enumerations up front
    int jobs = 1;
};

/// Number of (numerator, denominator) coefficient vectors enumerated for
/// degrees 1..max_deg (before coprimality skips). Saturates instead of
/// overflowing.
inline long long search_space_size(const FiniteField& field, int max_deg) {
    constexpr long long kSaturated = 4'000'000'000'000'000'000LL;
    const unsigned __int128 q = static_cast<unsigned __int128>(field.cardinality());
    unsigned __int128 total = 0;
    for (int d = 1; d <= max_deg; ++d) {
        for (int dden = 0; dden <= d; ++dden)
            for (int dnum = 0; dnum <= d; ++dnum) {
                if (std::max(dnum, dden) != d) continue;
                unsigned __int128 n = q - 1;  // leading numerator coefficient
                for (int i = 0; i < dden + dnum; ++i) {
                    n *= q;
                    if (n > static_cast<unsigned __int128>(kSaturated)) return kSaturated;
                }
                total += n;
                if (total > static_cast<unsigned __int128>(kSaturated)) return kSaturated;
            }
    }
    return static_cast<long long>(total);
}

namespace detail {

// Candidate f's of degree exactly d, in enumeration order: denominator degree
// ascending (monic denominators), then denominator coefficients, then
// numerator coefficients, all in field counting order.
inline std::vector<RationalFunction> candidates_of_degree(const FiniteField& f, int d) {
    const long long q = f.cardinality();
    std::vector<RationalFunction> out;
    for (int dden = 0; dden <= d; ++dden) {
        long long dens = 1;
        for (int i = 0; i < dden; ++i) dens *= q;
        for (long long kd = 0; kd < dens; ++kd) {
            std::vector<FieldElement> den;
            long long v = kd;
            for (int i = 0; i < dden; ++i) {
                den.push_back(f.element_at(v % q));
                v /= q;
            }
            den.push_back(f.one());
            Polynomial denp(f, den);
            for (int dnum = 0; dnum <= d; ++dnum) {
                if (std::max(dnum, dden) != d) continue;
                long long nums = 1;
                for (int i = 0; i < dnum; ++i) nums *= q;
                for (long long kn = 0; kn < nums * (q - 1); ++kn) {
                    std::vector<FieldElement> num;
                    long long w = kn;
                    for (int i = 0; i < dnum; ++i) {
                        num.push_back(f.element_at(w % q));
                        w /= q;
                    }
                    num.push_back(f.element_at(1 + w));  // leading coeff, nonzero
                    Polynomial nump(f, num);
                    if (poly_gcd(nump, denp).degree() != 0) continue;  // not canonical
                    out.push_back(RationalFunction::normalized(nump, denp));
                }
            }
        }
    }
    return out;
}

}  // namespace detail

/// Exhaustive search for linking functions: enumerates every canonical
/// nonconstant f with deg f <= cfg.max_deg_f, verifies the functional
/// equation for each, and returns the witnesses that hold, in enumeration
/// order. Partitions are verified concurrently when cfg.jobs > 1; the result
/// order does not depend on the job count.
inline std::vector<SubtowerWitness> search_f(const RationalFunction& a,
                                             const RationalFunction& b,
                                             const RationalFunction& a_tilde,
                                             const RationalFunction& b_tilde,
                                             const SearchConfig& cfg) {
    const FiniteField& field = a.field();
    const long long size = search_space_size(field, cfg.max_deg_f);
    if (size > cfg.ceiling) throw search_space_error(size, cfg.ceiling);

    std::vector<SubtowerWitness> found;
    for (int d = 1; d <= cfg.max_deg_f; ++d) {
        std::vector<RationalFunction> cands = detail::candidates_of_degree(field, d);
        const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(cands.size())));
        std::vector<std::vector<std::pair<std::size_t, SubtowerWitness>>> partial(
            static_cast<std::size_t>(jobs));
        auto work = [&](int j) {
            for (std::size_t i = static_cast<std::size_t>(j); i < cands.size();
                 i += static_cast<std::size_t>(jobs)) {
                SubtowerWitness w = verify_equation(a, b, cands[i], a_tilde, b_tilde);
                if (w.equation_holds) partial[static_cast<std::size_t>(j)].push_back({i, std::move(w)});
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
            for (auto& t : threads) t.join();
        }
        std::vector<std::pair<std::size_t, SubtowerWitness>> merged;
        for (auto& part : partial)
            for (auto& e : part) merged.push_back(std::move(e));
        std::sort(merged.begin(), merged.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& e : merged) found.push_back(std::move(e.second));
    }
    return found;
}

}  // namespace towerlab
