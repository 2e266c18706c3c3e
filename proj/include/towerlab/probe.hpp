#pragma once

/// Finite-level numerical exploration of a recursive step equation.
///
/// A place of F_i lying over a rational center x_i = beta is expanded by
/// reducing the monic step polynomial modulo the center and factoring
/// (Kummer's theorem applies when the reduction is squarefree). When the
/// naive reduction is unusable (coefficient poles, repeated factors), a
/// bounded substitution search rewrites the equation in u = (y - c) * pi^k
/// for small k and shifts c, with pi the local uniformizer at beta, and
/// retries. Each rewritten form is also tested against the Eisenstein
/// criterion in both orientations, which certifies a totally ramified place
/// where no squarefree reduction can exist. Nodes that survive every attempt
/// stay unresolved and turn census counts into brackets.
///
/// Exact place arithmetic (Montes/Ore) is out of scope; genus outputs are
/// lower bounds only.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "tower.hpp"

namespace towerlab {

enum class NodeKind {
    Split,            // every root simple and rational; full count of children
    Inert,            // squarefree reduction, no rational root
    Mixed,            // squarefree reduction, rational and higher-degree parts
    TotallyRamified,  // Eisenstein certificate, e = step degree, one place
    RamifiedSuspect,  // repeated factors everywhere the search looked
    PoleCenter        // coefficient poles, unresolved by the search
};

inline std::string node_kind_str(NodeKind k) {
    switch (k) {
        case NodeKind::Split: return "split";
        case NodeKind::Inert: return "inert";
        case NodeKind::Mixed: return "mixed";
        case NodeKind::TotallyRamified: return "totally-ramified";
        case NodeKind::RamifiedSuspect: return "ramified-suspect";
        default: return "pole-center";
    }
}

/// u = (y - shift) * pi^k; the identity is k = 0, shift = 0.
struct Substitution {
    int k = 0;
    FieldElement shift;
};

struct RamificationDatum {
    int e = 1;
    bool wild = false;  // p divides e
    long long different_lb() const { return wild ? e : e - 1; }
};

struct PlaceNode {
    int level = 0;
    ProjectiveValue center;
    NodeKind kind;
    std::vector<ProjectiveValue> children;          // centers of rational places above
    std::vector<int> inert_degrees;                 // degrees of non-rational factors
    std::optional<Substitution> substitution;       // set when not the identity
    std::optional<RamificationDatum> ramification;  // TotallyRamified only
    Polynomial reduction;  // classified monic reduction, in the working variable

    bool resolved() const {
        return kind != NodeKind::RamifiedSuspect && kind != NodeKind::PoleCenter;
    }
};

namespace detail {

// Monic step polynomial in T over F_q(S), from the defining equation.
inline std::vector<RationalFunction> monic_step(const TowerDef& t) {
    const BivariatePolynomial& h = t.equation();
    const int m = h.deg_t();
    Polynomial lead = h.coeff_of_t(m);
    std::vector<RationalFunction> psi;
    psi.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j)
        psi.push_back(RationalFunction::normalized(h.coeff_of_t(j), lead));
    return psi;
}

// pi^e as a rational function of S: pi = S - beta, or 1/S at infinity.
inline RationalFunction uniformizer_power(const FiniteField& f, const ProjectiveValue& beta,
                                          int e) {
    RationalFunction pi = beta.is_infinity()
                              ? RationalFunction::normalized(
                                    Polynomial::constant(f.one()), Polynomial::x(f))
                              : RationalFunction::from_polynomial(
                                    Polynomial(f, {-beta.value(), f.one()}));
    return pi.pow(e);
}

// Coefficients in u of psi(c + u * w).
inline std::vector<RationalFunction> substitute(const std::vector<RationalFunction>& psi,
                                                const FieldElement& c,
                                                const RationalFunction& w) {
    const FiniteField& f = c.field();
    const int m = static_cast<int>(psi.size()) - 1;
    std::vector<std::vector<long long>> binom(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        auto& row = binom[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<std::size_t>(j)] =
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    std::vector<FieldElement> cpow = {f.one()};
    for (int i = 1; i <= m; ++i) cpow.push_back(cpow.back() * c);
    std::vector<RationalFunction> wpow = {RationalFunction::constant(f.one())};
    for (int i = 1; i <= m; ++i) wpow.push_back(wpow.back() * w);

    std::vector<RationalFunction> out(static_cast<std::size_t>(m) + 1,
                                      RationalFunction::constant(f.zero()));
    for (int i = 0; i <= m; ++i) {
        if (psi[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j <= i; ++j) {
            FieldElement coef =
                f.from_integer(
                    binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                cpow[static_cast<std::size_t>(i - j)];
            if (coef.is_zero()) continue;
            out[static_cast<std::size_t>(j)] =
                out[static_cast<std::size_t>(j)] +
                psi[static_cast<std::size_t>(i)] * RationalFunction::constant(coef) *
                    wpow[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

constexpr long long kInfiniteValuation = 1'000'000;

struct LocalForm {
    std::vector<long long> val;     // coefficient valuations, shifted so min = 0
    std::vector<FieldElement> red;  // residues (zero where val > 0)
    bool had_pole = false;          // some coefficient valuation was negative
};

inline LocalForm localize(const std::vector<RationalFunction>& coeffs,
                          const ProjectiveValue& beta) {
    LocalForm lf;
    long long mn = kInfiniteValuation;
    for (const auto& r : coeffs) {
        long long v = r.is_zero() ? kInfiniteValuation : r.valuation_at(beta);
        lf.val.push_back(v);
        mn = std::min(mn, v);
    }
    lf.had_pole = mn < 0;
    const FiniteField& f = beta.field();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (lf.val[i] != kInfiniteValuation) lf.val[i] -= mn;
        lf.red.push_back(lf.val[i] == 0 ? coeffs[i].residue_at(beta) : f.zero());
    }
    return lf;
}

// Center of y = c + u * pi^(-k) at a place where v(u) = vu in the place's own
// normalized valuation and v(pi) = e. Unknown (nullopt) when the valuation
// ties at zero without a computable residue.
inline std::optional<ProjectiveValue> child_center(const FieldElement& c, int k, long long vu,
                                                   long long e, const FieldElement& u_residue) {
    const FiniteField& f = c.field();
    long long v = vu - static_cast<long long>(k) * e;
    if (v > 0) return ProjectiveValue::finite(c);
    if (v < 0) return ProjectiveValue::infinity(f);
    if (vu == 0 && k == 0) return ProjectiveValue::finite(c + u_residue);
    return std::nullopt;
}

}  // namespace detail

/// Expands one place with rational center beta by one level. Statuses are
/// verdicts; nothing here throws on mathematical outcomes. The substitution
/// order is k = 0, -1, 1, -2, 2, -3, 3 and shifts in field counting order;
/// the first success wins, so results are reproducible.
inline PlaceNode specialize_step(const TowerDef& t, const ProjectiveValue& beta) {
    const FiniteField& f = t.field();
    const int m = t.step_degree();
    const std::vector<RationalFunction> psi = detail::monic_step(t);

    PlaceNode node{0,  beta, NodeKind::RamifiedSuspect, {}, {}, std::nullopt,
                   std::nullopt, Polynomial(f)};
    bool identity_had_pole = false;

    static constexpr int kOrder[] = {0, -1, 1, -2, 2, -3, 3};
    for (int k : kOrder) {
        for (long long ci = 0; ci < f.cardinality(); ++ci) {
            FieldElement c = f.element_at(ci);
            const bool identity = (k == 0 && c.is_zero());
            std::vector<RationalFunction> coeffs;
            if (identity) {
                coeffs = psi;
            } else {
                RationalFunction w = detail::uniformizer_power(f, beta, -k);
                coeffs = detail::substitute(psi, c, w);
            }
            detail::LocalForm lf = detail::localize(coeffs, beta);
            if (identity) identity_had_pole = lf.had_pole;

            Polynomial red(f, lf.red);
            if (red.is_zero()) continue;
            const int dbar = red.degree();
            const int drop = m - dbar;

            // Kummer: squarefree reduction on P^1 (simple infinite root allowed)
            if (drop <= 1) {
                Factorization fac =
                    dbar >= 1 ? poly_factor(red) : Factorization{red.coeff(0), {}};
                if (fac.squarefree()) {
                    std::vector<ProjectiveValue> children;
                    std::vector<int> inert;
                    bool ok = true;
                    for (const auto& [factor, mult] : fac.factors) {
                        (void)mult;
                        if (factor.degree() == 1) {
                            FieldElement root = -factor.coeff(0);
                            long long vu = root.is_zero() ? lf.val[0] : 0;
                            auto cc = detail::child_center(c, k, vu, 1, root);
                            if (!cc) {
                                ok = false;
                                break;
                            }
                            children.push_back(*cc);
                        } else {
                            inert.push_back(factor.degree());
                        }
                    }
                    if (ok && drop == 1) {
                        long long vlead = lf.val[static_cast<std::size_t>(m)];
                        auto cc = detail::child_center(c, k, -vlead, 1, f.zero());
                        if (cc)
                            children.push_back(*cc);
                        else
                            ok = false;
                    }
                    if (ok) {
                        node.kind = children.empty()
                                        ? NodeKind::Inert
                                        : (inert.empty() ? NodeKind::Split : NodeKind::Mixed);
                        node.children = std::move(children);
                        node.inert_degrees = std::move(inert);
                        node.reduction = red;
                        if (!identity) node.substitution = Substitution{k, c};
                        return node;
                    }
                }
            }

            // Eisenstein certificate: one totally ramified place above,
            // standard orientation gives v(u) = +1, reversed v(u) = -1.
            const std::size_t top = lf.val.size() - 1;
            bool std_eis = lf.val[top] == 0 && lf.val[0] == 1;
            for (std::size_t i = 1; std_eis && i < top; ++i) std_eis = lf.val[i] >= 1;
            bool rev_eis = lf.val[0] == 0 && lf.val[top] == 1;
            for (std::size_t i = 1; rev_eis && i < top; ++i) rev_eis = lf.val[i] >= 1;
            if (m >= 2 && (std_eis || rev_eis)) {
                auto cc = detail::child_center(c, k, std_eis ? 1 : -1,
                                               static_cast<long long>(m), f.zero());
                if (cc) {
                    node.kind = NodeKind::TotallyRamified;
                    node.children = {*cc};
                    node.ramification = RamificationDatum{m, m % f.characteristic() == 0};
                    node.reduction = red;
                    if (!identity) node.substitution = Substitution{k, c};
                    return node;
                }
            }
        }
    }

    node.kind = identity_had_pole ? NodeKind::PoleCenter : NodeKind::RamifiedSuspect;
    return node;
}

// ---------------------------------------------------------------------------
// census

struct LevelCount {
    long long rational_lb = 0;       // certified rational places
    long long unresolved_slots = 0;  // potential places hidden by unresolved nodes
    long long inert_stops = 0;       // non-rational factors first seen at this level
    long long affine_chains = 0;     // tuples satisfying all step equations
    long long degree_product = 1;    // m^level

    long long rational_ub() const { return rational_lb + unresolved_slots; }
};

struct PlaceCensus {
    int levels = 0;
    int step_degree = 1;
    std::vector<LevelCount> per_level;  // index = level

    bool exact() const {
        for (const auto& l : per_level)
            if (l.unresolved_slots != 0) return false;
        return true;
    }
};

/// Chains (x_0,...,x_i) in F_q^(i+1) satisfying every step equation with all
/// denominators nonzero, counted by dynamic programming over the last
/// coordinate.
inline std::vector<long long> affine_chain_counts(const TowerDef& t, int levels) {
    const FiniteField& f = t.field();
    const long long q = f.cardinality();
    std::vector<FieldElement> elems = f.enumerate();
    std::vector<std::vector<bool>> ok(static_cast<std::size_t>(q),
                                      std::vector<bool>(static_cast<std::size_t>(q), false));
    for (long long i = 0; i < q; ++i) {
        Polynomial ht = t.equation().eval_s(elems[static_cast<std::size_t>(i)]);
        for (long long j = 0; j < q; ++j) {
            const FieldElement& w = elems[static_cast<std::size_t>(j)];
            bool holds = ht.eval(w).is_zero();
            if (holds && t.has_ab())
                holds = !t.b().den().eval(elems[static_cast<std::size_t>(i)]).is_zero() &&
                        !t.a().den().eval(w).is_zero();
            ok[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = holds;
        }
    }
    std::vector<long long> counts;
    std::vector<long long> cur(static_cast<std::size_t>(q), 1);
    counts.push_back(q);
    for (int lvl = 1; lvl <= levels; ++lvl) {
        std::vector<long long> nxt(static_cast<std::size_t>(q), 0);
        for (long long i = 0; i < q; ++i) {
            if (cur[static_cast<std::size_t>(i)] == 0) continue;
            for (long long j = 0; j < q; ++j)
                if (ok[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    nxt[static_cast<std::size_t>(j)] += cur[static_cast<std::size_t>(i)];
        }
        cur = std::move(nxt);
        long long total = 0;
        for (long long v : cur) total += v;
        counts.push_back(total);
    }
    return counts;
}

/// Breadth-first expansion from all q+1 rational centers of level 0. A place
/// above a rational place is itself rational only when its residue degree is
/// 1, so tracking rational lineages is complete: split and totally ramified
/// children continue, inert factors stop, unresolved expansions leave up to
/// m^j hidden places per failed node j levels further down. Expansion depends
/// only on the center and is memoized.
inline PlaceCensus census(const TowerDef& t, int levels, int level_cap = 8) {
    if (levels > level_cap) throw level_cap_error(levels, level_cap);
    const FiniteField& f = t.field();
    const int m = t.step_degree();

    PlaceCensus out;
    out.levels = levels;
    out.step_degree = m;

    std::map<ProjectiveValue, PlaceNode> memo;
    auto expand = [&](const ProjectiveValue& beta) -> const PlaceNode& {
        auto it = memo.find(beta);
        if (it == memo.end()) it = memo.emplace(beta, specialize_step(t, beta)).first;
        return it->second;
    };

    std::map<ProjectiveValue, long long> frontier;
    for (long long i = 0; i < f.cardinality(); ++i)
        frontier[ProjectiveValue::finite(f.element_at(i))] = 1;
    frontier[ProjectiveValue::infinity(f)] = 1;

    const std::vector<long long> chains = affine_chain_counts(t, levels);

    long long degree_product = 1;
    long long unresolved = 0;
    long long inert_arriving = 0;
    for (int lvl = 0; lvl <= levels; ++lvl) {
        LevelCount lc;
        lc.degree_product = degree_product;
        lc.unresolved_slots = unresolved;
        lc.inert_stops = inert_arriving;
        lc.affine_chains = chains[static_cast<std::size_t>(lvl)];
        for (const auto& [center, count] : frontier) lc.rational_lb += count;
        out.per_level.push_back(lc);
        if (lvl == levels) break;

        std::map<ProjectiveValue, long long> next;
        long long failed = 0;
        inert_arriving = 0;
        for (const auto& [center, count] : frontier) {
            const PlaceNode& node = expand(center);
            if (!node.resolved()) {
                failed += count;
                continue;
            }
            for (const auto& child : node.children) next[child] += count;
            inert_arriving += count * static_cast<long long>(node.inert_degrees.size());
        }
        unresolved = unresolved * m + failed * m;
        frontier = std::move(next);
        degree_product *= m;
    }
    return out;
}

// ---------------------------------------------------------------------------
// split testing

struct SplitResult {
    enum class Kind { SplitsCompletely, FailsAtLevel, UnresolvedAtLevel } kind;
    int level = 0;

    bool complete() const { return kind == Kind::SplitsCompletely; }
    std::string str() const {
        switch (kind) {
            case Kind::SplitsCompletely: return "splits-completely";
            case Kind::FailsAtLevel: return "fails-at-level " + std::to_string(level);
            default: return "unresolved-at-level " + std::to_string(level);
        }
    }
};

/// Expands only the lineage rooted at beta; complete splitting requires every
/// node through the requested depth to split with the full root count.
inline SplitResult split_test(const TowerDef& t, const ProjectiveValue& beta, int levels) {
    const int m = t.step_degree();
    std::map<ProjectiveValue, PlaceNode> memo;
    std::map<ProjectiveValue, long long> frontier{{beta, 1}};
    for (int lvl = 1; lvl <= levels; ++lvl) {
        std::map<ProjectiveValue, long long> next;
        for (const auto& [center, count] : frontier) {
            auto it = memo.find(center);
            if (it == memo.end()) it = memo.emplace(center, specialize_step(t, center)).first;
            const PlaceNode& node = it->second;
            if (!node.resolved()) return {SplitResult::Kind::UnresolvedAtLevel, lvl};
            if (node.kind != NodeKind::Split || static_cast<int>(node.children.size()) != m)
                return {SplitResult::Kind::FailsAtLevel, lvl};
            for (const auto& child : node.children) next[child] += count;
        }
        frontier = std::move(next);
    }
    return {SplitResult::Kind::SplitsCompletely, 0};
}

// ---------------------------------------------------------------------------
// genus arithmetic

/// ceil((m(2 g0 - 2) + sum of different lower bounds + 2) / 2), clamped at 0.
/// Different lower bounds follow Dedekind: e - 1 if tame, e if wild.
inline long long hurwitz_bound(int m, long long g0, const std::vector<RamificationDatum>& ram) {
    long long diff = 0;
    for (const auto& d : ram) diff += d.different_lb();
    long long num = static_cast<long long>(m) * (2 * g0 - 2) + diff + 2;
    return std::max<long long>(0, ceil_div2(num));
}

/// g_{i+1} >= 2 g_i - 2 + n + 1 when x_i has n poles, each totally ramified
/// with wild e = 2 (different at least 2 per pole). Clamped at 0.
inline long long genus_recurrence(long long g_i, int n_poles) {
    if (n_poles < 1) throw spec_error("pole count must be >= 1");
    return std::max<long long>(0, 2 * g_i - 2 + n_poles + 1);
}

/// Smallest g >= 0 with N <= q + 1 + 2 g sqrt(q), via 4 g^2 q >= (N - q - 1)^2.
inline long long hasse_weil_min_genus(long long N, long long q) {
    if (N <= q + 1) return 0;
    const long long rhs = (N - q - 1) * (N - q - 1);
    long long g = 1;
    while (4 * g * g * q < rhs) ++g;
    return g;
}

struct GenusLedgerEntry {
    int level;
    long long bound;
    std::string rule;
};

struct GenusLedger {
    std::vector<GenusLedgerEntry> entries;

    /// Base genus 0 at level 0, then the pole-count recurrence level by level.
    static GenusLedger from_recurrence(long long g0, const std::vector<int>& poles) {
        GenusLedger led;
        led.entries.push_back({0, g0, "base"});
        long long g = g0;
        int lvl = 1;
        for (int n : poles) {
            g = genus_recurrence(g, n);
            led.entries.push_back({lvl++, g, "2g-2+n+1 with n=" + std::to_string(n)});
        }
        return led;
    }
};

struct RatioEntry {
    int level;
    Fraction places_ratio;                // N_i / m^i (lower bound when inexact)
    std::optional<Fraction> genus_ratio;  // g_i lower bound / m^i
};

/// Finite-level ratio table; these are the probed values, not the limits.
struct RatioReport {
    std::vector<RatioEntry> entries;
};

inline RatioReport ratios(const PlaceCensus& c) {
    RatioReport rep;
    for (int lvl = 0; lvl <= c.levels; ++lvl) {
        const LevelCount& l = c.per_level[static_cast<std::size_t>(lvl)];
        rep.entries.push_back({lvl, Fraction(l.rational_lb, l.degree_product), std::nullopt});
    }
    return rep;
}

inline RatioReport ratios(const PlaceCensus& c, const GenusLedger& ledger) {
    if (static_cast<int>(ledger.entries.size()) != c.levels + 1) throw level_mismatch_error();
    RatioReport rep = ratios(c);
    for (int lvl = 0; lvl <= c.levels; ++lvl)
        rep.entries[static_cast<std::size_t>(lvl)].genus_ratio =
            Fraction(ledger.entries[static_cast<std::size_t>(lvl)].bound,
                     c.per_level[static_cast<std::size_t>(lvl)].degree_product);
    return rep;
}

}  // namespace towerlab
