// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All algebra is exact; comparisons are structural equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <towerlab/cli.hpp>
#include <towerlab/parser.hpp>
#include <towerlab/probe.hpp>
#include <towerlab/specfile.hpp>
#include <towerlab/subtower.hpp>

using namespace towerlab;

namespace {

int g_failures = 0;

struct Criterion {
    explicit Criterion(std::string n) : name(std::move(n)) {}
    std::string name;
    std::vector<std::string> notes;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
    ~Criterion() {
        std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name.c_str());
        for (const auto& n : notes) std::printf("      %s\n", n.c_str());
        if (!ok) ++g_failures;
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

const std::string kData = TOWERLAB_TESTDATA;

RationalFunction rat(const FiniteField& f, const std::string& s) {
    return parse_rational(s, f);
}

long long naive_chains(const TowerDef& t, int levels) {
    const FiniteField& f = t.field();
    auto elems = f.enumerate();
    long long total = 0;
    std::function<void(int, const FieldElement&)> rec = [&](int depth, const FieldElement& x) {
        if (depth == levels) {
            ++total;
            return;
        }
        Polynomial ht = t.equation().eval_s(x);
        for (const auto& w : elems) {
            bool holds = ht.eval(w).is_zero();
            if (holds && t.has_ab())
                holds = !t.b().den().eval(x).is_zero() && !t.a().den().eval(w).is_zero();
            if (holds) rec(depth + 1, w);
        }
    };
    for (const auto& x : elems) rec(0, x);
    return total;
}

// Findings of the exhaustive linking-function searches on the quadratic
// Artin-Schreier step paired with the cubic sides, frozen from the tool's own
// deterministic output. The printed triple (f = 1/(T+1)) fails; the search
// recovers f = T+1 instead, with the same composite as the other cubic
// instance, and its Frobenius composite (T+1)^2 at degree 2.
const std::vector<std::string> kCubicPairWitnessesF8MaxDeg1 = {"T+1"};
const std::vector<std::string> kCubicPairWitnessesF2MaxDeg2 = {"T+1", "T^2+1"};

}  // namespace

int main() {
    SpecFile f9spec = parse_spec(kData + "/f9.spec");
    SpecFile f8spec = parse_spec(kData + "/f8.spec");
    const FiniteField F9 = *f9spec.field;
    const FiniteField F8 = *f8spec.field;
    const FiniteField F2(2, {0, 1});

    {
        Criterion c("01 shifted Kummer linking identity over F_9");
        RationalFunction a = rat(F9, "t^2"), b = rat(F9, "(t^2+1)/(2*t)");
        RationalFunction f = rat(F9, "2*t"), at = rat(F9, "t^2");
        RationalFunction bt = rat(F9, "(t+2)^2/(2*t)");
        auto t0 = std::chrono::steady_clock::now();
        SubtowerWitness w = verify_equation(a, b, f, at, bt);
        double ms = ms_since(t0);
        c.expect(w.equation_holds, "equation holds");
        c.expect(w.composite() == rat(F9, "(t^2+1)^2/t^2"), "composite is (T^2+1)^2/T^2");
        c.expect(ms < 1.0, "runtime < 1 ms");
        c.note("composite = " + w.composite().str() + ", " + std::to_string(ms) + " ms");
    }

    {
        Criterion c("02 cubic subtower linking identity over F_2");
        auto t0 = std::chrono::steady_clock::now();
        SubtowerWitness w =
            verify_equation(rat(F2, "t^2+t"), rat(F2, "(t^2+t+1)/t"), rat(F2, "(t+1)/t"),
                            rat(F2, "t^3+t"), rat(F2, "(t+1)/t^3"));
        double ms = ms_since(t0);
        c.expect(w.equation_holds, "equation holds");
        c.expect(w.composite() == rat(F2, "(t^4+t^2)/(t^6+t^5+t^3+t+1)"),
                 "composite is (T^4+T^2)/(T^6+T^5+T^3+T+1)");
        c.expect(ms < 1.0, "runtime < 1 ms");
        c.note("composite = " + w.composite().str() + ", " + std::to_string(ms) + " ms");
    }

    {
        Criterion c("03 exhaustive discovery of the shifted linking function");
        SpecFile catalog = parse_spec(kData + "/catalog_f9.spec", f9spec.field);
        TowerDef sub = f9spec.tower("G").make(F9);
        SearchConfig cfg;
        cfg.max_deg_f = 1;
        auto t0 = std::chrono::steady_clock::now();
        bool found = false;
        for (const auto& entry : catalog.towers) {
            if (entry.name != "E") continue;
            TowerDef sup = entry.make(F9);
            for (const auto& w : search_f(sup.a(), sup.b(), sub.a(), sub.b(), cfg)) {
                if (w.f == rat(F9, "t+1")) {
                    found = true;
                    c.expect(w.properness.tag == Properness::ProperByDegree,
                             "witness annotated proper-by-degree");
                }
            }
        }
        double ms = ms_since(t0);
        c.expect(found, "witness list contains f = T+1");
        c.expect(ms < 1000.0, "runtime < 1 s");
        c.note(std::to_string(search_space_size(F9, 1)) + " candidates, " +
               std::to_string(ms) + " ms");
    }

    {
        Criterion c("04 reduction tables of the quadratic model over F_8");
        TowerDef t = f8spec.tower("L").make(F8);
        auto t0 = std::chrono::steady_clock::now();
        struct InertRow {
            std::string beta, phi;
        };
        for (const InertRow& row : {InertRow{"g", "y^2+(g^2+1)*y+g^2+g"},
                                    InertRow{"g^2", "y^2+(g^2+g+1)*y+g"},
                                    InertRow{"g^2+g", "y^2+(g+1)*y+g^2"}}) {
            PlaceNode node = specialize_step(t, parse_projective(row.beta, F8));
            c.expect(node.kind == NodeKind::Inert, "beta=" + row.beta + " inert");
            c.expect(node.reduction == parse_polynomial(row.phi, F8),
                     "beta=" + row.beta + " reduction matches");
        }
        struct SplitRow {
            std::string beta, fac;
        };
        for (const SplitRow& row : {SplitRow{"1", "(y)*(y+1)"},
                                    SplitRow{"g+1", "(y+g)*(y+g^2)"},
                                    SplitRow{"g^2+1", "(y+g^2)*(y+g^2+g)"},
                                    SplitRow{"g^2+g+1", "(y+g)*(y+g^2+g)"}}) {
            PlaceNode node = specialize_step(t, parse_projective(row.beta, F8));
            c.expect(node.kind == NodeKind::Split, "beta=" + row.beta + " splits");
            c.expect(poly_factor(node.reduction).str("y") == row.fac,
                     "beta=" + row.beta + " factors as " + row.fac);
        }
        double ms = ms_since(t0);
        c.expect(ms < 10.0, "runtime < 10 ms");
        c.note(std::to_string(ms) + " ms");
    }

    {
        Criterion c("05 rational-place census of the quadratic model");
        TowerDef t = f8spec.tower("L").make(F8);
        auto t0 = std::chrono::steady_clock::now();
        PlaceCensus cs = census(t, 4);
        double ms = ms_since(t0);
        const long long expect[] = {9, 9, 4, 4, 4};
        for (int lvl = 0; lvl <= 4; ++lvl) {
            c.expect(cs.per_level[static_cast<std::size_t>(lvl)].rational_lb == expect[lvl],
                     "level " + std::to_string(lvl) + " rational places = " +
                         std::to_string(expect[lvl]));
            c.expect(cs.per_level[static_cast<std::size_t>(lvl)].unresolved_slots == 0,
                     "level " + std::to_string(lvl) + " has no unresolved nodes");
        }
        // independent oracle: plain nested enumeration of affine chains
        const long long chains_expect[] = {8, 2, 2};
        for (int lvl = 1; lvl <= 3; ++lvl) {
            long long oracle = naive_chains(t, lvl);
            c.expect(oracle == chains_expect[lvl - 1],
                     "oracle chain count at level " + std::to_string(lvl));
            c.expect(cs.per_level[static_cast<std::size_t>(lvl)].affine_chains == oracle,
                     "census chain count matches the oracle at level " + std::to_string(lvl));
        }
        RatioReport rr = ratios(cs);
        c.expect(rr.entries[2].places_ratio == Fraction(1, 1) &&
                     rr.entries[3].places_ratio == Fraction(1, 2) &&
                     rr.entries[4].places_ratio == Fraction(1, 4),
                 "ratio trend 1, 1/2, 1/4 at levels 2..4");
        c.expect(ms < 5000.0, "runtime < 5 s");
        c.note(std::to_string(ms) + " ms");
    }

    {
        Criterion c("06 genus ledger values");
        GenusLedger led = GenusLedger::from_recurrence(0, {1, 2, 2});
        c.expect(led.entries[2].bound == 1, "level-2 genus bound 1");
        c.expect(led.entries[3].bound == 3, "level-3 genus bound 3");
        for (int m : {2, 3}) {
            std::vector<RamificationDatum> two_plus_infty = {{m, false}, {m, false}, {2, false}};
            c.expect(hurwitz_bound(m, 0, two_plus_infty) == 1,
                     "first-pattern Hurwitz bound 1 at m=" + std::to_string(m));
            std::vector<RamificationDatum> m_places(static_cast<std::size_t>(m),
                                                    RamificationDatum{2, false});
            m_places.push_back({m, false});
            c.expect(hurwitz_bound(m, 0, m_places) == 1,
                     "second-pattern Hurwitz bound 1 at m=" + std::to_string(m));
        }
    }

    {
        Criterion c("07 complete splitting of the zero center");
        TowerDef t = f9spec.tower("G").make(F9);
        auto t0 = std::chrono::steady_clock::now();
        SplitResult r = split_test(t, ProjectiveValue::finite(F9.zero()), 4);
        double ms = ms_since(t0);
        c.expect(r.complete(), "splits completely through 4 levels");
        PlaceNode node = specialize_step(t, ProjectiveValue::finite(F9.zero()));
        c.expect(node.substitution.has_value() && node.substitution->k == -1,
                 "substitution fallback fires at k = -1");
        c.expect(ms < 1000.0, "runtime < 1 s");
        c.note(std::to_string(ms) + " ms");
    }

    {
        Criterion c("08 adjudication of the quadratic-to-cubic triple");
        // the printed triple, recomputed symbolically twice
        RationalFunction a = rat(F8, "t^2+t"), b = rat(F8, "t/(t^2+t+1)");
        RationalFunction f = rat(F8, "1/(t+1)"), at = rat(F8, "t^3+t");
        RationalFunction bt = rat(F8, "(t^2+1)/t^3");
        auto t0 = std::chrono::steady_clock::now();
        SubtowerWitness w1 = verify_equation(a, b, f, at, bt);
        SubtowerWitness w2 = verify_equation(a, b, f, at, bt);
        c.expect(w1.equation_holds == w2.equation_holds, "verdict is deterministic");
        c.note(std::string("printed triple verdict: ") +
               (w1.equation_holds ? "holds" : "does not hold"));
        c.expect(w1.lhs == w2.lhs && w1.rhs == w2.rhs, "both sides are reproducible");

        // exhaustive searches over the same instance; results frozen as the
        // tool's finding
        SearchConfig deg1;
        deg1.max_deg_f = 1;
        auto found8 = search_f(a, b, at, bt, deg1);
        std::vector<std::string> names8;
        for (const auto& w : found8) names8.push_back(w.f.str());
        c.expect(names8 == kCubicPairWitnessesF8MaxDeg1,
                 "F_8 degree-1 findings match the recorded fixture");

        RationalFunction a2 = rat(F2, "t^2+t"), b2 = rat(F2, "t/(t^2+t+1)");
        RationalFunction at2 = rat(F2, "t^3+t"), bt2 = rat(F2, "(t^2+1)/t^3");
        SearchConfig deg2;
        deg2.max_deg_f = 2;
        auto found2 = search_f(a2, b2, at2, bt2, deg2);
        std::vector<std::string> names2;
        for (const auto& w : found2) names2.push_back(w.f.str());
        c.expect(names2 == kCubicPairWitnessesF2MaxDeg2,
                 "F_2 degree-2 findings match the recorded fixture");
        auto again = search_f(a2, b2, at2, bt2, deg2);
        c.expect(again.size() == found2.size(), "search is deterministic");
        double ms = ms_since(t0);
        c.expect(ms < 30000.0, "runtime < 30 s");
        c.note(std::to_string(found8.size()) + " witnesses over F_8 (deg <= 1), " +
               std::to_string(found2.size()) + " over F_2 (deg <= 2), " +
               std::to_string(ms) + " ms");
    }

    {
        Criterion c("09 property suites");
        std::mt19937 rng(1234321);
        auto random_rational = [&](const FiniteField& f, int max_deg) {
            std::uniform_int_distribution<long long> pick(0, f.cardinality() - 1);
            std::uniform_int_distribution<int> dd(0, max_deg);
            while (true) {
                std::vector<FieldElement> n, d;
                int dn = dd(rng), dden = dd(rng);
                for (int i = 0; i <= dn; ++i) n.push_back(f.element_at(pick(rng)));
                for (int i = 0; i <= dden; ++i) d.push_back(f.element_at(pick(rng)));
                Polynomial num(f, std::move(n)), den(f, std::move(d));
                if (den.is_zero()) continue;
                RationalFunction r = RationalFunction::normalized(num, den);
                if (!r.is_constant()) return r;
            }
        };

        bool deg_ok = true;
        for (const FiniteField& f : {F8, F9}) {
            for (int i = 0; i < 500; ++i) {
                RationalFunction r = random_rational(f, 4);
                RationalFunction s = random_rational(f, 4);
                if (rat_degree(rat_compose(r, s)) != rat_degree(r) * rat_degree(s))
                    deg_ok = false;
            }
        }
        c.expect(deg_ok, "degree multiplicativity on 1000 random pairs");

        bool eval_ok = true;
        for (const FiniteField& f : {F8, F9}) {
            std::vector<ProjectiveValue> points;
            for (const auto& x : f.enumerate()) points.push_back(ProjectiveValue::finite(x));
            points.push_back(ProjectiveValue::infinity(f));
            for (int i = 0; i < 30; ++i) {
                RationalFunction r = random_rational(f, 3);
                RationalFunction s = random_rational(f, 3);
                RationalFunction comp = rat_compose(r, s);
                for (const auto& x : points)
                    if (rat_eval(comp, x) != rat_eval(r, rat_eval(s, x))) eval_ok = false;
            }
        }
        c.expect(eval_ok, "evaluation/composition compatibility on all of P^1");

        bool fac_ok = true;
        for (const FiniteField& f : {F8, F9}) {
            std::uniform_int_distribution<long long> pick(0, f.cardinality() - 1);
            std::uniform_int_distribution<int> dd(1, 5);
            for (int i = 0; i < 250; ++i) {
                int d = dd(rng);
                std::vector<FieldElement> coeffs;
                for (int j = 0; j < d; ++j) coeffs.push_back(f.element_at(pick(rng)));
                coeffs.push_back(f.element_at(1 + pick(rng) % (f.cardinality() - 1)));
                Polynomial u(f, std::move(coeffs));
                if (poly_factor(u).expand() != u) fac_ok = false;
            }
        }
        c.expect(fac_ok, "factorization re-expansion on 500 random polynomials");

        bool census_ok = true;
        TowerDef tF = f9spec.tower("F").make(F9);
        TowerDef tG = f9spec.tower("G").make(F9);
        TowerDef tL = f8spec.tower("L").make(F8);
        for (const TowerDef* t : {&tF, &tG, &tL}) {
            auto counts = affine_chain_counts(*t, 3);
            for (int lvl = 0; lvl <= 3; ++lvl)
                if (counts[static_cast<std::size_t>(lvl)] != naive_chains(*t, lvl))
                    census_ok = false;
        }
        c.expect(census_ok, "census chain counts match brute force on three towers");
    }

    if (g_failures == 0) std::printf("all criteria passed\n");
    return g_failures == 0 ? 0 : 1;
}
