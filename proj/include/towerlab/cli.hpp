#pragma once

/// Command-line front end. Subcommands:
///
///   field                       field summary (and element table)
///   tower check                 degree-shape, separability, symmetry checks
///   subtower verify             check a~ o f o b = b~ o f o a for a given f
///   subtower search             exhaustive search for linking functions f
///   probe census                rational-place counts per level
///   probe split                 complete-splitting test for one center
///   probe factor                reduction of the step polynomial at a center
///   genus bound                 genus lower bounds (recurrence / Hurwitz / Hasse-Weil)
///
/// Exit codes: 0 success, 1 a verification came back false, 2 input errors.
/// Output is byte-reproducible; `--porcelain` switches to tab-separated exact
/// values.

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "probe.hpp"
#include "specfile.hpp"
#include "subtower.hpp"

#include <CLI11.hpp>

namespace towerlab {

struct RunReport {
    int exit_code = 0;
    std::string command;                 // echo of the parsed command line
    std::string out;                     // stdout payload
    std::vector<std::string> warnings;   // stderr payload, one per line
};

namespace cli_detail {

inline int default_jobs() {
    if (const char* env = std::getenv("TOWERLAB_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

struct TowerArgs {
    std::string spec_path;
    std::string tower_name;

    TowerDef load(SpecFile& spec_out) const {
        spec_out = parse_spec(spec_path);
        return spec_out.tower(tower_name).make(*spec_out.field);
    }
};

inline std::string field_name(const FiniteField& f) {
    return "F_" + std::to_string(f.cardinality());
}

inline void run_field(std::ostringstream& os, const std::string& path, bool enumerate,
                      bool porcelain) {
    SpecFile spec = parse_spec(path);
    const FiniteField& f = *spec.field;
    if (porcelain) {
        os << f.characteristic() << "\t" << f.degree() << "\t" << f.cardinality() << "\t"
           << spec.modulus_str() << "\t" << f.symbol() << "\n";
        if (enumerate)
            for (const auto& e : f.enumerate()) os << e.str() << "\n";
        return;
    }
    os << field_name(f) << ": p = " << f.characteristic() << ", degree = " << f.degree()
       << ", q = " << f.cardinality() << ", modulus = " << spec.modulus_str()
       << ", generator = " << f.symbol() << "\n";
    if (enumerate) {
        os << "elements:";
        for (const auto& e : f.enumerate()) os << " " << e.str();
        os << "\n";
    }
}

inline int run_tower_check(std::ostringstream& os, const TowerArgs& ta, bool porcelain,
                           std::vector<std::string>& warnings) {
    SpecFile spec;
    TowerDef t = ta.load(spec);
    LemmaOneReport rep = check_lemma1(t);
    SeparabilityCertificate sep = check_separability(t);
    SymmetryReport sym = check_symmetry(t);
    if (porcelain) {
        os << "shape\t" << rep.shape_str() << "\n";
        for (const auto& c : rep.conditions) os << "condition\t" << c.name << "\t" << c.pass << "\n";
        os << "totally_ramified_infinity\t" << rep.totally_ramified_infinity << "\n";
        os << "separable\t" << sep.separable << "\n";
        os << "symmetric\t" << (sym.tag == Symmetry::Symmetric) << "\n";
    } else {
        os << "tower " << t.label() << " over " << field_name(t.field()) << ", step degree "
           << t.step_degree() << "\n";
        os << "shape: " << rep.shape_str() << "\n";
        for (const auto& c : rep.conditions)
            os << "  " << c.name << ": " << (c.pass ? "ok" : "fail") << "\n";
        os << "conclusion: "
           << (rep.totally_ramified_infinity
                   ? "place at infinity totally ramified; full constant field"
                   : "no conclusion from these shapes")
           << "\n";
        os << "separability: " << sep.str() << "\n";
        os << "symmetry: "
           << (sym.tag == Symmetry::Symmetric ? "symmetric" : "asymmetric") << "\n";
    }
    if (sym.tag == Symmetry::Symmetric) warnings.push_back(sym.caution);
    return sep.separable ? 0 : 1;
}

inline void describe_witness(std::ostringstream& os, const SubtowerWitness& w,
                             const RationalFunction& a, bool porcelain) {
    if (porcelain) {
        os << w.f.str() << "\t" << w.equation_holds << "\t" << w.lhs.str() << "\t"
           << w.rhs.str() << "\t" << w.properness.str() << "\t"
           << derive_z_relation(a, w.f).str() << "\n";
        return;
    }
    os << "f = " << w.f.str() << "\n";
    os << "a~ o f o b = " << w.lhs.str() << "\n";
    os << "b~ o f o a = " << w.rhs.str() << "\n";
    os << "equation holds: " << (w.equation_holds ? "yes" : "no") << "\n";
    if (w.equation_holds) {
        os << "composite = " << w.composite().str() << "\n";
        os << "z-relation: z_i = " << derive_z_relation(a, w.f).str("x") << " in x = x_i\n";
        os << "properness: " << w.properness.str() << "\n";
    }
}

inline int run_subtower_verify(std::ostringstream& os, const TowerArgs& sup,
                               const std::string& sub_path, const std::string& sub_name,
                               const std::string& f_expr, bool porcelain,
                               std::vector<std::string>& warnings) {
    SpecFile spec;
    TowerDef t = sup.load(spec);
    if (!t.has_ab()) throw spec_error("supertower must be in a,b form");
    SpecFile sub = parse_spec(sub_path, spec.field);
    TowerDef ts = sub.tower(sub_name).make(*spec.field);
    if (!ts.has_ab()) throw spec_error("subtower must be in a,b form");
    RationalFunction f = parse_rational(f_expr, *spec.field);
    SubtowerWitness w = verify_equation(t.a(), t.b(), f, ts.a(), ts.b());
    describe_witness(os, w, t.a(), porcelain);
    for (const auto& s : w.properness.assumptions) warnings.push_back(s);
    return w.equation_holds ? 0 : 1;
}

inline int run_subtower_search(std::ostringstream& os, const TowerArgs& sub,
                               const std::string& catalog_path, const SearchConfig& cfg,
                               bool porcelain, std::vector<std::string>& warnings) {
    SpecFile spec;
    TowerDef ts = sub.load(spec);
    if (!ts.has_ab()) throw spec_error("subtower must be in a,b form");
    SpecFile catalog = parse_spec(catalog_path, spec.field);
    const long long size = search_space_size(*spec.field, cfg.max_deg_f);
    if (!porcelain)
        os << "search space: " << size << " candidate f per catalog tower (deg <= "
           << cfg.max_deg_f << ")\n";
    for (const auto& entry : catalog.towers) {
        TowerDef tc = entry.make(*spec.field);
        if (!tc.has_ab()) {
            warnings.push_back("catalog tower '" + entry.name + "' skipped: explicit equation");
            continue;
        }
        auto witnesses = search_f(tc.a(), tc.b(), ts.a(), ts.b(), cfg);
        if (porcelain) {
            for (const auto& w : witnesses)
                os << entry.name << "\t" << w.f.str() << "\t" << w.properness.str() << "\t"
                   << w.composite().str() << "\n";
        } else {
            os << "catalog tower " << entry.name << ": " << witnesses.size() << " witness"
               << (witnesses.size() == 1 ? "" : "es") << "\n";
            for (const auto& w : witnesses)
                os << "  f = " << w.f.str() << "    properness: " << w.properness.str()
                   << "    composite = " << w.composite().str() << "\n";
        }
        for (const auto& w : witnesses)
            for (const auto& s : w.properness.assumptions) {
                if (warnings.empty() || warnings.back() != s) warnings.push_back(s);
            }
    }
    return 0;
}

inline int run_probe_census(std::ostringstream& os, const TowerArgs& ta, int levels, int cap,
                            bool porcelain, std::vector<std::string>& warnings) {
    SpecFile spec;
    TowerDef t = ta.load(spec);
    PlaceCensus c = census(t, levels, cap);
    RatioReport rr = ratios(c);
    if (!porcelain)
        os << "level\trational\tupper\tunresolved\tinert\tchains\tdegree\tN/degree\n";
    for (int lvl = 0; lvl <= c.levels; ++lvl) {
        const LevelCount& l = c.per_level[static_cast<std::size_t>(lvl)];
        os << lvl << "\t" << l.rational_lb << "\t" << l.rational_ub() << "\t"
           << l.unresolved_slots << "\t" << l.inert_stops << "\t" << l.affine_chains << "\t"
           << l.degree_product << "\t"
           << rr.entries[static_cast<std::size_t>(lvl)].places_ratio.str() << "\n";
    }
    if (!c.exact())
        warnings.push_back("census has unresolved nodes; rational counts are brackets");
    return 0;
}

inline int run_probe_split(std::ostringstream& os, const TowerArgs& ta, const std::string& at,
                           int levels, bool porcelain) {
    SpecFile spec;
    TowerDef t = ta.load(spec);
    ProjectiveValue beta = parse_projective(at, *spec.field);
    SplitResult r = split_test(t, beta, levels);
    if (porcelain)
        os << beta.str() << "\t" << r.str() << "\n";
    else
        os << "center " << beta.str() << " through " << levels << " level"
           << (levels == 1 ? "" : "s") << ": " << r.str() << "\n";
    return r.complete() ? 0 : 1;
}

inline void describe_node(std::ostringstream& os, const PlaceNode& node, bool porcelain) {
    std::string fac;
    if (node.reduction.degree() >= 1) {
        Factorization f = poly_factor(node.reduction);
        fac = (f.factors.size() == 1 && f.factors[0].second == 1 && f.unit.is_one())
                  ? "irreducible"
                  : f.str();
    }
    std::string sub_k = "-", sub_c = "-";
    if (node.substitution) {
        sub_k = std::to_string(node.substitution->k);
        sub_c = node.substitution->shift.str();
    }
    if (porcelain) {
        os << node.center.str() << "\t" << node_kind_str(node.kind) << "\t"
           << node.reduction.str() << "\t" << fac << "\t" << sub_k << "\t" << sub_c << "\n";
        return;
    }
    os << "beta = " << node.center.str() << "\n";
    os << "status: " << node_kind_str(node.kind);
    if (node.kind == NodeKind::TotallyRamified)
        os << " (e = " << node.ramification->e << (node.ramification->wild ? ", wild" : ", tame")
           << ")";
    os << "\n";
    if (node.substitution)
        os << "substitution: u = (y - " << node.substitution->shift.str() << ") * pi^"
           << node.substitution->k << "\n";
    if (!node.reduction.is_zero()) {
        os << "phi mod P_beta = " << node.reduction.str() << "\n";
        if (!fac.empty()) os << "factorization: " << fac << "\n";
    }
    if (!node.children.empty()) {
        os << "children:";
        for (const auto& ch : node.children) os << " " << ch.str();
        os << "\n";
    }
    for (int d : node.inert_degrees) os << "inert factor of degree " << d << "\n";
}

inline int run_probe_factor(std::ostringstream& os, const TowerArgs& ta, const std::string& at,
                            bool porcelain) {
    SpecFile spec;
    TowerDef t = ta.load(spec);
    ProjectiveValue beta = parse_projective(at, *spec.field);
    PlaceNode node = specialize_step(t, beta);
    describe_node(os, node, porcelain);
    return 0;
}

inline RamificationDatum parse_ram(const std::string& text) {
    std::string es = text;
    bool wild = false;
    if (auto comma = es.find(','); comma != std::string::npos) {
        std::string flag = es.substr(comma + 1);
        es.resize(comma);
        if (flag == "w" || flag == "wild")
            wild = true;
        else if (flag != "t" && flag != "tame")
            throw spec_error("ramification flag must be t|tame|w|wild, got '" + flag + "'");
    }
    int e = std::stoi(es);
    if (e < 1) throw spec_error("ramification index must be >= 1");
    return RamificationDatum{e, wild};
}

inline int run_genus(std::ostringstream& os, const std::vector<long long>& recurrence,
                     const std::vector<std::string>& hurwitz,
                     const std::vector<long long>& hasse_weil, bool porcelain) {
    if (!recurrence.empty()) {
        long long g0 = recurrence[0];
        std::vector<int> poles(recurrence.begin() + 1, recurrence.end());
        if (poles.empty()) throw spec_error("--recurrence needs g0 and pole counts");
        GenusLedger led = GenusLedger::from_recurrence(g0, poles);
        if (!porcelain) os << "level\tgenus_lb\trule\n";
        for (const auto& e : led.entries)
            os << e.level << "\t" << e.bound << "\t" << e.rule << "\n";
    }
    if (!hurwitz.empty()) {
        if (hurwitz.size() < 2) throw spec_error("--hurwitz needs m, g0, then e[,w] entries");
        int m = std::stoi(hurwitz[0]);
        long long g0 = std::stoll(hurwitz[1]);
        std::vector<RamificationDatum> ram;
        for (std::size_t i = 2; i < hurwitz.size(); ++i) ram.push_back(parse_ram(hurwitz[i]));
        long long b = hurwitz_bound(m, g0, ram);
        if (porcelain)
            os << "hurwitz\t" << b << "\n";
        else
            os << "genus lower bound (Hurwitz, m = " << m << ", g0 = " << g0 << "): " << b
               << "\n";
    }
    if (!hasse_weil.empty()) {
        if (hasse_weil.size() != 2) throw spec_error("--hasse-weil needs N and q");
        long long g = hasse_weil_min_genus(hasse_weil[0], hasse_weil[1]);
        if (porcelain)
            os << "hasse-weil\t" << g << "\n";
        else
            os << "minimal genus admitting N = " << hasse_weil[0] << " over q = "
               << hasse_weil[1] << ": " << g << "\n";
    }
    return 0;
}

}  // namespace cli_detail

/// Parses and runs one command line (without the program name).
inline RunReport dispatch(const std::vector<std::string>& args) {
    RunReport report;
    for (const auto& a : args) {
        if (!report.command.empty()) report.command += " ";
        report.command += a;
    }
    std::ostringstream os;

    CLI::App app{"exact algebra for recursively defined towers of function fields"};
    app.require_subcommand(1);
    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "tab-separated machine-readable output");

    // field
    auto* cmd_field = app.add_subcommand("field", "show the field of a spec file");
    std::string field_spec;
    bool field_enum = false;
    cmd_field->add_option("--spec", field_spec, "spec file")->required();
    cmd_field->add_flag("--enumerate", field_enum, "list all elements");

    // tower check
    auto* cmd_tower = app.add_subcommand("tower", "tower-level checks");
    auto* cmd_tower_check = cmd_tower->add_subcommand("check", "run the static checks");
    cli_detail::TowerArgs tower_args;
    cmd_tower_check->add_option("--spec", tower_args.spec_path, "spec file")->required();
    cmd_tower_check->add_option("--tower", tower_args.tower_name, "tower name");

    // subtower verify / search
    auto* cmd_sub = app.add_subcommand("subtower", "linking-identity operations");
    auto* cmd_verify = cmd_sub->add_subcommand("verify", "verify a linking triple");
    cli_detail::TowerArgs verify_super;
    std::string verify_sub_path, verify_sub_name, verify_f;
    cmd_verify->add_option("--spec", verify_super.spec_path, "supertower spec")->required();
    cmd_verify->add_option("--tower", verify_super.tower_name, "supertower name");
    cmd_verify->add_option("--sub", verify_sub_path, "subtower spec")->required();
    cmd_verify->add_option("--sub-tower", verify_sub_name, "subtower name");
    cmd_verify->add_option("--f", verify_f, "linking function expression")->required();

    auto* cmd_search = cmd_sub->add_subcommand("search", "search linking functions");
    cli_detail::TowerArgs search_sub;
    std::string search_catalog;
    SearchConfig search_cfg;
    search_cfg.jobs = cli_detail::default_jobs();
    cmd_search->add_option("--spec", search_sub.spec_path, "subtower spec")->required();
    cmd_search->add_option("--tower", search_sub.tower_name, "subtower name");
    cmd_search->add_option("--catalog", search_catalog, "catalog of candidate supertowers")
        ->required();
    cmd_search->add_option("--max-deg", search_cfg.max_deg_f, "maximal degree of f")
        ->required();
    cmd_search->add_option("--ceiling", search_cfg.ceiling, "candidate-count ceiling");
    cmd_search->add_option("--jobs", search_cfg.jobs, "worker threads");

    // probe census / split / factor
    auto* cmd_probe = app.add_subcommand("probe", "numerical probes");
    auto* cmd_census = cmd_probe->add_subcommand("census", "rational places per level");
    cli_detail::TowerArgs census_args;
    int census_levels = 3, census_cap = 8;
    cmd_census->add_option("--spec", census_args.spec_path, "spec file")->required();
    cmd_census->add_option("--tower", census_args.tower_name, "tower name");
    cmd_census->add_option("--levels", census_levels, "levels to expand")->required();
    cmd_census->add_option("--cap", census_cap, "level cap");

    auto* cmd_split = cmd_probe->add_subcommand("split", "complete-splitting test");
    cli_detail::TowerArgs split_args;
    std::string split_at;
    int split_levels = 1;
    cmd_split->add_option("--spec", split_args.spec_path, "spec file")->required();
    cmd_split->add_option("--tower", split_args.tower_name, "tower name");
    cmd_split->add_option("--at", split_at, "center (field constant or inf)")->required();
    cmd_split->add_option("--levels", split_levels, "levels to expand")->required();

    auto* cmd_factor = cmd_probe->add_subcommand("factor", "step reduction at a center");
    cli_detail::TowerArgs factor_args;
    std::string factor_at;
    cmd_factor->add_option("--spec", factor_args.spec_path, "spec file")->required();
    cmd_factor->add_option("--tower", factor_args.tower_name, "tower name");
    cmd_factor->add_option("--at", factor_at, "center (field constant or inf)")->required();

    // genus bound
    auto* cmd_genus = app.add_subcommand("genus", "genus arithmetic");
    auto* cmd_bound = cmd_genus->add_subcommand("bound", "genus lower bounds");
    std::vector<long long> genus_rec, genus_hw;
    std::vector<std::string> genus_hur;
    cmd_bound->add_option("--recurrence", genus_rec, "g0 then pole counts per level");
    cmd_bound->add_option("--hurwitz", genus_hur, "m g0 then e[,w] per ramified place");
    cmd_bound->add_option("--hasse-weil", genus_hw, "N q");

    try {
        std::vector<const char*> argv;
        argv.push_back("towerlab");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*cmd_field) {
            cli_detail::run_field(os, field_spec, field_enum, porcelain);
        } else if (*cmd_tower_check) {
            report.exit_code =
                cli_detail::run_tower_check(os, tower_args, porcelain, report.warnings);
        } else if (*cmd_verify) {
            report.exit_code = cli_detail::run_subtower_verify(
                os, verify_super, verify_sub_path, verify_sub_name, verify_f, porcelain,
                report.warnings);
        } else if (*cmd_search) {
            report.exit_code = cli_detail::run_subtower_search(
                os, search_sub, search_catalog, search_cfg, porcelain, report.warnings);
        } else if (*cmd_census) {
            report.exit_code = cli_detail::run_probe_census(
                os, census_args, census_levels, census_cap, porcelain, report.warnings);
        } else if (*cmd_split) {
            report.exit_code =
                cli_detail::run_probe_split(os, split_args, split_at, split_levels, porcelain);
        } else if (*cmd_factor) {
            report.exit_code = cli_detail::run_probe_factor(os, factor_args, factor_at, porcelain);
        } else if (*cmd_bound) {
            if (genus_rec.empty() && genus_hur.empty() && genus_hw.empty())
                throw spec_error("genus bound needs --recurrence, --hurwitz or --hasse-weil");
            report.exit_code =
                cli_detail::run_genus(os, genus_rec, genus_hur, genus_hw, porcelain);
        } else {
            throw spec_error("unknown command");
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            std::ostringstream help;
            help << app.help();
            report.out = help.str();
            report.exit_code = 0;
            return report;
        }
        report.warnings.push_back(std::string("argument error: ") + e.what());
        report.exit_code = 2;
        return report;
    } catch (const error& e) {
        report.warnings.push_back(std::string("error: ") + e.what());
        report.exit_code = 2;
        return report;
    }
    report.out = os.str();
    return report;
}

}  // namespace towerlab
