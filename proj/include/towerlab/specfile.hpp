#pragma once

/// Plain-text sectioned spec files:
///
///   format = 1
///   [field]
///   p = 3
///   modulus = t^2+1
///   symbol = g          # optional, default g
///   [tower F]
///   a = y^2             # new-variable side
///   b = (x^2+1)/(2*x)   # lower-level side
///   [tower L]
///   h = y^2 + (1/x)*y + (x^2+1)/x^2   # explicit step equation instead of a,b
///
/// '#' starts a comment. Catalog files use the same grammar and may omit the
/// field section when a field is supplied externally.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parser.hpp"
#include "tower.hpp"

namespace towerlab {

struct TowerSection {
    std::string name;
    bool explicit_equation = false;
    std::optional<RationalFunction> a, b;
    std::optional<BivariatePolynomial> equation;
    char a_var = 'y';
    char b_var = 'x';

    TowerDef make(const FiniteField& field) const {
        if (explicit_equation) return TowerDef::from_equation(field, *equation, name);
        return TowerDef::from_ab(field, *a, *b, name);
    }
};

struct SpecFile {
    int format = 1;
    std::optional<FiniteField> field;  // absent only in catalog fragments
    long long p = 0;
    std::vector<long long> modulus;
    std::string symbol = "g";
    std::vector<TowerSection> towers;

    const TowerSection& tower(const std::string& name = "") const {
        if (towers.empty()) throw spec_error("spec file declares no tower");
        if (name.empty()) return towers.front();
        for (const auto& t : towers)
            if (t.name == name) return t;
        throw spec_error("no tower named '" + name + "'");
    }

    std::string str() const {
        std::ostringstream os;
        os << "format = " << format << "\n";
        if (field) {
            os << "\n[field]\n";
            os << "p = " << p << "\n";
            os << "modulus = " << modulus_str() << "\n";
            if (symbol != "g") os << "symbol = " << symbol << "\n";
        }
        for (const auto& t : towers) {
            os << "\n[tower " << t.name << "]\n";
            if (t.explicit_equation) {
                os << "h = " << t.equation->str(std::string(1, t.b_var), std::string(1, t.a_var))
                   << "\n";
            } else {
                os << "a = " << t.a->str(std::string(1, t.a_var)) << "\n";
                os << "b = " << t.b->str(std::string(1, t.b_var)) << "\n";
            }
        }
        return os.str();
    }

    std::string modulus_str() const {
        std::string s;
        for (int i = static_cast<int>(modulus.size()) - 1; i >= 0; --i) {
            if (modulus[static_cast<std::size_t>(i)] == 0) continue;
            if (!s.empty()) s += "+";
            long long c = modulus[static_cast<std::size_t>(i)];
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i >= 1) {
                if (c != 1) s += "*";
                s += "t";
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
};

namespace detail {

struct RawSection {
    std::string header;  // "" for the preamble
    std::vector<std::pair<std::string, std::string>> entries;
    int line = 0;
};

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<RawSection> raw_sections(const std::string& text) {
    std::vector<RawSection> out;
    out.push_back({"", {}, 0});
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw spec_error("line " + std::to_string(lineno) + ": unterminated section header");
            out.push_back({strip(line.substr(1, line.size() - 2)), {}, lineno});
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw spec_error("line " + std::to_string(lineno) + ": expected key = value");
        out.back().entries.push_back({strip(line.substr(0, eq)), strip(line.substr(eq + 1))});
    }
    return out;
}

inline std::optional<std::string> lookup(const RawSection& s, const std::string& key) {
    for (const auto& [k, v] : s.entries)
        if (k == key) return v;
    return std::nullopt;
}

inline char expression_variable(const std::string& text, const FiniteField& field,
                                char fallback) {
    auto parsed = parse_expression(text, field);
    return parsed.variable.value_or(fallback);
}

}  // namespace detail

/// Parses spec-file text. When `external_field` is given, a [field] section is
/// optional and, if present, must agree with it.
inline SpecFile parse_spec_text(const std::string& text,
                                const std::optional<FiniteField>& external_field = std::nullopt) {
    auto sections = detail::raw_sections(text);
    SpecFile spec;

    bool format_seen = false;
    for (const auto& [k, v] : sections.front().entries) {
        if (k == "format") {
            spec.format = std::stoi(v);
            format_seen = true;
            if (spec.format != 1) throw spec_error("unsupported format " + v);
        } else {
            throw spec_error("unknown key '" + k + "' before the first section");
        }
    }
    if (!format_seen) throw spec_error("missing 'format = 1' header");

    for (std::size_t i = 1; i < sections.size(); ++i) {
        const auto& sec = sections[i];
        if (sec.header == "field") {
            if (spec.field) throw spec_error("duplicate [field] section");
            auto pv = detail::lookup(sec, "p");
            auto mv = detail::lookup(sec, "modulus");
            if (!pv || !mv) throw spec_error("[field] needs p and modulus");
            spec.p = std::stoll(*pv);
            spec.modulus = parse_prime_modulus(*mv, spec.p);
            if (auto sv = detail::lookup(sec, "symbol")) spec.symbol = *sv;
            spec.field = FiniteField(spec.p, spec.modulus, spec.symbol);
        }
    }
    if (!spec.field) {
        if (!external_field) throw spec_error("missing [field] section");
        spec.field = *external_field;
        spec.p = external_field->characteristic();
        spec.modulus = external_field->modulus();
        spec.symbol = external_field->symbol();
    } else if (external_field && *spec.field != *external_field) {
        throw spec_error("catalog field disagrees with the spec field");
    }

    for (std::size_t i = 1; i < sections.size(); ++i) {
        const auto& sec = sections[i];
        if (sec.header == "field") continue;
        if (sec.header.rfind("tower", 0) != 0)
            throw spec_error("unknown section [" + sec.header + "]");
        TowerSection t;
        t.name = detail::strip(sec.header.substr(5));
        if (t.name.empty()) t.name = "tower" + std::to_string(spec.towers.size());
        auto av = detail::lookup(sec, "a");
        auto bv = detail::lookup(sec, "b");
        auto hv = detail::lookup(sec, "h");
        if (hv) {
            if (av || bv) throw spec_error("tower '" + t.name + "': h excludes a and b");
            t.explicit_equation = true;
            t.equation = parse_step_equation(*hv, *spec.field);
        } else {
            if (!av || !bv) throw spec_error("tower '" + t.name + "' needs a and b (or h)");
            auto pa = parse_expression(*av, *spec.field);
            auto pb = parse_expression(*bv, *spec.field);
            t.a = pa.value;
            t.b = pb.value;
            t.a_var = pa.variable.value_or('y');
            t.b_var = pb.variable.value_or('x');
        }
        // validate construction early so errors carry the tower name
        try {
            t.make(*spec.field);
        } catch (const error& e) {
            throw spec_error("tower '" + t.name + "': " + e.what());
        }
        spec.towers.push_back(std::move(t));
    }
    return spec;
}

inline SpecFile parse_spec(const std::string& path,
                           const std::optional<FiniteField>& external_field = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw spec_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), external_field);
}

}  // namespace towerlab
