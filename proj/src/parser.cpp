#include "zartan/parser.hpp"

#include <cctype>
#include <sstream>

namespace zartan {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
    return true;
}

struct Entry {
    int line;
    std::string key;
    std::string value;
};

using Section = std::vector<Entry>;

Polynomial parse_poly_at(const RingPtr& ring, const std::string& text, int line) {
    try {
        return parse_polynomial(ring, text);
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), line, e.column);
    } catch (const SemanticError& e) {
        throw ParseError(e.what(), line, 1);
    }
}

std::vector<Polynomial> parse_poly_list(const RingPtr& ring, const std::string& value, int line) {
    std::vector<Polynomial> out;
    for (const std::string& part : split(value, ';'))
        if (!part.empty()) out.push_back(parse_poly_at(ring, part, line));
    return out;
}

// Returns the unique value for `key` in the section, or nullopt.
std::optional<Entry> find_key(const Section& sec, const std::string& key) {
    std::optional<Entry> found;
    for (const Entry& e : sec)
        if (e.key == key) {
            if (found) throw ParseError("duplicate key '" + key + "'", e.line, 1);
            found = e;
        }
    return found;
}

void check_known_keys(const Section& sec, const std::vector<std::string>& known,
                      const std::string& section_name) {
    for (const Entry& e : sec) {
        bool ok = false;
        for (const std::string& k : known) ok = ok || k == e.key;
        if (!ok)
            throw ParseError("unknown key '" + e.key + "' in [" + section_name + "]", e.line, 1);
    }
}

PointSpec parse_point(const Section& sec, const RingPtr& ring, const std::string& name) {
    check_known_keys(sec, {"kind", "tower"}, name);
    auto kind = find_key(sec, "kind");
    if (!kind) throw SemanticError("[" + name + "] requires kind = closed | generic");
    PointSpec spec;
    if (kind->value == "generic")
        spec.generic = true;
    else if (kind->value != "closed")
        throw ParseError("kind must be 'closed' or 'generic'", kind->line, 1);
    auto tower = find_key(sec, "tower");
    if (tower) {
        if (spec.generic)
            throw SemanticError("[" + name + "] is generic and cannot carry a tower");
        spec.tower = parse_poly_list(ring, tower->value, tower->line);
    }
    if (!spec.generic && spec.tower.size() != ring->nvars())
        throw SemanticError("[" + name + "] closed point needs one tower polynomial per variable (" +
                            std::to_string(ring->nvars()) + " expected, " +
                            std::to_string(spec.tower.size()) + " given)");
    return spec;
}

}  // namespace

Problem parse_problem(const std::string& text) {
    Problem prob;
    prob.source = text;

    std::map<std::string, Section> sections;
    std::optional<Entry> base_entry;
    std::string cur;  // "" = preamble
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", lineno, 1);
            cur = trim(line.substr(1, line.size() - 2));
            if (cur != "S" && cur != "X" && cur != "map" && cur != "point.x" &&
                cur != "point.s" && cur != "options")
                throw ParseError("unknown section [" + cur + "]", lineno, 1);
            if (sections.count(cur)) throw ParseError("duplicate section [" + cur + "]", lineno, 1);
            sections[cur];
            continue;
        }
        // Assignment lines; in [map] allow several per line, ';'-separated.
        std::vector<std::string> stmts =
            cur == "map" ? split(line, ';') : std::vector<std::string>{line};
        for (const std::string& stmt : stmts) {
            if (stmt.empty()) continue;
            size_t eq = stmt.find('=');
            if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno, 1);
            Entry e{lineno, trim(stmt.substr(0, eq)), trim(stmt.substr(eq + 1))};
            if (e.key.empty()) throw ParseError("missing key before '='", lineno, 1);
            if (cur.empty()) {
                if (e.key != "base")
                    throw ParseError("only 'base = ...' may precede the first section", lineno, 1);
                if (base_entry) throw ParseError("duplicate key 'base'", lineno, 1);
                base_entry = e;
            } else {
                sections[cur].push_back(e);
            }
        }
    }

    if (!base_entry) throw SemanticError("missing 'base = Q | Fp <prime>'");
    {
        std::istringstream bs(base_entry->value);
        std::string word;
        bs >> word;
        if (word == "Q") {
            prob.base = Field::rationals();
        } else if (word == "Fp") {
            long long p = 0;
            if (!(bs >> p)) throw ParseError("expected a prime after 'Fp'", base_entry->line, 1);
            prob.base = Field::prime_field(p);  // validates primality
        } else {
            throw ParseError("base must be 'Q' or 'Fp <prime>'", base_entry->line, 1);
        }
        std::string rest;
        if (bs >> rest) throw ParseError("trailing text after base field", base_entry->line, 1);
    }

    auto parse_vars = [&](const Entry& e) {
        std::vector<std::string> vars;
        for (const std::string& v : split(e.value, ','))
            if (!v.empty()) {
                if (!is_identifier(v)) throw ParseError("bad variable name '" + v + "'", e.line, 1);
                for (const std::string& prev : vars)
                    if (prev == v) throw ParseError("repeated variable '" + v + "'", e.line, 1);
                vars.push_back(v);
            }
        return vars;
    };

    auto parse_presentation = [&](const Section& sec, const std::string& name,
                                  std::vector<std::string>& vars, RingPtr& ring,
                                  std::vector<Polynomial>& ideal) {
        check_known_keys(sec, {"vars", "ideal"}, name);
        auto ve = find_key(sec, "vars");
        if (!ve) throw SemanticError("[" + name + "] requires vars = ...");
        vars = parse_vars(*ve);
        ring = Ring::make(prob.base, vars);
        if (auto ie = find_key(sec, "ideal")) ideal = parse_poly_list(ring, ie->value, ie->line);
    };

    if (!sections.count("X")) throw SemanticError("missing [X] section");
    parse_presentation(sections["X"], "X", prob.x_vars, prob.x_ring, prob.x_ideal);

    prob.has_S = sections.count("S") > 0;
    if (prob.has_S) {
        parse_presentation(sections["S"], "S", prob.s_vars, prob.s_ring, prob.s_ideal);
    } else {
        prob.s_ring = Ring::make(prob.base, {});
        if (sections.count("map")) throw SemanticError("[map] given without an [S] section");
        if (sections.count("point.s")) throw SemanticError("[point.s] given without an [S] section");
    }

    if (prob.has_S) {
        if (!sections.count("map")) throw SemanticError("[S] given but no [map] section");
        const Section& msec = sections["map"];
        prob.pullbacks.assign(prob.s_vars.size(), Polynomial());
        std::vector<bool> seen(prob.s_vars.size(), false);
        for (const Entry& e : msec) {
            size_t j = 0;
            while (j < prob.s_vars.size() && prob.s_vars[j] != e.key) ++j;
            if (j == prob.s_vars.size())
                throw SemanticError("[map] assigns '" + e.key + "', which is not a variable of S");
            if (seen[j]) throw SemanticError("[map] assigns '" + e.key + "' twice");
            seen[j] = true;
            prob.pullbacks[j] = parse_poly_at(prob.x_ring, e.value, e.line);
        }
        for (size_t j = 0; j < seen.size(); ++j)
            if (!seen[j])
                throw SemanticError("[map] does not assign the S variable '" + prob.s_vars[j] + "'");
        if (!sections.count("point.s")) throw SemanticError("[S] given but no [point.s] section");
        prob.ps = parse_point(sections["point.s"], prob.s_ring, "point.s");
    }

    if (!sections.count("point.x")) throw SemanticError("missing [point.x] section");
    prob.px = parse_point(sections["point.x"], prob.x_ring, "point.x");

    if (sections.count("options")) {
        const Section& osec = sections["options"];
        check_known_keys(osec, {"order", "trust_point", "seed"}, "options");
        if (auto e = find_key(osec, "order")) {
            if (e->value == "lex")
                prob.opts.order = MonomialOrder::Kind::Lex;
            else if (e->value == "grevlex")
                prob.opts.order = MonomialOrder::Kind::Grevlex;
            else
                throw ParseError("order must be 'lex' or 'grevlex'", e->line, 1);
        }
        if (auto e = find_key(osec, "trust_point")) {
            if (e->value == "true")
                prob.opts.trust_point = true;
            else if (e->value == "false")
                prob.opts.trust_point = false;
            else
                throw ParseError("trust_point must be 'true' or 'false'", e->line, 1);
        }
        if (auto e = find_key(osec, "seed")) {
            try {
                size_t pos = 0;
                prob.opts.seed = std::stoull(e->value, &pos);
                if (pos != e->value.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("seed must be an unsigned integer", e->line, 1);
            }
        }
    }

    return prob;
}

std::string problem_to_text(const Problem& p) {
    std::ostringstream out;
    if (p.base->kind == Field::Kind::Rationals)
        out << "base = Q\n";
    else
        out << "base = Fp " << p.base->p << "\n";

    auto emit_list = [&](const std::vector<Polynomial>& ps) {
        for (size_t i = 0; i < ps.size(); ++i) out << (i ? "; " : "") << ps[i].str();
        out << "\n";
    };
    auto emit_pres = [&](const std::string& name, const std::vector<std::string>& vars,
                         const std::vector<Polynomial>& ideal) {
        out << "\n[" << name << "]\nvars = ";
        for (size_t i = 0; i < vars.size(); ++i) out << (i ? ", " : "") << vars[i];
        out << "\n";
        if (!ideal.empty()) {
            out << "ideal = ";
            emit_list(ideal);
        }
    };
    auto emit_point = [&](const std::string& name, const PointSpec& spec) {
        out << "\n[" << name << "]\nkind = " << (spec.generic ? "generic" : "closed") << "\n";
        if (!spec.generic && !spec.tower.empty()) {
            out << "tower = ";
            emit_list(spec.tower);
        }
    };

    if (p.has_S) emit_pres("S", p.s_vars, p.s_ideal);
    emit_pres("X", p.x_vars, p.x_ideal);
    if (p.has_S) {
        out << "\n[map]\n";
        for (size_t j = 0; j < p.s_vars.size(); ++j)
            out << p.s_vars[j] << " = " << p.pullbacks[j].str() << "\n";
    }
    emit_point("point.x", p.px);
    if (p.has_S) emit_point("point.s", p.ps);

    out << "\n[options]\norder = "
        << (p.opts.order == MonomialOrder::Kind::Lex ? "lex" : "grevlex") << "\n"
        << "trust_point = " << (p.opts.trust_point ? "true" : "false") << "\n"
        << "seed = " << p.opts.seed << "\n";
    return out.str();
}

}  // namespace zartan
