#include "selfcq/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "selfcq/error.hpp"

namespace selfcq {

using nlohmann::json;

namespace {

// nlohmann reports byte offsets; turn them into line/column.
ParseError json_error(const std::string& text, const json::parse_error& e) {
    std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    return ParseError("malformed JSON: " + msg, line, col);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw json_error(text, e);
    }
}

std::string quote(const std::string& s) { return json(s).dump(); }

}  // namespace

// ---------------------------------------------------------------------------
// ATM

ParsedAtm parse_atm_with_warnings(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("schema: machine must be a JSON object");
    static const std::vector<std::string> keys = {"accepting", "delta",     "existential", "initial",
                                                  "n",         "rejecting", "states"};
    for (const auto& [k, v] : j.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ParseError("schema: unknown key \"" + k + "\"");
    for (const auto& k : keys)
        if (!j.contains(k)) throw ParseError("schema: missing key \"" + k + "\"");

    auto string_field = [&](const std::string& k) {
        if (!j[k].is_string()) throw ParseError("schema: \"" + k + "\" must be a string");
        return j[k].get<std::string>();
    };
    auto string_list = [&](const std::string& k) {
        if (!j[k].is_array()) throw ParseError("schema: \"" + k + "\" must be an array");
        std::vector<std::string> out;
        for (const auto& e : j[k]) {
            if (!e.is_string()) throw ParseError("schema: \"" + k + "\" must contain strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    };

    RawAtm raw;
    if (!j["n"].is_number_integer()) throw ParseError("schema: \"n\" must be an integer");
    raw.n = j["n"].get<int>();
    raw.states = string_list("states");
    raw.existential = string_list("existential");
    raw.initial = string_field("initial");
    raw.accepting = string_field("accepting");
    raw.rejecting = string_field("rejecting");

    if (!j["delta"].is_array()) throw ParseError("schema: \"delta\" must be an array");
    ParsedAtm result;
    std::set<Transition> seen;
    std::size_t index = 0;
    for (const auto& row : j["delta"]) {
        const std::string where = "schema: delta[" + std::to_string(index++) + "]";
        if (!row.is_array() || row.size() != 5) throw ParseError(where + " must be [s, a, b, s2, d]");
        if (!row[0].is_string() || !row[3].is_string()) throw ParseError(where + ": states must be strings");
        for (int k : {1, 2, 4})
            if (!row[k].is_number_integer()) throw ParseError(where + ": a, b and d must be integers");
        Transition t{row[0].get<std::string>(), row[1].get<int>(), row[2].get<int>(), row[3].get<std::string>(),
                     row[4].get<int>()};
        if (t.read != 0 && t.read != 1) throw ParseError(where + ": a must be 0 or 1");
        if (t.write != 0 && t.write != 1) throw ParseError(where + ": b must be 0 or 1");
        if (t.move != 1 && t.move != -1) throw ParseError(where + ": d must be -1 or 1");
        if (!seen.insert(t).second) {
            result.warnings.push_back("duplicate transition (" + transition_key(t) + ") ignored");
            continue;
        }
        raw.delta.push_back(t);
    }
    result.atm = validate_atm(raw);
    return result;
}

Atm parse_atm(const std::string& text) { return parse_atm_with_warnings(text).atm; }

std::string emit_atm(const Atm& atm) {
    auto list = [](const std::vector<std::string>& xs) {
        std::string out = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + quote(xs[i]);
        return out + "]";
    };
    std::string delta = "[";
    for (std::size_t i = 0; i < atm.delta().size(); ++i) {
        const auto& t = atm.delta()[i];
        delta += (i ? ", [" : "[") + quote(t.from) + ", " + std::to_string(t.read) + ", " + std::to_string(t.write) +
                 ", " + quote(t.to) + ", " + std::to_string(t.move) + "]";
    }
    delta += "]";
    return "{\"accepting\": " + quote(atm.accepting()) + ", \"delta\": " + delta +
           ", \"existential\": " + list(atm.existential_states()) + ", \"initial\": " + quote(atm.initial()) +
           ", \"n\": " + std::to_string(atm.n()) + ", \"rejecting\": " + quote(atm.rejecting()) +
           ", \"states\": " + list(atm.states()) + "}\n";
}

std::string atm_fingerprint(const Atm& atm) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : emit_atm(atm)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// dltext

namespace {

bool name_char(char c) {
    return !(c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '(' || c == ')' || c == ',');
}

class LineParser {
public:
    LineParser(const std::string& text, std::size_t line) : s_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string token() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
        if (start == pos_) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }

    Concept concept_expr() {
        skip_ws();
        if (peek() != '(') {
            std::size_t at = pos_;
            std::string t = token();
            if (t == "top") return top();
            if (t == "bot") return bottom();
            if (t == "sub") {
                pos_ = at;
                fail("expected a concept");
            }
            return atomic(t);
        }
        ++pos_;
        std::string op = token();
        Concept out;
        if (op == "not") {
            out = negate(concept_expr());
        } else if (op == "and" || op == "or" || op == "implies") {
            Concept l = concept_expr();
            Concept r = concept_expr();
            out = op == "and" ? conj(l, r) : op == "or" ? disj(l, r) : implies(l, r);
        } else if (op == "exists" || op == "forall") {
            std::string role = token();
            Concept c = concept_expr();
            out = op == "exists" ? exists(role, c) : forall(role, c);
        } else if (op == "self") {
            out = self(token());
        } else {
            fail("unknown constructor '" + op + "'");
        }
        expect(')');
        return out;
    }

    // One axiom: "C sub D", "C(IND)" or "ROLE(IND,IND)".
    std::variant<Gci, ConceptAssertion, RoleAssertion> axiom(const std::string& label) {
        Concept c = concept_expr();
        if (peek() == '(') {
            ++pos_;
            std::string first = token();
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                std::string second = token();
                expect(')');
                if (c.kind() != ConceptKind::name) fail("role assertion needs a role name");
                if (!at_end()) fail("trailing input");
                return RoleAssertion{c.name(), first, second, label};
            }
            expect(')');
            if (!at_end()) fail("trailing input");
            return ConceptAssertion{c, first, label};
        }
        skip_ws();
        std::size_t at = pos_;
        if (token() != "sub") {
            pos_ = at;
            fail("expected 'sub' or an individual");
        }
        Concept d = concept_expr();
        if (!at_end()) fail("trailing input");
        return Gci{c, d, label};
    }

private:
    const std::string& s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

const std::string kLabelPrefix = "# label: ";

// OWL functional syntax

std::string iri(const std::string& name) {
    static const char* hex = "0123456789ABCDEF";
    std::string out = ":";
    for (unsigned char c : name) {
        if (std::isalnum(c) || c == '_' || c == '-') {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out;
}

std::string owl(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::top: return "owl:Thing";
        case ConceptKind::bottom: return "owl:Nothing";
        case ConceptKind::name: return iri(c.name());
        case ConceptKind::negation: return "ObjectComplementOf(" + owl(c.operand()) + ")";
        case ConceptKind::conjunction: return "ObjectIntersectionOf(" + owl(c.left()) + " " + owl(c.right()) + ")";
        case ConceptKind::disjunction: return "ObjectUnionOf(" + owl(c.left()) + " " + owl(c.right()) + ")";
        case ConceptKind::implication:
            return "ObjectUnionOf(ObjectComplementOf(" + owl(c.left()) + ") " + owl(c.right()) + ")";
        case ConceptKind::exists: return "ObjectSomeValuesFrom(" + iri(c.role()) + " " + owl(c.operand()) + ")";
        case ConceptKind::forall: return "ObjectAllValuesFrom(" + iri(c.role()) + " " + owl(c.operand()) + ")";
        case ConceptKind::self: return "ObjectHasSelf(" + iri(c.role()) + ")";
    }
    return {};
}

}  // namespace

Concept parse_concept(const std::string& text) {
    LineParser p(text, 1);
    Concept c = p.concept_expr();
    if (!p.at_end()) p.fail("trailing input");
    return c;
}

std::string emit_kb(const KnowledgeBase& kb, KbFormat format) {
    std::string out;
    auto label_line = [&](const std::string& label) {
        if (!label.empty()) out += kLabelPrefix + label + "\n";
    };
    if (format == KbFormat::dltext) {
        for (const auto& a : kb.abox) {
            if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
                label_line(ca->label);
                out += to_dltext(ca->expr) + "(" + ca->individual + ")\n";
            } else {
                const auto& ra = std::get<RoleAssertion>(a);
                label_line(ra.label);
                out += ra.role + "(" + ra.subject + "," + ra.object + ")\n";
            }
        }
        for (const auto& g : kb.tbox) {
            label_line(g.label);
            out += to_dltext(g.lhs) + " sub " + to_dltext(g.rhs) + "\n";
        }
        return out;
    }
    out += "Prefix(:=<http://example.org/selfcq#>)\n";
    out += "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
    out += "Ontology(<http://example.org/selfcq>\n";
    for (const auto& a : kb.abox) {
        if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
            label_line(ca->label);
            out += "ClassAssertion(" + owl(ca->expr) + " " + iri(ca->individual) + ")\n";
        } else {
            const auto& ra = std::get<RoleAssertion>(a);
            label_line(ra.label);
            out += "ObjectPropertyAssertion(" + iri(ra.role) + " " + iri(ra.subject) + " " + iri(ra.object) + ")\n";
        }
    }
    for (const auto& g : kb.tbox) {
        label_line(g.label);
        out += "SubClassOf(" + owl(g.lhs) + " " + owl(g.rhs) + ")\n";
    }
    out += ")\n";
    return out;
}

KnowledgeBase parse_kb(const std::string& text, KbFormat format) {
    if (format == KbFormat::owlfs) throw ParseError("export-only format");
    KnowledgeBase kb;
    std::string pending;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            if (line.compare(first, kLabelPrefix.size(), kLabelPrefix) == 0)
                pending = line.substr(first + kLabelPrefix.size());
            continue;
        }
        LineParser p(line, i + 1);
        auto ax = p.axiom(pending);
        pending.clear();
        if (auto* g = std::get_if<Gci>(&ax))
            kb.tbox.push_back(std::move(*g));
        else if (auto* ca = std::get_if<ConceptAssertion>(&ax))
            kb.abox.emplace_back(std::move(*ca));
        else
            kb.abox.emplace_back(std::get<RoleAssertion>(std::move(ax)));
    }
    return kb;
}

// ---------------------------------------------------------------------------
// CQ text

std::string emit_cq(const Cq& q) {
    q.validate();
    std::vector<std::string> atoms;
    for (const auto& a : q.concept_atoms) atoms.push_back(a.name + "(" + a.var + ")");
    for (const auto& a : q.role_atoms) atoms.push_back(a.role + "(" + a.from + "," + a.to + ")");
    std::sort(atoms.begin(), atoms.end());
    std::string out = "answer:";
    for (const auto& v : q.answer) out += " " + v;
    out += "\n";
    for (const auto& a : atoms) out += a + "\n";
    return out;
}

Cq parse_cq(const std::string& text) {
    const auto lines = split_lines(text);
    Cq q;
    bool header = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!header) {
            const std::string prefix = "answer:";
            if (line.compare(0, prefix.size(), prefix) != 0)
                throw ParseError("unknown header, expected 'answer:'", i + 1, 1);
            std::istringstream vars(line.substr(prefix.size()));
            for (std::string v; vars >> v;) q.answer.push_back(v);
            header = true;
            continue;
        }
        LineParser p(line, i + 1);
        std::string name = p.token();
        p.expect('(');
        std::string x = p.token();
        p.skip_ws();
        if (p.peek() == ',') {
            p.expect(',');
            std::string y = p.token();
            p.expect(')');
            q.role_atoms.insert({name, x, y});
        } else {
            p.expect(')');
            q.concept_atoms.insert({name, x});
        }
        if (!p.at_end()) p.fail("trailing input");
    }
    if (!header) throw QueryError("degenerate query");
    q.validate();
    return q;
}

// ---------------------------------------------------------------------------
// Interpretations

std::string emit_interp(const Interpretation& interp) {
    json j;
    j["domain"] = json::array();
    for (const auto& e : interp.domain()) j["domain"].push_back(e);
    j["concepts"] = json::object();
    for (const auto& [name, ext] : interp.concepts()) j["concepts"][name] = json(std::vector<Element>(ext.begin(), ext.end()));
    j["roles"] = json::object();
    for (const auto& [role, rel] : interp.roles()) {
        json pairs = json::array();
        for (const auto& [d, e] : rel) pairs.push_back(json::array({d, e}));
        j["roles"][role] = pairs;
    }
    j["individuals"] = json::object();
    for (const auto& [a, e] : interp.individuals()) j["individuals"][a] = e;
    return j.dump(1) + "\n";
}

Interpretation parse_interp(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("schema: interpretation must be a JSON object");
    for (const auto& [k, v] : j.items())
        if (k != "domain" && k != "concepts" && k != "roles" && k != "individuals")
            throw ParseError("schema: unknown key \"" + k + "\"");
    if (!j.contains("domain") || !j["domain"].is_array()) throw ParseError("schema: \"domain\" must be an array");

    Interpretation out;
    for (const auto& e : j["domain"]) {
        if (!e.is_string()) throw ParseError("schema: domain elements must be strings");
        out.add_element(e.get<std::string>());
    }
    auto element = [&](const json& e, const std::string& where) {
        if (!e.is_string()) throw ParseError("schema: " + where + " must list strings");
        std::string s = e.get<std::string>();
        if (!out.has_element(s)) throw ParseError("element \"" + s + "\" of " + where + " is outside the domain");
        return s;
    };
    if (j.contains("concepts")) {
        if (!j["concepts"].is_object()) throw ParseError("schema: \"concepts\" must be an object");
        for (const auto& [name, ext] : j["concepts"].items()) {
            if (!ext.is_array()) throw ParseError("schema: concept " + name + " must be an array");
            for (const auto& e : ext) out.add_concept(name, element(e, "concept " + name));
        }
    }
    if (j.contains("roles")) {
        if (!j["roles"].is_object()) throw ParseError("schema: \"roles\" must be an object");
        for (const auto& [role, rel] : j["roles"].items()) {
            if (!rel.is_array()) throw ParseError("schema: role " + role + " must be an array");
            for (const auto& p : rel) {
                if (!p.is_array() || p.size() != 2) throw ParseError("schema: role " + role + " must list pairs");
                out.add_role(role, element(p[0], "role " + role), element(p[1], "role " + role));
            }
        }
    }
    if (j.contains("individuals")) {
        if (!j["individuals"].is_object()) throw ParseError("schema: \"individuals\" must be an object");
        for (const auto& [a, e] : j["individuals"].items()) out.set_individual(a, element(e, "individual " + a));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("cannot write " + path);
}

}  // namespace selfcq
