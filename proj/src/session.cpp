#include "adicalg/session.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

#include "json.hpp"

#include "adicalg/blowup.hpp"
#include "adicalg/generic.hpp"
#include "adicalg/normal.hpp"

namespace adicalg {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// parsing

struct Token {
    enum class Type { Ident, Number, Eq, Arrow, Clause, Opt };
    Type type;
    std::string text;                // ident/number/opt name
    std::vector<std::string> items;  // clause items
    std::size_t col = 0;
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& expected) {
    fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + expected);
}

std::string trim(std::string s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_items(const std::string& text) {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cur = trim(cur);
    if (!cur.empty() || !items.empty()) items.push_back(cur);
    return items;
}

std::vector<Token> tokenize_line(const std::string& text, std::size_t line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') break;
        std::size_t col = i + 1;
        if (c == '=') {
            toks.push_back({Token::Type::Eq, "=", {}, col});
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < n && text[i + 1] == '>') {
            toks.push_back({Token::Type::Arrow, "->", {}, col});
            i += 2;
            continue;
        }
        if (c == '-' && i + 1 < n && text[i + 1] == '-') {
            i += 2;
            std::size_t start = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '-' || text[i] == '_'))
                ++i;
            if (start == i) syntax_error(line, col, "expected an option name after '--'");
            toks.push_back({Token::Type::Opt, text.substr(start, i - start), {}, col});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            toks.push_back({Token::Type::Number, text.substr(start, i - start), {}, col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            if (i < n && text[i] == '?') ++i; // the empty? keyword
            std::string word = text.substr(start, i - start);
            if (i < n && text[i] == '[') {
                std::size_t close = text.find(']', i);
                if (close == std::string::npos) syntax_error(line, i + 1, "unterminated '['");
                Token t{Token::Type::Clause, word, split_items(text.substr(i + 1, close - i - 1)), col};
                toks.push_back(std::move(t));
                i = close + 1;
                continue;
            }
            toks.push_back({Token::Type::Ident, std::move(word), {}, col});
            continue;
        }
        syntax_error(line, col, std::string("unexpected character '") + c + "'");
    }
    return toks;
}

const std::map<std::string, Stmt::Kind>& keyword_table() {
    static const std::map<std::string, Stmt::Kind> table{
        {"ring", Stmt::Kind::Ring},         {"ideal", Stmt::Kind::Ideal},
        {"map", Stmt::Kind::Map},           {"point", Stmt::Kind::Point},
        {"gb", Stmt::Kind::Gb},             {"sat", Stmt::Kind::Sat},
        {"blowup", Stmt::Kind::Blowup},     {"transition", Stmt::Kind::Transition},
        {"compose", Stmt::Kind::Compose},   {"extend", Stmt::Kind::Extend},
        {"finmod", Stmt::Kind::Finmod},     {"genchart", Stmt::Kind::Genchart},
        {"tube", Stmt::Kind::Tube},         {"spc", Stmt::Kind::Spc},
        {"lift", Stmt::Kind::Lift},         {"descend", Stmt::Kind::Descend},
        {"normalize", Stmt::Kind::Normalize}, {"normblowup", Stmt::Kind::Normblowup},
        {"check", Stmt::Kind::Check},       {"show", Stmt::Kind::Show},
        {"empty?", Stmt::Kind::Empty},
    };
    return table;
}

const char* kind_keyword(Stmt::Kind k) {
    for (const auto& [kw, kind] : keyword_table())
        if (kind == k) return kw.c_str();
    return "?";
}

bool is_binding_kind(Stmt::Kind k) {
    switch (k) {
        case Stmt::Kind::Ring:
        case Stmt::Kind::Ideal:
        case Stmt::Kind::Map:
        case Stmt::Kind::Point:
        case Stmt::Kind::Blowup:
        case Stmt::Kind::Compose:
        case Stmt::Kind::Extend:
        case Stmt::Kind::Finmod:
        case Stmt::Kind::Genchart:
        case Stmt::Kind::Tube:
        case Stmt::Kind::Lift:
        case Stmt::Kind::Descend:
        case Stmt::Kind::Normalize:
        case Stmt::Kind::Normblowup:
            return true;
        default:
            return false;
    }
}

Stmt parse_stmt(const std::vector<Token>& toks, std::size_t line) {
    Stmt stmt;
    stmt.line = line;
    std::size_t i = 0;
    auto need = [&](const char* what) -> const Token& {
        if (i >= toks.size()) syntax_error(line, toks.empty() ? 1 : toks.back().col, std::string("expected ") + what);
        return toks[i];
    };

    const Token& head = need("a command keyword");
    auto it = keyword_table().find(head.text);
    if (head.type != Token::Type::Ident || it == keyword_table().end())
        syntax_error(line, head.col, "unknown command '" + head.text + "'");
    stmt.kind = it->second;
    ++i;

    if (is_binding_kind(stmt.kind)) {
        const Token& name = need("a binding name");
        if (name.type != Token::Type::Ident) syntax_error(line, name.col, "expected a binding name");
        stmt.name = name.text;
        ++i;
        const Token& eq = need("'='");
        if (eq.type != Token::Type::Eq) syntax_error(line, eq.col, "expected '=' after the binding name");
        ++i;
    }

    while (i < toks.size()) {
        const Token& t = toks[i];
        switch (t.type) {
            case Token::Type::Ident:
                if (i + 1 < toks.size() && toks[i + 1].type == Token::Type::Eq) {
                    if (i + 2 >= toks.size()) syntax_error(line, toks[i + 1].col, "expected a value after '='");
                    stmt.opts[t.text] = toks[i + 2].text;
                    i += 3;
                } else {
                    stmt.refs.push_back(t.text);
                    ++i;
                }
                break;
            case Token::Type::Number:
                stmt.words.push_back(t.text);
                ++i;
                break;
            case Token::Type::Clause:
                stmt.clauses.emplace_back(t.text, t.items);
                ++i;
                break;
            case Token::Type::Opt: {
                if (i + 1 >= toks.size() || (toks[i + 1].type != Token::Type::Number && toks[i + 1].type != Token::Type::Ident))
                    syntax_error(line, t.col, "expected a value after '--" + t.text + "'");
                stmt.opts[t.text] = toks[i + 1].text;
                i += 2;
                break;
            }
            case Token::Type::Arrow:
                stmt.words.push_back("->");
                ++i;
                break;
            case Token::Type::Eq:
                syntax_error(line, t.col, "unexpected '='");
        }
    }

    // check properties come through refs; move the first one to words
    if (stmt.kind == Stmt::Kind::Check) {
        if (stmt.refs.size() != 2) syntax_error(line, head.col, "expected: check <property> <atlas>");
        stmt.words.insert(stmt.words.begin(), stmt.refs.front());
        stmt.refs.erase(stmt.refs.begin());
    }
    return stmt;
}

} // namespace

Session parse_session(const std::string& text) {
    Session session;
    std::set<std::string> bound;
    std::istringstream in(text);
    std::string linetext;
    std::size_t lineno = 0;
    while (std::getline(in, linetext)) {
        ++lineno;
        std::vector<Token> toks = tokenize_line(linetext, lineno);
        if (toks.empty()) continue;
        Stmt stmt = parse_stmt(toks, lineno);
        if (!stmt.name.empty()) {
            if (bound.count(stmt.name))
                fail(ErrorKind::SyntaxError,
                     "line " + std::to_string(lineno) + ": name '" + stmt.name + "' is already bound");
        }
        for (const auto& ref : stmt.refs)
            if (!bound.count(ref))
                fail(ErrorKind::UnboundName, "line " + std::to_string(lineno) + ": '" + ref + "' is not bound");
        if (!stmt.name.empty()) bound.insert(stmt.name);
        session.stmts.push_back(std::move(stmt));
    }
    return session;
}

std::string render_session(const Session& s) {
    std::string out;
    for (const auto& stmt : s.stmts) {
        std::string line = kind_keyword(stmt.kind);
        if (!stmt.name.empty()) line += " " + stmt.name + " =";
        std::size_t wi = 0, ri = 0;
        // words and refs are interleaved per kind; emit property words first
        if (stmt.kind == Stmt::Kind::Check && !stmt.words.empty()) line += " " + stmt.words[wi++];
        bool arrow_pending = std::find(stmt.words.begin(), stmt.words.end(), "->") != stmt.words.end();
        for (; ri < stmt.refs.size(); ++ri) {
            line += " " + stmt.refs[ri];
            if (arrow_pending && ri == 0) line += " ->";
        }
        for (; wi < stmt.words.size(); ++wi)
            if (stmt.words[wi] != "->") line += " " + stmt.words[wi];
        for (const auto& [key, items] : stmt.clauses) {
            line += " " + key + "[";
            for (std::size_t k = 0; k < items.size(); ++k) {
                if (k) line += ", ";
                line += items[k];
            }
            line += "]";
        }
        for (const auto& [key, value] : stmt.opts) {
            if (key.size() == 1) line += " " + key + "=" + value;
            else line += " --" + key + " " + value;
        }
        out += line + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// execution

namespace {

struct NamedIdeal {
    FpAlgebra algebra;
    std::vector<Poly> gens;
};

struct BoundPoint {
    FpAlgebra algebra;
    Point point;
};

struct BoundLift {
    std::size_t chart_index = 0;
    FpAlgebra chart_algebra;
    Point point;
};

using Value = std::variant<FpAlgebra, NamedIdeal, RingMap, BoundPoint, ChartAtlas, ComposedBlowup, GenericChart,
                           BoundLift, NormalizationResult, FiniteModification>;

std::string poly_list(const std::vector<Poly>& ps) {
    std::string out = "[";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ", ";
        out += ps[i].to_string();
    }
    return out + "]";
}

json poly_list_json(const std::vector<Poly>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(p.to_string());
    return arr;
}

std::string var_list(const RingPtr& ring) {
    std::string out = "[";
    for (std::size_t i = 0; i < ring->vars.size(); ++i) {
        if (i) out += ", ";
        out += ring->vars[i];
    }
    return out + "]";
}

std::string algebra_summary(const FpAlgebra& a) {
    std::string out = "vars" + var_list(a.ring());
    out += " rels" + poly_list(a.relations().basis());
    out += " idef" + poly_list(a.idef_gens());
    return out;
}

json algebra_json(const FpAlgebra& a) {
    json j;
    j["vars"] = a.ring()->vars;
    j["rels"] = poly_list_json(a.relations().basis());
    j["idef"] = poly_list_json(a.idef_gens());
    return j;
}

std::string map_images(const RingMap& f) {
    std::string out = "[";
    const auto& vars = f.source().ring()->vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i] + " -> " + f.images()[i].to_string();
    }
    return out + "]";
}

json map_json(const RingMap& f) {
    json j = json::object();
    const auto& vars = f.source().ring()->vars;
    for (std::size_t i = 0; i < vars.size(); ++i) j[vars[i]] = f.images()[i].to_string();
    return j;
}

std::string point_summary(const FpAlgebra& a, const Point& p) {
    std::string out = "e=" + std::to_string(p.e()) + " vals[";
    for (std::size_t i = 0; i < p.values().size(); ++i) {
        if (i) out += ", ";
        out += a.ring()->vars[i] + " -> " + p.values()[i].to_string();
    }
    return out + "]";
}

json point_json(const FpAlgebra& a, const Point& p) {
    json j;
    j["e"] = p.e();
    json vals = json::object();
    for (std::size_t i = 0; i < p.values().size(); ++i) vals[a.ring()->vars[i]] = p.values()[i].to_string();
    j["vals"] = vals;
    return j;
}

std::string frac_string(const std::string& base, const Fraction& f) {
    return f.num.to_string() + " / " + base + "^" + std::to_string(f.exp);
}

std::string atlas_text(const std::string& name, const ChartAtlas& atlas) {
    std::string out = "atlas " + name + ": base " + algebra_summary(atlas.base);
    out += " center" + poly_list(atlas.ideal.gens());
    out += atlas.kind == AtlasKind::Normalized ? " kind=normalized" : " kind=plain";
    for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
        const Chart& c = atlas.charts[i];
        out += "\n  chart " + std::to_string(i) + ": distinguished[" + c.distinguished.to_string() + "] " +
               algebra_summary(c.algebra);
        out += " map" + map_images(c.from_base);
        if (!c.adjoined.empty()) {
            out += " adjoined[";
            for (std::size_t k = 0; k < c.adjoined.size(); ++k) {
                if (k) out += ", ";
                out += frac_string(atlas.base.uniformizer_name(), c.adjoined[k]);
            }
            out += "]";
        }
        if (c.empty) out += " (empty)";
    }
    return out;
}

json atlas_json(const std::string& name, const ChartAtlas& atlas) {
    json j;
    j["atlas"] = name;
    j["base"] = algebra_json(atlas.base);
    j["center"] = poly_list_json(atlas.ideal.gens());
    j["kind"] = atlas.kind == AtlasKind::Normalized ? "normalized" : "plain";
    json charts = json::array();
    for (const auto& c : atlas.charts) {
        json cj;
        cj["distinguished"] = c.distinguished.to_string();
        cj["algebra"] = algebra_json(c.algebra);
        cj["structure"] = map_json(c.from_base);
        if (!c.adjoined.empty()) {
            json adj = json::array();
            for (const auto& f : c.adjoined) adj.push_back(frac_string(atlas.base.uniformizer_name(), f));
            cj["adjoined"] = adj;
        }
        cj["empty"] = c.empty;
        charts.push_back(std::move(cj));
    }
    j["charts"] = std::move(charts);
    return j;
}

unsigned parse_unsigned(const std::string& text, std::size_t line, const std::string& what) {
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what + " must be a number");
    return static_cast<unsigned>(std::stoul(text));
}

class Executor {
public:
    Executor(const SessionOptions& opts) : opts_(opts) {}

    void run(const Session& session, std::ostream& out) {
        out_ = &out;
        for (const auto& stmt : session.stmts) exec(stmt);
        if (opts_.json) {
            json top;
            top["format"] = 1;
            top["results"] = results_;
            out << top.dump(2) << "\n";
        }
    }

private:
    SessionOptions opts_;
    std::ostream* out_ = nullptr;
    std::map<std::string, Value> env_;
    json results_ = json::array();

    void emit(const std::string& text, json j) {
        if (!opts_.json) *out_ << text << "\n";
        results_.push_back(std::move(j));
    }

    template <class T>
    const T& get(const std::string& name, std::size_t line, const char* what) {
        auto it = env_.find(name);
        if (it == env_.end())
            fail(ErrorKind::UnboundName, "line " + std::to_string(line) + ": '" + name + "' is not bound");
        const T* v = std::get_if<T>(&it->second);
        if (!v) fail(ErrorKind::Domain, "line " + std::to_string(line) + ": '" + name + "' is not " + what);
        return *v;
    }

    const std::vector<std::string>& clause(const Stmt& stmt, const std::string& key, bool required,
                                           std::size_t occurrence = 0) const {
        static const std::vector<std::string> none;
        std::size_t seen = 0;
        for (const auto& [k, items] : stmt.clauses) {
            if (k != key) continue;
            if (seen == occurrence) return items;
            ++seen;
        }
        if (required)
            fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": missing " + key + "[...] clause");
        return none;
    }

    std::vector<Poly> parse_polys(const RingPtr& ring, const std::vector<std::string>& items) const {
        std::vector<Poly> ps;
        ps.reserve(items.size());
        for (const auto& item : items) ps.push_back(parse_poly(ring, item));
        return ps;
    }

    // item of the shape `num / base^k`, `num / base`, or plain `num`
    Fraction parse_fraction(const RingPtr& ring, const std::string& item, const Poly& base) const {
        int depth = 0;
        std::size_t slash = std::string::npos;
        for (std::size_t i = 0; i < item.size(); ++i) {
            if (item[i] == '(') ++depth;
            if (item[i] == ')') --depth;
            if (item[i] == '/' && depth == 0) slash = i;
        }
        if (slash != std::string::npos) {
            std::string right = trim(item.substr(slash + 1));
            std::size_t caret = right.rfind('^');
            std::string base_text = right;
            unsigned exp = 1;
            if (caret != std::string::npos) {
                std::string exp_text = trim(right.substr(caret + 1));
                bool numeric = !exp_text.empty() &&
                               std::all_of(exp_text.begin(), exp_text.end(),
                                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
                if (numeric) {
                    base_text = trim(right.substr(0, caret));
                    exp = static_cast<unsigned>(std::stoul(exp_text));
                }
            }
            // only treat the slash as a denominator when the right side is a
            // power of the expected base; otherwise it is coefficient syntax
            try {
                Poly parsed = adicalg::parse_poly(ring, base_text);
                if (parsed == base) return Fraction{adicalg::parse_poly(ring, trim(item.substr(0, slash))), exp};
            } catch (const Error&) {
            }
        }
        return Fraction{adicalg::parse_poly(ring, item), 0};
    }

    FpAlgebra algebra_of(const Stmt& stmt, const std::string& name) {
        auto it = env_.find(name);
        if (it == env_.end())
            fail(ErrorKind::UnboundName, "line " + std::to_string(stmt.line) + ": '" + name + "' is not bound");
        if (const FpAlgebra* a = std::get_if<FpAlgebra>(&it->second)) return *a;
        if (const NormalizationResult* n = std::get_if<NormalizationResult>(&it->second)) return n->closure;
        if (const GenericChart* g = std::get_if<GenericChart>(&it->second)) return g->algebra;
        fail(ErrorKind::Domain, "line " + std::to_string(stmt.line) + ": '" + name + "' is not an algebra");
    }

    void exec(const Stmt& stmt) {
        switch (stmt.kind) {
            case Stmt::Kind::Ring: exec_ring(stmt); break;
            case Stmt::Kind::Ideal: exec_ideal(stmt); break;
            case Stmt::Kind::Map: exec_map(stmt); break;
            case Stmt::Kind::Point: exec_point(stmt); break;
            case Stmt::Kind::Gb: exec_gb(stmt); break;
            case Stmt::Kind::Sat: exec_sat(stmt); break;
            case Stmt::Kind::Blowup: exec_blowup(stmt); break;
            case Stmt::Kind::Transition: exec_transition(stmt); break;
            case Stmt::Kind::Compose: exec_compose(stmt); break;
            case Stmt::Kind::Extend: exec_extend(stmt); break;
            case Stmt::Kind::Finmod: exec_finmod(stmt); break;
            case Stmt::Kind::Genchart: exec_genchart(stmt); break;
            case Stmt::Kind::Tube: exec_tube(stmt); break;
            case Stmt::Kind::Spc: exec_spc(stmt); break;
            case Stmt::Kind::Lift: exec_lift(stmt); break;
            case Stmt::Kind::Descend: exec_descend(stmt); break;
            case Stmt::Kind::Normalize: exec_normalize(stmt); break;
            case Stmt::Kind::Normblowup: exec_normblowup(stmt); break;
            case Stmt::Kind::Check: exec_check(stmt); break;
            case Stmt::Kind::Show: exec_show(stmt); break;
            case Stmt::Kind::Empty: exec_empty(stmt); break;
        }
    }

    void exec_ring(const Stmt& stmt) {
        const auto& vars = clause(stmt, "vars", true);
        if (vars.empty()) fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": vars[] is empty");
        if (vars[0] != opts_.uniformizer)
            fail(ErrorKind::MissingUniformizer, "line " + std::to_string(stmt.line) + ": the first variable must be '" +
                                                    opts_.uniformizer + "'");
        RingPtr ring = make_ring(opts_.field, vars);
        std::vector<Poly> rels = parse_polys(ring, clause(stmt, "rels", false));
        std::vector<Poly> idef = parse_polys(ring, clause(stmt, "idef", false));
        env_.emplace(stmt.name, FpAlgebra::make(ring, std::move(rels), std::move(idef), opts_.uniformizer));
    }

    void exec_ideal(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        std::vector<Poly> gens = parse_polys(a.ring(), clause(stmt, "gens", true));
        env_.emplace(stmt.name, NamedIdeal{std::move(a), std::move(gens)});
    }

    void exec_map(const Stmt& stmt) {
        FpAlgebra src = algebra_of(stmt, stmt.refs.at(0));
        FpAlgebra tgt = algebra_of(stmt, stmt.refs.at(1));
        std::vector<Poly> images(src.ring()->nvars(), Poly::zero(tgt.ring()));
        std::vector<char> given(src.ring()->nvars(), 0);
        images[0] = tgt.uniformizer();
        given[0] = 1;
        for (const auto& item : clause(stmt, "images", true)) {
            std::size_t arrow = item.find("->");
            if (arrow == std::string::npos)
                fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": image items look like x -> f");
            std::string var = trim(item.substr(0, arrow));
            auto idx = src.ring()->index_of(var);
            if (!idx)
                fail(ErrorKind::SyntaxError,
                     "line " + std::to_string(stmt.line) + ": unknown source variable '" + var + "'");
            images[*idx] = parse_poly(tgt.ring(), trim(item.substr(arrow + 2)));
            given[*idx] = 1;
        }
        for (std::size_t i = 0; i < given.size(); ++i)
            if (!given[i])
                fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": missing image for variable '" +
                                                 src.ring()->vars[i] + "'");
        env_.emplace(stmt.name, RingMap::make(std::move(src), std::move(tgt), std::move(images)));
    }

    void exec_point(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        unsigned e = 1;
        if (auto it = stmt.opts.find("e"); it != stmt.opts.end()) e = parse_unsigned(it->second, stmt.line, "e");
        std::vector<VRat> values(a.ring()->nvars(), VRat::zero(opts_.field));
        std::vector<char> given(a.ring()->nvars(), 0);
        values[0] = VRat::monomial(opts_.field, 1, static_cast<int>(e));
        given[0] = 1;
        for (const auto& item : clause(stmt, "vals", true)) {
            std::size_t arrow = item.find("->");
            if (arrow == std::string::npos)
                fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": value items look like x -> v^2");
            std::string var = trim(item.substr(0, arrow));
            auto idx = a.ring()->index_of(var);
            if (!idx)
                fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": unknown variable '" + var + "'");
            values[*idx] = parse_vrat(opts_.field, trim(item.substr(arrow + 2)));
            given[*idx] = 1;
        }
        for (std::size_t i = 0; i < given.size(); ++i)
            if (!given[i])
                fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": missing value for variable '" +
                                                 a.ring()->vars[i] + "'");
        Point p(e, std::move(values));
        point_validate(a, p);
        env_.emplace(stmt.name, BoundPoint{std::move(a), std::move(p)});
    }

    void exec_gb(const Stmt& stmt) {
        const NamedIdeal& ni = get<NamedIdeal>(stmt.refs.at(0), stmt.line, "an ideal");
        std::vector<Poly> gens = ni.gens;
        const auto& rels = ni.algebra.relations().gens();
        gens.insert(gens.end(), rels.begin(), rels.end());
        auto order = opts_.gb_order == MonomialOrder::Kind::Lex ? MonomialOrder::lex(ni.algebra.ring()->nvars())
                                                                : MonomialOrder::grevlex(ni.algebra.ring()->nvars());
        std::vector<Poly> gb = groebner(gens, order);
        json j;
        j["cmd"] = "gb";
        j["name"] = stmt.refs[0];
        j["basis"] = poly_list_json(gb);
        emit("gb " + stmt.refs[0] + ": " + poly_list(gb), std::move(j));
    }

    void exec_sat(const Stmt& stmt) {
        const NamedIdeal& ni = get<NamedIdeal>(stmt.refs.at(0), stmt.line, "an ideal");
        const auto& by = clause(stmt, "by", true);
        if (by.size() != 1)
            fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": by[...] takes one element");
        Poly g = parse_poly(ni.algebra.ring(), by[0]);
        std::vector<Poly> gens = ni.gens;
        const auto& rels = ni.algebra.relations().gens();
        gens.insert(gens.end(), rels.begin(), rels.end());
        Ideal sat = Ideal(ni.algebra.ring(), std::move(gens)).saturation(g);
        json j;
        j["cmd"] = "sat";
        j["name"] = stmt.refs[0];
        j["by"] = g.to_string();
        j["basis"] = poly_list_json(sat.basis());
        emit("sat " + stmt.refs[0] + " by " + g.to_string() + ": " + poly_list(sat.basis()), std::move(j));
    }

    AdmissibleIdeal center_argument(const Stmt& stmt, FpAlgebra* out_alg, std::size_t gens_occurrence = 0) {
        // either <algebra> gens[...] or a bound ideal name
        const std::string& ref = stmt.refs.at(0);
        auto it = env_.find(ref);
        if (it != env_.end() && std::holds_alternative<NamedIdeal>(it->second) && gens_occurrence == 0) {
            const NamedIdeal& ni = std::get<NamedIdeal>(it->second);
            if (out_alg) *out_alg = ni.algebra;
            return AdmissibleIdeal::make(ni.algebra, ni.gens);
        }
        FpAlgebra a = algebra_of(stmt, ref);
        std::vector<Poly> gens = parse_polys(a.ring(), clause(stmt, "gens", true, gens_occurrence));
        if (out_alg) *out_alg = a;
        return AdmissibleIdeal::make(a, std::move(gens));
    }

    void exec_blowup(const Stmt& stmt) {
        FpAlgebra a;
        AdmissibleIdeal center = center_argument(stmt, &a);
        env_.emplace(stmt.name, blowup_charts(a, center));
    }

    void exec_transition(const Stmt& stmt) {
        const ChartAtlas& atlas = get<ChartAtlas>(stmt.refs.at(0), stmt.line, "an atlas");
        if (stmt.words.size() != 2)
            fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": expected two chart indices");
        std::size_t i = parse_unsigned(stmt.words[0], stmt.line, "chart index");
        std::size_t j = parse_unsigned(stmt.words[1], stmt.line, "chart index");
        RingIso iso = chart_transition(atlas, i, j);
        json jd;
        jd["cmd"] = "transition";
        jd["name"] = stmt.refs[0];
        jd["charts"] = {i, j};
        jd["forward"] = map_json(iso.forward());
        jd["backward"] = map_json(iso.backward());
        emit("transition " + stmt.refs[0] + " " + std::to_string(i) + " " + std::to_string(j) + ": forward" +
                 map_images(iso.forward()) + " backward" + map_images(iso.backward()),
             std::move(jd));
    }

    void exec_compose(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        std::vector<Poly> g1 = parse_polys(a.ring(), clause(stmt, "gens", true, 0));
        std::vector<Poly> g2 = parse_polys(a.ring(), clause(stmt, "gens", true, 1));
        env_.emplace(stmt.name,
                     compose_blowups(a, AdmissibleIdeal::make(a, std::move(g1)), AdmissibleIdeal::make(a, std::move(g2))));
    }

    void exec_extend(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        const auto& gcl = clause(stmt, "g", true);
        if (gcl.size() != 1)
            fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": g[...] takes one element");
        Poly g = parse_poly(a.ring(), gcl[0]);
        std::vector<Fraction> locals;
        for (const auto& item : clause(stmt, "locals", true)) locals.push_back(parse_fraction(a.ring(), item, g));
        AdmissibleIdeal j = extend_admissible_ideal(a, g, locals);
        env_.emplace(stmt.name, NamedIdeal{a, j.gens()});
    }

    void exec_finmod(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        std::vector<Fraction> fracs;
        for (const auto& item : clause(stmt, "fracs", true))
            fracs.push_back(parse_fraction(a.ring(), item, a.uniformizer()));
        FiniteModification fm = finite_modification_to_blowup(a, fracs);
        emit("finmod " + stmt.name + ": chart " + std::to_string(fm.chart_index) + " center" +
                 poly_list(fm.center.gens()),
             json{{"cmd", "finmod"}, {"name", stmt.name}, {"chart", fm.chart_index},
                  {"center", poly_list_json(fm.center.gens())}});
        env_.emplace(stmt.name, std::move(fm));
    }

    void exec_genchart(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        unsigned n = 1;
        if (auto it = stmt.opts.find("n"); it != stmt.opts.end()) n = parse_unsigned(it->second, stmt.line, "n");
        env_.emplace(stmt.name, generic_chart(a, n));
    }

    void exec_tube(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        std::vector<Poly> zgens = parse_polys(a.ring(), clause(stmt, "gens", true));
        unsigned n = 1;
        if (auto it = stmt.opts.find("n"); it != stmt.opts.end()) n = parse_unsigned(it->second, stmt.line, "n");
        env_.emplace(stmt.name, tube_chart(a, zgens, n));
    }

    void exec_spc(const Stmt& stmt) {
        const BoundPoint& bp = get<BoundPoint>(stmt.refs.at(0), stmt.line, "a point");
        const auto& fcl = clause(stmt, "f", true);
        if (fcl.size() != 1)
            fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": f[...] takes one element");
        Poly f = parse_poly(bp.algebra.ring(), fcl[0]);
        bool inside = spc_contains(bp.algebra, bp.point, f);
        emit("spc " + stmt.refs[0] + " (" + f.to_string() + "): " + (inside ? "true" : "false"),
             json{{"cmd", "spc"}, {"point", stmt.refs[0]}, {"f", f.to_string()}, {"contains", inside}});
    }

    void exec_lift(const Stmt& stmt) {
        const ChartAtlas& atlas = get<ChartAtlas>(stmt.refs.at(0), stmt.line, "an atlas");
        const BoundPoint& bp = get<BoundPoint>(stmt.refs.at(1), stmt.line, "a point");
        LiftedPoint lifted = lift_point(atlas, bp.point);
        emit("lift " + stmt.name + ": chart " + std::to_string(lifted.chart_index),
             json{{"cmd", "lift"}, {"name", stmt.name}, {"chart", lifted.chart_index}});
        env_.emplace(stmt.name,
                     BoundLift{lifted.chart_index, atlas.charts[lifted.chart_index].algebra, std::move(lifted.point)});
    }

    void exec_descend(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        FpAlgebra b = algebra_of(stmt, stmt.refs.at(1));
        std::vector<Fraction> images(a.ring()->nvars(), Fraction{Poly::zero(b.ring()), 0});
        std::vector<char> given(a.ring()->nvars(), 0);
        images[0] = Fraction{b.uniformizer(), 0};
        given[0] = 1;
        for (const auto& item : clause(stmt, "fracs", true)) {
            std::size_t arrow = item.find("->");
            if (arrow == std::string::npos)
                fail(ErrorKind::SyntaxError,
                     "line " + std::to_string(stmt.line) + ": items look like x -> c / " + opts_.uniformizer + "^k");
            std::string var = trim(item.substr(0, arrow));
            auto idx = a.ring()->index_of(var);
            if (!idx)
                fail(ErrorKind::SyntaxError,
                     "line " + std::to_string(stmt.line) + ": unknown source variable '" + var + "'");
            images[*idx] = parse_fraction(b.ring(), trim(item.substr(arrow + 2)), b.uniformizer());
            given[*idx] = 1;
        }
        for (std::size_t i = 0; i < given.size(); ++i)
            if (!given[i])
                fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": missing image for variable '" +
                                                 a.ring()->vars[i] + "'");
        DescentResult res = descend_morphism(a, b, images);
        if (res.map) {
            emit("descend " + stmt.name + ": model map " + map_images(*res.map),
                 json{{"cmd", "descend"}, {"name", stmt.name}, {"result", "model-map"}, {"images", map_json(*res.map)}});
            env_.emplace(stmt.name, *res.map);
        } else {
            const std::string& var = a.ring()->vars[res.witness];
            emit("descend " + stmt.name + ": NeedsBlowup(" + var + ")",
                 json{{"cmd", "descend"}, {"name", stmt.name}, {"result", "needs-blowup"}, {"witness", var}});
        }
    }

    void exec_normalize(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        unsigned bound = opts_.degree_bound;
        if (auto it = stmt.opts.find("degree-bound"); it != stmt.opts.end())
            bound = parse_unsigned(it->second, stmt.line, "degree bound");
        env_.emplace(stmt.name, normalize(a, bound));
    }

    void exec_normblowup(const Stmt& stmt) {
        FpAlgebra a;
        AdmissibleIdeal center = center_argument(stmt, &a);
        unsigned bound = opts_.degree_bound;
        if (auto it = stmt.opts.find("degree-bound"); it != stmt.opts.end())
            bound = parse_unsigned(it->second, stmt.line, "degree bound");
        env_.emplace(stmt.name, normalized_blowup(a, center, bound));
    }

    void exec_check(const Stmt& stmt) {
        const std::string& property = stmt.words.at(0);
        const ChartAtlas& atlas = get<ChartAtlas>(stmt.refs.at(0), stmt.line, "an atlas");
        std::vector<std::string> lines;
        json details = json::array();
        bool ok = true;

        auto record = [&](const std::string& label, bool pass) {
            lines.push_back(label + ": " + (pass ? "PASS" : "FAIL"));
            details.push_back(json{{"case", label}, {"pass", pass}});
            ok = ok && pass;
        };

        if (property == "principal") {
            for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
                const Chart& c = atlas.charts[i];
                if (c.empty) {
                    lines.push_back("chart " + std::to_string(i) + ": EMPTY");
                    details.push_back(json{{"case", "chart " + std::to_string(i)}, {"pass", "empty"}});
                    continue;
                }
                std::vector<std::size_t> up(atlas.base.ring()->nvars());
                for (std::size_t k = 0; k < up.size(); ++k) up[k] = k;
                std::vector<Poly> lhs, rhs;
                for (const auto& g : atlas.ideal.gens()) lhs.push_back(g.lift_to(c.algebra.ring(), up));
                rhs.push_back(c.distinguished);
                const auto& rels = c.algebra.relations().gens();
                lhs.insert(lhs.end(), rels.begin(), rels.end());
                rhs.insert(rhs.end(), rels.begin(), rels.end());
                bool pass = Ideal(c.algebra.ring(), lhs).equals(Ideal(c.algebra.ring(), rhs));
                record("chart " + std::to_string(i), pass);
            }
        } else if (property == "torsionfree") {
            for (std::size_t i = 0; i < atlas.charts.size(); ++i)
                record("chart " + std::to_string(i), atlas.charts[i].algebra.is_torsion_free());
        } else if (property == "transitions") {
            for (std::size_t i = 0; i < atlas.charts.size(); ++i)
                for (std::size_t j = i + 1; j < atlas.charts.size(); ++j) {
                    std::string label = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    try {
                        chart_transition(atlas, i, j);
                        record(label, true);
                    } catch (const Error& e) {
                        if (e.kind() == ErrorKind::EmptyOverlap) {
                            lines.push_back(label + ": EMPTY");
                            details.push_back(json{{"case", label}, {"pass", "empty"}});
                        } else {
                            record(label, false);
                        }
                    }
                }
        } else if (property == "cocycle") {
            for (std::size_t i = 0; i < atlas.charts.size(); ++i)
                for (std::size_t j = 0; j < atlas.charts.size(); ++j)
                    for (std::size_t k = 0; k < atlas.charts.size(); ++k) {
                        if (i == j || j == k || i == k) continue;
                        std::string label =
                            "triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                        std::vector<std::size_t> s{i, j, k};
                        std::sort(s.begin(), s.end());
                        try {
                            RingMap ij = overlap_transition(atlas, i, j, s);
                            RingMap jk = overlap_transition(atlas, j, k, s);
                            RingMap ik = overlap_transition(atlas, i, k, s);
                            RingMap composite = RingMap::compose(ij, jk);
                            bool pass = true;
                            for (std::size_t v = 0; v < composite.images().size() && pass; ++v)
                                pass = ik.target().elements_equal(composite.images()[v], ik.images()[v]);
                            record(label, pass);
                        } catch (const Error& e) {
                            if (e.kind() == ErrorKind::EmptyOverlap) {
                                lines.push_back(label + ": EMPTY");
                                details.push_back(json{{"case", label}, {"pass", "empty"}});
                            } else {
                                record(label, false);
                            }
                        }
                    }
        } else {
            fail(ErrorKind::SyntaxError, "line " + std::to_string(stmt.line) + ": unknown check property '" + property +
                                             "' (principal, torsionfree, transitions, cocycle)");
        }

        std::string head = "check " + property + " " + stmt.refs[0] + ":";
        std::string text = head;
        for (const auto& l : lines) text += "\n  " + l;
        emit(std::move(text), json{{"cmd", "check"}, {"property", property}, {"name", stmt.refs[0]},
                                   {"ok", ok}, {"cases", details}});
    }

    void exec_show(const Stmt& stmt) {
        const std::string& name = stmt.refs.at(0);
        auto it = env_.find(name);
        if (it == env_.end())
            fail(ErrorKind::UnboundName, "line " + std::to_string(stmt.line) + ": '" + name + "' is not bound");
        const Value& v = it->second;
        if (const FpAlgebra* a = std::get_if<FpAlgebra>(&v)) {
            emit("ring " + name + ": " + algebra_summary(*a), json{{"cmd", "show"}, {"name", name}, {"ring", algebra_json(*a)}});
        } else if (const NamedIdeal* ni = std::get_if<NamedIdeal>(&v)) {
            std::vector<Poly> gens = ni->gens;
            const auto& rels = ni->algebra.relations().gens();
            gens.insert(gens.end(), rels.begin(), rels.end());
            Ideal full(ni->algebra.ring(), std::move(gens));
            emit("ideal " + name + ": gens" + poly_list(ni->gens) + " gb" + poly_list(full.basis()),
                 json{{"cmd", "show"}, {"name", name}, {"gens", poly_list_json(ni->gens)},
                      {"gb", poly_list_json(full.basis())}});
        } else if (const RingMap* f = std::get_if<RingMap>(&v)) {
            emit("map " + name + ": " + map_images(*f), json{{"cmd", "show"}, {"name", name}, {"images", map_json(*f)}});
        } else if (const BoundPoint* p = std::get_if<BoundPoint>(&v)) {
            emit("point " + name + ": " + point_summary(p->algebra, p->point),
                 json{{"cmd", "show"}, {"name", name}, {"point", point_json(p->algebra, p->point)}});
        } else if (const ChartAtlas* at = std::get_if<ChartAtlas>(&v)) {
            emit(atlas_text(name, *at), json{{"cmd", "show"}, {"name", name}, {"atlas", atlas_json(name, *at)}});
        } else if (const ComposedBlowup* cb = std::get_if<ComposedBlowup>(&v)) {
            std::string text = atlas_text(name, cb->product);
            for (std::size_t i = 0; i < cb->first_chart.size(); ++i)
                text += "\n  chart " + std::to_string(i) + " -> first-atlas chart " +
                        std::to_string(cb->first_chart[i]) + " via " + map_images(cb->to_first[i]);
            json j{{"cmd", "show"}, {"name", name}, {"atlas", atlas_json(name, cb->product)}};
            json maps = json::array();
            for (std::size_t i = 0; i < cb->first_chart.size(); ++i)
                maps.push_back(json{{"first_chart", cb->first_chart[i]}, {"images", map_json(cb->to_first[i])}});
            j["factors"] = std::move(maps);
            emit(std::move(text), std::move(j));
        } else if (const GenericChart* g = std::get_if<GenericChart>(&v)) {
            emit("chart " + name + ": n=" + std::to_string(g->n) + " " + algebra_summary(g->algebra),
                 json{{"cmd", "show"}, {"name", name}, {"n", g->n}, {"algebra", algebra_json(g->algebra)}});
        } else if (const BoundLift* l = std::get_if<BoundLift>(&v)) {
            emit("lift " + name + ": chart " + std::to_string(l->chart_index) + " point " +
                     point_summary(l->chart_algebra, l->point),
                 json{{"cmd", "show"}, {"name", name}, {"chart", l->chart_index},
                      {"point", point_json(l->chart_algebra, l->point)}});
        } else if (const NormalizationResult* nr = std::get_if<NormalizationResult>(&v)) {
            std::string text = "normalization " + name + ": complete=" + (nr->complete ? "true" : "false");
            text += " adjoined[";
            for (std::size_t i = 0; i < nr->adjoined.size(); ++i) {
                if (i) text += ", ";
                text += frac_string(nr->closure.uniformizer_name(), nr->adjoined[i]);
            }
            text += "] closure " + algebra_summary(nr->closure);
            json adj = json::array();
            for (const auto& f : nr->adjoined) adj.push_back(frac_string(nr->closure.uniformizer_name(), f));
            emit(std::move(text), json{{"cmd", "show"}, {"name", name}, {"complete", nr->complete},
                                       {"adjoined", adj}, {"closure", algebra_json(nr->closure)}});
        } else if (const FiniteModification* fm = std::get_if<FiniteModification>(&v)) {
            emit("finmod " + name + ": center" + poly_list(fm->center.gens()) + " chart " +
                     std::to_string(fm->chart_index) + " presented " + algebra_summary(fm->presented),
                 json{{"cmd", "show"}, {"name", name}, {"center", poly_list_json(fm->center.gens())},
                      {"chart", fm->chart_index}, {"presented", algebra_json(fm->presented)}});
        }
    }

    void exec_empty(const Stmt& stmt) {
        FpAlgebra a = algebra_of(stmt, stmt.refs.at(0));
        bool empty = is_generic_fiber_empty(a);
        emit("empty? " + stmt.refs[0] + ": " + (empty ? "true" : "false"),
             json{{"cmd", "empty?"}, {"name", stmt.refs[0]}, {"empty", empty}});
    }
};

} // namespace

void run_session(const Session& session, const SessionOptions& opts, std::ostream& out) {
    Executor exec(opts);
    exec.run(session, out);
}

std::string run_session(const Session& session, const SessionOptions& opts) {
    std::ostringstream out;
    run_session(session, opts, out);
    return out.str();
}

} // namespace adicalg
