#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adicalg/field.hpp"
#include "adicalg/monomial.hpp"

namespace adicalg {

struct SessionOptions {
    CoeffField field = CoeffField::rationals();
    std::string uniformizer = "w";
    MonomialOrder::Kind gb_order = MonomialOrder::Kind::Grevlex;
    unsigned degree_bound = 6;
    bool json = false;
};

// One parsed line of the session language.  Bracket clauses keep their item
// text verbatim (normalized for whitespace); semantic parsing happens at run
// time against the ring in scope.
struct Stmt {
    enum class Kind {
        Ring,
        Ideal,
        Map,
        Point,
        Gb,
        Sat,
        Blowup,
        Transition,
        Compose,
        Extend,
        Finmod,
        Genchart,
        Tube,
        Spc,
        Lift,
        Descend,
        Normalize,
        Normblowup,
        Check,
        Show,
        Empty,
    };

    Kind kind{};
    std::size_t line = 0;
    std::string name;              // binding name; empty for commands
    std::vector<std::string> refs; // referenced bindings, in order
    std::vector<std::string> words;
    std::vector<std::pair<std::string, std::vector<std::string>>> clauses;
    std::map<std::string, std::string> opts;

    bool operator==(const Stmt& o) const {
        return kind == o.kind && name == o.name && refs == o.refs && words == o.words && clauses == o.clauses &&
               opts == o.opts;
    }
};

struct Session {
    std::vector<Stmt> stmts;
    bool operator==(const Session& o) const { return stmts == o.stmts; }
};

// Line-based grammar, `#` comments, one binding or command per line.  Checks
// name uniqueness and that references resolve to previously bound names.
Session parse_session(const std::string& text);

// Canonical text form; render + parse is the identity on parsed sessions.
std::string render_session(const Session& s);

// Executes every statement; text output streams as it is produced, JSON is
// emitted at the end of a successful run.
void run_session(const Session& s, const SessionOptions& opts, std::ostream& out);
std::string run_session(const Session& s, const SessionOptions& opts);

} // namespace adicalg
