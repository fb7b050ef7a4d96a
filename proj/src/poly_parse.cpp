#include <cctype>

#include "adicalg/errors.hpp"
#include "adicalg/poly.hpp"

namespace adicalg {

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*
//                         term := factor (('*')? factor)*
//                         factor := ('-')* primary ('^' uint)?
//                         primary := rational | identifier | '(' expr ')'
class PolyParser {
public:
    PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& what) {
        fail(ErrorKind::SyntaxError,
             what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    bool at_primary() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected integer");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1u << 20) error("exponent too large");
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) error("expected a polynomial factor");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) error("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string num(text_.substr(start, pos_ - start));
            // a '/' directly after a numeric literal is a rational coefficient
            std::size_t save = pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                std::size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (dstart == pos_) error("expected denominator digits");
                std::string den(text_.substr(dstart, pos_ - dstart));
                return Poly::constant(ring_, mpq_class(num + "/" + den));
            }
            pos_ = save;
            return Poly::constant(ring_, mpq_class(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '@'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx) error("unknown variable '" + name + "'");
            return Poly::variable(ring_, *idx);
        }
        error("unexpected character '" + std::string(1, c) + "'");
    }

    Poly factor() {
        skip_ws();
        bool neg = false;
        while (eat('-')) neg = !neg;
        Poly p = primary();
        if (eat('^')) p = p.pow(parse_uint());
        return neg ? -p : p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            if (eat('*')) {
                p = p * factor();
            } else if (at_primary()) {
                p = p * factor(); // implicit multiplication
            } else {
                return p;
            }
        }
    }

    Poly expr() {
        skip_ws();
        Poly p = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    RingPtr ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

} // namespace adicalg
