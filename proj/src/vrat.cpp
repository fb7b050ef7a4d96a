#include "adicalg/vrat.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace adicalg {

UniPoly::UniPoly(CoeffField field, std::vector<mpq_class> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& x : c_) x = field_.canon(x);
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && CoeffField::is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(CoeffField field, const mpq_class& c) { return UniPoly(field, {c}); }

UniPoly UniPoly::variable(CoeffField field) { return UniPoly(field, {mpq_class(0), mpq_class(1)}); }

int UniPoly::low_order() const {
    assert(!is_zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!CoeffField::is_zero(c_[i])) return static_cast<int>(i);
    return 0;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.sub(r[i], o.c_[i]);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(field_);
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scaled(const mpq_class& c) const {
    std::vector<mpq_class> r = c_;
    for (auto& x : r) x = field_.mul(x, field_.canon(c));
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<mpq_class> r(c_.size() + k, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(field_, std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    assert(!d.is_zero());
    UniPoly q(field_), r = *this;
    std::vector<mpq_class> qc(c_.size(), mpq_class(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        mpq_class f = field_.div(r.c_.back(), d.c_.back());
        qc[static_cast<std::size_t>(shift)] = f;
        r = r - d.scaled(f).shifted(static_cast<unsigned>(shift));
    }
    return {UniPoly(field_, std::move(qc)), std::move(r)};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(c_.back()));
}

VRat::VRat(CoeffField field)
    : field_(field), shift_(0), num_(UniPoly::zero(field)), den_(UniPoly::constant(field, 1)) {}

VRat::VRat(CoeffField field, int shift, UniPoly num, UniPoly den)
    : field_(field), shift_(shift), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

VRat VRat::constant(CoeffField field, const mpq_class& c) {
    return VRat(field, 0, UniPoly::constant(field, c), UniPoly::constant(field, 1));
}

VRat VRat::monomial(CoeffField field, const mpq_class& c, int power) {
    return VRat(field, power, UniPoly::constant(field, c), UniPoly::constant(field, 1));
}

VRat VRat::make(int shift, UniPoly num, UniPoly den) {
    CoeffField field = num.field();
    if (den.is_zero()) fail(ErrorKind::Domain, "zero denominator");
    return VRat(field, shift, std::move(num), std::move(den));
}

void VRat::normalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = UniPoly::constant(field_, 1);
        return;
    }
    int a = num_.low_order();
    if (a > 0) {
        std::vector<mpq_class> coeffs(num_.coeffs().begin() + a, num_.coeffs().end());
        num_ = UniPoly(field_, std::move(coeffs));
        shift_ += a;
    }
    int b = den_.low_order();
    if (b > 0) {
        std::vector<mpq_class> coeffs(den_.coeffs().begin() + b, den_.coeffs().end());
        den_ = UniPoly(field_, std::move(coeffs));
        shift_ -= b;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    mpq_class lc = den_.coeffs().back();
    if (lc != 1) {
        mpq_class inv = field_.inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::optional<int> VRat::order() const {
    if (is_zero()) return std::nullopt;
    return shift_;
}

VRat VRat::operator+(const VRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int s = std::min(shift_, o.shift_);
    UniPoly a = num_.shifted(static_cast<unsigned>(shift_ - s)) * o.den_;
    UniPoly b = o.num_.shifted(static_cast<unsigned>(o.shift_ - s)) * den_;
    return VRat(field_, s, a + b, den_ * o.den_);
}

VRat VRat::operator-() const {
    if (is_zero()) return *this;
    return VRat(field_, shift_, num_.scaled(mpq_class(-1)), den_);
}

VRat VRat::operator-(const VRat& o) const { return *this + (-o); }

VRat VRat::operator*(const VRat& o) const {
    if (is_zero() || o.is_zero()) return VRat(field_);
    return VRat(field_, shift_ + o.shift_, num_ * o.num_, den_ * o.den_);
}

VRat VRat::operator/(const VRat& o) const {
    if (o.is_zero()) fail(ErrorKind::Domain, "division by zero value");
    if (is_zero()) return *this;
    return VRat(field_, shift_ - o.shift_, num_ * o.den_, den_ * o.num_);
}

VRat VRat::pow(int n) const {
    if (n == 0) return VRat::constant(field_, 1);
    if (n < 0) return VRat::constant(field_, 1) / pow(-n);
    VRat r = VRat::constant(field_, 1);
    VRat base = *this;
    unsigned k = static_cast<unsigned>(n);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool VRat::operator==(const VRat& o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
}

bool VRat::is_laurent() const { return den_.degree() == 0; }

std::string VRat::to_string() const {
    if (is_zero()) return "0";
    auto laurent_str = [&](const UniPoly& p, int shift) {
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
            mpq_class c = p.coeffs()[i];
            if (CoeffField::is_zero(c)) continue;
            bool negative = sgn(c) < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (negative) c = -c;
            int e = shift + static_cast<int>(i);
            if (e == 0) {
                out += coeff_to_string(c);
            } else {
                std::string mono = "v";
                if (e != 1) mono += "^" + std::to_string(e);
                out += (c == 1) ? mono : coeff_to_string(c) + "*" + mono;
            }
            first = false;
        }
        return out;
    };
    if (is_laurent()) return laurent_str(num_.scaled(field_.inv(den_.coeffs()[0])), shift_);
    return "(" + laurent_str(num_, shift_) + ")/(" + laurent_str(den_, 0) + ")";
}

namespace {

class VRatParser {
public:
    VRatParser(CoeffField field, std::string_view text) : field_(field), text_(text) {}

    VRat parse() {
        VRat r = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void error(const std::string& what) {
        fail(ErrorKind::SyntaxError,
             what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_primary() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    int parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (1 << 20)) error("exponent too large");
            ++pos_;
        }
        return neg ? static_cast<int>(-v) : static_cast<int>(v);
    }

    VRat primary() {
        skip_ws();
        if (pos_ >= text_.size()) error("expected a value");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            VRat r = expr();
            if (!eat(')')) error("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return VRat::constant(field_, mpq_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (c == 'v') {
            ++pos_;
            if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                error("only the uniformizer variable 'v' is allowed in point values");
            return VRat::monomial(field_, 1, 1);
        }
        error("unexpected character '" + std::string(1, c) + "'");
    }

    VRat factor() {
        skip_ws();
        bool neg = false;
        while (eat('-')) neg = !neg;
        VRat r = primary();
        if (eat('^')) r = r.pow(parse_int());
        return neg ? -r : r;
    }

    VRat term() {
        VRat r = factor();
        for (;;) {
            if (eat('*')) r = r * factor();
            else if (eat('/')) r = r / factor();
            else if (at_primary()) r = r * factor();
            else return r;
        }
    }

    VRat expr() {
        skip_ws();
        VRat r = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }

    CoeffField field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

VRat parse_vrat(CoeffField field, std::string_view text) { return VRatParser(field, text).parse(); }

} // namespace adicalg
