#include "adicalg/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "adicalg/errors.hpp"

namespace adicalg {

PolyRing::PolyRing(CoeffField f, std::vector<std::string> v) : field(f), vars(std::move(v)) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) fail(ErrorKind::Domain, "duplicate variable name '" + vars[i] + "'");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

RingPtr make_ring(CoeffField field, std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(field, std::move(vars));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) fail(ErrorKind::RingMismatch, "operands live in different rings");
}

void require_same_ring(const Poly& a, const Poly& b) { require_same_ring(a.ring(), b.ring()); }

namespace {

// storage order: the library default grevlex (first variable cheapest)
bool storage_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

bool storage_greater(const Term& a, const Term& b) { return storage_less(b.mono, a.mono); }

} // namespace

Poly Poly::zero(RingPtr ring) {
    Poly p;
    p.ring_ = std::move(ring);
    return p;
}

Poly Poly::constant(RingPtr ring, mpq_class c) {
    Poly p;
    p.ring_ = std::move(ring);
    c = p.ring_->field.canon(c);
    if (!CoeffField::is_zero(c)) p.terms_.push_back({Monomial::one(p.ring_->nvars()), std::move(c)});
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
    Poly p;
    p.ring_ = std::move(ring);
    assert(index < p.ring_->nvars());
    Monomial m = Monomial::one(p.ring_->nvars());
    m.e[index] = 1;
    p.terms_.push_back({std::move(m), mpq_class(1)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    std::map<Monomial, mpq_class> acc;
    const CoeffField& field = ring->field;
    for (auto& t : terms) {
        assert(t.mono.nvars() == ring->nvars());
        auto [it, fresh] = acc.try_emplace(t.mono, field.canon(t.coeff));
        if (!fresh) it->second = field.add(it->second, field.canon(t.coeff));
    }
    Poly p;
    p.ring_ = std::move(ring);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!CoeffField::is_zero(c)) p.terms_.push_back({m, c});
    std::sort(p.terms_.begin(), p.terms_.end(), storage_greater);
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.deg());
    return d;
}

bool Poly::depends_on(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono.depends_on(var)) return true;
    return false;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(*this, o);
    const CoeffField& field = ring_->field;
    Poly r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            mpq_class c = field.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!CoeffField::is_zero(c)) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (storage_less(o.terms_[j].mono, terms_[i].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = ring_->field.neg(t.coeff);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*this, o);
    const CoeffField& field = ring_->field;
    std::map<Monomial, mpq_class> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono.mul(b.mono);
            mpq_class c = field.mul(a.coeff, b.coeff);
            auto [it, fresh] = acc.try_emplace(std::move(m), c);
            if (!fresh) it->second = field.add(it->second, c);
        }
    }
    Poly r;
    r.ring_ = ring_;
    for (auto& [m, c] : acc)
        if (!CoeffField::is_zero(c)) r.terms_.push_back({m, c});
    std::sort(r.terms_.begin(), r.terms_.end(), storage_greater);
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r = Poly::one(ring_);
    Poly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Poly Poly::scaled(const mpq_class& c) const {
    const CoeffField& field = ring_->field;
    mpq_class cc = field.canon(c);
    if (CoeffField::is_zero(cc)) return Poly::zero(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = field.mul(t.coeff, cc);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (ring_ != o.ring_ && (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
    assert(!terms_.empty());
    const Term* best = &terms_[0];
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (order.greater(terms_[i].mono, best->mono)) best = &terms_[i];
    return *best;
}

Poly Poly::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    const mpq_class& lc = leading_term(order).coeff;
    if (lc == 1) return *this;
    return scaled(ring_->field.inv(lc));
}

Poly Poly::substitute(const RingPtr& target, std::span<const Poly> images) const {
    assert(images.size() == ring_->nvars());
    if (!(ring_->field == target->field)) fail(ErrorKind::RingMismatch, "substitution across coefficient fields");
    // cache powers per variable
    std::vector<std::vector<Poly>> powers(ring_->nvars());
    auto power_of = [&](std::size_t var, unsigned k) -> const Poly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Poly::one(target));
        while (cache.size() <= k) cache.push_back(cache.back() * images[var]);
        return cache[k];
    };
    Poly acc = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly term = Poly::constant(target, t.coeff);
        for (std::size_t v = 0; v < ring_->nvars(); ++v)
            if (t.mono.e[v]) term = term * power_of(v, t.mono.e[v]);
        acc = acc + term;
    }
    return acc;
}

Poly Poly::lift_to(const RingPtr& target, std::span<const std::size_t> var_map) const {
    assert(var_map.size() == ring_->nvars());
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = Monomial::one(target->nvars());
        for (std::size_t v = 0; v < ring_->nvars(); ++v) m.e[var_map[v]] = t.mono.e[v];
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(target, std::move(terms));
}

Poly Poly::project_to(const RingPtr& target, std::span<const std::size_t> var_map) const {
    assert(var_map.size() == target->nvars());
    std::vector<char> mapped(ring_->nvars(), 0);
    for (auto i : var_map) mapped[i] = 1;
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = Monomial::one(target->nvars());
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            if (!t.mono.e[v]) continue;
            if (!mapped[v]) fail(ErrorKind::Domain, "projection drops a variable still in use");
        }
        for (std::size_t v = 0; v < target->nvars(); ++v) m.e[v] = t.mono.e[var_map[v]];
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(target, std::move(terms));
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.coeff;
        bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (negative) c = -c;
        std::string mono;
        for (std::size_t v = 0; v < t.mono.e.size(); ++v) {
            if (!t.mono.e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[v];
            if (t.mono.e[v] > 1) mono += "^" + std::to_string(t.mono.e[v]);
        }
        if (mono.empty()) {
            out += coeff_to_string(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += coeff_to_string(c) + "*" + mono;
        }
        first = false;
    }
    return out;
}

} // namespace adicalg
