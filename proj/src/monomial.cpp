#include "adicalg/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "adicalg/errors.hpp"

namespace adicalg {

unsigned Monomial::deg() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    assert(e.size() == m.e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::mul(const Monomial& m) const {
    assert(e.size() == m.e.size());
    Monomial r{e};
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
}

Monomial Monomial::div(const Monomial& m) const {
    assert(m.divides(*this));
    Monomial r{e};
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.e.size() == b.e.size());
    Monomial r{a.e};
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& m) const {
    assert(e.size() == m.e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && m.e[i] != 0) return false;
    return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& m) const {
    return std::lexicographical_compare_three_way(e.begin(), e.end(), m.e.begin(), m.e.end());
}

MonomialOrder::MonomialOrder(Kind kind, std::size_t nvars, std::vector<std::size_t> prefix)
    : kind_(kind), nvars_(nvars), prefix_(std::move(prefix)), in_prefix_(nvars, 0) {
    for (auto i : prefix_) {
        if (i >= nvars_) fail(ErrorKind::Domain, "block order prefix variable out of range");
        in_prefix_[i] = 1;
    }
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return MonomialOrder(Kind::Grevlex, nvars, {}); }

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return MonomialOrder(Kind::Lex, nvars, {}); }

MonomialOrder MonomialOrder::block(std::size_t nvars, std::vector<std::size_t> prefix) {
    return MonomialOrder(Kind::Block, nvars, std::move(prefix));
}

namespace {

int compare_grevlex_subset(const Monomial& a, const Monomial& b, const std::vector<char>* skip) {
    long da = 0, db = 0;
    const std::size_t n = a.e.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (skip && (*skip)[i]) continue;
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // graded reverse lexicographic with the first variable cheapest: on ties
    // the monomial with the smaller exponent at the first differing position
    // is the greater one, so normal forms prefer early (base) variables
    for (std::size_t i = 0; i < n; ++i) {
        if (skip && (*skip)[i]) continue;
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    assert(a.e.size() == nvars_ && b.e.size() == nvars_);
    switch (kind_) {
        case Kind::Grevlex:
            return compare_grevlex_subset(a, b, nullptr);
        case Kind::Lex:
            for (std::size_t i = 0; i < nvars_; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case Kind::Block:
            for (auto i : prefix_)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return compare_grevlex_subset(a, b, &in_prefix_);
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: {
            std::string k = "block:";
            for (std::size_t i = 0; i < prefix_.size(); ++i) {
                if (i) k += ',';
                k += std::to_string(prefix_[i]);
            }
            return k;
        }
    }
    return "?";
}

} // namespace adicalg
