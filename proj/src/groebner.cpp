#include "adicalg/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "adicalg/errors.hpp"

namespace adicalg {

namespace {

// Terms sorted descending under the working order.
using WPoly = std::vector<Term>;

WPoly to_working(const Poly& p, const MonomialOrder& o) {
    WPoly w(p.terms().begin(), p.terms().end());
    std::sort(w.begin(), w.end(), [&](const Term& a, const Term& b) { return o.greater(a.mono, b.mono); });
    return w;
}

// a - c * x^m * b, both inputs descending, result descending
WPoly sub_scaled(const WPoly& a, const WPoly& b, const Monomial& m, const mpq_class& c, const CoeffField& field,
                 const MonomialOrder& o) {
    WPoly r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono.mul(m);
        int cmp = o.compare(a[i].mono, bm);
        if (cmp > 0) {
            r.push_back(a[i++]);
        } else if (cmp < 0) {
            r.push_back({std::move(bm), field.neg(field.mul(c, b[j].coeff))});
            ++j;
        } else {
            mpq_class nc = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
            if (!CoeffField::is_zero(nc)) r.push_back({a[i].mono, std::move(nc)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back({b[j].mono.mul(m), field.neg(field.mul(c, b[j].coeff))});
    return r;
}

struct Reducer {
    const std::vector<WPoly>* basis;
    const CoeffField* field;
    const MonomialOrder* order;

    // full tail reduction
    WPoly reduce(WPoly h) const {
        WPoly rem;
        while (!h.empty()) {
            bool reduced = false;
            for (const auto& g : *basis) {
                if (g.empty()) continue;
                if (g.front().mono.divides(h.front().mono)) {
                    Monomial q = h.front().mono.div(g.front().mono);
                    mpq_class c = field->div(h.front().coeff, g.front().coeff);
                    h = sub_scaled(h, g, q, c, *field, *order);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                rem.push_back(h.front());
                h.erase(h.begin());
            }
        }
        return rem;
    }
};

WPoly s_poly(const WPoly& f, const WPoly& g, const CoeffField& field, const MonomialOrder& o) {
    const Monomial lcm = Monomial::lcm(f.front().mono, g.front().mono);
    // (x^(lcm/LMf)/LCf) f - (x^(lcm/LMg)/LCg) g
    WPoly a;
    a.reserve(f.size());
    Monomial qf = lcm.div(f.front().mono);
    mpq_class cf = field.inv(f.front().coeff);
    for (const auto& t : f) a.push_back({t.mono.mul(qf), field.mul(cf, t.coeff)});
    Monomial qg = lcm.div(g.front().mono);
    mpq_class cg = field.inv(g.front().coeff);
    return sub_scaled(a, g, qg, cg, field, o);
}

} // namespace

Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    const RingPtr& ring = p.ring();
    for (const auto& g : basis) require_same_ring(g.ring(), ring);
    std::vector<WPoly> wb;
    wb.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) wb.push_back(to_working(g, order));
    Reducer red{&wb, &ring->field, &order};
    WPoly r = red.reduce(to_working(p, order));
    return Poly::from_terms(ring, std::move(r));
}

std::vector<Poly> groebner(const std::vector<Poly>& gens, const MonomialOrder& order) {
    RingPtr ring;
    for (const auto& g : gens) {
        if (!g.is_zero()) {
            if (!ring) ring = g.ring();
            else require_same_ring(g.ring(), ring);
        }
    }
    if (!ring) return {}; // zero ideal
    const CoeffField& field = ring->field;

    std::vector<WPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(to_working(g, order));

    Reducer red{&basis, &field, &order};

    using Pair = std::pair<std::size_t, std::size_t>;
    auto pair_key = [&](const Pair& p) {
        return Monomial::lcm(basis[p.first].front().mono, basis[p.second].front().mono);
    };
    // selection: smallest lcm degree, then structurally smallest lcm, then indices
    auto select_less = [&](const Pair& a, const Pair& b) {
        Monomial la = pair_key(a), lb = pair_key(b);
        unsigned da = la.deg(), db = lb.deg();
        if (da != db) return da < db;
        if (!(la == lb)) return la < lb;
        return a < b;
    };

    std::set<Pair> pending;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        Pair best = *pending.begin();
        for (const auto& p : pending)
            if (select_less(p, best)) best = p;
        pending.erase(best);
        auto [i, j] = best;

        const Monomial& li = basis[i].front().mono;
        const Monomial& lj = basis[j].front().mono;
        if (li.coprime(lj)) continue; // product criterion
        Monomial lcm = Monomial::lcm(li, lj);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].front().mono.divides(lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) chained = true; // chain criterion
        }
        if (chained) continue;

        WPoly r = red.reduce(s_poly(basis[i], basis[j], field, order));
        if (r.empty()) continue;
        std::size_t n = basis.size();
        basis.push_back(std::move(r));
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<char> removed(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && !removed[i]; ++j) {
            if (i == j || removed[j]) continue;
            const Monomial& li = basis[i].front().mono;
            const Monomial& lj = basis[j].front().mono;
            if (lj.divides(li) && (!(lj == li) || j < i)) removed[i] = 1;
        }
    }
    std::vector<WPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!removed[i]) minimal.push_back(std::move(basis[i]));

    // tail-reduce each element against the others
    std::vector<Poly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<WPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Reducer tr{&others, &field, &order};
        WPoly r = tr.reduce(minimal[i]);
        assert(!r.empty());
        mpq_class inv = field.inv(r.front().coeff);
        for (auto& t : r) t.coeff = field.mul(t.coeff, inv);
        out.push_back(Poly::from_terms(ring, std::move(r)));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        int c = order.compare(a.leading_term(order).mono, b.leading_term(order).mono);
        return c < 0;
    });
    return out;
}

} // namespace adicalg
