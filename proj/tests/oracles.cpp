#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracles {

namespace {

void enumerate(std::size_t nvars, unsigned d, std::vector<std::uint32_t>& buf, std::size_t pos,
               std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        buf[pos] = d;
        out.push_back(Monomial{buf});
        return;
    }
    for (unsigned k = 0; k <= d; ++k) {
        buf[pos] = k;
        enumerate(nvars, d - k, buf, pos + 1, out);
    }
}

// exact row reduction; returns the rank
std::size_t row_reduce(std::vector<std::vector<mpq_class>>& rows, const CoeffField& field, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && CoeffField::is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        mpq_class inv = field.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = field.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || CoeffField::is_zero(rows[r][col])) continue;
            mpq_class factor = rows[r][col];
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> buf(nvars, 0);
    for (unsigned k = 0; k <= d; ++k) enumerate(nvars, k, buf, 0, out);
    return out;
}

bool naive_member(const Poly& p, const std::vector<Poly>& gens, unsigned cofactor_degree) {
    const RingPtr& ring = p.ring();
    const CoeffField& field = ring->field;
    std::vector<Monomial> cof = monomials_up_to(ring->nvars(), cofactor_degree);

    // columns: one unknown per (generator, cofactor monomial); rows: product
    // monomials; the augmented column carries p
    std::map<Monomial, std::size_t> row_of;
    std::vector<std::vector<mpq_class>> columns;
    auto row_index = [&](const Monomial& m) {
        auto [it, fresh] = row_of.try_emplace(m, row_of.size());
        return it->second;
    };

    for (const auto& g : gens) {
        for (const auto& m : cof) {
            std::vector<std::pair<std::size_t, mpq_class>> entries;
            for (const auto& t : g.terms()) entries.emplace_back(row_index(t.mono.mul(m)), t.coeff);
            columns.emplace_back();
            for (auto& [r, c] : entries) {
                if (columns.back().size() <= r) columns.back().resize(r + 1, mpq_class(0));
                columns.back()[r] = field.add(columns.back()[r], c);
            }
        }
    }
    for (const auto& t : p.terms()) row_index(t.mono);

    const std::size_t nrows = row_of.size();
    const std::size_t ncols = columns.size();
    std::vector<std::vector<mpq_class>> rows(nrows, std::vector<mpq_class>(ncols + 1, mpq_class(0)));
    for (std::size_t c = 0; c < ncols; ++c)
        for (std::size_t r = 0; r < columns[c].size(); ++r) rows[r][c] = columns[c][r];
    for (const auto& t : p.terms()) rows[row_of[t.mono]][ncols] = t.coeff;

    // consistent iff the rank does not grow with the augmented column
    std::vector<std::vector<mpq_class>> plain = rows;
    for (auto& r : plain) r.pop_back();
    std::size_t rank_plain = row_reduce(plain, field, ncols);
    std::size_t rank_aug = row_reduce(rows, field, ncols + 1);
    return rank_plain == rank_aug;
}

bool power_member(const Ideal& ideal, const Poly& p, unsigned max_power) {
    Poly q = Poly::one(p.ring());
    for (unsigned m = 1; m <= max_power; ++m) {
        q = q * p;
        if (ideal.contains(q)) return true;
    }
    return false;
}

bool power_open(const FpAlgebra& a, const std::vector<Poly>& j_gens, unsigned max_power) {
    std::vector<Poly> gens = j_gens;
    const auto& rels = a.relations().gens();
    gens.insert(gens.end(), rels.begin(), rels.end());
    Ideal target(a.ring(), std::move(gens));
    Ideal idef(a.ring(), a.idef_gens());
    Ideal power = Ideal::unit(a.ring());
    for (unsigned m = 1; m <= max_power; ++m) {
        power = power.product(idef);
        bool inside = true;
        for (const auto& g : power.gens())
            if (!target.contains(g)) {
                inside = false;
                break;
            }
        if (inside) return true;
    }
    return false;
}

std::size_t bounded_member_dimension(const Ideal& ideal, const std::vector<std::size_t>& keep_vars, unsigned d) {
    const RingPtr& ring = ideal.ring();
    const CoeffField& field = ring->field;
    std::vector<char> keep(ring->nvars(), 0);
    for (auto v : keep_vars) keep[v] = 1;

    std::vector<Monomial> all = monomials_up_to(ring->nvars(), d);
    std::vector<Monomial> basis;
    for (const auto& m : all) {
        bool ok = true;
        for (std::size_t v = 0; v < ring->nvars(); ++v)
            if (m.e[v] && !keep[v]) ok = false;
        if (ok) basis.push_back(m);
    }

    // q = sum c_m m lies in I iff sum c_m nf(m) = 0; each residue monomial
    // contributes one linear condition
    std::map<Monomial, std::size_t> row_of;
    std::vector<Poly> reduced;
    for (const auto& m : basis) {
        Poly r = ideal.normal_form(Poly::from_terms(ring, {{m, mpq_class(1)}}));
        for (const auto& t : r.terms()) row_of.try_emplace(t.mono, row_of.size());
        reduced.push_back(std::move(r));
    }
    std::vector<std::vector<mpq_class>> rows(row_of.size(), std::vector<mpq_class>(basis.size(), mpq_class(0)));
    for (std::size_t c = 0; c < reduced.size(); ++c)
        for (const auto& t : reduced[c].terms()) rows[row_of[t.mono]][c] = t.coeff;
    std::size_t rank = row_reduce(rows, field, basis.size());
    return basis.size() - rank;
}

std::vector<Fraction> integral_fractions(const FpAlgebra& a, unsigned deg_bound, unsigned denom_bound) {
    std::vector<Fraction> out;
    std::vector<std::string> seen;
    const Poly w = a.uniformizer();
    for (const auto& m : monomials_up_to(a.ring()->nvars(), deg_bound)) {
        if (m.is_one()) continue;
        Poly c = a.nf(Poly::from_terms(a.ring(), {{m, mpq_class(1)}}));
        if (c.is_zero()) continue;
        for (unsigned denom = 1; denom <= denom_bound; ++denom) {
            std::vector<Poly> gens{w.pow(denom)};
            const auto& rels = a.relations().gens();
            gens.insert(gens.end(), rels.begin(), rels.end());
            if (Ideal(a.ring(), std::move(gens)).contains(c)) continue; // already in w^m A
            if (!is_integral_element(a, c, denom)) continue;
            std::string key = c.to_string() + "/" + std::to_string(denom);
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(key);
            out.push_back(Fraction{c, denom});
        }
    }
    return out;
}

FpAlgebra adjoin_fractions(const FpAlgebra& a, const std::vector<Fraction>& fracs) {
    const std::size_t n = a.ring()->nvars();
    std::vector<std::string> vars = a.ring()->vars;
    for (std::size_t i = 0; i < fracs.size(); ++i) vars.push_back(fresh_var_name(vars, "y" + std::to_string(i + 1)));
    RingPtr ext = make_ring(a.ring()->field, std::move(vars));
    std::vector<std::size_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = i;

    std::vector<Poly> rels;
    for (const auto& r : a.relations().gens()) rels.push_back(r.lift_to(ext, up));
    Poly w = Poly::variable(ext, 0);
    for (std::size_t i = 0; i < fracs.size(); ++i)
        rels.push_back(w.pow(fracs[i].exp) * Poly::variable(ext, n + i) - fracs[i].num.lift_to(ext, up));
    Ideal sat = Ideal(ext, std::move(rels)).saturation(w);

    std::vector<Poly> idef;
    for (const auto& f : a.idef_gens()) idef.push_back(f.lift_to(ext, up));
    return FpAlgebra::make(ext, sat.gens(), std::move(idef), a.uniformizer_name());
}

bool fraction_in(const FpAlgebra& b, const Poly& c, unsigned m) {
    std::vector<Poly> gens{b.uniformizer().pow(m)};
    const auto& rels = b.relations().gens();
    gens.insert(gens.end(), rels.begin(), rels.end());
    return Ideal(b.ring(), std::move(gens)).contains(c);
}

Poly random_poly(const RingPtr& ring, std::mt19937& rng, unsigned deg, unsigned terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> degree(0, deg);
    std::vector<Term> ts;
    for (unsigned t = 0; t < terms; ++t) {
        unsigned d = degree(rng);
        Monomial m = Monomial::one(ring->nvars());
        for (unsigned k = 0; k < d; ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, ring->nvars() - 1);
            ++m.e[pick(rng)];
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        ts.push_back({std::move(m), mpq_class(c)});
    }
    return Poly::from_terms(ring, std::move(ts));
}

} // namespace oracles

namespace oracles {

std::vector<Poly> groebner_reference(const std::vector<Poly>& gens, const MonomialOrder& order) {
    RingPtr ring;
    for (const auto& g : gens)
        if (!g.is_zero()) ring = g.ring();
    if (!ring) return {};
    const CoeffField& field = ring->field;

    std::vector<Poly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);

    auto spoly = [&](const Poly& f, const Poly& g) {
        const Term& lf = f.leading_term(order);
        const Term& lg = g.leading_term(order);
        Monomial lcm = Monomial::lcm(lf.mono, lg.mono);
        Poly a = f * Poly::from_terms(ring, {{lcm.div(lf.mono), field.inv(lf.coeff)}});
        Poly b = g * Poly::from_terms(ring, {{lcm.div(lg.mono), field.inv(lg.coeff)}});
        return a - b;
    };

    std::size_t fixed = 0;
    while (fixed < basis.size()) {
        std::size_t upto = basis.size();
        for (std::size_t i = 0; i < upto; ++i)
            for (std::size_t j = i + 1; j < upto; ++j) {
                if (i < fixed && j < fixed) continue;
                Poly r = normal_form(spoly(basis[i], basis[j]), basis, order);
                if (!r.is_zero()) basis.push_back(std::move(r));
            }
        fixed = upto;
    }

    // minimalize and tail-reduce to the canonical form
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
            if (i == j) continue;
            const Monomial& li = basis[i].leading_term(order).mono;
            const Monomial& lj = basis[j].leading_term(order).mono;
            if (lj.divides(li) && (!(lj == li) || j < i)) drop = true;
        }
        if (!drop) minimal.push_back(basis[i]);
    }
    std::vector<Poly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(normal_form(minimal[i], others, order).monic(order));
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return order.less(a.leading_term(order).mono, b.leading_term(order).mono); });
    return out;
}

} // namespace oracles
