#include "adicalg/generic.hpp"

#include <algorithm>
#include <cassert>

namespace adicalg {

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

std::vector<std::string> rees_names(const std::vector<std::string>& taken, std::size_t count) {
    std::string stem = "t";
    for (;;) {
        bool clash = false;
        for (std::size_t i = 1; i <= count && !clash; ++i)
            clash = std::find(taken.begin(), taken.end(), stem + std::to_string(i)) != taken.end();
        if (!clash) break;
        stem += "_";
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

GenericChart rees_quotient_chart(const FpAlgebra& a, const std::vector<Poly>& numerators, unsigned n) {
    const std::size_t nb = a.ring()->nvars();
    const std::size_t r = numerators.size();
    std::vector<std::string> vars = a.ring()->vars;
    for (auto& name : rees_names(vars, r)) vars.push_back(std::move(name));
    RingPtr ext = make_ring(a.ring()->field, std::move(vars));
    auto up = identity_map(nb);

    Poly w = Poly::variable(ext, 0);
    std::vector<Poly> rels;
    for (const auto& rel : a.relations().gens()) rels.push_back(rel.lift_to(ext, up));
    for (std::size_t j = 0; j < r; ++j)
        rels.push_back(w * Poly::variable(ext, nb + j) - numerators[j].lift_to(ext, up).pow(n));
    Ideal chart_ideal = Ideal(ext, std::move(rels)).saturation(w);

    // the topology of the chart is w-adic
    FpAlgebra alg = FpAlgebra::make(ext, chart_ideal.gens(), {}, a.uniformizer_name());
    std::vector<Poly> images;
    for (std::size_t i = 0; i < nb; ++i) images.push_back(Poly::variable(ext, i));
    RingMap structure = RingMap::make(a, alg, std::move(images));

    GenericChart chart;
    chart.n = n;
    chart.algebra = std::move(alg);
    chart.from_base = std::move(structure);
    chart.rees_begin = nb;
    chart.rees_count = r;
    return chart;
}

} // namespace

GenericChart generic_chart(const FpAlgebra& a, unsigned n) {
    if (n == 0) fail(ErrorKind::Domain, "generic-fiber charts start at stage 1");
    return rees_quotient_chart(a, a.idef_gens(), n);
}

RingMap generic_transition(const FpAlgebra& a, unsigned m, unsigned n) {
    if (m < n || n == 0) fail(ErrorKind::Domain, "transitions go from a higher stage to a lower one");
    GenericChart high = generic_chart(a, m);
    GenericChart low = generic_chart(a, n);

    const RingPtr& ring = low.algebra.ring();
    const std::size_t nb = a.ring()->nvars();
    auto up = identity_map(nb);
    const unsigned q = m / n, s = m % n;
    Poly w = Poly::variable(ring, 0);

    std::vector<Poly> images;
    images.reserve(high.algebra.ring()->nvars());
    for (std::size_t i = 0; i < nb; ++i) images.push_back(Poly::variable(ring, i));
    for (std::size_t j = 0; j < high.rees_count; ++j) {
        // w * image = f_j^m forces image = w^(q-1) T_j^q f_j^s with m = qn + s
        Poly tj = Poly::variable(ring, low.rees_begin + j);
        Poly fj = a.idef_gens()[j].lift_to(ring, up);
        images.push_back(w.pow(q - 1) * tj.pow(q) * fj.pow(s));
    }
    return RingMap::make(high.algebra, low.algebra, std::move(images));
}

GenericChart tube_chart(const FpAlgebra& a, const std::vector<Poly>& z_gens, unsigned n) {
    if (n == 0) fail(ErrorKind::Domain, "tube charts start at stage 1");
    if (z_gens.empty()) fail(ErrorKind::Domain, "the closed locus needs at least one equation");
    std::vector<Poly> total = z_gens;
    const auto& rels = a.relations().gens();
    total.insert(total.end(), rels.begin(), rels.end());
    Ideal locus(a.ring(), std::move(total));
    for (const auto& f : a.idef_gens())
        if (!locus.radical_contains(f))
            fail(ErrorKind::NotContainingIdealOfDefinition,
                 "ideal-of-definition generator " + f.to_string() + " is not in the radical of the locus");
    return rees_quotient_chart(a, z_gens, n);
}

VRat point_eval(const FpAlgebra& a, const Point& p, const Poly& f) {
    require_same_ring(f.ring(), a.ring());
    if (p.values().size() != a.ring()->nvars()) fail(ErrorKind::Domain, "point has the wrong number of coordinates");
    const CoeffField& field = a.ring()->field;
    VRat acc = VRat::zero(field);
    for (const auto& t : f.terms()) {
        VRat term = VRat::constant(field, t.coeff);
        for (std::size_t v = 0; v < t.mono.e.size(); ++v)
            if (t.mono.e[v]) term = term * p.values()[v].pow(static_cast<int>(t.mono.e[v]));
        acc = acc + term;
    }
    return acc;
}

void point_validate(const FpAlgebra& a, const Point& p) {
    if (p.values().size() != a.ring()->nvars()) fail(ErrorKind::Domain, "point has the wrong number of coordinates");
    if (p.e() == 0) fail(ErrorKind::Domain, "ramification index must be at least 1");
    const CoeffField& field = a.ring()->field;
    if (!(p.values()[0] == VRat::monomial(field, 1, static_cast<int>(p.e()))))
        fail(ErrorKind::Domain, "the uniformizer coordinate must be v^" + std::to_string(p.e()));
    for (const auto& r : a.relations().gens())
        if (!point_eval(a, p, r).is_zero()) fail(ErrorKind::RelationViolated, r.to_string());
    for (std::size_t v = 0; v < a.ring()->nvars(); ++v) {
        auto ord = p.values()[v].order();
        if (ord && *ord < 0) fail(ErrorKind::NotIntegral, a.ring()->vars[v]);
    }
    for (const auto& f : a.idef_gens()) {
        auto ord = point_eval(a, p, f).order();
        if (ord && *ord <= 0) fail(ErrorKind::NotContinuous, f.to_string());
    }
}

bool spc_contains(const FpAlgebra& a, const Point& p, const Poly& f) {
    auto ord = point_eval(a, p, f).order();
    return !ord || *ord > 0;
}

LiftedPoint lift_point(const ChartAtlas& atlas, const Point& p) {
    point_validate(atlas.base, p);
    const auto& gens = atlas.ideal.gens();

    std::optional<std::size_t> best;
    std::optional<int> best_ord;
    std::vector<VRat> gen_values;
    gen_values.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        gen_values.push_back(point_eval(atlas.base, p, gens[i]));
        auto ord = gen_values.back().order();
        if (ord && (!best_ord || *ord < *best_ord)) {
            best = i;
            best_ord = *ord;
        }
    }
    if (!best) fail(ErrorKind::NoFiniteOrder, "every center generator vanishes at the point");

    const Chart& chart = atlas.charts[*best];
    const CoeffField& field = atlas.base.ring()->field;
    std::vector<VRat> values(chart.algebra.ring()->nvars(), VRat::zero(field));
    for (std::size_t i = 0; i < atlas.base.ring()->nvars(); ++i) values[i] = p.values()[i];
    for (std::size_t k = 0; k < chart.rees_count; ++k)
        values[chart.rees_begin + k] = gen_values[k] / gen_values[*best];
    const std::size_t adj_begin = chart.rees_begin + chart.rees_count;
    for (std::size_t k = 0; k < chart.adjoined.size(); ++k) {
        const Fraction& frac = chart.adjoined[k];
        VRat num = point_eval(chart.algebra, Point(p.e(), values), frac.num);
        values[adj_begin + k] = num / VRat::monomial(field, 1, static_cast<int>(p.e() * frac.exp));
    }

    LiftedPoint lifted{*best, Point(p.e(), std::move(values))};
    point_validate(chart.algebra, lifted.point);
    return lifted;
}

LiftedPoint lift_point(const FpAlgebra& a, const AdmissibleIdeal& center, const Point& p) {
    return lift_point(blowup_charts(a, center), p);
}

bool is_generic_fiber_empty(const FpAlgebra& a) { return a.relations().radical_contains(a.uniformizer()); }

DescentResult descend_morphism(const FpAlgebra& a, const FpAlgebra& b, const std::vector<Fraction>& images) {
    if (!b.is_torsion_free()) fail(ErrorKind::TorsionInput, "descent requires a torsion-free target");
    if (images.size() != a.ring()->nvars()) fail(ErrorKind::IllDefined, "expected one fraction per source variable");
    for (const auto& frac : images) require_same_ring(frac.num.ring(), b.ring());

    const Poly wb = b.uniformizer();
    if (!b.elements_equal(images[0].num, wb.pow(images[0].exp + 1)))
        fail(ErrorKind::IllDefined, "the uniformizer must map to the uniformizer");

    // well-definedness of the fraction-level map: relations vanish in B[w^{-1}]
    for (const auto& rel : a.relations().gens()) {
        unsigned common = 0;
        for (const auto& t : rel.terms()) {
            unsigned d = 0;
            for (std::size_t v = 0; v < t.mono.e.size(); ++v) d += t.mono.e[v] * images[v].exp;
            common = std::max(common, d);
        }
        Poly numerator = Poly::zero(b.ring());
        for (const auto& t : rel.terms()) {
            Poly term = Poly::constant(b.ring(), t.coeff);
            unsigned d = 0;
            for (std::size_t v = 0; v < t.mono.e.size(); ++v) {
                if (!t.mono.e[v]) continue;
                term = term * images[v].num.pow(t.mono.e[v]);
                d += t.mono.e[v] * images[v].exp;
            }
            numerator = numerator + term * wb.pow(common - d);
        }
        if (!b.relations().contains(numerator))
            fail(ErrorKind::IllDefined, "relation " + rel.to_string() + " does not vanish on the generic fiber");
    }

    std::vector<Poly> model_images;
    model_images.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto t = solve_divide(b, wb.pow(images[i].exp), b.nf(images[i].num));
        if (!t) return DescentResult{std::nullopt, i};
        model_images.push_back(*t);
    }
    return DescentResult{RingMap::make(a, b, std::move(model_images)), 0};
}

} // namespace adicalg
