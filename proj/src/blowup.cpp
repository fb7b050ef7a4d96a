#include "adicalg/blowup.hpp"

#include <algorithm>
#include <cassert>

namespace adicalg {

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

// Numbered variable family with a shared prefix chosen to avoid collisions.
std::vector<std::string> numbered_names(const std::vector<std::string>& taken, std::string stem, std::size_t count,
                                        std::size_t first_index = 1) {
    for (;;) {
        bool clash = false;
        for (std::size_t i = 0; i < count && !clash; ++i) {
            std::string name = stem + std::to_string(first_index + i);
            clash = std::find(taken.begin(), taken.end(), name) != taken.end();
        }
        if (!clash) break;
        stem += "_";
    }
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(first_index + i));
    return names;
}

std::vector<Poly> identity_images(const RingPtr& ring, std::size_t count) {
    std::vector<Poly> images;
    images.reserve(count);
    for (std::size_t i = 0; i < count; ++i) images.push_back(Poly::variable(ring, i));
    return images;
}

} // namespace

AdmissibleIdeal AdmissibleIdeal::make(FpAlgebra ambient, std::vector<Poly> gens) {
    for (const auto& g : gens) require_same_ring(g.ring(), ambient.ring());
    if (gens.empty()) fail(ErrorKind::NotAdmissible, "an admissible ideal needs at least one generator");
    if (!is_open_ideal(ambient, gens))
        fail(ErrorKind::NotAdmissible, "the ideal is not open: some ideal-of-definition generator escapes its radical");
    AdmissibleIdeal j;
    j.ambient_ = std::move(ambient);
    j.gens_ = std::move(gens);
    return j;
}

RingIso RingIso::make(RingMap forward, RingMap backward) {
    if (!forward.source().same_presentation(backward.target()) ||
        !forward.target().same_presentation(backward.source()))
        fail(ErrorKind::Domain, "iso endpoints do not match");
    const FpAlgebra& a = forward.source();
    const FpAlgebra& b = forward.target();
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
        Poly round = backward.apply(forward.images()[i]);
        if (!a.elements_equal(round, Poly::variable(a.ring(), i)))
            fail(ErrorKind::Domain, "backward o forward is not the identity on " + a.ring()->vars[i]);
    }
    for (std::size_t i = 0; i < b.ring()->nvars(); ++i) {
        Poly round = forward.apply(backward.images()[i]);
        if (!b.elements_equal(round, Poly::variable(b.ring(), i)))
            fail(ErrorKind::Domain, "forward o backward is not the identity on " + b.ring()->vars[i]);
    }
    RingIso iso;
    iso.forward_ = std::move(forward);
    iso.backward_ = std::move(backward);
    return iso;
}

std::pair<FpAlgebra, RingMap> affine_blowup_algebra(const FpAlgebra& a, const AdmissibleIdeal& center,
                                                    std::size_t gen_index) {
    if (!a.same_presentation(center.ambient()))
        fail(ErrorKind::RingMismatch, "center does not live on the given algebra");
    const auto& gens = center.gens();
    if (gen_index >= gens.size()) fail(ErrorKind::NotAGenerator, "generator index out of range");

    const std::size_t n = a.ring()->nvars();
    const std::size_t r = gens.size();
    std::vector<std::string> vars = a.ring()->vars;
    for (auto& name : numbered_names(vars, "t", r)) vars.push_back(std::move(name));
    RingPtr ext = make_ring(a.ring()->field, std::move(vars));
    auto up = identity_map(n);

    const Poly g = gens[gen_index].lift_to(ext, up);
    std::vector<Poly> rels;
    for (const auto& rel : a.relations().gens()) rels.push_back(rel.lift_to(ext, up));
    for (std::size_t j = 0; j < r; ++j) rels.push_back(g * Poly::variable(ext, n + j) - gens[j].lift_to(ext, up));

    // saturating at g * w kills both the g-torsion and the w-torsion
    Poly w = Poly::variable(ext, 0);
    Ideal chart_ideal = Ideal(ext, std::move(rels)).saturation(g * w);

    std::vector<Poly> idef;
    for (const auto& f : a.idef_gens()) idef.push_back(f.lift_to(ext, up));

    FpAlgebra b = FpAlgebra::make(ext, chart_ideal.gens(), std::move(idef), a.uniformizer_name());
    RingMap structure = RingMap::make(a, b, identity_images(ext, n));
    return {std::move(b), std::move(structure)};
}

ChartAtlas blowup_charts(const FpAlgebra& a, const AdmissibleIdeal& center) {
    ChartAtlas atlas;
    atlas.base = a;
    atlas.ideal = center;
    const std::size_t n = a.ring()->nvars();
    for (std::size_t i = 0; i < center.gens().size(); ++i) {
        auto [alg, structure] = affine_blowup_algebra(a, center, i);
        Chart chart;
        chart.distinguished = alg.nf(center.gens()[i].lift_to(alg.ring(), identity_map(n)));
        chart.rees_begin = n;
        chart.rees_count = center.gens().size();
        chart.empty = alg.is_zero_ring();
        chart.algebra = std::move(alg);
        chart.from_base = std::move(structure);
        atlas.charts.push_back(std::move(chart));
    }
    return atlas;
}

std::pair<FpAlgebra, RingMap> overlap_localization(const ChartAtlas& atlas, std::size_t m,
                                                   const std::vector<std::size_t>& subset) {
    if (m >= atlas.charts.size()) fail(ErrorKind::Domain, "chart index out of range");
    const Chart& chart = atlas.charts[m];
    Poly element = Poly::one(chart.algebra.ring());
    for (auto n : subset) {
        if (n >= atlas.charts.size()) fail(ErrorKind::Domain, "chart index out of range");
        if (n == m) continue;
        element = element * Poly::variable(chart.algebra.ring(), chart.rees_begin + n);
    }
    return localize(chart.algebra, element);
}

RingMap overlap_transition(const ChartAtlas& atlas, std::size_t from, std::size_t to,
                           const std::vector<std::size_t>& subset) {
    auto [src, src_map] = overlap_localization(atlas, from, subset);
    auto [dst, dst_map] = overlap_localization(atlas, to, subset);
    if (atlas.charts[from].empty || atlas.charts[to].empty || src.is_zero_ring() || dst.is_zero_ring())
        fail(ErrorKind::EmptyOverlap, "the charts do not overlap");

    const Chart& schart = atlas.charts[from];
    const Chart& dchart = atlas.charts[to];
    const RingPtr& ring = dst.ring();
    const std::size_t nbase = atlas.base.ring()->nvars();
    const std::size_t loc_var = ring->nvars() - 1;

    // u_{to,n} is the overlap element f_n / f_to; its inverse in the target
    // localization is the localization variable times the other factors
    auto u = [&](std::size_t n) { return Poly::variable(ring, dchart.rees_begin + n); };
    auto inv_u = [&](std::size_t n) {
        Poly p = Poly::variable(ring, loc_var);
        for (auto q : subset)
            if (q != to && q != n) p = p * u(q);
        return p;
    };

    std::vector<Poly> images(src.ring()->nvars(), Poly::zero(ring));
    for (std::size_t k = 0; k < nbase; ++k) images[k] = Poly::variable(ring, k);
    // f_r / f_from = (f_r / f_to) * (f_to / f_from)
    for (std::size_t r = 0; r < schart.rees_count; ++r) images[schart.rees_begin + r] = u(r) * inv_u(from);
    const std::size_t adj_begin = schart.rees_begin + schart.rees_count;
    for (std::size_t k = 0; k < schart.adjoined.size(); ++k) {
        const Fraction& frac = schart.adjoined[k];
        Poly c_img = frac.num.substitute(ring, images);
        auto solved = solve_divide(dst, dst.uniformizer().pow(frac.exp), dst.nf(c_img));
        if (!solved) fail(ErrorKind::Domain, "transition image of an adjoined fraction is not divisible");
        images[adj_begin + k] = *solved;
    }
    // the source localization variable inverts the product of the f_n / f_from
    Poly inv_product = Poly::one(ring);
    for (auto n : subset)
        if (n != from) inv_product = inv_product * (u(from) * inv_u(n));
    images[src.ring()->nvars() - 1] = inv_product;
    return RingMap::make(src, dst, std::move(images));
}

RingIso chart_transition(const ChartAtlas& atlas, std::size_t i, std::size_t j) {
    if (i >= atlas.charts.size() || j >= atlas.charts.size())
        fail(ErrorKind::Domain, "chart index out of range");
    if (atlas.charts[i].empty || atlas.charts[j].empty)
        fail(ErrorKind::EmptyOverlap, "a chart is the zero ring");
    if (i == j) {
        auto [li, li_map] = overlap_localization(atlas, i, {i});
        RingMap id = RingMap::identity(li);
        return RingIso::make(id, id);
    }
    std::vector<std::size_t> pair{std::min(i, j), std::max(i, j)};
    RingMap forward = overlap_transition(atlas, i, j, pair);
    RingMap backward = overlap_transition(atlas, j, i, pair);
    return RingIso::make(std::move(forward), std::move(backward));
}

ComposedBlowup compose_blowups(const FpAlgebra& a, const AdmissibleIdeal& j1, const AdmissibleIdeal& j2) {
    if (!a.same_presentation(j1.ambient()) || !a.same_presentation(j2.ambient()))
        fail(ErrorKind::RingMismatch, "centers do not live on the given algebra");

    std::vector<Poly> product_gens;
    product_gens.reserve(j1.gens().size() * j2.gens().size());
    for (const auto& f : j1.gens())
        for (const auto& g : j2.gens()) product_gens.push_back(f * g);

    ComposedBlowup out;
    out.product = blowup_charts(a, AdmissibleIdeal::make(a, std::move(product_gens)));
    out.first = blowup_charts(a, j1);

    const std::size_t s = j2.gens().size();
    for (std::size_t idx = 0; idx < out.product.charts.size(); ++idx) {
        const std::size_t i = idx / s; // generator of j1
        const std::size_t j = idx % s; // generator of j2
        const Chart& pc = out.product.charts[idx];
        const Chart& fc = out.first.charts[i];
        out.first_chart.push_back(i);
        if (pc.empty) {
            // still a valid (zero) target; the forced images degenerate
            std::vector<Poly> images(fc.algebra.ring()->nvars(), Poly::zero(pc.algebra.ring()));
            out.to_first.push_back(RingMap::make(fc.algebra, pc.algebra, std::move(images)));
            continue;
        }
        const RingPtr& ring = pc.algebra.ring();
        std::vector<Poly> images;
        images.reserve(fc.algebra.ring()->nvars());
        for (std::size_t k = 0; k < a.ring()->nvars(); ++k) images.push_back(Poly::variable(ring, k));
        // T_k = f_k / f_i equals the product Rees variable for (f_k g_j) / (f_i g_j)
        for (std::size_t k = 0; k < fc.rees_count; ++k)
            images.push_back(Poly::variable(ring, pc.rees_begin + k * s + j));
        out.to_first.push_back(RingMap::make(fc.algebra, pc.algebra, std::move(images)));
    }
    return out;
}

AdmissibleIdeal extend_admissible_ideal(const FpAlgebra& a, const Poly& g, const std::vector<Fraction>& locals,
                                        unsigned k_max) {
    require_same_ring(g.ring(), a.ring());
    auto [loc, loc_map] = localize(a, g);
    const RingPtr& lring = loc.ring();
    const std::size_t n = a.ring()->nvars();
    auto up = identity_map(n);
    Poly inv = Poly::variable(lring, lring->nvars() - 1);

    std::vector<Poly> local_gens;
    local_gens.reserve(locals.size());
    for (const auto& frac : locals) {
        require_same_ring(frac.num.ring(), a.ring());
        local_gens.push_back(frac.num.lift_to(lring, up) * inv.pow(frac.exp));
    }
    if (!is_open_ideal(loc, local_gens))
        fail(ErrorKind::NotOpenLocally, "the fractions do not generate an open ideal on the basic open set");

    unsigned max_exp = 0;
    for (const auto& frac : locals) max_exp = std::max(max_exp, frac.exp);
    std::vector<Poly> cleared;
    cleared.reserve(locals.size());
    for (const auto& frac : locals) cleared.push_back(frac.num * g.pow(max_exp - frac.exp));

    std::vector<Poly> local_rels = local_gens;
    for (const auto& r : loc.relations().gens()) local_rels.push_back(r);
    Ideal local_ideal(lring, std::move(local_rels));

    for (unsigned k = 0; k <= k_max; ++k) {
        std::vector<Poly> gens = cleared;
        // monomial generators of the k-th power of the ideal of definition
        std::vector<Poly> powers{Poly::one(a.ring())};
        for (unsigned step = 0; step < k; ++step) {
            std::vector<Poly> next;
            for (const auto& p : powers)
                for (const auto& f : a.idef_gens()) {
                    Poly q = p * f;
                    if (std::find(next.begin(), next.end(), q) == next.end()) next.push_back(q);
                }
            powers = std::move(next);
        }
        gens.insert(gens.end(), powers.begin(), powers.end());

        // drop duplicate generators, keeping first occurrences
        std::vector<Poly> unique;
        for (const auto& p : gens)
            if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
        gens = std::move(unique);

        if (!is_open_ideal(a, gens)) continue;
        std::vector<Poly> lifted;
        for (const auto& p : gens) lifted.push_back(p.lift_to(lring, up));
        for (const auto& r : loc.relations().gens()) lifted.push_back(r);
        if (!Ideal(lring, std::move(lifted)).equals(local_ideal)) continue;
        return AdmissibleIdeal::make(a, std::move(gens));
    }
    fail(ErrorKind::ExtensionBoundExceeded, "no exponent <= " + std::to_string(k_max) + " extends the local ideal");
}

FiniteModification finite_modification_to_blowup(const FpAlgebra& a, const std::vector<Fraction>& elems) {
    if (!a.is_torsion_free()) fail(ErrorKind::TorsionInput, "finite modifications require a torsion-free algebra");

    unsigned r = 0;
    for (const auto& e : elems) r = std::max(r, e.exp);
    const Poly w = a.uniformizer();
    std::vector<Poly> scaled;
    scaled.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        Poly c = a.nf(elems[i].num * w.pow(r - elems[i].exp));
        if (!is_integral_element(a, c, r))
            fail(ErrorKind::NotIntegral, "element " + std::to_string(i) + " is not integral");
        scaled.push_back(std::move(c));
    }

    std::vector<Poly> center_gens{w.pow(r)};
    center_gens.insert(center_gens.end(), scaled.begin(), scaled.end());

    FiniteModification out;
    out.center = AdmissibleIdeal::make(a, center_gens);
    out.chart_index = 0;

    // presented modification: A[z_i]/(w^r z_i - c_i), saturated at w
    const std::size_t n = a.ring()->nvars();
    std::vector<std::string> vars = a.ring()->vars;
    for (auto& name : numbered_names(vars, "z", scaled.size())) vars.push_back(std::move(name));
    RingPtr ext = make_ring(a.ring()->field, std::move(vars));
    auto up = identity_map(n);
    std::vector<Poly> rels;
    for (const auto& rel : a.relations().gens()) rels.push_back(rel.lift_to(ext, up));
    Poly wr = Poly::variable(ext, 0).pow(r);
    for (std::size_t i = 0; i < scaled.size(); ++i)
        rels.push_back(wr * Poly::variable(ext, n + i) - scaled[i].lift_to(ext, up));
    Ideal presented_ideal = Ideal(ext, std::move(rels)).saturation(Poly::variable(ext, 0));
    std::vector<Poly> idef;
    for (const auto& f : a.idef_gens()) idef.push_back(f.lift_to(ext, up));
    out.presented = FpAlgebra::make(ext, presented_ideal.gens(), std::move(idef), a.uniformizer_name());
    out.presented_map = RingMap::make(a, out.presented, identity_images(ext, n));

    ChartAtlas atlas = blowup_charts(a, out.center);
    const Chart& chart = atlas.charts[0];
    const RingPtr& cring = chart.algebra.ring();

    std::vector<Poly> fwd = identity_images(ext, n); // chart -> presented
    fwd.push_back(Poly::one(ext));                   // the Rees variable of w^r itself
    for (std::size_t i = 0; i < scaled.size(); ++i) fwd.push_back(Poly::variable(ext, n + i));
    std::vector<Poly> bwd = identity_images(cring, n); // presented -> chart
    for (std::size_t i = 0; i < scaled.size(); ++i) bwd.push_back(Poly::variable(cring, chart.rees_begin + 1 + i));

    RingMap forward = RingMap::make(chart.algebra, out.presented, std::move(fwd));
    RingMap backward = RingMap::make(out.presented, chart.algebra, std::move(bwd));
    out.iso = RingIso::make(std::move(forward), std::move(backward));
    return out;
}

std::optional<RingMap> factor_through_chart(const ChartAtlas& atlas, std::size_t i, const FpAlgebra& c,
                                            const RingMap& structure) {
    const Chart& chart = atlas.charts[i];
    const RingPtr& ring = c.ring();
    const std::size_t nbase = atlas.base.ring()->nvars();

    Poly fi = structure.apply(atlas.ideal.gens()[i]);
    std::vector<Poly> images(chart.algebra.ring()->nvars(), Poly::zero(ring));
    for (std::size_t k = 0; k < nbase; ++k) images[k] = structure.images()[k];
    for (std::size_t k = 0; k < chart.rees_count; ++k) {
        auto t = solve_divide(c, fi, structure.apply(atlas.ideal.gens()[k]));
        if (!t) return std::nullopt;
        images[chart.rees_begin + k] = *t;
    }
    const std::size_t adj_begin = chart.rees_begin + chart.rees_count;
    for (std::size_t k = 0; k < chart.adjoined.size(); ++k) {
        Poly num = chart.adjoined[k].num.substitute(ring, images);
        auto t = solve_divide(c, c.uniformizer().pow(chart.adjoined[k].exp), c.nf(num));
        if (!t) return std::nullopt;
        images[adj_begin + k] = *t;
    }
    try {
        return RingMap::make(chart.algebra, c, std::move(images));
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace adicalg
