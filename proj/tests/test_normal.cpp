#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "adicalg/generic.hpp"
#include "adicalg/normal.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace adicalg;
using corpus::algebra;
using corpus::pp;

TEST_CASE("is_integrally_closed") {
    SUBCASE("the cusp is not closed, witnessed by x") {
        FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
        ClosednessReport r = is_integrally_closed(a, 2);
        CHECK(!r.closed);
        REQUIRE(r.witness.has_value());
        CHECK(a.elements_equal(*r.witness, pp(a, "x")));
    }
    SUBCASE("polynomial rings are closed") {
        CHECK(is_integrally_closed(algebra({"w", "x"}, {}, {"w"}), 3).closed);
        CHECK(is_integrally_closed(algebra({"w"}, {}, {}), 3).closed);
    }
    SUBCASE("torsion input is rejected") {
        FpAlgebra a = algebra({"w", "x"}, {"w x"}, {"w"});
        CHECK_THROWS_AS((void)is_integrally_closed(a, 2), Error);
    }
}

TEST_CASE("normalize the cusp") {
    FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
    NormalizationResult res = normalize(a, 6);
    CHECK(res.complete);
    REQUIRE(res.adjoined.size() == 1);
    CHECK(res.adjoined[0].exp == 1);
    CHECK(map_kernel(res.inclusion).equals(a.relations()));

    SUBCASE("closure is isomorphic to k[w,y]/(y^2 - w)") {
        FpAlgebra target = algebra({"w", "y"}, {"y^2 - w"}, {"w"});
        const RingPtr& cr = res.closure.ring();
        REQUIRE(cr->nvars() == 3); // w, x, z1
        RingMap forward = RingMap::make(target, res.closure, {res.closure.uniformizer(), Poly::variable(cr, 2)});
        RingMap backward =
            RingMap::make(res.closure, target, {target.uniformizer(), pp(target, "w y"), pp(target, "y")});
        CHECK_NOTHROW((void)RingIso::make(forward, backward));
    }
    SUBCASE("idempotent") {
        NormalizationResult again = normalize(res.closure, 6);
        CHECK(again.complete);
        CHECK(again.adjoined.empty());
        CHECK(again.closure.same_presentation(res.closure));
    }
}

TEST_CASE("normalize agrees with the brute-force closure on all seeds") {
    for (const auto& seed : corpus::normalization_cases()) {
        CAPTURE(seed.label);
        NormalizationResult res = normalize(seed.algebra, 6);
        CHECK(res.complete);
        CHECK(res.adjoined.empty() == seed.already_closed);

        std::vector<Fraction> oracle_fracs = oracles::integral_fractions(seed.algebra, 4, 2);
        FpAlgebra oracle_closure = oracles::adjoin_fractions(seed.algebra, oracle_fracs);
        CHECK(seed.already_closed == oracle_fracs.empty());

        // every oracle fraction lies in the computed closure
        std::vector<std::size_t> up(seed.algebra.ring()->nvars());
        for (std::size_t i = 0; i < up.size(); ++i) up[i] = i;
        for (const auto& f : oracle_fracs) {
            Poly c = f.num.lift_to(res.closure.ring(), up);
            CHECK(oracles::fraction_in(res.closure, c, f.exp));
        }
        // every adjoined fraction lies in the oracle closure; numerators may
        // involve earlier adjoined variables, so walk them through the chain
        // by re-expressing in the oracle ring via the forced images
        if (!res.adjoined.empty()) {
            // iterate: images of closure variables inside the oracle closure
            std::vector<Poly> images;
            for (std::size_t i = 0; i < up.size(); ++i) images.push_back(Poly::variable(oracle_closure.ring(), i));
            for (const auto& f : res.adjoined) {
                Poly c = f.num.substitute(oracle_closure.ring(), images);
                auto div = solve_divide(oracle_closure, oracle_closure.uniformizer().pow(f.exp), oracle_closure.nf(c));
                REQUIRE(div.has_value());
                images.push_back(*div);
            }
        }
    }
}

TEST_CASE("two-stage normalization of x^2 = w^5") {
    FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^5"}, {"w"});
    NormalizationResult res = normalize(a, 6);
    CHECK(res.complete);
    CHECK(res.adjoined.size() == 2);
    // final closure is regular: k[z2] with w = z2^2, x = z2^5
    FpAlgebra target = algebra({"w", "x", "y", "z"}, {"z^2 - w", "y - w z", "x - w y"}, {"w"});
    CHECK(res.closure.ring()->nvars() == 4);
    // the defining property: z2^2 = w
    Poly z2 = Poly::variable(res.closure.ring(), 3);
    CHECK(res.closure.elements_equal(z2 * z2, res.closure.uniformizer()));
}

TEST_CASE("normalized blow-ups") {
    SUBCASE("cusp blown up in (x, w) has normal charts already") {
        FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
        AdmissibleIdeal j = AdmissibleIdeal::make(a, {pp(a, "x"), pp(a, "w")});
        ChartAtlas plain = blowup_charts(a, j);
        ChartAtlas normal = normalized_blowup(a, j, 6);
        CHECK(normal.kind == AtlasKind::Normalized);
        REQUIRE(normal.charts.size() == 2);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(normal.charts[i].adjoined.empty());
            CHECK(normal.charts[i].algebra.relations().equals(plain.charts[i].algebra.relations()));
        }
        // transitions still glue after normalization
        CHECK_NOTHROW((void)chart_transition(normal, 0, 1));
    }
    SUBCASE("cusp blown up in (w) normalizes to the root closure") {
        FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
        AdmissibleIdeal j = AdmissibleIdeal::make(a, {a.uniformizer()});
        ChartAtlas atlas = normalized_blowup(a, j, 6);
        REQUIRE(atlas.charts.size() == 1);
        const Chart& c = atlas.charts[0];
        REQUIRE(c.adjoined.size() == 1);
        // adjoined x/w with (x/w)^2 = w
        const RingPtr& cr = c.algebra.ring();
        Poly z = Poly::variable(cr, cr->nvars() - 1);
        CHECK(c.algebra.elements_equal(z * z, c.algebra.uniformizer()));
    }
    SUBCASE("normal base with center (w) is untouched") {
        FpAlgebra a = algebra({"w", "x"}, {}, {"w"});
        ChartAtlas atlas = normalized_blowup(a, AdmissibleIdeal::make(a, {a.uniformizer()}), 6);
        REQUIRE(atlas.charts.size() == 1);
        CHECK(atlas.charts[0].adjoined.empty());
    }
    SUBCASE("normalized transitions on a two-chart singular example") {
        // blow up the Whitney-umbrella-like x^2 = w^3 y in (x, w): charts pick
        // up nontrivial normalizations glued over the overlap
        FpAlgebra a = algebra({"w", "x", "y"}, {"x^2 - w^3 y"}, {"w"});
        AdmissibleIdeal j = AdmissibleIdeal::make(a, {pp(a, "x"), pp(a, "w")});
        ChartAtlas atlas = normalized_blowup(a, j, 4);
        for (const auto& chart : atlas.charts) CHECK(chart.algebra.is_torsion_free());
        CHECK_NOTHROW((void)chart_transition(atlas, 0, 1));
    }
}

TEST_CASE("localization stability of closures") {
    for (const auto& seed : corpus::normalization_cases()) {
        CAPTURE(seed.label);
        NormalizationResult res = normalize(seed.algebra, 6);
        const RingPtr& cr = res.closure.ring();
        for (std::size_t v = 0; v < cr->nvars(); ++v) {
            auto [loc, f] = localize(res.closure, Poly::variable(cr, v));
            CHECK(is_integrally_closed(loc, 6).closed);
        }
    }
}

TEST_CASE("uniformity implication on integrally closed algebras") {
    std::vector<FpAlgebra> closed;
    for (const auto& seed : corpus::normalization_cases()) closed.push_back(normalize(seed.algebra, 6).closure);

    SUBCASE("frozen examples") {
        FpAlgebra root = algebra({"w", "y"}, {"y^2 - w"}, {"w"});
        CHECK(check_uniformity_implication(root, Fraction{pp(root, "y"), 1}, 4));
        CHECK(check_uniformity_implication(root, Fraction{pp(root, "y^3"), 0}, 4)); // already in A
        FpAlgebra plane = algebra({"w", "x"}, {}, {"w"});
        CHECK(check_uniformity_implication(plane, Fraction{pp(plane, "x"), 1}, 4));
    }
    SUBCASE("no failures across closures and probes") {
        for (const auto& a : closed) {
            if (a.is_zero_ring()) continue;
            for (const auto& m : oracles::monomials_up_to(a.ring()->nvars(), 2)) {
                if (m.is_one()) continue;
                Poly c = a.nf(Poly::from_terms(a.ring(), {{m, mpq_class(1)}}));
                if (c.is_zero()) continue;
                for (unsigned exp = 1; exp <= 2; ++exp) CHECK(check_uniformity_implication(a, Fraction{c, exp}, 4));
            }
        }
    }
}

TEST_CASE("prime-field normalization and blow-up") {
    RingPtr r = make_ring(CoeffField::prime(5), {"w", "x"});
    FpAlgebra a = FpAlgebra::make(r, {parse_poly(r, "x^2 - w^3")}, {parse_poly(r, "w")}, "w");
    NormalizationResult res = normalize(a, 6);
    CHECK(res.complete);
    REQUIRE(res.adjoined.size() == 1);
    Poly z = Poly::variable(res.closure.ring(), 2);
    CHECK(res.closure.elements_equal(z * z, res.closure.uniformizer()));

    AdmissibleIdeal j = AdmissibleIdeal::make(a, {parse_poly(r, "x"), parse_poly(r, "w")});
    ChartAtlas atlas = blowup_charts(a, j);
    for (const auto& chart : atlas.charts) CHECK(chart.algebra.is_torsion_free());
    CHECK_NOTHROW((void)chart_transition(atlas, 0, 1));
}

TEST_CASE("normalized charts pass the bounded closedness test") {
    FpAlgebra a = algebra({"w", "x", "y"}, {"x^2 - w^3 y"}, {"w"});
    AdmissibleIdeal j = AdmissibleIdeal::make(a, {pp(a, "x"), pp(a, "w")});
    ChartAtlas atlas = normalized_blowup(a, j, 4);
    for (const auto& chart : atlas.charts) {
        if (chart.empty) continue;
        CHECK(is_integrally_closed(chart.algebra, 4).closed);
    }
}

TEST_CASE("points lift through normalized atlases") {
    FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
    AdmissibleIdeal j = AdmissibleIdeal::make(a, {a.uniformizer()});
    ChartAtlas atlas = normalized_blowup(a, j, 6);
    REQUIRE(atlas.charts.size() == 1);
    REQUIRE(atlas.charts[0].adjoined.size() == 1);
    Point p(2, {parse_vrat(CoeffField::rationals(), "v^2"), parse_vrat(CoeffField::rationals(), "v^3")});
    LiftedPoint lifted = lift_point(atlas, p);
    CHECK(lifted.chart_index == 0);
    // the adjoined coordinate x/w takes the value v
    CHECK(lifted.point.values().back() == parse_vrat(CoeffField::rationals(), "v"));
}

TEST_CASE("the closure is the unique integrally closed model up to forced isomorphism") {
    struct Seed {
        FpAlgebra base;
        FpAlgebra model;            // torsion-free, integrally closed
        std::string base_image;     // image of the second base variable in the model
        std::string model_preimage; // image of the model's extra variable in the closure
    };
    std::vector<Seed> seeds;
    seeds.push_back({algebra({"w", "x"}, {"x^2 - w^3"}, {"w"}), algebra({"w", "y"}, {"y^2 - w"}, {"w"}),
                     "w y", "z1"});
    seeds.push_back({algebra({"w", "u"}, {"u^2 - w^2"}, {"w"}), algebra({"w", "z"}, {"z^2 - 1"}, {"w"}),
                     "w z", "z1"});
    for (auto& seed : seeds) {
        // a validated model map A -> C that inverts to an isomorphism
        RingMap to_model =
            RingMap::make(seed.base, seed.model, {seed.model.uniformizer(), pp(seed.model, seed.base_image)});
        CHECK(map_kernel(to_model).equals(seed.base.relations()));
        CHECK(is_integrally_closed(seed.model, 6).closed);

        NormalizationResult res = normalize(seed.base, 6);
        REQUIRE(res.adjoined.size() == 1);

        // forced images: base variables go through the model map, the adjoined
        // fraction c/w goes to the unique solution of w t = c in the model
        std::vector<Poly> fwd = to_model.images();
        Poly c_img = res.adjoined[0].num.substitute(
            seed.model.ring(), [&] {
                std::vector<Poly> imgs = to_model.images();
                imgs.push_back(Poly::zero(seed.model.ring())); // z1 slot, unused by c
                return imgs;
            }());
        auto t = solve_divide(seed.model, seed.model.uniformizer().pow(res.adjoined[0].exp), seed.model.nf(c_img));
        REQUIRE(t.has_value());
        fwd.push_back(*t);
        RingMap forward = RingMap::make(res.closure, seed.model, std::move(fwd));

        // backward: the model's extra variable is the adjoined fraction
        std::vector<Poly> bwd{res.closure.uniformizer(), pp(res.closure, seed.model_preimage)};
        RingMap backward = RingMap::make(seed.model, res.closure, std::move(bwd));
        CHECK_NOTHROW((void)RingIso::make(forward, backward));
    }
}
