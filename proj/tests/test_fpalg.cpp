#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "adicalg/fpalg.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace adicalg;
using corpus::algebra;
using corpus::pp;

TEST_CASE("make_algebra") {
    SUBCASE("uniformizer is adjoined to the ideal of definition") {
        FpAlgebra a = algebra({"w", "x"}, {}, {"x"});
        REQUIRE(a.idef_gens().size() == 2);
        CHECK(a.idef_gens()[0] == pp(a, "x"));
        CHECK(a.idef_gens()[1] == a.uniformizer());
        CHECK(a.ideal_of_definition().contains(a.uniformizer()));
    }
    SUBCASE("listed uniformizer is not duplicated") {
        FpAlgebra a = algebra({"w", "x"}, {}, {"w", "x"});
        CHECK(a.idef_gens().size() == 2);
    }
    SUBCASE("missing uniformizer") {
        RingPtr r = make_ring(CoeffField::rationals(), {"x", "y"});
        CHECK_THROWS_AS((void)FpAlgebra::make(r, {}, {}, "w"), Error);
    }
    SUBCASE("zero ring detection") {
        FpAlgebra zero = algebra({"w"}, {"1"}, {});
        CHECK(zero.is_zero_ring());
        CHECK(!algebra({"w"}, {"w^2"}, {}).is_zero_ring());
    }
}

TEST_CASE("torsion_saturate") {
    SUBCASE("kills the torsion line") {
        FpAlgebra a = algebra({"w", "x"}, {"w x"}, {"w"});
        auto [out, q] = torsion_saturate(a);
        CHECK(out.relations().equals(Ideal(a.ring(), {pp(a, "x")})));
        CHECK(q.apply(pp(a, "x")).is_zero());
        CHECK(out.is_torsion_free());
    }
    SUBCASE("torsion-free input is untouched") {
        FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
        auto [out, q] = torsion_saturate(a);
        CHECK(out.relations().equals(a.relations()));
        CHECK(a.is_torsion_free());
    }
    SUBCASE("everything torsion collapses to the zero ring") {
        FpAlgebra a = algebra({"w"}, {"w"}, {});
        auto [out, q] = torsion_saturate(a);
        CHECK(out.is_zero_ring());
    }
    SUBCASE("idempotent, and output absorbs uniformizer factors") {
        for (const auto& rels : std::vector<std::vector<std::string>>{{"w x"}, {"w^2 x", "w x^2"}, {"x^2 - w^3"}}) {
            FpAlgebra a = algebra({"w", "x"}, rels, {"w"});
            auto [out, q] = torsion_saturate(a);
            auto [out2, q2] = torsion_saturate(out);
            CHECK(out2.relations().equals(out.relations()));
            std::mt19937 rng(3);
            for (int t = 0; t < 10; ++t) {
                Poly p = out.nf(oracles::random_poly(a.ring(), rng, 3, 3));
                for (unsigned k = 1; k <= 3; ++k)
                    if (out.relations().contains(a.uniformizer().pow(k) * p)) CHECK(out.relations().contains(p));
            }
        }
    }
}

TEST_CASE("is_open_ideal") {
    FpAlgebra a = algebra({"w", "x"}, {}, {"w", "x"});
    CHECK(is_open_ideal(a, {pp(a, "x^2"), pp(a, "w")}));
    CHECK(!is_open_ideal(a, {pp(a, "x")}));
    CHECK(is_open_ideal(a, {pp(a, "w"), pp(a, "x")}));
    CHECK(is_open_ideal(a, {pp(a, "1")}));

    SUBCASE("agrees with the power search") {
        std::vector<std::vector<std::string>> probes = {
            {"x^2", "w"}, {"x"}, {"w"}, {"x^3", "w^2"}, {"x + w"}, {"x^2 + w"}};
        for (const auto& texts : probes) {
            std::vector<Poly> gens;
            for (const auto& t : texts) gens.push_back(pp(a, t));
            CHECK(is_open_ideal(a, gens) == oracles::power_open(a, gens, 8));
        }
    }
}

TEST_CASE("ring_map validation") {
    FpAlgebra src = algebra({"w", "x"}, {"x^2 - w"}, {"w"});
    SUBCASE("valid map") {
        FpAlgebra tgt = algebra({"w", "y"}, {"y^2 - w"}, {"w"});
        RingMap f = RingMap::make(src, tgt, {tgt.uniformizer(), pp(tgt, "y")});
        CHECK(f.apply(pp(src, "x^2")) == pp(tgt, "w"));
    }
    SUBCASE("ill-defined map names the violated relation") {
        FpAlgebra tgt = algebra({"w", "y"}, {}, {"w"});
        try {
            RingMap::make(src, tgt, {tgt.uniformizer(), pp(tgt, "y^2")});
            FAIL("expected IllDefined");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::IllDefined);
            CHECK(std::string(e.what()).find("x^2 - w") != std::string::npos);
        }
    }
    SUBCASE("uniformizer must go to uniformizer") {
        FpAlgebra tgt = algebra({"w", "y"}, {}, {"w"});
        CHECK_THROWS_AS((void)RingMap::make(src, tgt, {pp(tgt, "w^2"), pp(tgt, "y")}), Error);
    }
    SUBCASE("identity and application homomorphism property") {
        RingMap id = RingMap::identity(src);
        std::mt19937 rng(17);
        for (int t = 0; t < 10; ++t) {
            Poly p = oracles::random_poly(src.ring(), rng, 3, 3);
            Poly q = oracles::random_poly(src.ring(), rng, 3, 3);
            CHECK(id.apply(p) == src.nf(p));
            CHECK(src.elements_equal(id.apply(p * q), id.apply(p) * id.apply(q)));
            CHECK(src.elements_equal(id.apply(p + q), id.apply(p) + id.apply(q)));
        }
    }
}

TEST_CASE("map_kernel") {
    SUBCASE("graph elimination") {
        FpAlgebra src = algebra({"w", "x"}, {}, {"w"});
        FpAlgebra tgt = algebra({"w"}, {}, {});
        RingMap f = RingMap::make(src, tgt, {tgt.uniformizer(), pp(tgt, "w^2")});
        Ideal k = map_kernel(f);
        CHECK(k.equals(Ideal(src.ring(), {pp(src, "x - w^2")})));
    }
    SUBCASE("injective inclusion") {
        FpAlgebra src = algebra({"w"}, {}, {});
        FpAlgebra tgt = algebra({"w", "x"}, {}, {"w"});
        RingMap f = RingMap::make(src, tgt, {tgt.uniformizer()});
        CHECK(map_kernel(f).is_zero_ideal());
    }
    SUBCASE("map to the zero ring") {
        FpAlgebra src = algebra({"w", "x"}, {}, {"w"});
        FpAlgebra tgt = algebra({"w"}, {"1"}, {});
        RingMap f = RingMap::make(src, tgt, {tgt.uniformizer(), Poly::zero(tgt.ring())});
        CHECK(map_kernel(f).is_unit());
    }
    SUBCASE("structure map of a localization at w has zero kernel on torsion-free input") {
        FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
        auto [loc, structure] = localize(a, a.uniformizer());
        CHECK(map_kernel(structure).equals(a.relations()));
    }
}

TEST_CASE("localize") {
    FpAlgebra a = algebra({"w", "x"}, {}, {"w"});
    SUBCASE("basic open") {
        auto [loc, f] = localize(a, pp(a, "x"));
        CHECK(loc.ring()->vars == std::vector<std::string>{"w", "x", "u"});
        CHECK(loc.relations().contains(pp(loc, "x u - 1")));
        CHECK(!loc.is_zero_ring());
    }
    SUBCASE("localizing at 1 changes nothing essential") {
        auto [loc, f] = localize(a, Poly::one(a.ring()));
        CHECK(loc.relations().contains(pp(loc, "u - 1")));
    }
    SUBCASE("localizing at 0 gives the zero ring") {
        auto [loc, f] = localize(a, Poly::zero(a.ring()));
        CHECK(loc.is_zero_ring());
    }
    SUBCASE("localizing at a nilpotent gives the zero ring") {
        FpAlgebra b = algebra({"w", "x"}, {"x^2"}, {"w"});
        auto [loc, f] = localize(b, pp(b, "x"));
        CHECK(loc.is_zero_ring());
    }
}

TEST_CASE("is_integral_element") {
    SUBCASE("cusp fraction x/w") {
        FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
        CHECK(is_integral_element(a, pp(a, "x"), 1));
        auto rel = integral_relation(a, pp(a, "x"), 1, "z");
        REQUIRE(rel.has_value());
        RingPtr ext = rel->ring();
        CHECK(*rel == parse_poly(ext, "z^2 - w"));
    }
    SUBCASE("x/w is not integral over the plane") {
        FpAlgebra a = algebra({"w", "x"}, {}, {"w"});
        CHECK(!is_integral_element(a, pp(a, "x"), 1));
        CHECK(is_integral_element(a, pp(a, "w^2"), 1)); // w^2/w = w
        CHECK(is_integral_element(a, pp(a, "w x"), 1));
        CHECK(!is_integral_element(a, pp(a, "x^2"), 2));
    }
    SUBCASE("torsion input is rejected") {
        FpAlgebra a = algebra({"w", "x"}, {"w x"}, {"w"});
        CHECK_THROWS_AS((void)is_integral_element(a, pp(a, "x"), 1), Error);
    }
}

TEST_CASE("solve_divide") {
    FpAlgebra a = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
    SUBCASE("divisible") {
        auto t = solve_divide(a, pp(a, "w"), pp(a, "w x"));
        REQUIRE(t.has_value());
        CHECK(a.elements_equal(*t, pp(a, "x")));
    }
    SUBCASE("x^2 / w = w^2") {
        auto t = solve_divide(a, pp(a, "w"), pp(a, "x^2"));
        REQUIRE(t.has_value());
        CHECK(a.elements_equal(*t, pp(a, "w^2")));
    }
    SUBCASE("not divisible, even though integral") {
        CHECK(!solve_divide(a, pp(a, "w"), pp(a, "x")).has_value());
    }
    SUBCASE("zero numerator") {
        auto t = solve_divide(a, pp(a, "w"), Poly::zero(a.ring()));
        REQUIRE(t.has_value());
        CHECK(t->is_zero());
    }
}

TEST_CASE("agreement after inverting w forces equality only without torsion") {
    // torsion target: two distinct maps collapse in the localization
    FpAlgebra src = algebra({"w", "y"}, {}, {"w"});
    FpAlgebra torsion = algebra({"w", "x"}, {"w x"}, {"w"});
    RingMap f = RingMap::make(src, torsion, {torsion.uniformizer(), Poly::zero(torsion.ring())});
    RingMap g = RingMap::make(src, torsion, {torsion.uniformizer(), pp(torsion, "x")});
    CHECK(!torsion.elements_equal(f.images()[1], g.images()[1]));
    auto [loc, locmap] = localize(torsion, torsion.uniformizer());
    CHECK(loc.elements_equal(locmap.apply(f.images()[1]), locmap.apply(g.images()[1])));

    // torsion-free target: images that agree after clearing w are equal
    FpAlgebra free = algebra({"w", "x"}, {"x^2 - w^3"}, {"w"});
    std::mt19937 rng(31);
    for (int t = 0; t < 10; ++t) {
        Poly a = free.nf(oracles::random_poly(free.ring(), rng, 3, 3));
        Poly b = free.nf(oracles::random_poly(free.ring(), rng, 3, 3));
        if (free.relations().contains(free.uniformizer() * (a - b))) CHECK(free.elements_equal(a, b));
    }
}
