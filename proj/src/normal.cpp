#include "adicalg/normal.hpp"

#include <algorithm>
#include <set>

namespace adicalg {

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

// exponent vectors of total degree d, lexicographic
void enumerate_degree(std::size_t nvars, unsigned d, std::vector<std::uint32_t>& buf, std::size_t pos,
                      const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    if (pos + 1 == nvars) {
        buf[pos] = d;
        visit(buf);
        return;
    }
    for (unsigned k = 0; k <= d; ++k) {
        buf[pos] = k;
        enumerate_degree(nvars, d - k, buf, pos + 1, visit);
    }
}

} // namespace

ClosednessReport is_integrally_closed(const FpAlgebra& a, unsigned degree_bound) {
    if (!a.is_torsion_free()) fail(ErrorKind::TorsionInput, "closedness test requires a torsion-free algebra");
    if (a.is_zero_ring()) return {true, std::nullopt};

    const RingPtr& ring = a.ring();
    std::vector<Poly> wa_gens{a.uniformizer()};
    const auto& rels = a.relations().gens();
    wa_gens.insert(wa_gens.end(), rels.begin(), rels.end());
    Ideal wa(ring, std::move(wa_gens));

    std::set<std::string> seen;
    for (unsigned d = 1; d <= degree_bound; ++d) {
        std::vector<std::uint32_t> buf(ring->nvars(), 0);
        std::optional<Poly> witness;
        enumerate_degree(ring->nvars(), d, buf, 0, [&](const std::vector<std::uint32_t>& exps) {
            if (witness) return;
            Poly candidate = a.nf(Poly::from_terms(ring, {{Monomial{exps}, mpq_class(1)}}));
            if (candidate.is_zero()) return;
            if (!seen.insert(candidate.to_string()).second) return;
            if (wa.contains(candidate)) return; // already divisible by w
            if (is_integral_element(a, candidate, 1)) witness = candidate;
        });
        if (witness) return {false, witness};
    }
    return {true, std::nullopt};
}

NormalizationResult normalize(const FpAlgebra& a, unsigned degree_bound, unsigned max_stages) {
    if (!a.is_torsion_free()) fail(ErrorKind::TorsionInput, "normalization requires a torsion-free algebra");

    FpAlgebra cur = a;
    std::vector<Fraction> adjoined; // numerators in the ring of their own stage
    bool complete = false;

    for (unsigned stage = 0; stage <= max_stages; ++stage) {
        ClosednessReport report = is_integrally_closed(cur, degree_bound);
        if (report.closed) {
            complete = true;
            break;
        }
        if (stage == max_stages) break;
        const Poly& c = *report.witness;
        const std::size_t n = cur.ring()->nvars();
        std::string zname = fresh_var_name(cur.ring()->vars, "z" + std::to_string(adjoined.size() + 1));
        Poly monic = *integral_relation(cur, c, 1, zname);

        std::vector<std::string> vars = cur.ring()->vars;
        vars.push_back(zname);
        RingPtr ext = make_ring(cur.ring()->field, std::move(vars));
        auto up = identity_map(n);
        auto up1 = identity_map(n + 1);

        std::vector<Poly> rels;
        for (const auto& r : cur.relations().gens()) rels.push_back(r.lift_to(ext, up));
        rels.push_back(Poly::variable(ext, 0) * Poly::variable(ext, n) - c.lift_to(ext, up));
        rels.push_back(monic.lift_to(ext, up1));
        Ideal sat = Ideal(ext, std::move(rels)).saturation(Poly::variable(ext, 0));

        std::vector<Poly> idef;
        for (const auto& f : cur.idef_gens()) idef.push_back(f.lift_to(ext, up));
        cur = FpAlgebra::make(ext, sat.gens(), std::move(idef), a.uniformizer_name());
        adjoined.push_back({c, 1});
    }

    // express every adjoined numerator in the final ring
    const RingPtr& final_ring = cur.ring();
    for (auto& frac : adjoined) {
        std::vector<std::size_t> up(frac.num.ring()->nvars());
        for (std::size_t i = 0; i < up.size(); ++i) up[i] = i;
        frac.num = frac.num.lift_to(final_ring, up);
    }

    std::vector<Poly> inc_images;
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i) inc_images.push_back(Poly::variable(final_ring, i));
    RingMap inclusion = RingMap::make(a, cur, std::move(inc_images));
    return NormalizationResult{std::move(cur), std::move(inclusion), std::move(adjoined), complete};
}

ChartAtlas normalized_blowup(const FpAlgebra& a, const AdmissibleIdeal& center, unsigned degree_bound) {
    if (!a.is_torsion_free()) fail(ErrorKind::TorsionInput, "normalized blow-ups require a torsion-free base");
    ChartAtlas atlas = blowup_charts(a, center);
    for (std::size_t i = 0; i < atlas.charts.size(); ++i) {
        Chart& chart = atlas.charts[i];
        NormalizationResult res = normalize(chart.algebra, degree_bound);
        if (!res.complete)
            fail(ErrorKind::IncompleteNormalization, "chart " + std::to_string(i) + " hit the stage cap");
        chart.distinguished = res.inclusion.apply(chart.distinguished);
        chart.from_base = RingMap::compose(chart.from_base, res.inclusion);
        chart.algebra = res.closure;
        chart.adjoined = std::move(res.adjoined);
        chart.empty = chart.algebra.is_zero_ring();
    }
    atlas.kind = AtlasKind::Normalized;
    return atlas;
}

bool check_uniformity_implication(const FpAlgebra& a, const Fraction& f, unsigned max_power) {
    if (!a.is_torsion_free()) fail(ErrorKind::TorsionInput, "uniformity check requires a torsion-free algebra");
    require_same_ring(f.num.ring(), a.ring());
    const Poly w = a.uniformizer();
    if (f.exp == 0) return true; // w*f is in A outright
    const unsigned m = f.exp - 1; // w*f = c / w^m

    bool hypothesis = false;
    for (unsigned j = 1; j <= max_power && !hypothesis; ++j) {
        std::vector<Poly> gens{w.pow(m * j)};
        const auto& rels = a.relations().gens();
        gens.insert(gens.end(), rels.begin(), rels.end());
        hypothesis = Ideal(a.ring(), std::move(gens)).contains(f.num.pow(j));
    }
    if (!hypothesis) return true;

    std::vector<Poly> gens{w.pow(m)};
    const auto& rels = a.relations().gens();
    gens.insert(gens.end(), rels.begin(), rels.end());
    return Ideal(a.ring(), std::move(gens)).contains(f.num);
}

} // namespace adicalg
