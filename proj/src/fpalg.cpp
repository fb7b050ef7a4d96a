#include "adicalg/fpalg.hpp"

#include <algorithm>
#include <cassert>

namespace adicalg {

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

} // namespace

std::string fresh_var_name(const std::vector<std::string>& taken, const std::string& stem) {
    auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
    if (!used(stem)) return stem;
    unsigned k = 1;
    for (;;) {
        std::string name = stem + std::to_string(k++);
        if (!used(name)) return name;
    }
}

FpAlgebra FpAlgebra::make(RingPtr ring, std::vector<Poly> relations, std::vector<Poly> idef_gens,
                          std::string_view uniformizer) {
    if (!ring->index_of(uniformizer))
        fail(ErrorKind::MissingUniformizer, "variable '" + std::string(uniformizer) + "' is not in the ring");
    if (ring->vars[0] != uniformizer)
        fail(ErrorKind::MissingUniformizer,
             "the uniformizer '" + std::string(uniformizer) + "' must be the first variable");

    FpAlgebra a;
    a.ring_ = ring;
    for (const auto& p : relations) require_same_ring(p.ring(), ring);
    for (const auto& p : idef_gens) require_same_ring(p.ring(), ring);
    a.relations_ = Ideal(ring, std::move(relations));

    Poly w = Poly::variable(ring, 0);
    bool lists_w = false;
    for (const auto& g : idef_gens)
        if (a.relations_.contains(g - w)) {
            lists_w = true;
            break;
        }
    if (!lists_w) idef_gens.push_back(w);
    a.idef_gens_ = idef_gens;
    a.idef_ = Ideal(ring, std::move(idef_gens));
    a.torsion_free_memo_ = std::make_shared<std::atomic<int>>(-1);
    return a;
}

bool FpAlgebra::is_torsion_free() const {
    int memo = torsion_free_memo_->load();
    if (memo >= 0) return memo == 1;
    bool tf = relations_.saturation(uniformizer()).equals(relations_);
    torsion_free_memo_->store(tf ? 1 : 0);
    return tf;
}

bool FpAlgebra::same_presentation(const FpAlgebra& other) const {
    return *ring_ == *other.ring_ && relations_.equals(other.relations_) && idef_.equals(other.idef_);
}

RingMap RingMap::make(FpAlgebra source, FpAlgebra target, std::vector<Poly> images) {
    if (images.size() != source.ring()->nvars())
        fail(ErrorKind::IllDefined, "expected one image per source variable");
    for (const auto& p : images) require_same_ring(p.ring(), target.ring());
    if (!target.elements_equal(images[0], target.uniformizer()))
        fail(ErrorKind::IllDefined, "the uniformizer must map to the uniformizer");

    RingMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    for (auto& img : images) img = f.target_.nf(img);
    f.images_ = std::move(images);
    for (const auto& r : f.source_.relations().gens()) {
        Poly image = r.substitute(f.target_.ring(), f.images_);
        if (!f.target_.relations().contains(image))
            fail(ErrorKind::IllDefined, "relation " + r.to_string() + " is not preserved");
    }
    return f;
}

RingMap RingMap::identity(const FpAlgebra& a) {
    std::vector<Poly> images;
    images.reserve(a.ring()->nvars());
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i) images.push_back(Poly::variable(a.ring(), i));
    return RingMap::make(a, a, std::move(images));
}

Poly RingMap::apply(const Poly& p) const {
    require_same_ring(p.ring(), source_.ring());
    return target_.nf(p.substitute(target_.ring(), images_));
}

RingMap RingMap::compose(const RingMap& first, const RingMap& then) {
    if (!first.target().same_presentation(then.source()))
        fail(ErrorKind::RingMismatch, "composition through mismatched algebras");
    std::vector<Poly> images;
    images.reserve(first.images().size());
    for (const auto& img : first.images()) images.push_back(then.apply(img));
    return RingMap::make(first.source(), then.target(), std::move(images));
}

std::pair<FpAlgebra, RingMap> torsion_saturate(const FpAlgebra& a) {
    Ideal saturated = a.relations().saturation(a.uniformizer());
    FpAlgebra out = FpAlgebra::make(a.ring(), saturated.gens(), a.idef_gens(), a.uniformizer_name());
    std::vector<Poly> images;
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i) images.push_back(Poly::variable(a.ring(), i));
    RingMap quotient = RingMap::make(a, out, std::move(images));
    return {std::move(out), std::move(quotient)};
}

bool is_open_ideal(const FpAlgebra& a, const std::vector<Poly>& j_gens) {
    std::vector<Poly> gens = j_gens;
    const auto& rels = a.relations().gens();
    gens.insert(gens.end(), rels.begin(), rels.end());
    Ideal total(a.ring(), std::move(gens));
    for (const auto& f : a.idef_gens())
        if (!total.radical_contains(f)) return false;
    return true;
}

Ideal map_kernel(const RingMap& f) {
    const RingPtr& src = f.source().ring();
    const RingPtr& tgt = f.target().ring();
    const std::size_t ns = src->nvars(), nt = tgt->nvars();

    std::vector<std::string> vars = tgt->vars;
    for (std::size_t i = 0; i < ns; ++i) vars.push_back("@k" + std::to_string(i));
    RingPtr big = make_ring(src->field, std::move(vars));

    auto tgt_map = identity_map(nt);
    std::vector<std::size_t> src_map(ns);
    for (std::size_t i = 0; i < ns; ++i) src_map[i] = nt + i;

    std::vector<Poly> gens;
    for (const auto& r : f.target().relations().gens()) gens.push_back(r.lift_to(big, tgt_map));
    for (std::size_t i = 0; i < ns; ++i)
        gens.push_back(Poly::variable(big, nt + i) - f.images()[i].lift_to(big, tgt_map));

    std::vector<std::size_t> elim(nt);
    for (std::size_t i = 0; i < nt; ++i) elim[i] = i;
    Ideal graph(big, std::move(gens));
    Ideal eliminated = graph.eliminate(elim);

    std::vector<Poly> kernel;
    for (const auto& p : eliminated.gens()) kernel.push_back(p.project_to(src, src_map));
    return Ideal(src, std::move(kernel));
}

std::pair<FpAlgebra, RingMap> localize(const FpAlgebra& a, const Poly& g) {
    require_same_ring(g.ring(), a.ring());
    const std::size_t n = a.ring()->nvars();
    std::vector<std::string> vars = a.ring()->vars;
    vars.push_back(fresh_var_name(vars, "u"));
    RingPtr ext = make_ring(a.ring()->field, std::move(vars));
    auto up = identity_map(n);

    std::vector<Poly> rels;
    for (const auto& r : a.relations().gens()) rels.push_back(r.lift_to(ext, up));
    rels.push_back(g.lift_to(ext, up) * Poly::variable(ext, n) - Poly::one(ext));

    std::vector<Poly> idef;
    for (const auto& f : a.idef_gens()) idef.push_back(f.lift_to(ext, up));

    FpAlgebra out = FpAlgebra::make(ext, std::move(rels), std::move(idef), a.uniformizer_name());
    std::vector<Poly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Poly::variable(ext, i));
    RingMap structure = RingMap::make(a, out, std::move(images));
    return {std::move(out), std::move(structure)};
}

namespace {

struct IntegralProbe {
    RingPtr ext;           // ring of `a` extended by z (last)
    std::vector<Poly> gb;  // reduced basis of the saturated presentation, z dominant
};

IntegralProbe integral_probe(const FpAlgebra& a, const Poly& numerator, const Poly& denominator,
                             const std::string& zname) {
    const std::size_t n = a.ring()->nvars();
    std::vector<std::string> vars = a.ring()->vars;
    vars.push_back(fresh_var_name(vars, zname));
    RingPtr ext = make_ring(a.ring()->field, std::move(vars));
    auto up = identity_map(n);

    std::vector<Poly> gens;
    for (const auto& r : a.relations().gens()) gens.push_back(r.lift_to(ext, up));
    gens.push_back(denominator.lift_to(ext, up) * Poly::variable(ext, n) - numerator.lift_to(ext, up));

    Ideal presented(ext, std::move(gens));
    Ideal saturated = presented.saturation(denominator.lift_to(ext, up));
    auto order = MonomialOrder::block(n + 1, {n});
    return {ext, groebner(saturated.gens(), order)};
}

// leading monomial is a pure power of z under the z-dominant order
const Poly* pure_z_element(const IntegralProbe& probe) {
    const std::size_t z = probe.ext->nvars() - 1;
    auto order = MonomialOrder::block(probe.ext->nvars(), {z});
    for (const auto& p : probe.gb) {
        const Monomial& lm = p.leading_term(order).mono;
        bool pure = true;
        for (std::size_t v = 0; v < z; ++v)
            if (lm.e[v]) {
                pure = false;
                break;
            }
        if (pure) return &p;
    }
    return nullptr;
}

} // namespace

bool is_integral_element(const FpAlgebra& a, const Poly& c, unsigned m) {
    if (!a.is_torsion_free()) fail(ErrorKind::TorsionInput, "integrality test requires a torsion-free algebra");
    IntegralProbe probe = integral_probe(a, c, a.uniformizer().pow(m), "z");
    return pure_z_element(probe) != nullptr;
}

std::optional<Poly> integral_relation(const FpAlgebra& a, const Poly& c, unsigned m, const std::string& zname) {
    if (!a.is_torsion_free()) fail(ErrorKind::TorsionInput, "integrality test requires a torsion-free algebra");
    IntegralProbe probe = integral_probe(a, c, a.uniformizer().pow(m), zname);
    const Poly* p = pure_z_element(probe);
    if (!p) return std::nullopt;
    return *p;
}

std::optional<Poly> solve_divide(const FpAlgebra& a, const Poly& divisor, const Poly& c) {
    require_same_ring(divisor.ring(), a.ring());
    require_same_ring(c.ring(), a.ring());
    if (divisor.is_zero()) return std::nullopt;
    IntegralProbe probe = integral_probe(a, c, divisor, "@q");
    const std::size_t z = probe.ext->nvars() - 1;
    const Poly* p = pure_z_element(probe);
    if (!p) return std::nullopt;
    auto order = MonomialOrder::block(probe.ext->nvars(), {z});
    const Monomial& lm = p->leading_term(order).mono;
    if (lm.e[z] != 1) return std::nullopt; // integral but not in A
    Poly t = Poly::variable(probe.ext, z) - *p;
    if (t.depends_on(z)) return std::nullopt;
    auto down = identity_map(a.ring()->nvars());
    Poly solution = a.nf(t.project_to(a.ring(), down));
    if (!a.elements_equal(divisor * solution, c)) return std::nullopt;
    return solution;
}

} // namespace adicalg
