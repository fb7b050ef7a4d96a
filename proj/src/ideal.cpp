#include "adicalg/ideal.hpp"

#include <algorithm>

#include "adicalg/errors.hpp"

namespace adicalg {

namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

std::string fresh_aux_name(const std::vector<std::string>& taken, const std::string& stem) {
    std::string name = stem;
    unsigned k = 0;
    auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
    while (used(name)) name = stem + std::to_string(k++);
    return name;
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) require_same_ring(g.ring(), ring_);
}

Ideal Ideal::unit(RingPtr ring) {
    Poly one = Poly::one(ring);
    return Ideal(std::move(ring), {std::move(one)});
}

const std::vector<Poly>& Ideal::basis(const MonomialOrder& order) const {
    const std::string key = order.key();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(key);
        if (it != cache_->bases.end()) return it->second;
    }
    std::vector<Poly> gb = groebner(gens_, order);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, fresh] = cache_->bases.try_emplace(key, std::move(gb));
    return it->second;
}

const std::vector<Poly>& Ideal::basis() const { return basis(MonomialOrder::grevlex(ring_->nvars())); }

bool Ideal::contains(const Poly& p) const {
    require_same_ring(p.ring(), ring_);
    if (p.is_zero()) return true;
    return normal_form(p).is_zero();
}

Poly Ideal::normal_form(const Poly& p) const {
    return adicalg::normal_form(p, basis(), MonomialOrder::grevlex(ring_->nvars()));
}

bool Ideal::contains_all(const Ideal& other) const {
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& other) const {
    require_same_ring(ring_, other.ring_);
    const auto& a = basis();
    const auto& b = other.basis();
    return a == b;
}

bool Ideal::is_unit() const {
    const auto& b = basis();
    return b.size() == 1 && b[0].is_one();
}

bool Ideal::is_zero_ideal() const { return basis().empty(); }

Ideal Ideal::sum(const Ideal& other) const {
    require_same_ring(ring_, other.ring_);
    std::vector<Poly> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(ring_, std::move(gens));
}

Ideal Ideal::product(const Ideal& other) const {
    require_same_ring(ring_, other.ring_);
    std::vector<Poly> gens;
    gens.reserve(gens_.size() * other.gens_.size());
    for (const auto& a : gens_)
        for (const auto& b : other.gens_) gens.push_back(a * b);
    return Ideal(ring_, std::move(gens));
}

Ideal Ideal::power(unsigned k) const {
    if (k == 0) return Ideal::unit(ring_);
    Ideal r = *this;
    for (unsigned i = 1; i < k; ++i) r = r.product(*this);
    return r;
}

Ideal Ideal::saturation(const Poly& g) const {
    require_same_ring(g.ring(), ring_);
    if (g.is_zero()) fail(ErrorKind::Domain, "saturation at zero");
    if (g.is_constant()) return Ideal(ring_, gens_); // unit: I : u^inf = I

    const std::size_t n = ring_->nvars();
    std::vector<std::string> vars = ring_->vars;
    vars.push_back(fresh_aux_name(vars, "@s"));
    RingPtr ext = make_ring(ring_->field, std::move(vars));
    auto up = identity_map(n);

    std::vector<Poly> egens;
    egens.reserve(gens_.size() + 1);
    for (const auto& p : gens_) egens.push_back(p.lift_to(ext, up));
    // 1 - y*g
    Poly y = Poly::variable(ext, n);
    egens.push_back(Poly::one(ext) - y * g.lift_to(ext, up));

    auto order = MonomialOrder::block(n + 1, {n});
    std::vector<Poly> gb = groebner(egens, order);
    std::vector<Poly> kept;
    for (const auto& p : gb)
        if (!p.depends_on(n)) kept.push_back(p.project_to(ring_, up));
    return Ideal(ring_, std::move(kept));
}

Ideal Ideal::eliminate(const std::vector<std::size_t>& vars) const {
    if (vars.empty()) return *this;
    auto order = MonomialOrder::block(ring_->nvars(), vars);
    std::vector<Poly> gb = groebner(gens_, order);
    std::vector<Poly> kept;
    for (const auto& p : gb) {
        bool free = true;
        for (auto v : vars)
            if (p.depends_on(v)) {
                free = false;
                break;
            }
        if (free) kept.push_back(p);
    }
    return Ideal(ring_, std::move(kept));
}

bool Ideal::radical_contains(const Poly& p) const {
    require_same_ring(p.ring(), ring_);
    if (p.is_zero()) return true;
    const std::size_t n = ring_->nvars();
    std::vector<std::string> vars = ring_->vars;
    vars.push_back(fresh_aux_name(vars, "@r"));
    RingPtr ext = make_ring(ring_->field, std::move(vars));
    auto up = identity_map(n);

    std::vector<Poly> egens;
    egens.reserve(gens_.size() + 1);
    for (const auto& q : gens_) egens.push_back(q.lift_to(ext, up));
    Poly y = Poly::variable(ext, n);
    egens.push_back(Poly::one(ext) - y * p.lift_to(ext, up));
    std::vector<Poly> gb = groebner(egens, MonomialOrder::grevlex(n + 1));
    return gb.size() == 1 && gb[0].is_one();
}

} // namespace adicalg
