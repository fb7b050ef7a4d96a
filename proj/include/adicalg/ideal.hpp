#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "adicalg/groebner.hpp"
#include "adicalg/poly.hpp"

namespace adicalg {

// Finitely generated ideal in a polynomial ring, with a cached reduced
// Groebner basis per monomial order.  The cache is shared across copies and
// populated on demand; concurrent fills compute the same canonical basis.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    const std::vector<Poly>& basis(const MonomialOrder& order) const;
    const std::vector<Poly>& basis() const; // library default: grevlex

    bool contains(const Poly& p) const;
    bool contains_all(const Ideal& other) const;
    bool equals(const Ideal& other) const;
    bool is_unit() const;
    bool is_zero_ideal() const;

    Poly normal_form(const Poly& p) const;

    Ideal sum(const Ideal& other) const;
    Ideal product(const Ideal& other) const;
    Ideal power(unsigned k) const;

    // I : g^infinity via one auxiliary variable and elimination.
    Ideal saturation(const Poly& g) const;

    // I intersected with the subring omitting `vars`; generators come out free
    // of those variables, still expressed in the ambient ring.
    Ideal eliminate(const std::vector<std::size_t>& vars) const;

    // p in sqrt(I), by the Rabinowitsch trick.
    bool radical_contains(const Poly& p) const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;

    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::vector<Poly>> bases;
    };
    std::shared_ptr<Cache> cache_;
};

} // namespace adicalg
