#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adicalg/field.hpp"
#include "adicalg/monomial.hpp"

namespace adicalg {

// Ambient polynomial ring: a coefficient field and a named variable list.
struct PolyRing {
    CoeffField field;
    std::vector<std::string> vars;

    PolyRing(CoeffField f, std::vector<std::string> v);

    std::size_t nvars() const { return vars.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const PolyRing& o) const { return field == o.field && vars == o.vars; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(CoeffField field, std::vector<std::string> vars);

struct Term {
    Monomial mono;
    mpq_class coeff;
};

// Sparse exact multivariate polynomial.  Terms are kept sorted descending
// under the natural grevlex order of the ambient ring, with no zero
// coefficients, so equality is a plain term-list comparison.
class Poly {
public:
    Poly() = default; // zero over a null ring; only for containers

    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, mpq_class c);
    static Poly one(RingPtr ring) { return constant(std::move(ring), 1); }
    static Poly variable(RingPtr ring, std::size_t index);
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const;
    unsigned total_degree() const; // 0 for the zero polynomial
    bool depends_on(std::size_t var) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly pow(unsigned n) const;
    Poly scaled(const mpq_class& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    const Term& leading_term(const MonomialOrder& order) const; // requires nonzero
    Poly monic(const MonomialOrder& order) const;

    // Substitution homomorphism: variable i goes to images[i], a polynomial in
    // the target ring (same coefficient field).
    Poly substitute(const RingPtr& target, std::span<const Poly> images) const;

    // Reinterpret in a larger ring; var_map[i] is the index in `target` of
    // this ring's variable i.
    Poly lift_to(const RingPtr& target, std::span<const std::size_t> var_map) const;
    // Inverse of lift_to: requires the polynomial not to depend on unmapped
    // variables.
    Poly project_to(const RingPtr& target, std::span<const std::size_t> var_map) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

void require_same_ring(const Poly& a, const Poly& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

// Parses the textual syntax: rational coefficients, `^` powers, optional `*`,
// identifiers as variables.  Throws Error(SyntaxError) with a column offset.
Poly parse_poly(const RingPtr& ring, std::string_view text);

} // namespace adicalg
