#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adicalg/ideal.hpp"

namespace adicalg {

// Finitely presented algebra A = k[w, x1..xn] / I_A over the base k[w], where
// the first variable w is the distinguished pseudo-uniformizer, together with
// an ideal of definition that always contains w.  Elements of A are carried as
// polynomials in the ambient ring and compared modulo the relations.
class FpAlgebra {
public:
    FpAlgebra() = default;

    // `uniformizer` must be the first variable of the ring; it is appended to
    // the ideal-of-definition generators unless already listed.
    static FpAlgebra make(RingPtr ring, std::vector<Poly> relations, std::vector<Poly> idef_gens,
                          std::string_view uniformizer = "w");

    const RingPtr& ring() const { return ring_; }
    const Ideal& relations() const { return relations_; }
    const Ideal& ideal_of_definition() const { return idef_; }
    const std::vector<Poly>& idef_gens() const { return idef_gens_; }
    const std::string& uniformizer_name() const { return ring_->vars[0]; }

    Poly uniformizer() const { return Poly::variable(ring_, 0); }

    bool is_zero_ring() const { return relations_.is_unit(); }
    bool is_torsion_free() const; // memoized: sat(I_A, w) == I_A

    Poly nf(const Poly& p) const { return relations_.normal_form(p); }
    bool elements_equal(const Poly& a, const Poly& b) const { return relations_.contains(a - b); }

    bool same_presentation(const FpAlgebra& other) const;

private:
    RingPtr ring_;
    Ideal relations_;
    Ideal idef_;
    std::vector<Poly> idef_gens_;
    std::shared_ptr<std::atomic<int>> torsion_free_memo_; // -1 unknown, 0 no, 1 yes
};

// Algebra homomorphism over k[w]: one image per source variable, with the
// uniformizer mapped to the uniformizer.  Construction validates that every
// source relation maps into the target relations.
class RingMap {
public:
    RingMap() = default;
    static RingMap make(FpAlgebra source, FpAlgebra target, std::vector<Poly> images);
    static RingMap identity(const FpAlgebra& a);

    const FpAlgebra& source() const { return source_; }
    const FpAlgebra& target() const { return target_; }
    const std::vector<Poly>& images() const { return images_; }

    // Substitution followed by normal form in the target.
    Poly apply(const Poly& p) const;

    static RingMap compose(const RingMap& first, const RingMap& then);

private:
    FpAlgebra source_;
    FpAlgebra target_;
    std::vector<Poly> images_;
};

// A/(w-power-torsion) presented by saturating the relations at w, with the
// quotient map.  The zero ring is a legal output.
std::pair<FpAlgebra, RingMap> torsion_saturate(const FpAlgebra& a);

// True iff J + I_A contains a power of the ideal of definition, i.e. every
// ideal-of-definition generator lies in the radical.
bool is_open_ideal(const FpAlgebra& a, const std::vector<Poly>& j_gens);

// Kernel of an algebra map as an ideal of the source's ambient ring (it
// contains the source relations), computed by graph ideal plus elimination.
Ideal map_kernel(const RingMap& f);

// A[u]/(g u - 1) with the structure map; models A<g^{-1}>.
std::pair<FpAlgebra, RingMap> localize(const FpAlgebra& a, const Poly& g);

// Whether c / w^m, as an element of A[w^{-1}], is integral over A.  Requires A
// to be w-torsion-free.  Detected on the reduced Groebner basis of the
// saturated presentation of A[z]/(w^m z - c) under an order with z dominant:
// integrality is witnessed by an element whose leading monomial is a pure
// power of z.
bool is_integral_element(const FpAlgebra& a, const Poly& c, unsigned m);

// The witness itself: the minimal-degree basis element monic in z, expressed
// in the ring of `a` extended by one last variable named `zname`.
std::optional<Poly> integral_relation(const FpAlgebra& a, const Poly& c, unsigned m,
                                      const std::string& zname);

// Unique t with divisor * t = c in A, when it exists (unique when the divisor
// is a non-zero-divisor).  The workhorse behind forced factorizations.
std::optional<Poly> solve_divide(const FpAlgebra& a, const Poly& divisor, const Poly& c);

// Deterministic fresh variable name built from `stem`, avoiding `taken`.
std::string fresh_var_name(const std::vector<std::string>& taken, const std::string& stem);

} // namespace adicalg
