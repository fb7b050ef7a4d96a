#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adicalg/fpalg.hpp"

namespace adicalg {

// numerator / denominator^exp, the only fraction shape the constructions
// need; the denominator element is fixed by context (the uniformizer unless
// stated otherwise).
struct Fraction {
    Poly num;
    unsigned exp = 0;
};

// Finitely generated open ideal of an algebra: the legal blow-up centers.
// Openness is enforced at construction.
class AdmissibleIdeal {
public:
    AdmissibleIdeal() = default;
    static AdmissibleIdeal make(FpAlgebra ambient, std::vector<Poly> gens);

    const FpAlgebra& ambient() const { return ambient_; }
    const std::vector<Poly>& gens() const { return gens_; }
    Ideal as_ideal() const { return Ideal(ambient_.ring(), gens_); }

private:
    FpAlgebra ambient_;
    std::vector<Poly> gens_;
};

// Mutually inverse pair of algebra maps; construction checks that both
// composites reduce every variable to itself modulo relations.
class RingIso {
public:
    RingIso() = default;
    static RingIso make(RingMap forward, RingMap backward);

    const RingMap& forward() const { return forward_; }
    const RingMap& backward() const { return backward_; }

private:
    RingMap forward_;
    RingMap backward_;
};

struct Chart {
    FpAlgebra algebra;
    RingMap from_base;
    Poly distinguished;    // image of the defining generator
    std::size_t rees_begin = 0; // ring index of the first Rees variable
    std::size_t rees_count = 0;
    bool empty = false;
    std::vector<Fraction> adjoined; // normalization data, empty on plain atlases
};

enum class AtlasKind { Plain, Normalized };

// The blow-up as a chart list: one chart per listed generator of the center,
// in generator order.  Zero-ring charts are kept and flagged.
struct ChartAtlas {
    FpAlgebra base;
    AdmissibleIdeal ideal;
    std::vector<Chart> charts;
    AtlasKind kind = AtlasKind::Plain;
};

// The chart algebra B = A[T1..Tr]/((g Tj - fj) + I_A) saturated at g and at
// the uniformizer, with its structure map.  In B the center becomes the
// principal ideal (g).
std::pair<FpAlgebra, RingMap> affine_blowup_algebra(const FpAlgebra& a, const AdmissibleIdeal& center,
                                                    std::size_t gen_index);

ChartAtlas blowup_charts(const FpAlgebra& a, const AdmissibleIdeal& center);

// Gluing isomorphism localize(B_i, u_ij) ~= localize(B_j, u_ji), where u_ij is
// the image in B_i of the j-th Rees variable (the fraction f_j / f_i).
RingIso chart_transition(const ChartAtlas& atlas, std::size_t i, std::size_t j);

// Chart m localized at the product of the overlap elements u_{m,n} for the
// other members n of `subset`; the model of the joint overlap seen from m.
std::pair<FpAlgebra, RingMap> overlap_localization(const ChartAtlas& atlas, std::size_t m,
                                                   const std::vector<std::size_t>& subset);

// The forced map between two such overlap models; composing these around a
// triangle is the cocycle identity.
RingMap overlap_transition(const ChartAtlas& atlas, std::size_t from, std::size_t to,
                           const std::vector<std::size_t>& subset);

struct ComposedBlowup {
    ChartAtlas product;            // atlas of the blow-up in J1 * J2
    ChartAtlas first;              // atlas of the blow-up in J1
    std::vector<std::size_t> first_chart; // per product chart: index of its J1 chart
    std::vector<RingMap> to_first;        // per product chart: B_{first} -> product chart
};

ComposedBlowup compose_blowups(const FpAlgebra& a, const AdmissibleIdeal& j1, const AdmissibleIdeal& j2);

// Extend an open ideal of the basic open D(g), given by fractions p_i / g^{m_i},
// to an admissible ideal of A: cleared numerators plus the minimal power of
// the ideal of definition that restricts correctly.
AdmissibleIdeal extend_admissible_ideal(const FpAlgebra& a, const Poly& g, const std::vector<Fraction>& locals,
                                        unsigned k_max = 16);

struct FiniteModification {
    AdmissibleIdeal center;  // (w^r, c_1, .., c_n)
    std::size_t chart_index; // the w^r chart
    FpAlgebra presented;     // A[z_i]/(w^r z_i - c_i) saturated at w
    RingMap presented_map;   // A -> presented
    RingIso iso;             // chart <-> presented
};

// Realizes a finite modification A -> A[c_1/w^r, .., c_n/w^r] as a blow-up
// chart.  Every fraction must be integral over A.
FiniteModification finite_modification_to_blowup(const FpAlgebra& a, const std::vector<Fraction>& elems);

// Universal property of the chart: if center * C = (f_i) * C for a
// torsion-free C under `structure`, the factoring map B_i -> C exists with
// forced Rees images; returns nullopt when some division fails.
std::optional<RingMap> factor_through_chart(const ChartAtlas& atlas, std::size_t i, const FpAlgebra& c,
                                            const RingMap& structure);

} // namespace adicalg
