#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adicalg/blowup.hpp"
#include "adicalg/fpalg.hpp"
#include "adicalg/vrat.hpp"

namespace adicalg {

// Stage-n chart of the generic fiber of A: the algebra A[f1^n..fr^n / w]
// presented as a saturated Rees quotient, where f1..fr generate the ideal of
// definition.  In the chart, (f1^n..fr^n) becomes the principal ideal (w).
struct GenericChart {
    unsigned n = 0;
    FpAlgebra algebra;
    RingMap from_base;
    std::size_t rees_begin = 0;
    std::size_t rees_count = 0;
};

GenericChart generic_chart(const FpAlgebra& a, unsigned n);

// The unique A-algebra map between stages m >= n, sending each degree-m Rees
// variable to the forced solution of w * image = f_j^m.
RingMap generic_transition(const FpAlgebra& a, unsigned m, unsigned n);

// Stage-n chart of the tube over the closed locus cut out by z_gens; requires
// every ideal-of-definition generator to lie in the radical of (z_gens).
GenericChart tube_chart(const FpAlgebra& a, const std::vector<Poly>& z_gens, unsigned n);

// Valued point of the generic fiber: a coordinate in k(v) per ambient
// variable, with the uniformizer going to v^e.  Validity means the relations
// vanish, all coordinates have v-adic order >= 0, and the ideal-of-definition
// generators evaluate with strictly positive order.
class Point {
public:
    Point() = default;
    Point(unsigned e, std::vector<VRat> values) : e_(e), values_(std::move(values)) {}

    unsigned e() const { return e_; }
    const std::vector<VRat>& values() const { return values_; }

private:
    unsigned e_ = 1;
    std::vector<VRat> values_;
};

void point_validate(const FpAlgebra& a, const Point& p); // throws on the first violated invariant

VRat point_eval(const FpAlgebra& a, const Point& p, const Poly& f);

// Membership oracle for the specialization prime of p: |f(p)| < 1.
bool spc_contains(const FpAlgebra& a, const Point& p, const Poly& f);

struct LiftedPoint {
    std::size_t chart_index = 0;
    Point point;
};

// Factors a valid point through the blow-up: selects the chart whose defining
// generator has minimal v-adic order at the point (smallest index on ties) and
// evaluates the Rees coordinates as the forced quotients.
LiftedPoint lift_point(const ChartAtlas& atlas, const Point& p);
LiftedPoint lift_point(const FpAlgebra& a, const AdmissibleIdeal& center, const Point& p);

// Whether the generic fiber is empty: the uniformizer is nilpotent.
bool is_generic_fiber_empty(const FpAlgebra& a);

struct DescentResult {
    std::optional<RingMap> map;     // the model map when descent succeeds
    std::size_t witness = 0;        // first failing image otherwise
};

// Tries to descend a generic-fiber map A[w^{-1}] -> B[w^{-1}], given by
// fractional variable images c_i / w^{m_i}, to a model map A -> B.  Succeeds
// exactly when every c_i lies in w^{m_i} B.
DescentResult descend_morphism(const FpAlgebra& a, const FpAlgebra& b, const std::vector<Fraction>& images);

} // namespace adicalg
