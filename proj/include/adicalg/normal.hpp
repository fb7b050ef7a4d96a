#pragma once

#include <optional>
#include <vector>

#include "adicalg/blowup.hpp"
#include "adicalg/fpalg.hpp"

namespace adicalg {

struct NormalizationResult {
    FpAlgebra closure;
    RingMap inclusion;               // A -> closure
    std::vector<Fraction> adjoined;  // each entry c / w^m in adjunction order
    bool complete = true;            // search exhausted below the bound vs stage cap hit
};

struct ClosednessReport {
    bool closed = true;
    std::optional<Poly> witness; // c with c/w integral and c not in w*A
};

// Bounded integral-closedness test: scans normal forms of monomials of total
// degree <= degree_bound for an integral fraction c/w outside A.  A single
// denominator suffices: a minimal-denominator counterexample c/w^m yields the
// witness (w^{m-1} c') / w.
ClosednessReport is_integrally_closed(const FpAlgebra& a, unsigned degree_bound);

// Integral closure of A inside A[w^{-1}]: adjoin witnesses one at a time, each
// with its monic relation, saturating at w, until the bounded test finds
// nothing more (complete) or the stage cap is hit (incomplete).
NormalizationResult normalize(const FpAlgebra& a, unsigned degree_bound, unsigned max_stages = 32);

// Blow-up followed by chart-wise normalization; transitions are recomputed on
// the normalized charts by chart_transition.
ChartAtlas normalized_blowup(const FpAlgebra& a, const AdmissibleIdeal& center, unsigned degree_bound);

// Testable form of the power-boundedness consequence of integral closedness:
// if (w f)^j lies in A for some j <= max_power, then w f itself must.  Returns
// the implication's truth value.
bool check_uniformity_implication(const FpAlgebra& a, const Fraction& f, unsigned max_power);

} // namespace adicalg
