#pragma once

// Brute-force reference computations the test suite checks the library
// against.  Everything here is deliberately independent of the Groebner
// machinery under test: membership goes through exact dense linear algebra,
// power searches enumerate exponents directly.

#include <random>
#include <vector>

#include "adicalg/blowup.hpp"
#include "adicalg/fpalg.hpp"
#include "adicalg/ideal.hpp"

namespace oracles {

using namespace adicalg;

// all monomials of total degree <= d, deterministic order
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d);

// p = sum q_i g_i solvable with deg q_i <= cofactor_degree, by exact Gaussian
// elimination over the coefficient field
bool naive_member(const Poly& p, const std::vector<Poly>& gens, unsigned cofactor_degree);

// exists m <= max_power with p^m in I
bool power_member(const Ideal& ideal, const Poly& p, unsigned max_power);

// exists m <= max_power with every generator of idef^m in (j_gens) + relations
bool power_open(const FpAlgebra& a, const std::vector<Poly>& j_gens, unsigned max_power);

// dimension of { q in span(monomials of deg <= d in keep_vars) : q in I },
// computed by reducing each monomial and extracting an exact nullspace rank
std::size_t bounded_member_dimension(const Ideal& ideal, const std::vector<std::size_t>& keep_vars, unsigned d);

// all fractions c / w^m with c a monomial normal form of degree <= deg_bound,
// 1 <= m <= denom_bound, c/w^m integral over A and c not in w^m A
std::vector<Fraction> integral_fractions(const FpAlgebra& a, unsigned deg_bound, unsigned denom_bound);

// the subring A[fracs] of A[w^{-1}] presented by Rees variables, saturated
FpAlgebra adjoin_fractions(const FpAlgebra& a, const std::vector<Fraction>& fracs);

// c / w^m lies in the subring presented by `b` (torsion-free, A-vars first)
bool fraction_in(const FpAlgebra& b, const Poly& c, unsigned m);

// seeded random polynomial: at most `terms` monomials of degree <= deg with
// small integer coefficients
Poly random_poly(const RingPtr& ring, std::mt19937& rng, unsigned deg, unsigned terms);

// Reference Buchberger without the pair criteria: every S-polynomial is
// reduced.  Slow but independent of the optimized engine's skipping logic.
std::vector<Poly> groebner_reference(const std::vector<Poly>& gens, const MonomialOrder& order);

} // namespace oracles
