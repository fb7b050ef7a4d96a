#pragma once

#include <span>
#include <vector>

#include "adicalg/poly.hpp"

namespace adicalg {

// Remainder of multivariate division of p by `basis` under `order`, with full
// tail reduction: no term of the result is divisible by a leading monomial of
// the basis.  When `basis` is a Groebner basis the remainder is the unique
// normal form and vanishes exactly on ideal members.
Poly normal_form(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order);

// The reduced Groebner basis of the ideal generated by `gens`: Buchberger with
// the product and chain criteria, S-pairs selected by lcm degree, followed by
// minimalization and tail reduction.  Output is monic and sorted ascending by
// leading monomial, hence canonical.
std::vector<Poly> groebner(const std::vector<Poly>& gens, const MonomialOrder& order);

} // namespace adicalg
