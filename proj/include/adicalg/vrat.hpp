#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adicalg/field.hpp"

namespace adicalg {

// Dense univariate polynomial over a coefficient field, the building block of
// valued point coordinates.
class UniPoly {
public:
    explicit UniPoly(CoeffField field) : field_(field) {}
    UniPoly(CoeffField field, std::vector<mpq_class> coeffs);

    static UniPoly zero(CoeffField field) { return UniPoly(field); }
    static UniPoly constant(CoeffField field, const mpq_class& c);
    static UniPoly variable(CoeffField field); // v

    const CoeffField& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int low_order() const; // index of the lowest nonzero coefficient; requires nonzero

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const mpq_class& c) const;
    UniPoly shifted(unsigned k) const; // multiply by v^k

    // Division with remainder; divisor nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    static UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic

    UniPoly monic() const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

private:
    void trim();

    CoeffField field_;
    std::vector<mpq_class> c_;
};

// Element of the valued field k(v): v^shift * num / den with num(0) != 0,
// den(0) != 0, den monic and gcd(num, den) = 1.  The v-adic order is `shift`.
// Laurent polynomials embed as den = 1; quotients of point coordinates stay
// representable, which point lifting relies on.
class VRat {
public:
    explicit VRat(CoeffField field);

    static VRat zero(CoeffField field) { return VRat(field); }
    static VRat constant(CoeffField field, const mpq_class& c);
    static VRat monomial(CoeffField field, const mpq_class& c, int power); // c * v^power
    static VRat make(int shift, UniPoly num, UniPoly den);

    const CoeffField& field() const { return field_; }
    bool is_zero() const { return num_.is_zero(); }

    // v-adic order; nullopt for zero (order +infinity).
    std::optional<int> order() const;

    VRat operator+(const VRat& o) const;
    VRat operator-(const VRat& o) const;
    VRat operator-() const;
    VRat operator*(const VRat& o) const;
    VRat operator/(const VRat& o) const; // nonzero divisor
    VRat pow(int n) const;               // negative n inverts; requires nonzero then

    bool operator==(const VRat& o) const;
    bool operator!=(const VRat& o) const { return !(*this == o); }

    bool is_laurent() const; // den == 1
    std::string to_string() const;

private:
    VRat(CoeffField field, int shift, UniPoly num, UniPoly den);
    void normalize();

    CoeffField field_;
    int shift_ = 0;
    UniPoly num_;
    UniPoly den_;
};

// Parses expressions in v with +, -, *, /, ^ (integer exponents, possibly
// negative) and rational constants.
VRat parse_vrat(CoeffField field, std::string_view text);

} // namespace adicalg
