#pragma once

#include <gmpxx.h>

#include <string>

#include "adicalg/errors.hpp"

namespace adicalg {

enum class FieldKind { Rationals, Prime };

// Coefficient field: exact rationals or a prime field F_p.  Values are carried
// as mpq_class in canonical form: reduced fractions for Q, integers in [0, p)
// with denominator 1 for F_p.  All arithmetic goes through the field so the
// prime case stays reduced.
class CoeffField {
public:
    static CoeffField rationals();
    static CoeffField prime(unsigned long p);

    FieldKind kind() const { return kind_; }
    const mpz_class& modulus() const { return p_; }

    mpq_class canon(const mpq_class& v) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;

    static bool is_zero(const mpq_class& v) { return sgn(v) == 0; }

    bool operator==(const CoeffField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const CoeffField& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    CoeffField(FieldKind kind, mpz_class p) : kind_(kind), p_(std::move(p)) {}

    FieldKind kind_;
    mpz_class p_; // 0 for rationals
};

std::string coeff_to_string(const mpq_class& v);

} // namespace adicalg
