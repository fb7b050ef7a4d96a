#include "adicalg/field.hpp"

namespace adicalg {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::MissingUniformizer: return "MissingUniformizer";
        case ErrorKind::IllDefined: return "IllDefined";
        case ErrorKind::NotAGenerator: return "NotAGenerator";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::EmptyOverlap: return "EmptyOverlap";
        case ErrorKind::NotOpenLocally: return "NotOpenLocally";
        case ErrorKind::ExtensionBoundExceeded: return "ExtensionBoundExceeded";
        case ErrorKind::NotIntegral: return "NotIntegral";
        case ErrorKind::TorsionInput: return "TorsionInput";
        case ErrorKind::NotContainingIdealOfDefinition: return "NotContainingIdealOfDefinition";
        case ErrorKind::NoFiniteOrder: return "NoFiniteOrder";
        case ErrorKind::RelationViolated: return "RelationViolated";
        case ErrorKind::NotContinuous: return "NotContinuous";
        case ErrorKind::IncompleteNormalization: return "IncompleteNormalization";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnboundName: return "UnboundName";
        case ErrorKind::Domain: return "DomainError";
    }
    return "Error";
}

CoeffField CoeffField::rationals() { return CoeffField(FieldKind::Rationals, 0); }

CoeffField CoeffField::prime(unsigned long p) {
    mpz_class m(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 32) == 0)
        fail(ErrorKind::Domain, "field characteristic must be prime, got " + std::to_string(p));
    return CoeffField(FieldKind::Prime, m);
}

mpq_class CoeffField::canon(const mpq_class& v) const {
    mpq_class r = v;
    r.canonicalize();
    if (kind_ == FieldKind::Rationals) return r;
    mpz_class num = r.get_num() % p_;
    if (num < 0) num += p_;
    mpz_class den = r.get_den() % p_;
    if (den == 0) fail(ErrorKind::Domain, "denominator divisible by the field characteristic");
    if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0)
            fail(ErrorKind::Domain, "denominator not invertible modulo p");
        num = (num * inv) % p_;
    }
    return mpq_class(num);
}

mpq_class CoeffField::add(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::Rationals) return a + b;
    mpz_class s = (a.get_num() + b.get_num()) % p_;
    return mpq_class(s);
}

mpq_class CoeffField::sub(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::Rationals) return a - b;
    mpz_class s = (a.get_num() - b.get_num()) % p_;
    if (s < 0) s += p_;
    return mpq_class(s);
}

mpq_class CoeffField::mul(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::Rationals) return a * b;
    mpz_class s = (a.get_num() * b.get_num()) % p_;
    return mpq_class(s);
}

mpq_class CoeffField::inv(const mpq_class& a) const {
    if (is_zero(a)) fail(ErrorKind::Domain, "division by zero");
    if (kind_ == FieldKind::Rationals) return mpq_class(1) / a;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), p_.get_mpz_t());
    return mpq_class(inv);
}

mpq_class CoeffField::div(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::Rationals) {
        if (is_zero(b)) fail(ErrorKind::Domain, "division by zero");
        return a / b;
    }
    return mul(a, inv(b));
}

mpq_class CoeffField::neg(const mpq_class& a) const {
    if (kind_ == FieldKind::Rationals) return -a;
    if (is_zero(a)) return a;
    return mpq_class(p_ - a.get_num());
}

std::string CoeffField::to_string() const {
    if (kind_ == FieldKind::Rationals) return "q";
    return "fp:" + p_.get_str();
}

std::string coeff_to_string(const mpq_class& v) { return v.get_str(); }

} // namespace adicalg
