#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace adicalg {

// Exponent vector over a fixed ambient variable list.
struct Monomial {
    std::vector<std::uint32_t> e;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::uint32_t>(nvars, 0)}; }

    std::size_t nvars() const { return e.size(); }
    unsigned deg() const;
    bool is_one() const;
    bool divides(const Monomial& m) const;
    bool depends_on(std::size_t var) const { return e[var] != 0; }

    Monomial mul(const Monomial& m) const;
    Monomial div(const Monomial& m) const; // caller guarantees divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& m) const;

    bool operator==(const Monomial& m) const { return e == m.e; }
    // structural order, used only as a container key
    std::strong_ordering operator<=>(const Monomial& m) const;
};

// Total monomial orders: grevlex, lex, and the elimination order that compares
// a chosen prefix of variables lexicographically and breaks ties by grevlex on
// the remaining ones.  Every monomial containing a prefix variable dominates
// every monomial free of them, which is what saturation and kernels need.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex(std::size_t nvars);
    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder block(std::size_t nvars, std::vector<std::size_t> prefix);

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<std::size_t>& prefix() const { return prefix_; }

    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string key() const; // cache key

private:
    MonomialOrder(Kind kind, std::size_t nvars, std::vector<std::size_t> prefix);

    Kind kind_;
    std::size_t nvars_;
    std::vector<std::size_t> prefix_;
    std::vector<char> in_prefix_;
};

} // namespace adicalg
