#pragma once

#include "ktoric/integer.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ktoric {

/// Exponent vector of a monomial in an ordinary (nonnegative-exponent) polynomial ring.
using Monomial = std::vector<std::uint32_t>;

unsigned long total_degree(const Monomial& m);

/// Degree reverse lexicographic order; variable 0 is the largest.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial monomial_div(const Monomial& b, const Monomial& a);
bool coprime(const Monomial& a, const Monomial& b);

struct Term {
    Monomial monomial;
    Integer coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with integer coefficients, terms kept in strictly decreasing
/// grevlex order with no zero coefficients.
class IntPolynomial {
public:
    explicit IntPolynomial(std::size_t num_vars = 0);
    /// Terms in any order; like monomials are combined.
    IntPolynomial(std::size_t num_vars, std::vector<Term> terms);

    static IntPolynomial constant(std::size_t num_vars, const Integer& c);
    static IntPolynomial monomial(const Monomial& m, const Integer& c = 1);

    std::size_t num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().monomial; }
    const Integer& leading_coefficient() const { return terms_.front().coefficient; }
    unsigned long total_degree() const;

    /// Everything but the leading term.
    IntPolynomial tail() const;
    /// Removes and returns the leading term; the polynomial must be nonzero.
    Term pop_leading();

    /// this += c * m * g
    void add_scaled(const Integer& c, const Monomial& m, const IntPolynomial& g);
    IntPolynomial times_term(const Integer& c, const Monomial& m) const;

    /// Multiplies by -1 when the leading coefficient is negative.
    void make_leading_positive();

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t num_vars_;
    std::vector<Term> terms_;
};

} // namespace ktoric
