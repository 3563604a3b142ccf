#pragma once

#include "ktoric/abelian.hpp"

#include <map>
#include <span>
#include <string>

namespace ktoric {

/// A finite integer combination of monomials t^a, a in a finitely generated abelian
/// group. Terms are keyed by canonical exponent, so relations of the group hold at
/// the monomial level; zero coefficients are never stored.
class GroupRingElement {
public:
    using Terms = std::map<Exponent, Integer>;

    explicit GroupRingElement(GroupHandle group);
    GroupRingElement(GroupHandle group, Terms terms);

    static GroupRingElement zero(GroupHandle group);
    static GroupRingElement one(GroupHandle group);
    static GroupRingElement constant(GroupHandle group, const Integer& c);
    static GroupRingElement monomial(const GroupElement& exponent, const Integer& coefficient = 1);

    const GroupHandle& group() const { return group_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of t^e (zero when absent).
    Integer coefficient(const Exponent& e) const;

    /// Image under the augmentation t^a -> 1.
    Integer coefficient_sum() const;

    /// Adds c*t^e; e is reduced first.
    void add_term(const Exponent& e, const Integer& c);

    GroupRingElement pow(unsigned long exponent) const;

    /// Applies an exponent map term-wise (t^a -> t^{f(a)}), landing in `target`.
    template <class F>
    GroupRingElement map_exponents(GroupHandle target, F&& f) const
    {
        GroupRingElement out(std::move(target));
        for (const auto& [e, c] : terms_)
            out.add_term(f(e), c);
        return out;
    }

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const Integer& k, const GroupRingElement& a);
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

private:
    GroupHandle group_;
    Terms terms_;
};

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);

/// prod (1 - t^{d}) over the given degrees; the empty product is 1.
GroupRingElement product_of_one_minus(const GroupHandle& group, std::span<const GroupElement> degrees);

/// Renders in the report grammar: terms in ascending exponent order joined by
/// " + " / " - ", monomials written t^[a1,...,ar;c1,...,ck] in canonical
/// coordinates (the ";..." block only when the group has torsion).
std::string render(const GroupRingElement& e);
std::string render_monomial(const Exponent& e);

} // namespace ktoric
