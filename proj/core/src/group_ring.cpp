#include "ktoric/group_ring.hpp"

#include "ktoric/errors.hpp"

#include <sstream>
#include <utility>

namespace ktoric {

GroupRingElement::GroupRingElement(GroupHandle group)
    : group_(std::move(group))
{
    if (!group_)
        throw InputError("group ring element without a group");
}

GroupRingElement::GroupRingElement(GroupHandle group, Terms terms)
    : GroupRingElement(std::move(group))
{
    for (auto& [e, c] : terms)
        add_term(e, c);
}

GroupRingElement GroupRingElement::zero(GroupHandle group)
{
    return GroupRingElement(std::move(group));
}

GroupRingElement GroupRingElement::one(GroupHandle group)
{
    return constant(std::move(group), 1);
}

GroupRingElement GroupRingElement::constant(GroupHandle group, const Integer& c)
{
    GroupRingElement r(group);
    r.add_term(group->zero(), c);
    return r;
}

GroupRingElement GroupRingElement::monomial(const GroupElement& exponent, const Integer& coefficient)
{
    GroupRingElement r(exponent.group());
    r.add_term(exponent.exponent(), coefficient);
    return r;
}

Integer GroupRingElement::coefficient(const Exponent& e) const
{
    auto it = terms_.find(group_->reduce(e));
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer GroupRingElement::coefficient_sum() const
{
    Integer s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

void GroupRingElement::add_term(const Exponent& e, const Integer& c)
{
    if (c == 0)
        return;
    Exponent key = group_->reduce(e);
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::pow(unsigned long exponent) const
{
    GroupRingElement result = one(group_);
    GroupRingElement base = *this;
    while (exponent > 0) {
        if (exponent & 1UL)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b)
{
    require_same_group(a.group_, b.group_, "group ring addition");
    GroupRingElement r = a;
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, c);
    return r;
}

GroupRingElement operator-(const GroupRingElement& a)
{
    GroupRingElement r = a;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b)
{
    return a + (-b);
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    require_same_group(a.group_, b.group_, "group ring multiplication");
    GroupRingElement r(a.group_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(a.group_->add(ea, eb), ca * cb);
    }
    return r;
}

GroupRingElement operator*(const Integer& k, const GroupRingElement& a)
{
    GroupRingElement r(a.group_);
    if (k == 0)
        return r;
    r.terms_ = a.terms_;
    for (auto& [e, c] : r.terms_)
        c *= k;
    return r;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b)
{
    return same_group(a.group_, b.group_) && a.terms_ == b.terms_;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b)
{
    return a + b;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b)
{
    return a * b;
}

GroupRingElement product_of_one_minus(const GroupHandle& group, std::span<const GroupElement> degrees)
{
    GroupRingElement r = GroupRingElement::one(group);
    for (const auto& d : degrees) {
        require_same_group(d.group(), group, "product_of_one_minus");
        r = r * (GroupRingElement::one(group) - GroupRingElement::monomial(d));
    }
    return r;
}

namespace {

void join(std::ostringstream& out, const IntVector& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out << ',';
        out << v[i].get_str();
    }
}

bool is_identity_exponent(const Exponent& e)
{
    return is_zero(e.free) && is_zero(e.torsion);
}

} // namespace

std::string render_monomial(const Exponent& e)
{
    std::ostringstream out;
    out << "t^[";
    join(out, e.free);
    if (!e.torsion.empty()) {
        out << ';';
        join(out, e.torsion);
    }
    out << ']';
    return out.str();
}

std::string render(const GroupRingElement& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : e.terms()) {
        const bool negative = c < 0;
        Integer magnitude = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (is_identity_exponent(exp)) {
            out << magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out << magnitude.get_str() << '*';
        out << render_monomial(exp);
    }
    return out.str();
}

} // namespace ktoric
