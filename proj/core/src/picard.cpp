#include "ktoric/picard.hpp"

#include "ktoric/errors.hpp"

namespace ktoric {

std::vector<GroupElement> units_subgroup(const StackData& data)
{
    std::vector<GroupElement> out;
    for (const auto& v : data.variables) {
        if (v.inverted)
            out.push_back(data.degree(v));
    }
    return out;
}

namespace {

PicResult quotient_result(const StackData& data, std::vector<GroupElement> units, std::optional<GroupElement> alpha)
{
    std::vector<GroupElement> killed = units;
    if (alpha)
        killed.push_back(*alpha);
    QuotientGroup q = quotient_by_subgroup(data.grading_group, killed);
    PicResult r{q.group, q.projection, std::move(units), std::move(alpha), check_pic_hypotheses(data), false};
    r.certified = r.hypotheses.satisfied();
    return r;
}

} // namespace

PicResult pic(const StackData& data)
{
    return quotient_result(data, units_subgroup(data), std::nullopt);
}

PicResult pic_open(const StackData& data, const GroupElement& alpha)
{
    require_same_group(data.grading_group, alpha.group(), "pic_open degree");
    return quotient_result(data, units_subgroup(data), alpha);
}

} // namespace ktoric
