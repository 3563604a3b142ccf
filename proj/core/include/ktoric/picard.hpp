#pragma once

#include "ktoric/abelian.hpp"
#include "ktoric/stacks.hpp"

#include <optional>
#include <vector>

namespace ktoric {

struct PicResult {
    GroupHandle group;
    /// Delta -> Pic; user generators of `group` are the canonical generators of Delta.
    GroupHom projection;
    std::vector<GroupElement> units_subgroup_generators;
    /// Degree of the removed hypersurface, for pic_open.
    std::optional<GroupElement> removed_degree;
    PicHypothesisReport hypotheses;
    bool certified = false;
};

/// Degrees of the inverted variables; they generate the degrees of homogeneous units.
std::vector<GroupElement> units_subgroup(const StackData& data);

/// Delta / Delta_u. Always computed; `certified` records the hypothesis check.
PicResult pic(const StackData& data);

/// Delta / <Delta_u, alpha>: Pic of the complement of a hypersurface of degree alpha.
PicResult pic_open(const StackData& data, const GroupElement& alpha);

} // namespace ktoric
