#pragma once

#include "ktoric/abelian.hpp"
#include "ktoric/group_ring.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ktoric {

using SparseRow = std::map<std::size_t, Integer>;

struct ModuleInvariants {
    std::size_t free_rank = 0;
    IntVector torsion;

    friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

/// Invariants of Z^columns / rowspan(rows). Unit pivots are eliminated sparsely; what
/// remains goes through a dense Smith normal form.
ModuleInvariants sparse_quotient_invariants(std::size_t columns, std::vector<SparseRow> rows);

/// Truncated presentation of Z[G]/(generators): columns are the group elements whose
/// free coordinates lie in [-half_width, half_width] (all torsion residues), rows are
/// the translates t^b * g that stay inside that box.
struct TruncatedSystem {
    std::size_t columns = 0;
    std::vector<SparseRow> rows;
};

TruncatedSystem truncated_system(const GroupHandle& group, std::span<const GroupRingElement> generators,
                                 unsigned long half_width);

/// Column index of an exponent inside the box, or nullopt when it falls outside.
std::optional<std::size_t> box_column(const GroupHandle& group, const Exponent& e, unsigned long half_width);

ModuleInvariants truncated_quotient_invariants(const GroupHandle& group,
                                               std::span<const GroupRingElement> generators,
                                               unsigned long half_width);

} // namespace ktoric
