#include "ktoric/truncation.hpp"

#include "ktoric/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ktoric {

ModuleInvariants sparse_quotient_invariants(std::size_t columns, std::vector<SparseRow> rows)
{
    std::vector<std::set<std::size_t>> occupancy(columns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (auto it = rows[r].begin(); it != rows[r].end();) {
            if (it->first >= columns)
                throw InputError("sparse row references a column outside the matrix");
            if (it->second == 0) {
                it = rows[r].erase(it);
                continue;
            }
            occupancy[it->first].insert(r);
            ++it;
        }
    }

    std::vector<bool> eliminated(columns, false);
    std::size_t eliminated_count = 0;

    auto pivot_on = [&](std::size_t r, std::size_t c) {
        const Integer u = rows[r].at(c); // +-1
        std::vector<std::size_t> others(occupancy[c].begin(), occupancy[c].end());
        for (std::size_t r2 : others) {
            if (r2 == r)
                continue;
            const Integer factor = rows[r2].at(c) * u;
            for (const auto& [col, val] : rows[r]) {
                auto [it, inserted] = rows[r2].try_emplace(col, 0);
                it->second -= factor * val;
                if (it->second == 0) {
                    rows[r2].erase(it);
                    occupancy[col].erase(r2);
                } else if (inserted) {
                    occupancy[col].insert(r2);
                }
            }
        }
        for (const auto& [col, val] : rows[r])
            occupancy[col].erase(r);
        rows[r].clear();
        eliminated[c] = true;
        ++eliminated_count;
    };

    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty())
                continue;
            std::size_t best = std::numeric_limits<std::size_t>::max();
            std::size_t best_count = std::numeric_limits<std::size_t>::max();
            for (const auto& [col, val] : rows[r]) {
                if ((val == 1 || val == -1) && occupancy[col].size() < best_count) {
                    best = col;
                    best_count = occupancy[col].size();
                }
            }
            if (best != std::numeric_limits<std::size_t>::max()) {
                pivot_on(r, best);
                progress = true;
            }
        }
    }

    // Columns untouched by any remaining row are free; the rest go to a dense SNF.
    std::vector<std::size_t> active;
    std::size_t untouched = 0;
    for (std::size_t c = 0; c < columns; ++c) {
        if (eliminated[c])
            continue;
        if (occupancy[c].empty())
            ++untouched;
        else
            active.push_back(c);
    }
    ModuleInvariants out;
    out.free_rank = untouched;
    if (active.empty())
        return out;

    std::vector<std::size_t> position(columns, 0);
    for (std::size_t i = 0; i < active.size(); ++i)
        position[active[i]] = i;
    std::vector<IntVector> dense;
    for (const auto& row : rows) {
        if (row.empty())
            continue;
        IntVector v(active.size());
        for (const auto& [col, val] : row)
            v[position[col]] = val;
        dense.push_back(std::move(v));
    }
    FgAbelianGroup rest = FgAbelianGroup::from_relations(active.size(), IntMatrix::from_rows(active.size(), dense));
    out.free_rank += rest.free_rank();
    out.torsion = rest.torsion();
    return out;
}

namespace {

struct BoxShape {
    std::size_t free_rank;
    IntVector torsion;
    unsigned long half_width;
    std::size_t columns;
};

BoxShape box_shape(const GroupHandle& group, unsigned long half_width)
{
    BoxShape s{group->free_rank(), group->torsion(), half_width, 1};
    const std::size_t side = 2 * half_width + 1;
    for (std::size_t i = 0; i < s.free_rank; ++i)
        s.columns *= side;
    for (const auto& m : s.torsion)
        s.columns *= m.get_ui();
    return s;
}

std::optional<std::size_t> column_of(const BoxShape& s, const Exponent& e)
{
    std::size_t index = 0;
    const long w = static_cast<long>(s.half_width);
    for (std::size_t i = 0; i < s.free_rank; ++i) {
        if (!e.free[i].fits_slong_p())
            return std::nullopt;
        const long x = e.free[i].get_si();
        if (x < -w || x > w)
            return std::nullopt;
        index = index * (2 * s.half_width + 1) + static_cast<std::size_t>(x + w);
    }
    for (std::size_t j = 0; j < s.torsion.size(); ++j)
        index = index * s.torsion[j].get_ui() + e.torsion[j].get_ui();
    return index;
}

} // namespace

std::optional<std::size_t> box_column(const GroupHandle& group, const Exponent& e, unsigned long half_width)
{
    return column_of(box_shape(group, half_width), e);
}

TruncatedSystem truncated_system(const GroupHandle& group, std::span<const GroupRingElement> generators,
                                 unsigned long half_width)
{
    const BoxShape shape = box_shape(group, half_width);
    TruncatedSystem sys;
    sys.columns = shape.columns;
    const long w = static_cast<long>(half_width);

    for (const auto& g : generators) {
        require_same_group(g.group(), group, "truncated_system");
        if (g.is_zero())
            continue;
        // Free-coordinate extent of the support.
        std::vector<long> lo(shape.free_rank, std::numeric_limits<long>::max());
        std::vector<long> hi(shape.free_rank, std::numeric_limits<long>::min());
        bool fits = true;
        for (const auto& [e, c] : g.terms()) {
            for (std::size_t i = 0; i < shape.free_rank; ++i) {
                if (!e.free[i].fits_slong_p()) {
                    fits = false;
                    break;
                }
                lo[i] = std::min(lo[i], e.free[i].get_si());
                hi[i] = std::max(hi[i], e.free[i].get_si());
            }
        }
        if (!fits)
            continue;
        std::vector<long> shift_lo(shape.free_rank);
        std::vector<long> shift_hi(shape.free_rank);
        bool empty = false;
        for (std::size_t i = 0; i < shape.free_rank; ++i) {
            shift_lo[i] = -w - lo[i];
            shift_hi[i] = w - hi[i];
            if (shift_lo[i] > shift_hi[i])
                empty = true;
        }
        if (empty)
            continue;

        // Odometer over free shifts x torsion shifts.
        std::vector<long> shift = shift_lo;
        std::vector<unsigned long> residue(shape.torsion.size(), 0);
        for (;;) {
            Exponent delta;
            for (long x : shift)
                delta.free.emplace_back(x);
            for (auto r : residue)
                delta.torsion.emplace_back(r);
            SparseRow row;
            for (const auto& [e, c] : g.terms()) {
                auto col = column_of(shape, group->add(e, delta));
                row[*col] += c;
            }
            sys.rows.push_back(std::move(row));

            std::size_t j = residue.size();
            while (j-- > 0) {
                if (++residue[j] < shape.torsion[j].get_ui())
                    break;
                residue[j] = 0;
            }
            if (j != static_cast<std::size_t>(-1))
                continue;
            std::size_t i = shift.size();
            while (i-- > 0) {
                if (++shift[i] <= shift_hi[i])
                    break;
                shift[i] = shift_lo[i];
            }
            if (i == static_cast<std::size_t>(-1))
                break;
        }
    }
    return sys;
}

ModuleInvariants truncated_quotient_invariants(const GroupHandle& group,
                                               std::span<const GroupRingElement> generators,
                                               unsigned long half_width)
{
    TruncatedSystem sys = truncated_system(group, generators, half_width);
    return sparse_quotient_invariants(sys.columns, std::move(sys.rows));
}

} // namespace ktoric
