#include "ktoric/abelian.hpp"

#include "ktoric/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace ktoric {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InputError("matrix row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                             + " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntVector IntMatrix::apply(std::span<const Integer> v) const
{
    if (v.size() != cols_)
        throw InputError("vector of length " + std::to_string(v.size()) + " does not match matrix with "
                         + std::to_string(cols_) + " columns");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != 0 && v[j] != 0)
                acc += (*this)(i, j) * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

Integer IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw InputError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = v / prev; // exact by Sylvester's identity
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(src, j) != 0)
            (*this)(dst, j) += factor * (*this)(src, j);
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i) {
        if ((*this)(i, src) != 0)
            (*this)(i, dst) += factor * (*this)(i, src);
    }
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InputError("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithWork {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inv;

    void swap_rows(std::size_t a, std::size_t b)
    {
        d.swap_rows(a, b);
        u.swap_rows(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        d.swap_cols(a, b);
        v.swap_cols(a, b);
        v_inv.swap_rows(a, b);
    }

    // row[dst] += f * row[src]
    void row_op(std::size_t dst, std::size_t src, const Integer& f)
    {
        d.add_row_multiple(dst, src, f);
        u.add_row_multiple(dst, src, f);
    }

    // col[dst] += f * col[src]; the inverse picks up row[src] -= f * row[dst]
    void col_op(std::size_t dst, std::size_t src, const Integer& f)
    {
        d.add_col_multiple(dst, src, f);
        v.add_col_multiple(dst, src, f);
        v_inv.add_row_multiple(src, dst, -f);
    }
};

std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& d, std::size_t k)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = k; i < d.rows(); ++i) {
        for (std::size_t j = k; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Integer a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
            }
        }
    }
    return best;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithWork w{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};

    const std::size_t steps = std::min(m, n);
    for (std::size_t k = 0; k < steps; ++k) {
        bool exhausted = false;
        for (;;) {
            auto pivot = min_pivot(w.d, k);
            if (!pivot) {
                exhausted = true;
                break;
            }
            w.swap_rows(k, pivot->first);
            w.swap_cols(k, pivot->second);

            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (w.d(i, k) == 0)
                    continue;
                w.row_op(i, k, -floor_div(w.d(i, k), w.d(k, k)));
                if (w.d(i, k) != 0)
                    clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (w.d(k, j) == 0)
                    continue;
                w.col_op(j, k, -floor_div(w.d(k, j), w.d(k, k)));
                if (w.d(k, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Pivot row and column are clear; enforce divisibility of the rest.
            std::optional<std::size_t> offending;
            for (std::size_t i = k + 1; i < m && !offending; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (w.d(i, j) != 0 && nonneg_mod(w.d(i, j), w.d(k, k)) != 0) {
                        offending = i;
                        break;
                    }
                }
            }
            if (!offending)
                break;
            w.row_op(k, *offending, 1);
        }
        if (exhausted)
            break;
        if (w.d(k, k) < 0) {
            w.d.negate_row(k);
            w.u.negate_row(k);
        }
    }

    SmithDecomposition out;
    out.invariant_factors.resize(steps);
    for (std::size_t k = 0; k < steps; ++k)
        out.invariant_factors[k] = w.d(k, k);
    out.U = std::move(w.u);
    out.D = std::move(w.d);
    out.V = std::move(w.v);
    out.V_inverse = std::move(w.v_inv);
    return out;
}

// ---------------------------------------------------------------------------
// Exponent

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b)
{
    if (auto c = compare_lex(a.free, b.free); c != 0)
        return c;
    return compare_lex(a.torsion, b.torsion);
}

// ---------------------------------------------------------------------------
// FgAbelianGroup

FgAbelianGroup FgAbelianGroup::from_relations(std::size_t num_generators, const IntMatrix& relations)
{
    if (relations.rows() > 0 && relations.cols() != num_generators)
        throw InputError("relation matrix has " + std::to_string(relations.cols()) + " columns, expected "
                         + std::to_string(num_generators));

    FgAbelianGroup g;
    g.num_generators_ = num_generators;
    g.relations_ = relations.rows() > 0 ? relations : IntMatrix(0, num_generators);

    // Row convention: x in Z^g, subgroup = rowspan(R). With U R V = D the map
    // x -> x V sends the subgroup onto rowspan(D), so canonical coordinate i has
    // modulus d_i (or 0 beyond the relation count).
    SmithDecomposition snf = smith_normal_form(g.relations_);
    std::vector<std::size_t> free_idx;
    std::vector<std::size_t> torsion_idx;
    for (std::size_t i = 0; i < num_generators; ++i) {
        Integer modulus = i < snf.invariant_factors.size() ? snf.invariant_factors[i] : Integer(0);
        if (modulus == 0)
            free_idx.push_back(i);
        else if (modulus != 1) {
            torsion_idx.push_back(i);
            g.torsion_.push_back(modulus);
        }
    }
    g.free_rank_ = free_idx.size();

    std::vector<std::size_t> kept = free_idx;
    kept.insert(kept.end(), torsion_idx.begin(), torsion_idx.end());
    g.to_canonical_ = IntMatrix(kept.size(), num_generators);
    g.from_canonical_ = IntMatrix(num_generators, kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) {
        for (std::size_t u = 0; u < num_generators; ++u) {
            g.to_canonical_(c, u) = snf.V(u, kept[c]);
            g.from_canonical_(u, c) = snf.V_inverse(kept[c], u);
        }
    }
    // free coordinates: first nonzero image of a user generator made positive
    for (std::size_t c = 0; c < g.free_rank_; ++c) {
        std::size_t u = 0;
        while (u < num_generators && g.to_canonical_(c, u) == 0)
            ++u;
        if (u < num_generators && g.to_canonical_(c, u) < 0) {
            for (std::size_t k = 0; k < num_generators; ++k) {
                g.to_canonical_(c, k) = -g.to_canonical_(c, k);
                g.from_canonical_(k, c) = -g.from_canonical_(k, c);
            }
        }
    }
    return g;
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank)
{
    return from_relations(rank, IntMatrix(0, rank));
}

FgAbelianGroup FgAbelianGroup::from_invariants(std::size_t free_rank, const IntVector& torsion)
{
    const std::size_t g = free_rank + torsion.size();
    IntMatrix rel(torsion.size(), g);
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 0)
            throw InputError("torsion orders must be nonnegative");
        rel(i, free_rank + i) = torsion[i];
    }
    return from_relations(g, rel);
}

Exponent FgAbelianGroup::canonical_from_user(std::span<const Integer> user) const
{
    if (user.size() != num_generators_)
        throw InputError("degree vector has length " + std::to_string(user.size()) + ", expected "
                         + std::to_string(num_generators_));
    return from_flat(to_canonical_.apply(user));
}

IntVector FgAbelianGroup::user_from_canonical(const Exponent& e) const
{
    return from_canonical_.apply(flatten(e));
}

Exponent FgAbelianGroup::reduce(Exponent e) const
{
    if (e.free.size() != free_rank_ || e.torsion.size() != torsion_.size())
        throw InputError("coordinate vector does not match group " + describe());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        e.torsion[i] = nonneg_mod(e.torsion[i], torsion_[i]);
    return e;
}

Exponent FgAbelianGroup::from_flat(std::span<const Integer> flat) const
{
    if (flat.size() != canonical_dimension())
        throw InputError("coordinate vector has length " + std::to_string(flat.size()) + ", expected "
                         + std::to_string(canonical_dimension()));
    Exponent e;
    e.free.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(free_rank_));
    e.torsion.assign(flat.begin() + static_cast<std::ptrdiff_t>(free_rank_), flat.end());
    return reduce(std::move(e));
}

IntVector FgAbelianGroup::flatten(const Exponent& e)
{
    IntVector v = e.free;
    v.insert(v.end(), e.torsion.begin(), e.torsion.end());
    return v;
}

Exponent FgAbelianGroup::zero() const
{
    return Exponent{IntVector(free_rank_), IntVector(torsion_.size())};
}

Exponent FgAbelianGroup::add(const Exponent& a, const Exponent& b) const
{
    Exponent r = a;
    for (std::size_t i = 0; i < r.free.size(); ++i)
        r.free[i] += b.free[i];
    for (std::size_t i = 0; i < r.torsion.size(); ++i)
        r.torsion[i] += b.torsion[i];
    return reduce(std::move(r));
}

Exponent FgAbelianGroup::negate(const Exponent& a) const
{
    return scale(a, -1);
}

Exponent FgAbelianGroup::scale(const Exponent& a, const Integer& k) const
{
    Exponent r = a;
    for (auto& x : r.free)
        x *= k;
    for (auto& x : r.torsion)
        x *= k;
    return reduce(std::move(r));
}

bool FgAbelianGroup::same_structure(const FgAbelianGroup& other) const
{
    return num_generators_ == other.num_generators_ && free_rank_ == other.free_rank_
           && torsion_ == other.torsion_ && to_canonical_ == other.to_canonical_;
}

std::string FgAbelianGroup::describe() const
{
    if (is_trivial())
        return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank_ > 0) {
        out << "Z";
        if (free_rank_ > 1)
            out << "^" << free_rank_;
        first = false;
    }
    for (const auto& m : torsion_) {
        if (!first)
            out << " + ";
        out << "Z/" << m.get_str();
        first = false;
    }
    return out.str();
}

GroupHandle make_group(FgAbelianGroup group)
{
    return std::make_shared<const FgAbelianGroup>(std::move(group));
}

GroupHandle group_from_relations(std::size_t num_generators, const IntMatrix& relations)
{
    return make_group(FgAbelianGroup::from_relations(num_generators, relations));
}

bool same_group(const GroupHandle& a, const GroupHandle& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return a->same_structure(*b);
}

void require_same_group(const GroupHandle& a, const GroupHandle& b, const char* what)
{
    if (!same_group(a, b))
        throw MismatchError(std::string(what) + ": operands live over different groups");
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(GroupHandle group, Exponent coordinates)
    : group_(std::move(group))
{
    if (!group_)
        throw InputError("group element without a group");
    coords_ = group_->reduce(std::move(coordinates));
}

GroupElement GroupElement::zero(GroupHandle group)
{
    Exponent z = group->zero();
    return GroupElement(std::move(group), std::move(z));
}

GroupElement GroupElement::from_user(GroupHandle group, std::span<const Integer> user)
{
    Exponent e = group->canonical_from_user(user);
    return GroupElement(std::move(group), std::move(e));
}

IntVector GroupElement::user_coordinates() const
{
    return group_->user_from_canonical(coords_);
}

bool GroupElement::is_zero() const
{
    return ktoric::is_zero(coords_.free) && ktoric::is_zero(coords_.torsion);
}

GroupElement operator+(const GroupElement& a, const GroupElement& b)
{
    require_same_group(a.group_, b.group_, "group addition");
    return GroupElement(a.group_, a.group_->add(a.coords_, b.coords_));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b)
{
    return a + (-b);
}

GroupElement operator-(const GroupElement& a)
{
    return GroupElement(a.group_, a.group_->negate(a.coords_));
}

GroupElement operator*(const Integer& k, const GroupElement& a)
{
    return GroupElement(a.group_, a.group_->scale(a.coords_, k));
}

bool operator==(const GroupElement& a, const GroupElement& b)
{
    return same_group(a.group_, b.group_) && a.coords_ == b.coords_;
}

GroupElement canonicalize(const GroupElement& e)
{
    return GroupElement(e.group(), e.exponent());
}

// ---------------------------------------------------------------------------
// GroupHom

GroupHom::GroupHom(GroupHandle source, GroupHandle target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_->num_generators() || matrix_.cols() != source_->num_generators())
        throw MapError("homomorphism matrix must be " + std::to_string(target_->num_generators()) + " x "
                       + std::to_string(source_->num_generators()));
    const IntMatrix& rel = source_->relations();
    for (std::size_t r = 0; r < rel.rows(); ++r) {
        IntVector image = matrix_.apply(rel.row(r));
        Exponent e = target_->canonical_from_user(image);
        if (!ktoric::is_zero(e.free) || !ktoric::is_zero(e.torsion))
            throw MapError("homomorphism does not respect source relation " + std::to_string(r));
    }
}

Exponent GroupHom::apply(const Exponent& e) const
{
    return target_->canonical_from_user(matrix_.apply(source_->user_from_canonical(e)));
}

GroupElement GroupHom::apply(const GroupElement& e) const
{
    require_same_group(e.group(), source_, "homomorphism application");
    return GroupElement(target_, apply(e.exponent()));
}

// ---------------------------------------------------------------------------

QuotientGroup quotient_by_subgroup(const GroupHandle& group, std::span<const GroupElement> generators)
{
    const std::size_t dim = group->canonical_dimension();
    const std::size_t r = group->free_rank();
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < group->torsion().size(); ++i) {
        IntVector row(dim);
        row[r + i] = group->torsion()[i];
        rows.push_back(std::move(row));
    }
    for (const auto& g : generators) {
        require_same_group(g.group(), group, "quotient_by_subgroup");
        rows.push_back(FgAbelianGroup::flatten(g.exponent()));
    }
    GroupHandle quotient = group_from_relations(dim, IntMatrix::from_rows(dim, rows));
    GroupHom projection(group, quotient, group->to_canonical());
    return QuotientGroup{std::move(quotient), std::move(projection)};
}

} // namespace ktoric
