#pragma once

#include "ktoric/integer.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ktoric {

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    /// Every row must have exactly `cols` entries.
    static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    IntMatrix transpose() const;

    /// Matrix-vector product M*v; v.size() must equal cols().
    IntVector apply(std::span<const Integer> v) const;

    /// Exact determinant (fraction-free Bareiss elimination); square matrices only.
    Integer determinant() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVector data_;
};

struct SmithDecomposition {
    IntMatrix U;               ///< unimodular, rows x rows
    IntMatrix D;               ///< diagonal, same shape as the input
    IntMatrix V;               ///< unimodular, cols x cols
    IntMatrix V_inverse;       ///< exact inverse of V
    IntVector invariant_factors; ///< min(rows, cols) entries, d1 | d2 | ..., zeros last
};

/// U*A*V = D with nonnegative diagonal forming a divisibility chain.
///
/// Pivoting always picks the nonzero entry of least absolute value in the active
/// submatrix, ties broken by lowest (row, col), so the output is a deterministic
/// function of the input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Coordinates of a group element with respect to the canonical basis of its group:
/// the free part first, then one residue per torsion factor.
struct Exponent {
    IntVector free;
    IntVector torsion;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);
};

/// A finitely generated abelian group Z^g / rowspan(relations), kept together with
/// its invariant-factor form ZZ^r + Z/m1 + ... + Z/mk (m1 | m2 | ..., all mi >= 2).
///
/// "User" coordinates refer to the g presentation generators; "canonical"
/// coordinates to the invariant-factor basis.
class FgAbelianGroup {
public:
    static FgAbelianGroup from_relations(std::size_t num_generators, const IntMatrix& relations);
    static FgAbelianGroup free(std::size_t rank);
    /// Presentation with r + k generators; generator r+i has order torsion[i].
    static FgAbelianGroup from_invariants(std::size_t free_rank, const IntVector& torsion);

    std::size_t num_generators() const { return num_generators_; }
    const IntMatrix& relations() const { return relations_; }

    std::size_t free_rank() const { return free_rank_; }
    const IntVector& torsion() const { return torsion_; }
    std::size_t canonical_dimension() const { return free_rank_ + torsion_.size(); }
    bool is_trivial() const { return canonical_dimension() == 0; }

    /// canonical_dimension x num_generators
    const IntMatrix& to_canonical() const { return to_canonical_; }
    /// num_generators x canonical_dimension; column i is a user-coordinate preimage of
    /// canonical basis vector i.
    const IntMatrix& from_canonical() const { return from_canonical_; }

    Exponent canonical_from_user(std::span<const Integer> user) const;
    IntVector user_from_canonical(const Exponent& e) const;

    /// Reduces torsion residues into [0, mi). Throws InputError on a shape mismatch.
    Exponent reduce(Exponent e) const;
    /// Splits a flat canonical vector (free then torsion) into an Exponent and reduces it.
    Exponent from_flat(std::span<const Integer> flat) const;
    static IntVector flatten(const Exponent& e);

    Exponent zero() const;
    Exponent add(const Exponent& a, const Exponent& b) const;
    Exponent negate(const Exponent& a) const;
    Exponent scale(const Exponent& a, const Integer& k) const;

    /// Same invariant-factor form and same canonical coordinate map.
    bool same_structure(const FgAbelianGroup& other) const;

    /// e.g. "Z^2 + Z/2 + Z/4", "0" for the trivial group.
    std::string describe() const;

private:
    std::size_t num_generators_ = 0;
    IntMatrix relations_;
    std::size_t free_rank_ = 0;
    IntVector torsion_;
    IntMatrix to_canonical_;
    IntMatrix from_canonical_;
};

using GroupHandle = std::shared_ptr<const FgAbelianGroup>;

GroupHandle make_group(FgAbelianGroup group);
GroupHandle group_from_relations(std::size_t num_generators, const IntMatrix& relations);

bool same_group(const GroupHandle& a, const GroupHandle& b);

/// Throws MismatchError unless same_group(a, b).
void require_same_group(const GroupHandle& a, const GroupHandle& b, const char* what);

/// An element of a finitely generated abelian group, always stored canonically.
class GroupElement {
public:
    GroupElement(GroupHandle group, Exponent coordinates);

    static GroupElement zero(GroupHandle group);
    static GroupElement from_user(GroupHandle group, std::span<const Integer> user);

    const GroupHandle& group() const { return group_; }
    const Exponent& exponent() const { return coords_; }
    const IntVector& free_part() const { return coords_.free; }
    const IntVector& torsion_part() const { return coords_.torsion; }

    IntVector user_coordinates() const;
    bool is_zero() const;

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a);
    friend GroupElement operator*(const Integer& k, const GroupElement& a);
    friend bool operator==(const GroupElement& a, const GroupElement& b);

private:
    GroupHandle group_;
    Exponent coords_;
};

/// Returns the element with residues reduced; idempotent.
GroupElement canonicalize(const GroupElement& e);

/// A homomorphism given by an integer matrix on user generators
/// (target.num_generators x source.num_generators).
class GroupHom {
public:
    /// Throws MapError unless every source relation maps to zero in the target.
    GroupHom(GroupHandle source, GroupHandle target, IntMatrix matrix);

    const GroupHandle& source() const { return source_; }
    const GroupHandle& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    GroupElement apply(const GroupElement& e) const;
    Exponent apply(const Exponent& e) const;

private:
    GroupHandle source_;
    GroupHandle target_;
    IntMatrix matrix_;
};

struct QuotientGroup {
    GroupHandle group; ///< user generators are the canonical generators of the parent
    GroupHom projection;
};

QuotientGroup quotient_by_subgroup(const GroupHandle& group, std::span<const GroupElement> generators);

} // namespace ktoric
