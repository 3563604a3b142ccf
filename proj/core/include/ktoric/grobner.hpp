#pragma once

#include "ktoric/abelian.hpp"
#include "ktoric/group_ring.hpp"
#include "ktoric/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ktoric {

/// Realizes Z[G] as Z[y1, y1', ..., yr, yr', s1, ..., sk] modulo the structural
/// relations yi*yi' - 1 and sj^mj - 1, where r is the free rank of G and mj its
/// torsion orders. Variable order is fixed as listed; the monomial order is grevlex
/// with variable 0 largest.
class PolyPresentation {
public:
    explicit PolyPresentation(GroupHandle group);

    const GroupHandle& group() const { return group_; }
    std::size_t num_vars() const { return 2 * group_->free_rank() + group_->torsion().size(); }
    const std::vector<std::string>& variable_names() const { return names_; }
    std::size_t forward_var(std::size_t free_index) const { return 2 * free_index; }
    std::size_t inverse_var(std::size_t free_index) const { return 2 * free_index + 1; }
    std::size_t torsion_var(std::size_t torsion_index) const { return 2 * group_->free_rank() + torsion_index; }

    const std::vector<IntPolynomial>& structural_relations() const { return structural_; }

private:
    GroupHandle group_;
    std::vector<std::string> names_;
    std::vector<IntPolynomial> structural_;
};

/// A group ring element multiplied by a unit so that only nonnegative powers of
/// the yi occur.
///
/// Sign convention: `clearing` c has nonnegative free part and zero torsion part,
/// and the original element equals t^{-c} * lift(poly). The polynomial never
/// involves the yi' or picks up a sign; the clearing monomial in the presentation is
/// prod yi'^{ci}.
struct PresentedElement {
    IntPolynomial poly;
    GroupElement clearing;
};

PresentedElement present(const GroupRingElement& e, const PolyPresentation& p);

/// Direct image of e with negative powers sent to the yi' (no clearing).
IntPolynomial present_laurent(const GroupRingElement& e, const PolyPresentation& p);

/// Inverse of the presentation: yi -> t^{fi}, yi' -> t^{-fi}, sj -> t^{tj}.
GroupRingElement lift(const IntPolynomial& f, const PolyPresentation& p);

/// A reduced strong Groebner basis over Z (positive leading coefficients), together
/// with the generators it was computed from.
class StrongGroebnerBasis {
public:
    StrongGroebnerBasis(PolyPresentation presentation, std::vector<IntPolynomial> input,
                        std::vector<IntPolynomial> basis);

    const PolyPresentation& presentation() const { return presentation_; }
    /// Generators as supplied, structural relations first.
    const std::vector<IntPolynomial>& input() const { return input_; }
    /// Sorted by ascending (leading monomial, leading coefficient).
    const std::vector<IntPolynomial>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    bool is_unit_ideal() const;

private:
    PolyPresentation presentation_;
    std::vector<IntPolynomial> input_;
    std::vector<IntPolynomial> basis_;
};

/// Completes `generators` plus the structural relations of `p` using both
/// S-polynomials and GCD-polynomials, then minimizes and interreduces.
StrongGroebnerBasis strong_groebner(std::span<const IntPolynomial> generators, const PolyPresentation& p);

/// Full reduction; every surviving coefficient c at monomial m satisfies
/// 0 <= c < lc(g) for each basis element g whose leading monomial divides m.
IntPolynomial normal_form(const IntPolynomial& f, const StrongGroebnerBasis& gb);

bool ideal_contains(const StrongGroebnerBasis& gb, const IntPolynomial& f);

enum class InvariantStatus {
    Exact,
    NotFinitelyGenerated,
    Unknown,
};

std::string to_string(InvariantStatus status);

/// Free rank and divisibility-chain torsion of a finitely generated abelian group,
/// together with how far the computation can vouch for them.
struct AbGroupInvariants {
    std::size_t free_rank = 0;
    IntVector torsion;
    InvariantStatus status = InvariantStatus::Unknown;
    unsigned long bound = 0; ///< truncation bound used by the cross-check

    friend bool operator==(const AbGroupInvariants&, const AbGroupInvariants&) = default;
};

struct InvariantConfig {
    /// Half-width of the truncation box; defaults to 2*(max generator degree)+4.
    std::optional<unsigned long> degree_bound;
};

/// Outcome of reading the quotient's Z-module structure off the standard monomials.
struct StandardMonomialResult {
    enum class Kind { Finite, InfiniteFreePart, InfiniteTorsionPart } kind;
    std::size_t free_rank = 0;
    IntVector torsion;
    std::vector<Monomial> live_monomials;
};

/// Primary method: monomials outside the unit-leading-coefficient leading ideal,
/// with the basis relations restricted to them, followed by Smith normal form.
StandardMonomialResult standard_monomial_invariants(const StrongGroebnerBasis& gb);

unsigned long default_degree_bound(const StrongGroebnerBasis& gb);

/// Z-module invariants of Z[G]/I. Exact only when the standard-monomial computation
/// is finite and agrees with the truncated cross-check at both bound and bound+1.
AbGroupInvariants zmodule_invariants(const StrongGroebnerBasis& gb, const InvariantConfig& config = {});

} // namespace ktoric
