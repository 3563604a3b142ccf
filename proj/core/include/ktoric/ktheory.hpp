#pragma once

#include "ktoric/grobner.hpp"
#include "ktoric/group_ring.hpp"
#include "ktoric/stacks.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ktoric {

struct K0Options {
    /// Build the presentation even when the connected hypothesis is not verified.
    bool override_hypothesis = false;
    /// Search bound passed to check_connected.
    std::optional<unsigned long> connected_bound;
};

/// Z[G]/(q1, ..., qn) for a validated stack, with its strong Groebner basis.
class K0Presentation {
public:
    K0Presentation(StackData data, ConnectednessReport connectedness, std::vector<std::string> watermarks);

    const StackData& data() const { return data_; }
    const GroupHandle& group() const { return data_.grading_group; }
    /// q_m for each normalized component, in component order.
    const std::vector<GroupRingElement>& generators() const { return generators_; }
    const PolyPresentation& poly() const { return gb_.presentation(); }
    const StrongGroebnerBasis& groebner_basis() const { return gb_; }
    const ConnectednessReport& connectedness() const { return connectedness_; }
    /// Empty exactly when the hypotheses of the presentation theorem were verified.
    const std::vector<std::string>& watermarks() const { return watermarks_; }
    bool verified() const { return watermarks_.empty(); }

    /// Normal form of the element with negative exponents sent to the inverse variables.
    IntPolynomial reduce(const GroupRingElement& e) const;
    bool contains(const GroupRingElement& e) const;

private:
    StackData data_;
    ConnectednessReport connectedness_;
    std::vector<std::string> watermarks_;
    std::vector<GroupRingElement> generators_;
    StrongGroebnerBasis gb_;
};

using K0Handle = std::shared_ptr<const K0Presentation>;

/// Throws HypothesisError when connectedness is not Connected (and the data was not
/// produced by connectify), or when inverted variables are present, unless
/// options.override_hypothesis is set; the result is then watermarked.
K0Handle k0_presentation(const StackData& data, const K0Options& options = {});

/// A class in K0, represented by an element of Z[G].
class K0Class {
public:
    K0Class(K0Handle presentation, GroupRingElement representative);

    const K0Handle& presentation() const { return pres_; }
    const GroupRingElement& representative() const { return rep_; }
    IntPolynomial normal_form() const { return pres_->reduce(rep_); }
    bool is_zero() const { return pres_->contains(rep_); }

    friend K0Class operator+(const K0Class& a, const K0Class& b);
    friend K0Class operator-(const K0Class& a, const K0Class& b);
    friend K0Class operator*(const K0Class& a, const K0Class& b);

private:
    K0Handle pres_;
    GroupRingElement rep_;
};

K0Class class_of(const K0Handle& pres, const GroupRingElement& e);

/// [O(alpha)], represented by t^{-alpha}.
K0Class class_of_twist(const K0Handle& pres, const GroupElement& alpha);

/// prod (1 - t^{beta_i}): the class of S/(f1, ..., fk) for a homogeneous regular
/// sequence of the given degrees (regularity is not checked).
K0Class class_of_koszul_quotient(const K0Handle& pres, std::span<const GroupElement> degrees);

/// prod over the named variables of (1 - t^{deg x}).
K0Class class_of_coordinate_quotient(const K0Handle& pres, const std::vector<std::string>& variables);

/// Hilbert numerator of S/(a_{A1} cap ... cap a_{Ak}), where a_A is generated by the
/// variables in A: the alternating sum over nonempty subcollections T of
/// prod over the union of T of (1 - t^{deg x}). Throws InputError on an empty list.
GroupRingElement intersection_class(const StackData& data, const std::vector<std::vector<std::string>>& components);

/// Class of S/(a_{A1} cap ... cap a_{Ak}) by inclusion-exclusion over the coordinate
/// ideals. Throws InputError on an empty list.
K0Class class_of_intersection(const K0Handle& pres, const std::vector<std::vector<std::string>>& components);

/// Throws MismatchError when the classes come from different presentations.
bool equal_in_k0(const K0Class& a, const K0Class& b);

AbGroupInvariants invariants(const K0Presentation& pres, const InvariantConfig& config = {});

struct GeneratorImage {
    GroupRingElement image;
    IntPolynomial normal_form;
    bool in_ideal = false;
};

/// Image of each source ideal generator under the map t^a -> t^{theta(a)}.
struct InducedMapCheck {
    std::vector<GeneratorImage> images;
    bool ok() const;
};

InducedMapCheck check_induced_map(const GroupHom& theta, const K0Presentation& source, const K0Presentation& target);

/// The ring map K0(source) -> K0(target) induced by a grading-group homomorphism.
class InducedMap {
public:
    /// Throws MismatchError when theta's groups are not those of the presentations,
    /// MapError when some source generator does not land in the target ideal.
    InducedMap(GroupHom theta, K0Handle source, K0Handle target);

    const GroupHom& theta() const { return theta_; }
    const K0Handle& source() const { return source_; }
    const K0Handle& target() const { return target_; }
    const InducedMapCheck& check() const { return check_; }

    GroupRingElement push(const GroupRingElement& e) const;
    K0Class push(const K0Class& c) const;

private:
    GroupHom theta_;
    K0Handle source_;
    K0Handle target_;
    InducedMapCheck check_;
};

InducedMap induced_map(const GroupHom& theta, const K0Handle& source, const K0Handle& target);

/// Applies theta to every exponent.
GroupRingElement push_forward(const GroupHom& theta, const GroupRingElement& e);

} // namespace ktoric
