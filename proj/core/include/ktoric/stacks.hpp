#pragma once

#include "ktoric/abelian.hpp"
#include "ktoric/group_ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ktoric {

struct Variable {
    std::string name;
    IntVector degree; ///< user-generator coordinates
    bool inverted = false;
};

/// Homogeneous coordinate ring data of a toric stack: a polynomial ring over a field
/// (some variables possibly inverted) graded by a finitely generated abelian group,
/// together with the irrelevant components. Component m lists the variables whose
/// common zero locus is the m-th piece of the removed locus; an empty component list
/// removes nothing.
struct StackData {
    GroupHandle grading_group;
    std::vector<Variable> variables;
    std::vector<std::vector<std::string>> irrelevant;
    std::string label;
    /// Set by connectify(); the connected hypothesis then holds by construction.
    bool connectified = false;
    /// Named monomials for the expression parser (user coordinates); built-ins only.
    std::vector<std::pair<std::string, IntVector>> symbols;

    std::optional<std::size_t> index_of(const std::string& name) const;
    /// Throws InputError on an unknown name.
    const Variable& variable(const std::string& name) const;
    GroupElement degree(const Variable& v) const;
    GroupElement degree(const std::string& name) const;
    std::vector<GroupElement> degrees(const std::vector<std::string>& names) const;
    bool has_inverted_variables() const;
};

/// Checks names, degree lengths and component membership; sorts each component in
/// variable order and drops components containing another one. Idempotent.
StackData validate(StackData data);

/// prod over component m (1-based) of (1 - t^{deg x}).
GroupRingElement q_element(const StackData& data, std::size_t m);

enum class Connectedness {
    Connected,
    NotConnected,
    Unknown,
};

std::string to_string(Connectedness c);

struct ConnectednessReport {
    Connectedness verdict = Connectedness::Unknown;
    /// For NotConnected: exponents e >= 0, e != 0, zero on inverted variables, with
    /// sum e_i deg x_i = 0 in the grading group.
    std::optional<IntVector> witness;
    unsigned long bound = 0;
    /// True when the rational cone test alone settled the verdict.
    bool settled_by_cone = false;
};

unsigned long default_connected_bound(const StackData& data);

/// Decides whether the only degree-zero monomials are constants.
///
/// Phase 1 asks (exactly, over Q) whether some nonzero nonnegative vector annihilates
/// the free parts of the degrees of the non-inverted variables; if not, the data is
/// Connected. Phase 2 enumerates integer vectors with entries <= bound by increasing
/// total and then decreasing lexicographic order, testing the full condition in the
/// grading group including torsion.
ConnectednessReport check_connected(const StackData& data, std::optional<unsigned long> bound = std::nullopt);

/// Replaces (S, G, a) by (S[z], G x Z, a z): every degree d becomes (d, 1), a new
/// variable z of degree (0, 1) is added and {z} joins the components. Throws
/// InputError when inverted variables are present.
StackData connectify(const StackData& data);

std::vector<std::string> builtin_example_names();
std::string builtin_example_usage(const std::string& name);

/// wps q0 .. qn | b-mu q | blowup-a2-cox | blowup-a2-hirzebruch | rugby p q | m11 | p1
StackData builtin_example(const std::string& name, const std::vector<Integer>& params = {});

struct PicHypothesisReport {
    bool graded_domain = true;
    bool graded_factorial = true;
    /// Vanishing of the relevant local cohomology, certified combinatorially: no
    /// components, or every component has at least two variables.
    bool local_cohomology_vanishes = false;
    /// Homogeneous units are taken to be monomials in the inverted variables.
    bool uses_unit_convention = false;
    std::vector<std::string> notes;

    bool satisfied() const { return graded_domain && graded_factorial && local_cohomology_vanishes; }
};

PicHypothesisReport check_pic_hypotheses(const StackData& data);

} // namespace ktoric
