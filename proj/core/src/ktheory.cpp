#include "ktoric/ktheory.hpp"

#include "ktoric/errors.hpp"

#include <algorithm>

namespace ktoric {

namespace {

std::vector<GroupRingElement> ideal_generators(const StackData& data)
{
    std::vector<GroupRingElement> gens;
    for (std::size_t m = 1; m <= data.irrelevant.size(); ++m)
        gens.push_back(q_element(data, m));
    return gens;
}

StrongGroebnerBasis basis_for(const GroupHandle& group, const std::vector<GroupRingElement>& gens)
{
    PolyPresentation p(group);
    std::vector<IntPolynomial> polys;
    polys.reserve(gens.size());
    for (const auto& g : gens)
        polys.push_back(present(g, p).poly);
    return strong_groebner(polys, p);
}

} // namespace

K0Presentation::K0Presentation(StackData data, ConnectednessReport connectedness, std::vector<std::string> watermarks)
    : data_(std::move(data)),
      connectedness_(std::move(connectedness)),
      watermarks_(std::move(watermarks)),
      generators_(ideal_generators(data_)),
      gb_(basis_for(data_.grading_group, generators_))
{
}

IntPolynomial K0Presentation::reduce(const GroupRingElement& e) const
{
    return normal_form(present_laurent(e, poly()), gb_);
}

bool K0Presentation::contains(const GroupRingElement& e) const
{
    return ideal_contains(gb_, present(e, poly()).poly);
}

K0Handle k0_presentation(const StackData& input, const K0Options& options)
{
    StackData data = validate(input);
    ConnectednessReport conn;
    if (data.connectified) {
        conn.verdict = Connectedness::Connected;
    } else {
        conn = check_connected(data, options.connected_bound);
    }

    std::vector<std::string> problems;
    if (conn.verdict == Connectedness::NotConnected)
        problems.push_back("hypothesis not verified: degree-zero part of the coordinate ring is larger than the field");
    else if (conn.verdict == Connectedness::Unknown)
        problems.push_back("hypothesis not verified: connectedness undecided within bound " +
                           std::to_string(conn.bound));
    if (data.has_inverted_variables())
        problems.push_back("hypothesis not verified: coordinate ring has inverted variables");

    if (!problems.empty() && !options.override_hypothesis) {
        std::string msg = "refusing to build the K0 presentation: " + problems.front();
        for (std::size_t i = 1; i < problems.size(); ++i)
            msg += "; " + problems[i];
        throw HypothesisError(msg);
    }
    return std::make_shared<const K0Presentation>(std::move(data), std::move(conn), std::move(problems));
}

K0Class::K0Class(K0Handle presentation, GroupRingElement representative)
    : pres_(std::move(presentation)), rep_(std::move(representative))
{
    require_same_group(pres_->group(), rep_.group(), "K0 class");
}

namespace {

void require_same_presentation(const K0Class& a, const K0Class& b)
{
    if (a.presentation() != b.presentation())
        throw MismatchError("K0 classes belong to different presentations");
}

} // namespace

K0Class operator+(const K0Class& a, const K0Class& b)
{
    require_same_presentation(a, b);
    return K0Class(a.pres_, a.rep_ + b.rep_);
}

K0Class operator-(const K0Class& a, const K0Class& b)
{
    require_same_presentation(a, b);
    return K0Class(a.pres_, a.rep_ - b.rep_);
}

K0Class operator*(const K0Class& a, const K0Class& b)
{
    require_same_presentation(a, b);
    return K0Class(a.pres_, a.rep_ * b.rep_);
}

K0Class class_of(const K0Handle& pres, const GroupRingElement& e)
{
    return K0Class(pres, e);
}

K0Class class_of_twist(const K0Handle& pres, const GroupElement& alpha)
{
    return K0Class(pres, GroupRingElement::monomial(-alpha));
}

K0Class class_of_koszul_quotient(const K0Handle& pres, std::span<const GroupElement> degrees)
{
    for (const auto& d : degrees)
        require_same_group(pres->group(), d.group(), "koszul degree");
    return K0Class(pres, product_of_one_minus(pres->group(), degrees));
}

K0Class class_of_coordinate_quotient(const K0Handle& pres, const std::vector<std::string>& variables)
{
    auto degs = pres->data().degrees(variables);
    return K0Class(pres, product_of_one_minus(pres->group(), degs));
}

GroupRingElement intersection_class(const StackData& data, const std::vector<std::vector<std::string>>& components)
{
    if (components.empty())
        throw InputError("intersection of an empty list of components");
    if (components.size() >= 63)
        throw InputError("too many components for inclusion-exclusion");
    std::vector<std::vector<std::size_t>> idx;
    for (const auto& comp : components) {
        std::vector<std::size_t> v;
        for (const auto& name : comp) {
            auto i = data.index_of(name);
            if (!i)
                throw InputError("unknown variable '" + name + "'");
            v.push_back(*i);
        }
        idx.push_back(std::move(v));
    }
    GroupRingElement total(data.grading_group);
    const unsigned long long count = 1ULL << components.size();
    for (unsigned long long mask = 1; mask < count; ++mask) {
        // a_A + a_B = a_{A u B}
        std::vector<std::size_t> uni;
        int bits = 0;
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (!(mask >> c & 1ULL))
                continue;
            ++bits;
            uni.insert(uni.end(), idx[c].begin(), idx[c].end());
        }
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        std::vector<GroupElement> degs;
        for (auto i : uni)
            degs.push_back(data.degree(data.variables[i]));
        GroupRingElement term = product_of_one_minus(data.grading_group, degs);
        total = (bits % 2 == 1) ? total + term : total - term;
    }
    return total;
}

K0Class class_of_intersection(const K0Handle& pres, const std::vector<std::vector<std::string>>& components)
{
    return K0Class(pres, intersection_class(pres->data(), components));
}

bool equal_in_k0(const K0Class& a, const K0Class& b)
{
    require_same_presentation(a, b);
    return a.presentation()->contains(a.representative() - b.representative());
}

AbGroupInvariants invariants(const K0Presentation& pres, const InvariantConfig& config)
{
    return zmodule_invariants(pres.groebner_basis(), config);
}

GroupRingElement push_forward(const GroupHom& theta, const GroupRingElement& e)
{
    require_same_group(theta.source(), e.group(), "push_forward");
    return e.map_exponents(theta.target(), [&](const Exponent& x) { return theta.apply(x); });
}

bool InducedMapCheck::ok() const
{
    return std::all_of(images.begin(), images.end(), [](const GeneratorImage& g) { return g.in_ideal; });
}

InducedMapCheck check_induced_map(const GroupHom& theta, const K0Presentation& source, const K0Presentation& target)
{
    require_same_group(theta.source(), source.group(), "induced map source");
    require_same_group(theta.target(), target.group(), "induced map target");
    InducedMapCheck out;
    for (const auto& q : source.generators()) {
        GeneratorImage gi{push_forward(theta, q), IntPolynomial(), false};
        gi.normal_form = target.reduce(gi.image);
        gi.in_ideal = target.contains(gi.image);
        out.images.push_back(std::move(gi));
    }
    return out;
}

InducedMap::InducedMap(GroupHom theta, K0Handle source, K0Handle target)
    : theta_(std::move(theta)), source_(std::move(source)), target_(std::move(target)),
      check_(check_induced_map(theta_, *source_, *target_))
{
    for (std::size_t i = 0; i < check_.images.size(); ++i) {
        if (!check_.images[i].in_ideal)
            throw MapError("ideal generator " + std::to_string(i + 1) + " maps to " +
                           render(check_.images[i].image) + ", which is not in the target ideal");
    }
}

GroupRingElement InducedMap::push(const GroupRingElement& e) const
{
    return push_forward(theta_, e);
}

K0Class InducedMap::push(const K0Class& c) const
{
    if (c.presentation() != source_)
        throw MismatchError("class does not belong to the source presentation");
    return K0Class(target_, push_forward(theta_, c.representative()));
}

InducedMap induced_map(const GroupHom& theta, const K0Handle& source, const K0Handle& target)
{
    return InducedMap(theta, source, target);
}

} // namespace ktoric
