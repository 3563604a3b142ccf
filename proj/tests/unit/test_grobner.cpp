#include "helpers.hpp"
#include "../oracles/oracles.hpp"

#include "ktoric/errors.hpp"
#include "ktoric/grobner.hpp"
#include "ktoric/truncation.hpp"

#include <doctest.h>

using namespace testing_helpers;

namespace {

GroupHandle Z(std::size_t r)
{
    return make_group(FgAbelianGroup::free(r));
}

StrongGroebnerBasis basis_of(const GroupHandle& g, const std::vector<GroupRingElement>& gens)
{
    PolyPresentation p(g);
    std::vector<IntPolynomial> polys;
    for (const auto& e : gens)
        polys.push_back(present(e, p).poly);
    return strong_groebner(polys, p);
}

bool gb_member(const StrongGroebnerBasis& gb, const GroupRingElement& e)
{
    return ideal_contains(gb, present(e, gb.presentation()).poly);
}

struct Instance {
    const char* name;
    GroupHandle group;
    std::vector<GroupRingElement> gens;
};

std::vector<Instance> fixed_instances()
{
    std::vector<Instance> out;
    {
        auto g = Z(2);
        auto u = mono(g, {1, 0});
        auto v = mono(g, {0, 1});
        out.push_back({"blowup", g, {one(g) - v, (one(g) - u) * (one(g) - u)}});
    }
    {
        auto g = group_from_relations(2, mat(2, {{2, -3}}));
        out.push_back({"rugby(2,3)", g, {(one(g) - mono(g, {1, 0})) * (one(g) - mono(g, {0, 1}))}});
    }
    {
        auto g = group_from_relations(2, mat(2, {{2, -2}}));
        out.push_back({"rugby(2,2)", g, {(one(g) - mono(g, {1, 0})) * (one(g) - mono(g, {0, 1}))}});
    }
    {
        auto g = Z(1);
        auto t = mono(g, {1});
        out.push_back({"P1", g, {(one(g) - t) * (one(g) - t)}});
    }
    {
        auto g = Z(1);
        auto t = mono(g, {1});
        out.push_back({"non-monic", g, {Integer(2) * (one(g) - t), (one(g) - t).pow(2) * (one(g) + t)}});
    }
    {
        auto g = make_group(FgAbelianGroup::from_invariants(1, iv({3})));
        auto t = mono(g, {1, 0});
        auto s = mono(g, {0, 1});
        out.push_back({"Z+Z/3", g, {(one(g) - t) * (one(g) - s), Integer(3) * (one(g) - t)}});
    }
    return out;
}

} // namespace

TEST_CASE("presentation of the group ring")
{
    auto g = make_group(FgAbelianGroup::from_invariants(1, iv({4})));
    PolyPresentation p(g);
    CHECK(p.num_vars() == 3);
    CHECK(p.variable_names() == std::vector<std::string>{"y1", "y1'", "s1"});
    REQUIRE(p.structural_relations().size() == 2);
    CHECK(p.structural_relations()[0].to_string(p.variable_names()) == "y1*y1' - 1");
    CHECK(p.structural_relations()[1].to_string(p.variable_names()) == "s1^4 - 1");
}

TEST_CASE("present and lift")
{
    auto z = Z(1);
    PolyPresentation p(z);
    GroupRingElement e = one(z) - mono(z, {-1});
    PresentedElement pe = present(e, p);
    CHECK(pe.clearing == elem(z, {1}));
    CHECK(pe.poly.to_string(p.variable_names()) == "y1 - 1");
    CHECK(lift(pe.poly, p) * GroupRingElement::monomial(-pe.clearing) == e);

    GroupRingElement f = one(z) - mono(z, {1});
    PresentedElement pf = present(f, p);
    CHECK(pf.clearing.is_zero());
    CHECK(lift(pf.poly, p) == f);

    auto z2 = Z(2);
    PolyPresentation p2(z2);
    GroupRingElement q = (one(z2) - mono(z2, {-1, 1})) * (one(z2) - mono(z2, {0, 1}));
    PresentedElement pq = present(q, p2);
    CHECK(pq.clearing == elem(z2, {1, 0}));
    CHECK(lift(pq.poly, p2) * GroupRingElement::monomial(-pq.clearing) == q);
    CHECK(lift(present_laurent(q, p2), p2) == q);

    std::mt19937 rng(17);
    auto mixed = group_from_relations(2, mat(2, {{2, -4}}));
    PolyPresentation pm(mixed);
    for (int i = 0; i < 30; ++i) {
        GroupRingElement r = random_ring_element(rng, mixed, 4, 4);
        PresentedElement pr = present(r, pm);
        CHECK(lift(pr.poly, pm) * GroupRingElement::monomial(-pr.clearing) == r);
        CHECK(lift(present_laurent(r, pm), pm) == r);
        for (const auto& t : pr.poly.terms()) {
            CHECK(t.monomial[pm.inverse_var(0)] == 0);
        }
    }
}

TEST_CASE("gcd combination over the integers")
{
    auto g = make_group(FgAbelianGroup::from_invariants(0, iv({4})));
    PolyPresentation p(g);
    IntPolynomial s = IntPolynomial::monomial(Monomial{1});
    IntPolynomial one_p = IntPolynomial::constant(1, 1);
    std::vector<IntPolynomial> gens{IntPolynomial::constant(1, 2) * (s - one_p),
                                    IntPolynomial::constant(1, 3) * (s - one_p)};
    StrongGroebnerBasis gb = strong_groebner(gens, p);
    bool found = false;
    for (const auto& b : gb.basis())
        found = found || b == s - one_p;
    CHECK(found);
    CHECK(ideal_contains(gb, s - one_p));
}

TEST_CASE("structural relation alone")
{
    auto z = Z(1);
    PolyPresentation p(z);
    StrongGroebnerBasis gb = strong_groebner({}, p);
    REQUIRE(gb.size() == 1);
    CHECK(gb.basis()[0] == p.structural_relations()[0]);
    CHECK(!gb.is_unit_ideal());
}

TEST_CASE("unit ideal")
{
    auto z = Z(1);
    StrongGroebnerBasis gb = basis_of(z, {mono(z, {3})});
    CHECK(gb.is_unit_ideal());
    CHECK(gb.size() == 1);
    AbGroupInvariants inv = zmodule_invariants(gb);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion.empty());
    CHECK(inv.status == InvariantStatus::Exact);
}

TEST_CASE("blowup ideal")
{
    auto g = Z(2);
    auto u = mono(g, {1, 0});
    auto v = mono(g, {0, 1});
    StrongGroebnerBasis gb = basis_of(g, {one(g) - v, (one(g) - u) * (one(g) - u)});
    const PolyPresentation& p = gb.presentation();
    // u^2 = 2u - 1 in the quotient
    CHECK(normal_form(present_laurent(u * u, p), gb) ==
          normal_form(present_laurent(Integer(2) * u - one(g), p), gb));
    CHECK(normal_form(present_laurent(mono(g, {-1, 0}), p), gb) ==
          normal_form(present_laurent(Integer(2) * one(g) - u, p), gb));
    CHECK(!gb_member(gb, one(g) - u));
    CHECK(gb_member(gb, (one(g) - u) * (one(g) - v)));
    AbGroupInvariants inv = zmodule_invariants(gb);
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
    CHECK(inv.status == InvariantStatus::Exact);
}

TEST_CASE("rugby normal forms")
{
    auto g = group_from_relations(2, mat(2, {{2, -3}}));
    auto t = mono(g, {1, 0});
    auto s = mono(g, {0, 1});
    StrongGroebnerBasis gb = basis_of(g, {(one(g) - s) * (one(g) - t)});
    const PolyPresentation& p = gb.presentation();
    CHECK(normal_form(present(((one(g) - t) * (one(g) - t.pow(2))), p).poly, gb).is_zero());
    CHECK(normal_form(present_laurent(one(g) - mono(g, {2, 0}), p), gb) ==
          normal_form(present_laurent(one(g) - mono(g, {0, 3}), p), gb));
}

TEST_CASE("P1 has rank 2")
{
    auto z = Z(1);
    auto t = mono(z, {1});
    AbGroupInvariants inv = zmodule_invariants(basis_of(z, {(one(z) - t) * (one(z) - t)}));
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
    CHECK(inv.status == InvariantStatus::Exact);
}

TEST_CASE("torsion in the quotient")
{
    auto z = Z(1);
    auto t = mono(z, {1});
    // Z[t^+-1]/(2(1-t), (1-t)^2): Z ⊕ Z/2
    AbGroupInvariants inv =
        zmodule_invariants(basis_of(z, {Integer(2) * (one(z) - t), (one(z) - t) * (one(z) - t)}));
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion == iv({2}));
    CHECK(inv.status == InvariantStatus::Exact);

    // Z[t^+-1]/(3) is not finitely generated
    AbGroupInvariants nfg = zmodule_invariants(basis_of(z, {Integer(3) * one(z)}));
    CHECK(nfg.status != InvariantStatus::Exact);

    // the zero ideal: Z[t^+-1] has infinite rank
    AbGroupInvariants zero = zmodule_invariants(basis_of(z, {}));
    CHECK(zero.status == InvariantStatus::NotFinitelyGenerated);
}

TEST_CASE("normal form properties")
{
    std::mt19937 rng(23);
    for (const auto& inst : fixed_instances()) {
        CAPTURE(inst.name);
        StrongGroebnerBasis gb = basis_of(inst.group, inst.gens);
        const PolyPresentation& p = gb.presentation();
        for (const auto& q : inst.gens)
            CHECK(gb_member(gb, q));
        for (int i = 0; i < 15; ++i) {
            IntPolynomial f = present(random_ring_element(rng, inst.group, 3, 3), p).poly;
            IntPolynomial g = present(random_ring_element(rng, inst.group, 3, 3), p).poly;
            IntPolynomial nf = normal_form(f, gb);
            CHECK(normal_form(nf, gb) == nf);
            CHECK(ideal_contains(gb, f - nf));
            CHECK(normal_form(f * g, gb) == normal_form(normal_form(f, gb) * normal_form(g, gb), gb));
        }
    }
}

TEST_CASE("membership agrees with the box oracle")
{
    std::mt19937 rng(29);
    for (const auto& inst : fixed_instances()) {
        CAPTURE(inst.name);
        StrongGroebnerBasis gb = basis_of(inst.group, inst.gens);
        std::vector<GroupRingElement> samples;
        for (int i = 0; i < 6; ++i) {
            GroupRingElement m(inst.group);
            for (const auto& q : inst.gens)
                m = m + random_ring_element(rng, inst.group, 2, 1, 2) * q;
            samples.push_back(m);
            samples.push_back(random_ring_element(rng, inst.group, 3, 2));
            samples.push_back(m + random_ring_element(rng, inst.group, 1, 1));
        }
        for (const auto& h : samples) {
            CAPTURE(render(h));
            const bool member = gb_member(gb, h);
            long reach = 0;
            for (const auto& [e, c] : h.terms())
                for (const auto& x : e.free)
                    reach = std::max(reach, Integer(abs(x)).get_si());
            bool box = false;
            for (long w = reach + 2; w <= reach + 6 && !box; ++w)
                box = oracle::box_member(inst.group, inst.gens, h, w);
            CHECK(member == box);
        }
    }
}

TEST_CASE("invariants are stable under generator permutation and unit multiples")
{
    for (const auto& inst : fixed_instances()) {
        CAPTURE(inst.name);
        AbGroupInvariants base = zmodule_invariants(basis_of(inst.group, inst.gens));
        std::vector<GroupRingElement> rev(inst.gens.rbegin(), inst.gens.rend());
        AbGroupInvariants permuted = zmodule_invariants(basis_of(inst.group, rev));
        CHECK(permuted.free_rank == base.free_rank);
        CHECK(permuted.torsion == base.torsion);
        IntVector unit(inst.group->num_generators(), Integer(1));
        unit[0] = -2;
        GroupRingElement c = GroupRingElement::monomial(GroupElement::from_user(inst.group, unit));
        std::vector<GroupRingElement> shifted;
        for (const auto& q : inst.gens)
            shifted.push_back(c * q);
        AbGroupInvariants sh = zmodule_invariants(basis_of(inst.group, shifted));
        CHECK(sh.free_rank == base.free_rank);
        CHECK(sh.torsion == base.torsion);
    }
}

TEST_CASE("truncated quotient matches on a finite example")
{
    auto z = Z(1);
    auto t = mono(z, {1});
    std::vector<GroupRingElement> gens{(one(z) - t) * (one(z) - t)};
    ModuleInvariants a = truncated_quotient_invariants(z, gens, 6);
    CHECK(a.free_rank == 2);
    CHECK(a.torsion.empty());
}

TEST_CASE("standard monomials")
{
    auto z = Z(1);
    auto t = mono(z, {1});
    StrongGroebnerBasis gb = basis_of(z, {(one(z) - t) * (one(z) - t)});
    StandardMonomialResult r = standard_monomial_invariants(gb);
    CHECK(r.kind == StandardMonomialResult::Kind::Finite);
    CHECK(r.live_monomials.size() == 2);
}

TEST_CASE("weighted projective ranks")
{
    auto z = Z(1);
    std::vector<std::vector<long>> weights{{1, 1}, {1, 2}, {2, 3}, {4, 6}, {1, 1, 1}, {1, 2, 3}, {2, 2}, {5, 7}};
    for (const auto& w : weights) {
        GroupRingElement q = one(z);
        long sum = 0;
        for (long x : w) {
            q = q * (one(z) - mono(z, {x}));
            sum += x;
        }
        AbGroupInvariants inv = zmodule_invariants(basis_of(z, {q}));
        CHECK(inv.free_rank == static_cast<std::size_t>(sum));
        CHECK(inv.torsion.empty());
        CHECK(inv.status == InvariantStatus::Exact);
    }
}

TEST_CASE("mismatched rings are rejected")
{
    auto z = Z(1);
    auto z2 = Z(2);
    PolyPresentation p(z);
    CHECK_THROWS_AS(present(one(z2), p), MismatchError);
    StrongGroebnerBasis gb = strong_groebner({}, p);
    CHECK_THROWS_AS(normal_form(IntPolynomial::constant(4, 1), gb), MismatchError);
}
