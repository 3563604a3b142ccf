#include "helpers.hpp"

#include "ktoric/errors.hpp"

#include <doctest.h>

using namespace testing_helpers;

TEST_CASE("addition and multiplication")
{
    auto z = make_group(FgAbelianGroup::free(1));
    auto t = [&](long k) { return mono(z, {k}); };
    CHECK((one(z) - t(1)) + (t(1) - t(2)) == one(z) - t(2));
    GroupRingElement a = one(z) + Integer(3) * t(-2);
    CHECK(a + GroupRingElement::zero(z) == a);
    CHECK((one(z) - t(1)) * (one(z) + t(1)) == one(z) - t(2));
    CHECK(gr_add(a, a) == Integer(2) * a);
    CHECK(gr_mul(a, one(z)) == a);

    auto z2 = make_group(FgAbelianGroup::from_invariants(0, iv({2})));
    GroupRingElement s = mono(z2, {1});
    CHECK((one(z2) - s).pow(2) == Integer(2) * one(z2) - Integer(2) * s);

    auto other = make_group(FgAbelianGroup::free(2));
    CHECK_THROWS_AS(one(z) + one(other), MismatchError);
    CHECK_THROWS_AS(one(z) * one(z2), MismatchError);
}

TEST_CASE("telescoping identity")
{
    auto z = make_group(FgAbelianGroup::free(1));
    for (long p = 1; p <= 12; ++p) {
        GroupRingElement sum(z);
        for (long i = 0; i < p; ++i)
            sum = sum + mono(z, {i}) * (one(z) - mono(z, {1}));
        CHECK(sum == one(z) - mono(z, {p}));
    }
}

TEST_CASE("rugby monomial identities")
{
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {1, 1}, {2, 2}, {3, 4}, {4, 6}}) {
        auto g = group_from_relations(2, mat(2, {{p, -q}}));
        CHECK(mono(g, {p, 0}) - mono(g, {0, q}) == GroupRingElement::zero(g));
    }
    auto g = group_from_relations(2, mat(2, {{2, -3}}));
    CHECK(mono(g, {2, 0}) * mono(g, {1, 0}) == mono(g, {3, 0}));
    CHECK(mono(g, {2, 0}) == mono(g, {0, 3}));
}

TEST_CASE("ring axioms on random elements")
{
    std::mt19937 rng(5);
    auto g = group_from_relations(2, mat(2, {{2, -4}}));
    for (int i = 0; i < 40; ++i) {
        auto a = random_ring_element(rng, g, 3, 3);
        auto b = random_ring_element(rng, g, 3, 3);
        auto c = random_ring_element(rng, g, 3, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == GroupRingElement::zero(g));
        CHECK(-(-a) == a);
    }
}

TEST_CASE("no zero coefficients are stored")
{
    auto z = make_group(FgAbelianGroup::free(1));
    GroupRingElement a = mono(z, {1}) - mono(z, {1});
    CHECK(a.is_zero());
    CHECK(a.size() == 0);
    GroupRingElement b = GroupRingElement::monomial(elem(z, {3}), 0);
    CHECK(b.is_zero());
}

TEST_CASE("rendering")
{
    auto z = make_group(FgAbelianGroup::free(1));
    CHECK(render(GroupRingElement::zero(z)) == "0");
    CHECK(render(one(z) - Integer(2) * mono(z, {1}) + mono(z, {2})) == "1 - 2*t^[1] + t^[2]");
    CHECK(render(-mono(z, {-1})) == "-t^[-1]");
    auto g = make_group(FgAbelianGroup::from_invariants(1, iv({2})));
    CHECK(render(mono(g, {1, 1}) + Integer(3) * one(g)) == "3 + t^[1;1]");
    auto t = make_group(FgAbelianGroup::from_invariants(0, iv({3})));
    CHECK(render(mono(t, {2})) == "t^[;2]");
    CHECK(render_monomial(elem(g, {2, 3}).exponent()) == "t^[2;1]");
}

TEST_CASE("product of one minus")
{
    auto z2 = make_group(FgAbelianGroup::free(2));
    std::vector<GroupElement> degs{elem(z2, {1, 0}), elem(z2, {1, 0})};
    GroupRingElement u = mono(z2, {1, 0});
    CHECK(product_of_one_minus(z2, degs) == (one(z2) - u) * (one(z2) - u));
    CHECK(product_of_one_minus(z2, {}) == one(z2));
    CHECK(product_of_one_minus(z2, degs).coefficient_sum() == 0);
}
