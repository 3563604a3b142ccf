#include "helpers.hpp"
#include "../oracles/oracles.hpp"

#include "ktoric/picard.hpp"

#include <doctest.h>

using namespace testing_helpers;

TEST_CASE("units subgroup")
{
    CHECK(units_subgroup(builtin_example("wps", {1, 2, 3})).empty());
    StackData b = builtin_example("b-mu", {4});
    auto u = units_subgroup(b);
    REQUIRE(u.size() == 1);
    CHECK(u[0] == elem(b.grading_group, {4}));

    StackData mixed;
    mixed.grading_group = make_group(FgAbelianGroup::free(1));
    mixed.variables = {{"x", iv({2}), false}, {"y", iv({3}), true}};
    auto v = units_subgroup(validate(mixed));
    REQUIRE(v.size() == 1);
    CHECK(v[0] == elem(mixed.grading_group, {3}));
}

TEST_CASE("pic of weighted projective stacks")
{
    for (auto w : std::vector<std::vector<Integer>>{{1, 1}, {4, 6}, {2, 3, 5}, {1, 2, 3, 4}}) {
        PicResult r = pic(builtin_example("wps", w));
        CHECK(r.group->describe() == "Z");
        CHECK(r.certified);
    }
}

TEST_CASE("pic of classifying stacks")
{
    for (long q = 1; q <= 12; ++q) {
        PicResult r = pic(builtin_example("b-mu", {q}));
        if (q == 1)
            CHECK(r.group->is_trivial());
        else
            CHECK(r.group->describe() == "Z/" + std::to_string(q));
        CHECK(r.certified);
    }
}

TEST_CASE("pic of rugby balls")
{
    for (long p = 1; p <= 5; ++p) {
        for (long q = 1; q <= 5; ++q) {
            PicResult r = pic(builtin_example("rugby", {p, q}));
            IntVector f = oracle::invariant_factors({iv({p, -q})}, 2);
            CHECK(r.group->free_rank() == 1);
            if (f[0] == 1)
                CHECK(r.group->torsion().empty());
            else
                CHECK(r.group->torsion() == IntVector{f[0]});
        }
    }
}

TEST_CASE("pic of open complements")
{
    StackData m = builtin_example("m11");
    CHECK(pic_open(m, elem(m.grading_group, {12})).group->describe() == "Z/12");
    CHECK(pic_open(m, elem(m.grading_group, {0})).group->describe() == "Z");
    StackData p1 = builtin_example("p1");
    CHECK(pic_open(p1, elem(p1.grading_group, {1})).group->is_trivial());
}

TEST_CASE("pic_open against a cokernel oracle")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        // Delta = Z^2 / (one random relation); one inverted variable; random alpha
        IntVector rel{Integer(uniform(rng, -6, 6)), Integer(uniform(rng, -6, 6))};
        StackData d;
        d.grading_group = group_from_relations(2, IntMatrix::from_rows(2, {rel}));
        IntVector unit{Integer(uniform(rng, -6, 6)), Integer(uniform(rng, -6, 6))};
        IntVector alpha{Integer(uniform(rng, -6, 6)), Integer(uniform(rng, -6, 6))};
        d.variables = {{"x", iv({1, 0}), false}, {"y", iv({0, 1}), false}, {"u", unit, true}};
        d.irrelevant = {{"x", "y"}};
        d = validate(d);
        PicResult r = pic_open(d, GroupElement::from_user(d.grading_group, alpha));

        oracle::Rows rows{rel, unit, alpha};
        IntVector f = oracle::invariant_factors(rows, 2);
        std::size_t free = 0;
        IntVector torsion;
        for (const auto& x : f) {
            if (x == 0)
                ++free;
            else if (x != 1)
                torsion.push_back(x);
        }
        CHECK(r.group->free_rank() == free);
        CHECK(r.group->torsion() == torsion);
    }
}

TEST_CASE("pic is invariant under renaming and permutation")
{
    StackData a = builtin_example("wps", {2, 4});
    StackData b = a;
    b.variables[0].name = "first";
    b.variables[1].name = "second";
    b.irrelevant = {{"second", "first"}};
    CHECK(pic(validate(b)).group->describe() == pic(a).group->describe());

    StackData c = builtin_example("b-mu", {6});
    StackData c2 = c;
    c2.variables.push_back(Variable{"w", iv({5}), false});
    CHECK(pic(validate(c2)).group->describe() == pic(c).group->describe());
}

TEST_CASE("pic without certification")
{
    PicResult r = pic(builtin_example("blowup-a2-hirzebruch"));
    CHECK(!r.certified);
    CHECK(r.group->describe() == "Z^2");
}
