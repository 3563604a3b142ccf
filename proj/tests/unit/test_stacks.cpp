#include "helpers.hpp"

#include "ktoric/errors.hpp"
#include "ktoric/stacks.hpp"

#include <doctest.h>

using namespace testing_helpers;

namespace {

StackData z_graded(std::vector<std::pair<std::string, long>> vars, std::vector<std::vector<std::string>> comps)
{
    StackData d;
    d.grading_group = make_group(FgAbelianGroup::free(1));
    for (auto& [n, deg] : vars)
        d.variables.push_back(Variable{n, iv({deg}), false});
    d.irrelevant = std::move(comps);
    return d;
}

void check_witness(const StackData& d, const ConnectednessReport& r)
{
    REQUIRE(r.witness);
    const IntVector& w = *r.witness;
    REQUIRE(w.size() == d.variables.size());
    GroupElement sum = GroupElement::zero(d.grading_group);
    bool nonzero = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i] >= 0);
        if (d.variables[i].inverted)
            CHECK(w[i] == 0);
        nonzero = nonzero || w[i] != 0;
        sum = sum + w[i] * d.degree(d.variables[i]);
    }
    CHECK(nonzero);
    CHECK(sum.is_zero());
}

} // namespace

TEST_CASE("validate drops superset components")
{
    StackData d = builtin_example("blowup-a2-hirzebruch");
    d.irrelevant = {{"x1"}, {"x1", "t0"}};
    StackData v = validate(d);
    CHECK(v.irrelevant == std::vector<std::vector<std::string>>{{"x1"}});

    StackData h = builtin_example("blowup-a2-hirzebruch");
    CHECK(validate(h).irrelevant == h.irrelevant);
    CHECK(h.irrelevant.size() == 2);
}

TEST_CASE("validate normalizes order and duplicates")
{
    StackData d = builtin_example("blowup-a2-hirzebruch");
    d.irrelevant = {{"t1", "t0", "t1"}, {"x1"}, {"x1"}};
    StackData v = validate(d);
    CHECK(v.irrelevant == std::vector<std::vector<std::string>>{{"t0", "t1"}, {"x1"}});
    CHECK(validate(v).irrelevant == v.irrelevant);
}

TEST_CASE("validate rejects bad data")
{
    StackData d = builtin_example("blowup-a2-hirzebruch");
    d.irrelevant.push_back({"w"});
    CHECK_THROWS_AS(validate(d), InputError);

    StackData e = builtin_example("blowup-a2-hirzebruch");
    e.variables[0].degree = iv({1});
    CHECK_THROWS_AS(validate(e), InputError);

    StackData f = builtin_example("blowup-a2-hirzebruch");
    f.variables[1].name = "t0";
    CHECK_THROWS_AS(validate(f), InputError);

    StackData g = builtin_example("b-mu", {3});
    g.irrelevant = {{"x"}};
    CHECK_THROWS_AS(validate(g), InputError);

    StackData h = builtin_example("wps", {1, 1});
    h.irrelevant.push_back({});
    CHECK_THROWS_AS(validate(h), InputError);
}

TEST_CASE("empty irrelevant list is allowed")
{
    StackData d = builtin_example("b-mu", {5});
    CHECK(d.irrelevant.empty());
    CHECK(validate(d).irrelevant.empty());
}

TEST_CASE("connectedness of the blowup presentations")
{
    StackData cox = builtin_example("blowup-a2-cox");
    ConnectednessReport r = check_connected(cox);
    CHECK(r.verdict == Connectedness::NotConnected);
    REQUIRE(r.witness);
    CHECK(*r.witness == iv({1, 1, 0}));
    check_witness(cox, r);

    ConnectednessReport h = check_connected(builtin_example("blowup-a2-hirzebruch"));
    CHECK(h.verdict == Connectedness::Connected);
}

TEST_CASE("positive gradings are connected by the cone test")
{
    for (auto w : std::vector<std::vector<Integer>>{{1, 1}, {4, 6}, {2, 3, 5}, {1, 2, 3, 4}}) {
        ConnectednessReport r = check_connected(builtin_example("wps", w));
        CHECK(r.verdict == Connectedness::Connected);
        CHECK(r.settled_by_cone);
    }
}

TEST_CASE("torsion-only degrees need the enumeration")
{
    StackData d;
    d.grading_group = make_group(FgAbelianGroup::from_invariants(0, iv({3})));
    d.variables = {{"a", iv({1}), false}, {"b", iv({1}), false}};
    d.irrelevant = {{"a", "b"}};
    ConnectednessReport r = check_connected(d);
    CHECK(r.verdict == Connectedness::NotConnected);
    CHECK(*r.witness == iv({3, 0}));
    check_witness(d, r);

    // within a too small bound nothing is found
    ConnectednessReport small = check_connected(d, 1);
    CHECK(small.verdict == Connectedness::Unknown);
    CHECK(small.bound == 1);
}

TEST_CASE("witnesses ignore inverted variables")
{
    StackData d = z_graded({{"x", 1}, {"y", -1}}, {{"x"}});
    d.variables[1].inverted = true;
    CHECK(check_connected(d).verdict == Connectedness::Connected);
    d.variables[1].inverted = false;
    ConnectednessReport r = check_connected(d);
    CHECK(r.verdict == Connectedness::NotConnected);
    check_witness(d, r);
}

TEST_CASE("connectify")
{
    StackData cox = builtin_example("blowup-a2-cox");
    StackData c = connectify(cox);
    CHECK(c.connectified);
    CHECK(c.grading_group->describe() == "Z^2");
    REQUIRE(c.variables.size() == 4);
    CHECK(c.variables[0].degree == iv({1, 1}));
    CHECK(c.variables[1].degree == iv({-1, 1}));
    CHECK(c.variables[2].degree == iv({1, 1}));
    CHECK(c.variables[3].name == "z");
    CHECK(c.variables[3].degree == iv({0, 1}));
    CHECK(c.irrelevant == std::vector<std::vector<std::string>>{{"x0", "x2"}, {"z"}});
    CHECK(check_connected(c).verdict == Connectedness::Connected);

    GroupHandle g = c.grading_group;
    GroupRingElement w = mono(g, {1, 1});
    CHECK(q_element(c, 1) == (one(g) - w) * (one(g) - w));
    CHECK(q_element(c, 2) == one(g) - mono(g, {0, 1}));

    StackData h = builtin_example("blowup-a2-hirzebruch");
    StackData hc = connectify(h);
    CHECK(hc.irrelevant.size() == h.irrelevant.size() + 1);
    CHECK(check_connected(hc).verdict == Connectedness::Connected);

    CHECK_THROWS_AS(connectify(builtin_example("b-mu", {2})), InputError);
}

TEST_CASE("connectify picks a fresh name")
{
    StackData d = z_graded({{"z", 1}, {"z1", 2}}, {{"z", "z1"}});
    StackData c = connectify(d);
    CHECK(c.variables.back().name == "z2");
}

TEST_CASE("connectify always yields connected data")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        StackData d;
        const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 2));
        d.grading_group = make_group(FgAbelianGroup::free(r));
        const int n = static_cast<int>(uniform(rng, 1, 3));
        for (int i = 0; i < n; ++i) {
            IntVector deg;
            for (std::size_t k = 0; k < r; ++k)
                deg.emplace_back(uniform(rng, -2, 2));
            d.variables.push_back(Variable{"x" + std::to_string(i), deg, false});
        }
        d.irrelevant = {{"x0"}};
        d = validate(d);
        CHECK(check_connected(connectify(d)).verdict == Connectedness::Connected);
    }
}

TEST_CASE("builtin examples")
{
    StackData r = builtin_example("rugby", {2, 3});
    CHECK(r.grading_group->describe() == "Z");
    CHECK(r.degree("x").free_part() == iv({3}));
    CHECK(r.degree("y").free_part() == iv({2}));

    StackData m = builtin_example("m11");
    CHECK(m.grading_group->describe() == "Z");
    CHECK(m.variables.size() == 2);
    CHECK(m.variables[0].degree == iv({4}));
    CHECK(m.variables[1].degree == iv({6}));
    CHECK(m.irrelevant.size() == 1);
    CHECK(m.irrelevant[0].size() == 2);

    StackData b = builtin_example("b-mu", {5});
    REQUIRE(b.variables.size() == 1);
    CHECK(b.variables[0].inverted);
    CHECK(b.variables[0].degree == iv({5}));
    CHECK(b.irrelevant.empty());

    for (const auto& name : builtin_example_names()) {
        std::vector<Integer> params;
        if (name == "wps")
            params = {1, 2};
        if (name == "b-mu")
            params = {3};
        if (name == "rugby")
            params = {2, 2};
        StackData d = builtin_example(name, params);
        StackData v = validate(d);
        CHECK(v.irrelevant == d.irrelevant);
        CHECK(v.variables.size() == d.variables.size());
        CHECK(!builtin_example_usage(name).empty());
    }

    CHECK_THROWS_AS(builtin_example("nope"), InputError);
    CHECK_THROWS_AS(builtin_example("wps", {1, 0}), InputError);
    CHECK_THROWS_AS(builtin_example("wps", {}), InputError);
    CHECK_THROWS_AS(builtin_example("rugby", {2}), InputError);
    CHECK_THROWS_AS(builtin_example("b-mu", {-1}), InputError);
}

TEST_CASE("q elements")
{
    StackData h = builtin_example("blowup-a2-hirzebruch");
    GroupHandle g = h.grading_group;
    GroupRingElement u = mono(g, {1, 0});
    GroupRingElement v = mono(g, {0, 1});
    CHECK(q_element(h, 1) == one(g) - v);
    CHECK(q_element(h, 2) == (one(g) - u) * (one(g) - u));
    CHECK(q_element(h, 1).coefficient_sum() == 0);
    CHECK(q_element(h, 2).coefficient_sum() == 0);
    CHECK_THROWS_AS(q_element(h, 0), InputError);
    CHECK_THROWS_AS(q_element(h, 3), InputError);
    CHECK(product_of_one_minus(g, h.degrees({})) == one(g));
}

TEST_CASE("pic hypotheses")
{
    CHECK(check_pic_hypotheses(builtin_example("wps", {4, 6})).satisfied());
    CHECK(check_pic_hypotheses(builtin_example("b-mu", {4})).satisfied());
    CHECK(check_pic_hypotheses(builtin_example("b-mu", {4})).uses_unit_convention);
    CHECK(!check_pic_hypotheses(builtin_example("blowup-a2-hirzebruch")).satisfied());
    CHECK(!check_pic_hypotheses(builtin_example("wps", {3})).satisfied());
}
