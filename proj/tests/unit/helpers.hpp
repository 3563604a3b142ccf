#pragma once

#include "ktoric/abelian.hpp"
#include "ktoric/group_ring.hpp"

#include <random>

namespace testing_helpers {

using namespace ktoric;

inline IntVector iv(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline IntMatrix mat(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<IntVector> r;
    for (auto row : rows)
        r.push_back(iv(row));
    return IntMatrix::from_rows(cols, r);
}

inline GroupElement elem(const GroupHandle& g, std::initializer_list<long> user)
{
    return GroupElement::from_user(g, iv(user));
}

inline GroupRingElement mono(const GroupHandle& g, std::initializer_list<long> user, long c = 1)
{
    return GroupRingElement::monomial(elem(g, user), Integer(c));
}

inline GroupRingElement one(const GroupHandle& g)
{
    return GroupRingElement::one(g);
}

inline long uniform(std::mt19937& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline GroupElement random_element(std::mt19937& rng, const GroupHandle& g, long range)
{
    IntVector v;
    for (std::size_t i = 0; i < g->num_generators(); ++i)
        v.emplace_back(uniform(rng, -range, range));
    return GroupElement::from_user(g, v);
}

inline GroupRingElement random_ring_element(std::mt19937& rng, const GroupHandle& g, int terms, long range,
                                            long coeff = 3)
{
    GroupRingElement out(g);
    for (int i = 0; i < terms; ++i)
        out = out + GroupRingElement::monomial(random_element(rng, g, range), Integer(uniform(rng, -coeff, coeff)));
    return out;
}

} // namespace testing_helpers
