#include "ktoric/grobner.hpp"

#include "ktoric/errors.hpp"
#include "ktoric/truncation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ktoric {

// ---------------------------------------------------------------------------
// PolyPresentation

PolyPresentation::PolyPresentation(GroupHandle group)
    : group_(std::move(group))
{
    const std::size_t r = group_->free_rank();
    const std::size_t n = num_vars();
    for (std::size_t i = 0; i < r; ++i) {
        names_.push_back("y" + std::to_string(i + 1));
        names_.push_back("y" + std::to_string(i + 1) + "'");
        Monomial m(n, 0);
        m[forward_var(i)] = 1;
        m[inverse_var(i)] = 1;
        structural_.emplace_back(n, std::vector<Term>{{m, 1}, {Monomial(n, 0), -1}});
    }
    for (std::size_t j = 0; j < group_->torsion().size(); ++j) {
        names_.push_back("s" + std::to_string(j + 1));
        Monomial m(n, 0);
        m[torsion_var(j)] = static_cast<std::uint32_t>(group_->torsion()[j].get_ui());
        structural_.emplace_back(n, std::vector<Term>{{m, 1}, {Monomial(n, 0), -1}});
    }
}

// ---------------------------------------------------------------------------
// present / lift

namespace {

std::uint32_t exponent_u32(const Integer& v)
{
    if (v < 0 || !v.fits_uint_p())
        throw InputError("exponent " + v.get_str() + " is out of range for the polynomial presentation");
    return static_cast<std::uint32_t>(v.get_ui());
}

} // namespace

IntPolynomial present_laurent(const GroupRingElement& e, const PolyPresentation& p)
{
    require_same_group(e.group(), p.group(), "present");
    const std::size_t n = p.num_vars();
    const std::size_t r = p.group()->free_rank();
    std::vector<Term> terms;
    for (const auto& [exp, c] : e.terms()) {
        Monomial m(n, 0);
        for (std::size_t i = 0; i < r; ++i) {
            if (exp.free[i] >= 0)
                m[p.forward_var(i)] = exponent_u32(exp.free[i]);
            else
                m[p.inverse_var(i)] = exponent_u32(-exp.free[i]);
        }
        for (std::size_t j = 0; j < exp.torsion.size(); ++j)
            m[p.torsion_var(j)] = exponent_u32(exp.torsion[j]);
        terms.push_back(Term{std::move(m), c});
    }
    return IntPolynomial(n, std::move(terms));
}

PresentedElement present(const GroupRingElement& e, const PolyPresentation& p)
{
    require_same_group(e.group(), p.group(), "present");
    const GroupHandle& g = p.group();
    Exponent clearing = g->zero();
    for (const auto& [exp, c] : e.terms()) {
        for (std::size_t i = 0; i < exp.free.size(); ++i) {
            if (-exp.free[i] > clearing.free[i])
                clearing.free[i] = -exp.free[i];
        }
    }
    GroupElement unit(g, clearing);
    GroupRingElement shifted = GroupRingElement::monomial(unit) * e;
    return PresentedElement{present_laurent(shifted, p), std::move(unit)};
}

GroupRingElement lift(const IntPolynomial& f, const PolyPresentation& p)
{
    if (f.num_vars() != p.num_vars())
        throw MismatchError("lift: polynomial ring does not match presentation");
    const GroupHandle& g = p.group();
    const std::size_t r = g->free_rank();
    GroupRingElement out(g);
    for (const auto& t : f.terms()) {
        Exponent e = g->zero();
        for (std::size_t i = 0; i < r; ++i) {
            e.free[i] = Integer(static_cast<unsigned long>(t.monomial[p.forward_var(i)]))
                        - Integer(static_cast<unsigned long>(t.monomial[p.inverse_var(i)]));
        }
        for (std::size_t j = 0; j < e.torsion.size(); ++j)
            e.torsion[j] = static_cast<unsigned long>(t.monomial[p.torsion_var(j)]);
        out.add_term(e, t.coefficient);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

/// Full reduction of f by `basis`, skipping index `skip`.
IntPolynomial reduce_full(IntPolynomial f, const std::vector<IntPolynomial>& basis,
                          std::optional<std::size_t> skip = std::nullopt)
{
    std::vector<Term> irreducible;
    while (!f.is_zero()) {
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (skip && *skip == k)
                continue;
            const IntPolynomial& g = basis[k];
            if (!divides(g.leading_monomial(), f.leading_monomial()))
                continue;
            Integer q = floor_div(f.leading_coefficient(), g.leading_coefficient());
            if (q == 0)
                continue;
            f.add_scaled(-q, monomial_div(f.leading_monomial(), g.leading_monomial()), g);
            reduced = true;
            break;
        }
        if (!reduced)
            irreducible.push_back(f.pop_leading());
    }
    return IntPolynomial(f.num_vars(), std::move(irreducible));
}

struct CriticalPair {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
};

struct PairOrder {
    bool operator()(const CriticalPair& a, const CriticalPair& b) const
    {
        if (auto c = grevlex(a.lcm, b.lcm); c != 0)
            return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};

class Completion {
public:
    explicit Completion(std::size_t num_vars) : num_vars_(num_vars) {}

    void insert(const IntPolynomial& f)
    {
        IntPolynomial h = reduce_full(f, basis_);
        if (h.is_zero())
            return;
        h.make_leading_positive();
        const std::size_t idx = basis_.size();
        for (std::size_t i = 0; i < idx; ++i)
            pairs_.insert(CriticalPair{monomial_lcm(basis_[i].leading_monomial(), h.leading_monomial()), i, idx});
        basis_.push_back(std::move(h));
    }

    void run()
    {
        while (!pairs_.empty()) {
            CriticalPair pair = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            process(pair);
        }
    }

    std::vector<IntPolynomial> take() { return std::move(basis_); }

private:
    void process(const CriticalPair& pair)
    {
        // Copies: insert() may reallocate basis_.
        const IntPolynomial f = basis_[pair.i];
        const IntPolynomial g = basis_[pair.j];
        const Integer& a = f.leading_coefficient();
        const Integer& b = g.leading_coefficient();
        const Monomial mf = monomial_div(pair.lcm, f.leading_monomial());
        const Monomial mg = monomial_div(pair.lcm, g.leading_monomial());

        // Buchberger's coprime criterion, only in the monic case.
        const bool skip_s = a == 1 && b == 1 && coprime(f.leading_monomial(), g.leading_monomial());
        if (!skip_s) {
            Integer l = lcm(a, b);
            IntPolynomial s = f.times_term(l / a, mf);
            s.add_scaled(-(l / b), mg, g);
            insert(s);
        }

        const bool a_divides_b = nonneg_mod(b, a) == 0;
        const bool b_divides_a = nonneg_mod(a, b) == 0;
        if (!a_divides_b && !b_divides_a) {
            Integer u, v;
            extended_gcd(a, b, u, v);
            IntPolynomial gp = f.times_term(u, mf);
            gp.add_scaled(v, mg, g);
            insert(gp);
        }
    }

    std::size_t num_vars_;
    std::vector<IntPolynomial> basis_;
    std::set<CriticalPair, PairOrder> pairs_;
};

bool basis_less(const IntPolynomial& a, const IntPolynomial& b)
{
    if (auto c = grevlex(a.leading_monomial(), b.leading_monomial()); c != 0)
        return c < 0;
    return a.leading_coefficient() < b.leading_coefficient();
}

std::vector<IntPolynomial> minimize_and_interreduce(std::vector<IntPolynomial> g)
{
    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
            if (i == j)
                continue;
            const bool identical_lead = g[i].leading_monomial() == g[j].leading_monomial()
                                        && g[i].leading_coefficient() == g[j].leading_coefficient();
            if (identical_lead && j > i)
                continue;
            if (divides(g[j].leading_monomial(), g[i].leading_monomial())
                && nonneg_mod(g[i].leading_coefficient(), g[j].leading_coefficient()) == 0)
                keep[i] = false;
        }
    }
    std::vector<IntPolynomial> basis;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (keep[i])
            basis.push_back(std::move(g[i]));
    }
    std::sort(basis.begin(), basis.end(), basis_less);

    for (std::size_t i = 0; i < basis.size(); ++i) {
        IntPolynomial head = IntPolynomial::monomial(basis[i].leading_monomial(), basis[i].leading_coefficient());
        IntPolynomial tail = reduce_full(basis[i].tail(), basis, i);
        basis[i] = head + tail;
    }
    return basis;
}

} // namespace

// ---------------------------------------------------------------------------
// StrongGroebnerBasis

StrongGroebnerBasis::StrongGroebnerBasis(PolyPresentation presentation, std::vector<IntPolynomial> input,
                                         std::vector<IntPolynomial> basis)
    : presentation_(std::move(presentation)), input_(std::move(input)), basis_(std::move(basis))
{
}

bool StrongGroebnerBasis::is_unit_ideal() const
{
    for (const auto& g : basis_) {
        if (total_degree(g.leading_monomial()) == 0 && g.leading_coefficient() == 1)
            return true;
    }
    return false;
}

StrongGroebnerBasis strong_groebner(std::span<const IntPolynomial> generators, const PolyPresentation& p)
{
    std::vector<IntPolynomial> input = p.structural_relations();
    for (const auto& g : generators) {
        if (g.num_vars() != p.num_vars())
            throw MismatchError("strong_groebner: generator ring does not match presentation");
        input.push_back(g);
    }
    Completion completion(p.num_vars());
    for (const auto& g : input)
        completion.insert(g);
    completion.run();
    return StrongGroebnerBasis(p, std::move(input), minimize_and_interreduce(completion.take()));
}

IntPolynomial normal_form(const IntPolynomial& f, const StrongGroebnerBasis& gb)
{
    if (f.num_vars() != gb.presentation().num_vars())
        throw MismatchError("normal_form: polynomial ring does not match basis");
    return reduce_full(f, gb.basis());
}

bool ideal_contains(const StrongGroebnerBasis& gb, const IntPolynomial& f)
{
    return normal_form(f, gb).is_zero();
}

// ---------------------------------------------------------------------------
// Z-module invariants

std::string to_string(InvariantStatus status)
{
    switch (status) {
    case InvariantStatus::Exact:
        return "Exact";
    case InvariantStatus::NotFinitelyGenerated:
        return "NotFinitelyGenerated";
    case InvariantStatus::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

namespace {

/// Smallest k with x_v^k among the leading monomials (constant monomial counts, k = 0).
std::vector<std::optional<std::uint32_t>> pure_power_bounds(const std::vector<IntPolynomial>& basis,
                                                            std::size_t num_vars, bool unit_lc_only)
{
    std::vector<std::optional<std::uint32_t>> bound(num_vars);
    for (const auto& g : basis) {
        if (unit_lc_only && g.leading_coefficient() != 1)
            continue;
        const Monomial& m = g.leading_monomial();
        std::size_t support = 0;
        std::size_t var = 0;
        for (std::size_t v = 0; v < num_vars; ++v) {
            if (m[v] != 0) {
                ++support;
                var = v;
            }
        }
        if (support == 0) {
            for (auto& b : bound)
                b = 0;
        } else if (support == 1) {
            if (!bound[var] || m[var] < *bound[var])
                bound[var] = m[var];
        }
    }
    return bound;
}

} // namespace

StandardMonomialResult standard_monomial_invariants(const StrongGroebnerBasis& gb)
{
    const std::size_t n = gb.presentation().num_vars();
    const auto& basis = gb.basis();
    StandardMonomialResult out{StandardMonomialResult::Kind::Finite, 0, {}, {}};

    auto any_bound = pure_power_bounds(basis, n, false);
    for (const auto& b : any_bound) {
        if (!b) {
            out.kind = StandardMonomialResult::Kind::InfiniteFreePart;
            return out;
        }
    }
    auto unit_bound = pure_power_bounds(basis, n, true);
    for (const auto& b : unit_bound) {
        if (!b) {
            out.kind = StandardMonomialResult::Kind::InfiniteTorsionPart;
            return out;
        }
    }

    // Live monomials: outside the ideal generated by unit-lc leading monomials.
    std::vector<Monomial> live;
    bool empty_box = false;
    for (const auto& b : unit_bound)
        empty_box = empty_box || *b == 0;
    if (!empty_box) {
        Monomial m(n, 0);
        for (;;) {
            bool dead = false;
            for (const auto& g : basis) {
                if (g.leading_coefficient() == 1 && divides(g.leading_monomial(), m)) {
                    dead = true;
                    break;
                }
            }
            if (!dead)
                live.push_back(m);
            std::size_t v = n;
            while (v-- > 0) {
                if (++m[v] < *unit_bound[v])
                    break;
                m[v] = 0;
            }
            if (v == static_cast<std::size_t>(-1))
                break;
        }
    }
    std::sort(live.begin(), live.end(), [](const Monomial& a, const Monomial& b) { return grevlex(a, b) > 0; });

    auto column_of = [&](const Monomial& m) -> std::size_t {
        auto it = std::find(live.begin(), live.end(), m);
        if (it == live.end())
            throw std::logic_error("normal form escaped the standard monomial set");
        return static_cast<std::size_t>(it - live.begin());
    };

    std::vector<IntVector> rows;
    for (std::size_t c = 0; c < live.size(); ++c) {
        const IntPolynomial* best = nullptr;
        for (const auto& g : basis) {
            if (divides(g.leading_monomial(), live[c])
                && (!best || g.leading_coefficient() < best->leading_coefficient()))
                best = &g;
        }
        if (!best)
            continue;
        IntPolynomial h = best->times_term(1, monomial_div(live[c], best->leading_monomial()));
        IntPolynomial rest = reduce_full(h.tail(), basis);
        IntVector row(live.size());
        row[c] = best->leading_coefficient();
        for (const auto& t : rest.terms())
            row[column_of(t.monomial)] += t.coefficient;
        rows.push_back(std::move(row));
    }

    FgAbelianGroup quotient = FgAbelianGroup::from_relations(live.size(), IntMatrix::from_rows(live.size(), rows));
    out.free_rank = quotient.free_rank();
    out.torsion = quotient.torsion();
    out.live_monomials = std::move(live);
    return out;
}

unsigned long default_degree_bound(const StrongGroebnerBasis& gb)
{
    unsigned long d = 0;
    for (const auto& g : gb.input())
        d = std::max(d, g.total_degree());
    return 2 * d + 4;
}

AbGroupInvariants zmodule_invariants(const StrongGroebnerBasis& gb, const InvariantConfig& config)
{
    AbGroupInvariants out;
    out.bound = config.degree_bound.value_or(default_degree_bound(gb));

    StandardMonomialResult primary = standard_monomial_invariants(gb);
    if (primary.kind == StandardMonomialResult::Kind::InfiniteFreePart) {
        out.status = InvariantStatus::NotFinitelyGenerated;
        return out;
    }

    const PolyPresentation& p = gb.presentation();
    std::vector<GroupRingElement> lifted;
    for (const auto& g : gb.input()) {
        GroupRingElement e = lift(g, p);
        if (!e.is_zero())
            lifted.push_back(std::move(e));
    }
    ModuleInvariants at_bound = truncated_quotient_invariants(p.group(), lifted, out.bound);
    ModuleInvariants at_next = truncated_quotient_invariants(p.group(), lifted, out.bound + 1);

    if (primary.kind == StandardMonomialResult::Kind::Finite) {
        out.free_rank = primary.free_rank;
        out.torsion = primary.torsion;
        const ModuleInvariants expected{primary.free_rank, primary.torsion};
        out.status = (at_bound == expected && at_next == expected) ? InvariantStatus::Exact : InvariantStatus::Unknown;
        return out;
    }
    out.free_rank = at_next.free_rank;
    out.torsion = at_next.torsion;
    out.status = InvariantStatus::Unknown;
    return out;
}

} // namespace ktoric
