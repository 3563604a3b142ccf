#include "ktoric/stacks.hpp"

#include "ktoric/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ktoric {

std::optional<std::size_t> StackData::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].name == name)
            return i;
    }
    return std::nullopt;
}

const Variable& StackData::variable(const std::string& name) const
{
    auto i = index_of(name);
    if (!i)
        throw InputError("unknown variable '" + name + "'");
    return variables[*i];
}

GroupElement StackData::degree(const Variable& v) const
{
    if (v.degree.size() != grading_group->num_generators())
        throw InputError("degree of '" + v.name + "' has " + std::to_string(v.degree.size()) +
                         " entries, expected " + std::to_string(grading_group->num_generators()));
    return GroupElement::from_user(grading_group, v.degree);
}

GroupElement StackData::degree(const std::string& name) const
{
    return degree(variable(name));
}

std::vector<GroupElement> StackData::degrees(const std::vector<std::string>& names) const
{
    std::vector<GroupElement> out;
    out.reserve(names.size());
    for (const auto& n : names)
        out.push_back(degree(n));
    return out;
}

bool StackData::has_inverted_variables() const
{
    return std::any_of(variables.begin(), variables.end(), [](const Variable& v) { return v.inverted; });
}

StackData validate(StackData data)
{
    if (!data.grading_group)
        throw InputError("stack data has no grading group");
    std::set<std::string> seen;
    for (const auto& v : data.variables) {
        if (v.name.empty())
            throw InputError("variable with empty name");
        if (!seen.insert(v.name).second)
            throw InputError("duplicate variable name '" + v.name + "'");
        (void)data.degree(v);
    }

    std::vector<std::vector<std::size_t>> comps;
    for (const auto& comp : data.irrelevant) {
        if (comp.empty())
            throw InputError("empty irrelevant component");
        std::vector<std::size_t> idx;
        for (const auto& name : comp) {
            auto i = data.index_of(name);
            if (!i)
                throw InputError("irrelevant component names unknown variable '" + name + "'");
            if (data.variables[*i].inverted)
                throw InputError("inverted variable '" + name + "' appears in an irrelevant component");
            idx.push_back(*i);
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        comps.push_back(std::move(idx));
    }

    std::vector<bool> keep(comps.size(), true);
    for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = 0; b < comps.size() && keep[a]; ++b) {
            if (a == b || !keep[b])
                continue;
            if (!std::includes(comps[a].begin(), comps[a].end(), comps[b].begin(), comps[b].end()))
                continue;
            // b is contained in a: a is redundant, unless they are equal and a comes first
            if (comps[a] != comps[b] || b < a)
                keep[a] = false;
        }
    }

    std::vector<std::vector<std::string>> normalized;
    for (std::size_t a = 0; a < comps.size(); ++a) {
        if (!keep[a])
            continue;
        std::vector<std::string> names;
        for (auto i : comps[a])
            names.push_back(data.variables[i].name);
        normalized.push_back(std::move(names));
    }
    data.irrelevant = std::move(normalized);

    for (const auto& [name, vec] : data.symbols) {
        if (vec.size() != data.grading_group->num_generators())
            throw InputError("symbol '" + name + "' has a degree of the wrong length");
    }
    return data;
}

GroupRingElement q_element(const StackData& data, std::size_t m)
{
    if (m == 0 || m > data.irrelevant.size())
        throw InputError("component index " + std::to_string(m) + " out of range 1.." +
                         std::to_string(data.irrelevant.size()));
    auto degs = data.degrees(data.irrelevant[m - 1]);
    return product_of_one_minus(data.grading_group, degs);
}

std::string to_string(Connectedness c)
{
    switch (c) {
    case Connectedness::Connected:
        return "Connected";
    case Connectedness::NotConnected:
        return "NotConnected";
    case Connectedness::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

unsigned long default_connected_bound(const StackData& data)
{
    Integer prod = 1;
    for (const auto& m : data.grading_group->torsion())
        prod *= m;
    Integer b = 4 * Integer(static_cast<unsigned long>(std::max<std::size_t>(data.variables.size(), 1))) * prod;
    if (!b.fits_ulong_p())
        return static_cast<unsigned long>(-1);
    return b.get_ui();
}

namespace {

/// Whether {x >= 0, M x = 0, sum x = 1} has a rational solution. Phase-one simplex
/// with Bland's rule on exact rationals.
bool nonnegative_kernel_vector_exists(const std::vector<IntVector>& rows, std::size_t n)
{
    if (n == 0)
        return false;
    const std::size_t m = rows.size() + 1;
    const std::size_t width = n + m + 1; // structural, artificial, rhs
    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(width));
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            T[i][j] = mpq_class(rows[i][j]);
        T[i][n + i] = 1;
    }
    for (std::size_t j = 0; j < n; ++j)
        T[m - 1][j] = 1;
    T[m - 1][n + m - 1] = 1;
    T[m - 1][width - 1] = 1;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    std::vector<mpq_class> cost(width);
    for (std::size_t j = 0; j < width; ++j) {
        if (j >= n && j < n + m)
            continue;
        for (std::size_t i = 0; i < m; ++i)
            cost[j] -= T[i][j];
    }

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width)
            break;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0)
                continue;
            mpq_class ratio = T[i][width - 1] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            break; // unbounded cannot happen for a phase-one objective bounded below by 0
        mpq_class piv = T[leave][enter];
        for (auto& x : T[leave])
            x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0)
                continue;
            mpq_class f = T[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                T[i][j] -= f * T[leave][j];
        }
        mpq_class f = cost[enter];
        for (std::size_t j = 0; j < width; ++j)
            cost[j] -= f * T[leave][j];
        basis[leave] = enter;
    }
    // optimum value is -cost[rhs]
    return cost[width - 1] == 0;
}

/// Calls visit(e) for each e in [0, bound]^n with sum(e) == total, in decreasing
/// lexicographic order; stops early when visit returns true.
bool for_each_composition(std::size_t n, unsigned long total, unsigned long bound,
                          const std::function<bool(const std::vector<unsigned long>&)>& visit)
{
    std::vector<unsigned long> e(n, 0);
    std::function<bool(std::size_t, unsigned long)> rec = [&](std::size_t i, unsigned long left) -> bool {
        if (i + 1 == n) {
            if (left > bound)
                return false;
            e[i] = left;
            return visit(e);
        }
        const unsigned long rest_cap = static_cast<unsigned long>(n - i - 1) * bound;
        unsigned long hi = std::min(left, bound);
        unsigned long lo = left > rest_cap ? left - rest_cap : 0;
        for (unsigned long v = hi + 1; v-- > lo;) {
            e[i] = v;
            if (rec(i + 1, left - v))
                return true;
            if (v == 0)
                break;
        }
        return false;
    };
    return rec(0, total);
}

} // namespace

ConnectednessReport check_connected(const StackData& data, std::optional<unsigned long> bound)
{
    ConnectednessReport report;
    report.bound = bound.value_or(default_connected_bound(data));

    std::vector<std::size_t> active;
    std::vector<GroupElement> degs;
    for (std::size_t i = 0; i < data.variables.size(); ++i) {
        if (data.variables[i].inverted)
            continue;
        active.push_back(i);
        degs.push_back(data.degree(data.variables[i]));
    }

    const std::size_t r = data.grading_group->free_rank();
    std::vector<IntVector> rows(r, IntVector(active.size()));
    for (std::size_t j = 0; j < active.size(); ++j) {
        for (std::size_t k = 0; k < r; ++k)
            rows[k][j] = degs[j].free_part()[k];
    }
    if (!nonnegative_kernel_vector_exists(rows, active.size())) {
        report.verdict = Connectedness::Connected;
        report.settled_by_cone = true;
        return report;
    }

    const std::size_t n = active.size();
    const unsigned long max_total = static_cast<unsigned long>(n) * report.bound;
    for (unsigned long total = 1; total <= max_total; ++total) {
        bool found = for_each_composition(n, total, report.bound, [&](const std::vector<unsigned long>& e) {
            GroupElement sum = GroupElement::zero(data.grading_group);
            for (std::size_t j = 0; j < n; ++j) {
                if (e[j] != 0)
                    sum = sum + Integer(e[j]) * degs[j];
            }
            if (!sum.is_zero())
                return false;
            IntVector w(data.variables.size(), Integer(0));
            for (std::size_t j = 0; j < n; ++j)
                w[active[j]] = Integer(e[j]);
            report.witness = std::move(w);
            return true;
        });
        if (found) {
            report.verdict = Connectedness::NotConnected;
            return report;
        }
    }
    report.verdict = Connectedness::Unknown;
    return report;
}

StackData connectify(const StackData& data)
{
    if (data.has_inverted_variables())
        throw InputError("connectify requires data without inverted variables");
    const FgAbelianGroup& g = *data.grading_group;
    const std::size_t n = g.num_generators();
    const IntMatrix& rel = g.relations();
    IntMatrix extended(rel.rows(), n + 1);
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            extended(i, j) = rel(i, j);
    }

    StackData out;
    out.grading_group = group_from_relations(n + 1, extended);
    for (const auto& v : data.variables) {
        Variable w = v;
        w.degree.push_back(1);
        out.variables.push_back(std::move(w));
    }
    std::string z = "z";
    for (int k = 1; data.index_of(z); ++k)
        z = "z" + std::to_string(k);
    Variable zvar{z, IntVector(n + 1, Integer(0)), false};
    zvar.degree[n] = 1;
    out.variables.push_back(std::move(zvar));

    out.irrelevant = data.irrelevant;
    out.irrelevant.push_back({z});
    out.label = data.label.empty() ? "connectified" : data.label + " (connectified)";
    out.connectified = true;
    for (const auto& [name, vec] : data.symbols) {
        IntVector w = vec;
        w.push_back(0);
        out.symbols.emplace_back(name, std::move(w));
    }
    return validate(std::move(out));
}

namespace {

IntVector ivec(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

void require_params(const std::string& name, const std::vector<Integer>& params, std::size_t count)
{
    if (params.size() != count)
        throw InputError("example '" + name + "' takes " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
}

void require_positive(const std::string& name, const std::vector<Integer>& params)
{
    for (const auto& p : params) {
        if (p <= 0)
            throw InputError("example '" + name + "' needs positive parameters, got " + p.get_str());
    }
}

StackData weighted_projective(const std::vector<Integer>& q, std::string label)
{
    StackData d;
    d.grading_group = make_group(FgAbelianGroup::free(1));
    std::vector<std::string> all;
    for (std::size_t i = 0; i < q.size(); ++i) {
        std::string name = "x" + std::to_string(i);
        d.variables.push_back(Variable{name, IntVector{q[i]}, false});
        all.push_back(name);
    }
    d.irrelevant.push_back(std::move(all));
    d.label = std::move(label);
    d.symbols.emplace_back("u", ivec({1}));
    return d;
}

std::string bracket(const std::vector<Integer>& q)
{
    std::string s = "[";
    for (std::size_t i = 0; i < q.size(); ++i)
        s += (i ? "," : "") + q[i].get_str();
    return s + "]";
}

} // namespace

std::vector<std::string> builtin_example_names()
{
    return {"wps", "b-mu", "blowup-a2-cox", "blowup-a2-hirzebruch", "rugby", "m11", "p1"};
}

std::string builtin_example_usage(const std::string& name)
{
    static const std::map<std::string, std::string> usage = {
        {"wps", "wps Q0 .. Qn      weighted projective stack P[Q0,...,Qn], Z-graded"},
        {"b-mu", "b-mu Q            classifying stack of mu_Q: k[x,x^-1], deg x = Q"},
        {"blowup-a2-cox", "blowup-a2-cox     blowup of A^2 at the origin, Z-graded (not connected)"},
        {"blowup-a2-hirzebruch", "blowup-a2-hirzebruch  blowup of A^2 at the origin, Z^2-graded"},
        {"rugby", "rugby P Q         (P,Q)-rugby ball, grading group <e,e' | Pe = Qe'>"},
        {"m11", "m11               compactified M_{1,1} = P[4,6]"},
        {"p1", "p1                projective line P[1,1]"},
    };
    auto it = usage.find(name);
    if (it == usage.end())
        throw InputError("unknown example '" + name + "'");
    return it->second;
}

StackData builtin_example(const std::string& name, const std::vector<Integer>& params)
{
    StackData d;
    if (name == "wps") {
        if (params.empty())
            throw InputError("example 'wps' needs at least one weight");
        require_positive(name, params);
        d = weighted_projective(params, "P" + bracket(params));
    } else if (name == "m11") {
        require_params(name, params, 0);
        d = weighted_projective({4, 6}, "M11bar = P[4,6]");
    } else if (name == "p1") {
        require_params(name, params, 0);
        d = weighted_projective({1, 1}, "P1 = P[1,1]");
    } else if (name == "b-mu") {
        require_params(name, params, 1);
        require_positive(name, params);
        d.grading_group = make_group(FgAbelianGroup::free(1));
        d.variables.push_back(Variable{"x", IntVector{params[0]}, true});
        d.label = "B(mu_" + params[0].get_str() + ")";
        d.symbols.emplace_back("u", ivec({1}));
    } else if (name == "blowup-a2-cox") {
        require_params(name, params, 0);
        d.grading_group = make_group(FgAbelianGroup::free(1));
        d.variables = {{"x0", ivec({1}), false}, {"x1", ivec({-1}), false}, {"x2", ivec({1}), false}};
        d.irrelevant = {{"x0", "x2"}};
        d.label = "Bl_0 A^2 (Cox, Z-graded)";
        d.symbols.emplace_back("u", ivec({1}));
    } else if (name == "blowup-a2-hirzebruch") {
        require_params(name, params, 0);
        d.grading_group = make_group(FgAbelianGroup::free(2));
        d.variables = {{"t0", ivec({1, 0}), false},
                       {"t1", ivec({1, 0}), false},
                       {"x0", ivec({-1, 1}), false},
                       {"x1", ivec({0, 1}), false}};
        d.irrelevant = {{"x1"}, {"t0", "t1"}};
        d.label = "Bl_0 A^2 (Hirzebruch, Z^2-graded)";
        d.symbols.emplace_back("u", ivec({1, 0}));
        d.symbols.emplace_back("v", ivec({0, 1}));
    } else if (name == "rugby") {
        require_params(name, params, 2);
        require_positive(name, params);
        d.grading_group = group_from_relations(2, IntMatrix::from_rows(2, {IntVector{params[0], -params[1]}}));
        d.variables = {{"x", ivec({1, 0}), false}, {"y", ivec({0, 1}), false}};
        d.irrelevant = {{"x", "y"}};
        d.label = "F[" + params[0].get_str() + "," + params[1].get_str() + "]";
        d.symbols.emplace_back("t", ivec({1, 0}));
        d.symbols.emplace_back("s", ivec({0, 1}));
    } else {
        throw InputError("unknown example '" + name + "'");
    }
    return validate(std::move(d));
}

PicHypothesisReport check_pic_hypotheses(const StackData& data)
{
    PicHypothesisReport r;
    r.notes.push_back("graded domain: polynomial ring over a field with some variables inverted");
    r.notes.push_back("graded factorial: localization of a UFD at monomials");
    if (data.irrelevant.empty()) {
        r.local_cohomology_vanishes = true;
        r.notes.push_back("local cohomology: no irrelevant components");
    } else {
        r.local_cohomology_vanishes = std::all_of(data.irrelevant.begin(), data.irrelevant.end(),
                                                  [](const auto& c) { return c.size() >= 2; });
        r.notes.push_back(r.local_cohomology_vanishes
                              ? "local cohomology: every component has at least two variables"
                              : "local cohomology: a component of size 1 is not certified");
    }
    r.uses_unit_convention = data.has_inverted_variables();
    if (r.uses_unit_convention)
        r.notes.push_back("units: taken to be monomials in the inverted variables");
    return r;
}

} // namespace ktoric
