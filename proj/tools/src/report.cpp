#include "ktoric/cli/report.hpp"

namespace ktoric::cli {

Json group_to_json(const FgAbelianGroup& g)
{
    return Json{{"rank", g.free_rank()}, {"torsion", vector_to_json(g.torsion())}, {"description", g.describe()}};
}

Json invariants_to_json(const AbGroupInvariants& inv)
{
    return Json{{"rank", inv.free_rank},
                {"torsion", vector_to_json(inv.torsion)},
                {"status", to_string(inv.status)},
                {"bound", inv.bound}};
}

Json connectedness_to_json(const ConnectednessReport& r)
{
    Json j{{"verdict", to_string(r.verdict)}, {"bound", r.bound}, {"settled_by_cone", r.settled_by_cone}};
    if (r.witness)
        j["witness"] = vector_to_json(*r.witness);
    return j;
}

Json strings_to_json(const std::vector<std::string>& xs)
{
    Json a = Json::array();
    for (const auto& x : xs)
        a.push_back(x);
    return a;
}

Json pic_to_json(const PicResult& r)
{
    Json units = Json::array();
    for (const auto& u : r.units_subgroup_generators)
        units.push_back(vector_to_json(u.user_coordinates()));
    Json j{{"group", group_to_json(*r.group)}, {"units_subgroup", units}};
    if (r.removed_degree)
        j["removed_degree"] = vector_to_json(r.removed_degree->user_coordinates());
    j["hypotheses"] = Json{{"graded_domain", r.hypotheses.graded_domain},
                           {"graded_factorial", r.hypotheses.graded_factorial},
                           {"local_cohomology_vanishes", r.hypotheses.local_cohomology_vanishes},
                           {"uses_unit_convention", r.hypotheses.uses_unit_convention},
                           {"notes", strings_to_json(r.hypotheses.notes)}};
    return j;
}

Json strip_timing(Json report)
{
    report.erase("timing");
    return report;
}

namespace {

std::string scalar(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool flat_array(const Json& v)
{
    for (const auto& x : v) {
        if (x.is_structured())
            return false;
    }
    return true;
}

void print_value(const std::string& key, const Json& v, int indent, std::ostream& out)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        for (const auto& [k, x] : v.items())
            print_value(k, x, indent + 2, out);
    } else if (v.is_array() && (v.empty() || !flat_array(v) || v.front().is_string())) {
        out << pad << key << ":" << (v.empty() ? " (none)" : "") << "\n";
        for (const auto& x : v) {
            if (x.is_structured())
                out << pad << "  - " << x.dump() << "\n";
            else
                out << pad << "  - " << scalar(x) << "\n";
        }
    } else {
        out << pad << key << ": " << scalar(v) << "\n";
    }
}

} // namespace

void print_report(const Json& report, std::ostream& out)
{
    for (const auto& [k, v] : report.items()) {
        if (k == "timing")
            continue;
        print_value(k, v, 0, out);
    }
}

} // namespace ktoric::cli
