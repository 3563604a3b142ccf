#include "ktoric/cli/stack_io.hpp"

#include "ktoric/errors.hpp"

#include <fstream>

namespace ktoric::cli {

Json integer_to_json(const Integer& v)
{
    if (v.fits_slong_p())
        return Json(static_cast<long long>(v.get_si()));
    return Json(v.get_str());
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return Integer(std::to_string(j.get<unsigned long long>()), 10);
        return Integer(std::to_string(j.get<long long>()), 10);
    }
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    throw InputError("expected an integer, got " + j.dump());
}

Json vector_to_json(const IntVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(integer_to_json(x));
    return a;
}

IntVector vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw InputError("expected an array of integers, got " + j.dump());
    IntVector v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

namespace {

const Json& field(const Json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

GroupHandle group_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("grading_group must be an object");
    if (j.contains("free_rank")) {
        const Json& r = field(j, "free_rank");
        if (!r.is_number_integer() || r.get<long long>() < 0)
            throw InputError("free_rank must be a nonnegative integer");
        IntVector torsion = j.contains("torsion") ? vector_from_json(j.at("torsion")) : IntVector{};
        for (const auto& m : torsion) {
            if (m < 1)
                throw InputError("torsion orders must be positive");
        }
        return make_group(FgAbelianGroup::from_invariants(static_cast<std::size_t>(r.get<long long>()), torsion));
    }
    const Json& g = field(j, "generators");
    if (!g.is_number_integer() || g.get<long long>() < 0)
        throw InputError("generators must be a nonnegative integer");
    const std::size_t n = static_cast<std::size_t>(g.get<long long>());
    std::vector<IntVector> rows;
    if (j.contains("relations")) {
        const Json& rel = j.at("relations");
        if (!rel.is_array())
            throw InputError("relations must be an array of rows");
        for (const auto& row : rel) {
            IntVector v = vector_from_json(row);
            if (v.size() != n)
                throw InputError("relation row has " + std::to_string(v.size()) + " entries, expected " +
                                 std::to_string(n));
            rows.push_back(std::move(v));
        }
    }
    return group_from_relations(n, IntMatrix::from_rows(n, rows));
}

} // namespace

StackData stack_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("stack data must be a JSON object");
    StackData d;
    d.grading_group = group_from_json(field(j, "grading_group"));
    const Json& vars = field(j, "variables");
    if (!vars.is_array())
        throw InputError("variables must be an array");
    for (const auto& v : vars) {
        if (!v.is_object())
            throw InputError("each variable must be an object");
        const Json& name = field(v, "name");
        if (!name.is_string())
            throw InputError("variable name must be a string");
        Variable var{name.get<std::string>(), vector_from_json(field(v, "degree")), false};
        if (v.contains("inverted")) {
            if (!v.at("inverted").is_boolean())
                throw InputError("inverted must be a boolean");
            var.inverted = v.at("inverted").get<bool>();
        }
        d.variables.push_back(std::move(var));
    }
    if (j.contains("irrelevant")) {
        const Json& irr = j.at("irrelevant");
        if (!irr.is_array())
            throw InputError("irrelevant must be an array of arrays of names");
        for (const auto& comp : irr) {
            if (!comp.is_array())
                throw InputError("irrelevant must be an array of arrays of names");
            std::vector<std::string> names;
            for (const auto& n : comp) {
                if (!n.is_string())
                    throw InputError("component entries must be variable names");
                names.push_back(n.get<std::string>());
            }
            d.irrelevant.push_back(std::move(names));
        }
    }
    if (j.contains("label")) {
        if (!j.at("label").is_string())
            throw InputError("label must be a string");
        d.label = j.at("label").get<std::string>();
    }
    return validate(std::move(d));
}

Json stack_to_json(const StackData& data)
{
    const FgAbelianGroup& g = *data.grading_group;
    Json rel = Json::array();
    for (std::size_t i = 0; i < g.relations().rows(); ++i)
        rel.push_back(vector_to_json(g.relations().row(i)));
    Json out;
    out["grading_group"] = Json{{"generators", g.num_generators()}, {"relations", rel}};
    Json vars = Json::array();
    for (const auto& v : data.variables)
        vars.push_back(Json{{"name", v.name}, {"degree", vector_to_json(v.degree)}, {"inverted", v.inverted}});
    out["variables"] = vars;
    out["irrelevant"] = data.irrelevant;
    if (!data.label.empty())
        out["label"] = data.label;
    return out;
}

StackData load_stack(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path.string() + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return stack_from_json(j);
}

void save_stack(const StackData& data, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path.string() + "'");
    out << stack_to_json(data).dump(2) << '\n';
    if (!out)
        throw InputError("failed writing '" + path.string() + "'");
}

} // namespace ktoric::cli
