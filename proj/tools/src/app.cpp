#include "ktoric/cli/app.hpp"

#include "ktoric/cli/expression.hpp"
#include "ktoric/cli/report.hpp"
#include "ktoric/cli/stack_io.hpp"
#include "ktoric/errors.hpp"
#include "ktoric/ktheory.hpp"
#include "ktoric/picard.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace ktoric::cli {

namespace {

struct InputSpec {
    std::string path;
    std::vector<std::string> example;
};

struct Output {
    std::string json_path;
};

std::vector<Integer> parse_params(const std::vector<std::string>& xs)
{
    std::vector<Integer> out;
    for (const auto& x : xs)
        out.push_back(parse_integer(x));
    return out;
}

IntVector parse_int_list(const std::string& text)
{
    IntVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw InputError("empty entry in integer list '" + text + "'");
        v.push_back(parse_integer(item.substr(b, e - b + 1)));
    }
    if (v.empty())
        throw InputError("empty integer list");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

std::vector<IntVector> parse_vector_list(const std::string& text)
{
    std::vector<IntVector> out;
    if (text.empty())
        return out;
    for (const auto& part : split(text, ';'))
        out.push_back(parse_int_list(part));
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text)
{
    std::vector<std::string> out;
    for (const auto& part : split(text, ',')) {
        auto b = part.find_first_not_of(" \t");
        auto e = part.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw InputError("empty variable name in '" + text + "'");
        out.push_back(part.substr(b, e - b + 1));
    }
    return out;
}

std::optional<unsigned long> env_bound(const char* name)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return std::nullopt;
    Integer n = parse_integer(v);
    if (n < 1 || !n.fits_ulong_p())
        throw InputError(std::string(name) + " must be a positive integer");
    return n.get_ui();
}

StackData example_from_words(const std::vector<std::string>& words)
{
    if (words.empty())
        throw InputError("--example needs a name");
    std::vector<std::string> params(words.begin() + 1, words.end());
    return builtin_example(words.front(), parse_params(params));
}

StackData resolve(const InputSpec& in)
{
    if (!in.path.empty() && !in.example.empty())
        throw InputError("give either an input file or --example, not both");
    if (!in.example.empty())
        return example_from_words(in.example);
    if (in.path.empty())
        throw InputError("no input: give a stack file or --example NAME [PARAMS]");
    return load_stack(in.path);
}

/// NAME, NAME:P1,P2,... or a path to a stack file.
StackData resolve_target(const std::string& spec)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec))
        return load_stack(spec);
    auto colon = spec.find(':');
    std::vector<std::string> words{spec.substr(0, colon)};
    if (colon != std::string::npos) {
        for (const auto& p : split(spec.substr(colon + 1), ','))
            words.push_back(p);
    }
    return example_from_words(words);
}

std::string describe_input(const InputSpec& in)
{
    if (!in.example.empty()) {
        std::string s = "example";
        for (const auto& w : in.example)
            s += " " + w;
        return s;
    }
    return in.path;
}

SymbolTable symbols_of(const StackData& data)
{
    SymbolTable t;
    for (const auto& [name, vec] : data.symbols)
        t.emplace(name, GroupElement::from_user(data.grading_group, vec));
    return t;
}

void add_input_options(CLI::App* cmd, InputSpec& in)
{
    cmd->add_option("input", in.path, "stack data file (JSON)");
    cmd->add_option("--example", in.example, "built-in example: NAME [PARAMS...]")->expected(1, -1);
}

void add_json_option(CLI::App* cmd, Output& o)
{
    cmd->add_option("--json", o.json_path, "write the JSON report to PATH ('-' for stdout)");
}

Json base_report(const std::string& command, const InputSpec& in, const StackData& data)
{
    Json r;
    r["command"] = command;
    r["input"] = data.label.empty() ? describe_input(in) : data.label;
    r["source"] = describe_input(in);
    r["grading_group"] = group_to_json(*data.grading_group);
    return r;
}

std::vector<std::string> poly_names(const K0Presentation& p)
{
    return p.poly().variable_names();
}

K0Handle presentation_for(const StackData& data, bool override_hypothesis, std::optional<unsigned long> connected_bound)
{
    K0Options opt;
    opt.override_hypothesis = override_hypothesis;
    opt.connected_bound = connected_bound ? connected_bound : env_bound("KTORIC_BOUND");
    return k0_presentation(data, opt);
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int finish(Json report, const Output& o, std::chrono::steady_clock::time_point start)
    {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["timing"] = Json{{"elapsed_ms", ms}};
        if (o.json_path == "-") {
            out_ << report.dump(2) << '\n';
            return kOk;
        }
        if (!o.json_path.empty()) {
            std::ofstream f(o.json_path);
            if (!f)
                throw InputError("cannot write '" + o.json_path + "'");
            f << report.dump(2) << '\n';
        }
        print_report(report, out_);
        return kOk;
    }

    std::ostream& out_;
    std::ostream& err_;
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"ktoric: K0 and Picard groups of toric stacks"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "show help for every command");

    Runner runner(out, err);
    std::function<int()> action;
    const auto start = std::chrono::steady_clock::now();

    // k0
    InputSpec k0_in;
    Output k0_out;
    bool k0_invariants = false;
    bool k0_override = false;
    std::optional<unsigned long> k0_bound;
    std::optional<unsigned long> k0_cbound;
    auto* k0 = app.add_subcommand("k0", "ideal presenting K0 as a quotient of the group ring");
    add_input_options(k0, k0_in);
    add_json_option(k0, k0_out);
    k0->add_flag("--invariants", k0_invariants, "compute rank and torsion of K0");
    k0->add_option("--bound", k0_bound, "truncation bound for the invariant cross-check");
    k0->add_option("--connected-bound", k0_cbound, "search bound for the connectedness check");
    k0->add_flag("--override-hypothesis", k0_override, "build the presentation even if unverified");
    k0->callback([&] {
        action = [&]() -> int {
            StackData data = resolve(k0_in);
            K0Handle p = presentation_for(data, k0_override, k0_cbound);
            Json r = base_report("k0", k0_in, data);
            r["connectedness"] = connectedness_to_json(p->connectedness());
            Json gens = Json::array();
            for (const auto& g : p->generators())
                gens.push_back(render(g));
            r["generators"] = gens;
            Json gb = Json::array();
            for (const auto& g : p->groebner_basis().basis())
                gb.push_back(g.to_string(poly_names(*p)));
            r["polynomial_variables"] = strings_to_json(poly_names(*p));
            r["groebner_basis"] = gb;
            bool certified = p->verified();
            std::vector<std::string> marks = p->watermarks();
            if (k0_invariants) {
                InvariantConfig cfg;
                cfg.degree_bound = k0_bound ? k0_bound : env_bound("KTORIC_DEGREE_BOUND");
                AbGroupInvariants inv = invariants(*p, cfg);
                r["invariants"] = invariants_to_json(inv);
                if (inv.status != InvariantStatus::Exact) {
                    certified = false;
                    marks.push_back("invariants not certified: status " + to_string(inv.status));
                }
            }
            r["certified"] = certified;
            r["watermarks"] = strings_to_json(marks);
            return runner.finish(std::move(r), k0_out, start);
        };
    });

    // pic
    InputSpec pic_in;
    Output pic_out;
    std::string remove_degree;
    auto* picc = app.add_subcommand("pic", "Picard group");
    add_input_options(picc, pic_in);
    add_json_option(picc, pic_out);
    picc->add_option("--remove-degree", remove_degree, "degree of a removed hypersurface (user coordinates, a,b,...)");
    picc->callback([&] {
        action = [&]() -> int {
            StackData data = resolve(pic_in);
            PicResult res = remove_degree.empty()
                                ? pic(data)
                                : pic_open(data, GroupElement::from_user(data.grading_group,
                                                                         parse_int_list(remove_degree)));
            Json r = base_report("pic", pic_in, data);
            r["group"] = group_to_json(*res.group);
            r["pic"] = pic_to_json(res);
            r["certified"] = res.certified;
            std::vector<std::string> marks;
            if (!res.certified)
                marks.push_back("hypotheses not verified: local cohomology vanishing not certified");
            if (res.hypotheses.uses_unit_convention)
                marks.push_back("units taken to be monomials in the inverted variables");
            r["watermarks"] = strings_to_json(marks);
            return runner.finish(std::move(r), pic_out, start);
        };
    });

    // eq
    InputSpec eq_in;
    Output eq_out;
    std::string lhs;
    std::string rhs;
    bool eq_override = false;
    std::optional<unsigned long> eq_cbound;
    auto* eq = app.add_subcommand("eq", "decide equality of two classes in K0");
    add_input_options(eq, eq_in);
    add_json_option(eq, eq_out);
    eq->add_option("--lhs", lhs, "left-hand side")->required();
    eq->add_option("--rhs", rhs, "right-hand side")->required();
    eq->add_option("--connected-bound", eq_cbound, "search bound for the connectedness check");
    eq->add_flag("--override-hypothesis", eq_override, "use the presentation even if unverified");
    eq->callback([&] {
        action = [&]() -> int {
            StackData data = resolve(eq_in);
            SymbolTable sym = symbols_of(data);
            GroupRingElement a = parse_expression(lhs, data.grading_group, sym);
            GroupRingElement b = parse_expression(rhs, data.grading_group, sym);
            K0Handle p = presentation_for(data, eq_override, eq_cbound);
            K0Class ca = class_of(p, a);
            K0Class cb = class_of(p, b);
            const bool equal = equal_in_k0(ca, cb);
            Json r = base_report("eq", eq_in, data);
            r["lhs"] = render(a);
            r["rhs"] = render(b);
            r["lhs_normal_form"] = ca.normal_form().to_string(poly_names(*p));
            r["rhs_normal_form"] = cb.normal_form().to_string(poly_names(*p));
            r["difference_normal_form"] = (ca - cb).normal_form().to_string(poly_names(*p));
            r["equal"] = equal;
            r["certified"] = p->verified();
            r["watermarks"] = strings_to_json(p->watermarks());
            runner.finish(std::move(r), eq_out, start);
            return equal ? kOk : kNegative;
        };
    });

    // check-connected
    InputSpec cc_in;
    Output cc_out;
    std::optional<unsigned long> cc_bound;
    auto* cc = app.add_subcommand("check-connected", "test whether degree-zero functions are constant");
    add_input_options(cc, cc_in);
    add_json_option(cc, cc_out);
    cc->add_option("--bound", cc_bound, "largest exponent searched for a witness");
    cc->callback([&] {
        action = [&]() -> int {
            StackData data = resolve(cc_in);
            auto bound = cc_bound ? cc_bound : env_bound("KTORIC_BOUND");
            ConnectednessReport rep = check_connected(data, bound);
            Json r = base_report("check-connected", cc_in, data);
            r["connectedness"] = connectedness_to_json(rep);
            if (rep.witness)
                r["witness"] = vector_to_json(*rep.witness);
            runner.finish(std::move(r), cc_out, start);
            return rep.verdict == Connectedness::Connected ? kOk : kNegative;
        };
    });

    // connectify
    InputSpec cf_in;
    Output cf_out;
    std::string cf_path;
    auto* cf = app.add_subcommand("connectify", "add a variable z so that the connected hypothesis holds");
    add_input_options(cf, cf_in);
    add_json_option(cf, cf_out);
    cf->add_option("-o,--output", cf_path, "write the new stack data to PATH");
    cf->callback([&] {
        action = [&]() -> int {
            StackData data = resolve(cf_in);
            StackData c = connectify(data);
            if (cf_path.empty() && cf_out.json_path.empty()) {
                out << stack_to_json(c).dump(2) << '\n';
                return kOk;
            }
            if (!cf_path.empty())
                save_stack(c, cf_path);
            Json r = base_report("connectify", cf_in, data);
            r["output"] = cf_path;
            r["stack"] = stack_to_json(c);
            r["connectedness"] = connectedness_to_json(check_connected(c));
            return runner.finish(std::move(r), cf_out, start);
        };
    });

    // class
    InputSpec cl_in;
    Output cl_out;
    std::optional<std::string> koszul;
    std::optional<std::string> coordinate;
    std::optional<std::string> intersection;
    std::optional<std::string> twist;
    std::optional<std::string> expr;
    bool cl_override = false;
    auto* cl = app.add_subcommand("class", "class of a sheaf in K0");
    add_input_options(cl, cl_in);
    add_json_option(cl, cl_out);
    auto* o1 = cl->add_option("--koszul", koszul, "degrees of a regular sequence: a,b;c,d;...");
    auto* o2 = cl->add_option("--coordinate", coordinate, "variables cut out: x,y,...");
    auto* o3 = cl->add_option("--intersection", intersection, "union of coordinate subspaces: x,y|z|...");
    auto* o4 = cl->add_option("--twist", twist, "O(alpha), alpha in user coordinates");
    auto* o5 = cl->add_option("--expr", expr, "an arbitrary group ring element");
    o1->excludes(o2, o3, o4, o5);
    o2->excludes(o3, o4, o5);
    o3->excludes(o4, o5);
    o4->excludes(o5);
    cl->add_flag("--override-hypothesis", cl_override, "use the presentation even if unverified");
    cl->callback([&] {
        action = [&]() -> int {
            StackData data = resolve(cl_in);
            K0Handle p = presentation_for(data, cl_override, std::nullopt);
            std::optional<K0Class> c;
            std::string kind;
            if (koszul) {
                std::vector<GroupElement> degs;
                for (const auto& v : parse_vector_list(*koszul))
                    degs.push_back(GroupElement::from_user(data.grading_group, v));
                c = class_of_koszul_quotient(p, degs);
                kind = "koszul";
            } else if (coordinate) {
                c = class_of_coordinate_quotient(p, coordinate->empty() ? std::vector<std::string>{}
                                                                       : parse_name_list(*coordinate));
                kind = "coordinate";
            } else if (intersection) {
                std::vector<std::vector<std::string>> comps;
                for (const auto& part : split(*intersection, '|'))
                    comps.push_back(parse_name_list(part));
                c = class_of_intersection(p, comps);
                kind = "intersection";
            } else if (twist) {
                c = class_of_twist(p, GroupElement::from_user(data.grading_group, parse_int_list(*twist)));
                kind = "twist";
            } else if (expr) {
                c = class_of(p, parse_expression(*expr, data.grading_group, symbols_of(data)));
                kind = "expression";
            } else {
                throw InputError("class needs one of --koszul, --coordinate, --intersection, --twist, --expr");
            }
            Json r = base_report("class", cl_in, data);
            r["kind"] = kind;
            r["representative"] = render(c->representative());
            r["normal_form"] = c->normal_form().to_string(poly_names(*p));
            r["zero_in_k0"] = c->is_zero();
            r["certified"] = p->verified();
            r["watermarks"] = strings_to_json(p->watermarks());
            return runner.finish(std::move(r), cl_out, start);
        };
    });

    // map
    InputSpec mp_in;
    Output mp_out;
    std::string matrix;
    std::string target;
    std::optional<std::string> push;
    bool mp_override = false;
    auto* mp = app.add_subcommand("map", "check the map on K0 induced by a grading-group homomorphism");
    add_input_options(mp, mp_in);
    add_json_option(mp, mp_out);
    mp->add_option("--matrix", matrix, "rows separated by ';', entries by ','; target x source generators")
        ->required();
    mp->add_option("--target", target, "target stack: file, NAME or NAME:P1,P2,...")->required();
    mp->add_option("--push", push, "push an element of the source group ring forward");
    mp->add_flag("--override-hypothesis", mp_override, "use presentations even if unverified");
    mp->callback([&] {
        action = [&]() -> int {
            StackData src = resolve(mp_in);
            StackData dst = resolve_target(target);
            auto rows = parse_vector_list(matrix);
            const std::size_t cols = src.grading_group->num_generators();
            for (const auto& row : rows) {
                if (row.size() != cols)
                    throw InputError("matrix rows need " + std::to_string(cols) + " entries");
            }
            if (rows.size() != dst.grading_group->num_generators())
                throw InputError("matrix needs " + std::to_string(dst.grading_group->num_generators()) + " rows");
            GroupHom theta(src.grading_group, dst.grading_group, IntMatrix::from_rows(cols, rows));
            K0Handle ps = presentation_for(src, mp_override, std::nullopt);
            K0Handle pt = presentation_for(dst, mp_override, std::nullopt);
            InducedMapCheck check = check_induced_map(theta, *ps, *pt);
            Json r = base_report("map", mp_in, src);
            r["target"] = dst.label.empty() ? target : dst.label;
            Json mrows = Json::array();
            for (const auto& row : rows)
                mrows.push_back(vector_to_json(row));
            r["matrix"] = mrows;
            Json images = Json::array();
            for (std::size_t i = 0; i < check.images.size(); ++i) {
                images.push_back(Json{{"generator", render(ps->generators()[i])},
                                      {"image", render(check.images[i].image)},
                                      {"normal_form", check.images[i].normal_form.to_string(poly_names(*pt))},
                                      {"in_ideal", check.images[i].in_ideal}});
            }
            r["images"] = images;
            r["well_defined"] = check.ok();
            if (push && check.ok()) {
                InducedMap f(theta, ps, pt);
                K0Class pushed = f.push(class_of(ps, parse_expression(*push, src.grading_group, symbols_of(src))));
                r["pushed"] = Json{{"representative", render(pushed.representative())},
                                   {"normal_form", pushed.normal_form().to_string(poly_names(*pt))}};
            }
            std::vector<std::string> marks = ps->watermarks();
            marks.insert(marks.end(), pt->watermarks().begin(), pt->watermarks().end());
            r["certified"] = ps->verified() && pt->verified();
            r["watermarks"] = strings_to_json(marks);
            runner.finish(std::move(r), mp_out, start);
            return check.ok() ? kOk : kNegative;
        };
    });

    // example
    bool list = false;
    std::vector<std::string> ex_words;
    std::string ex_path;
    auto* ex = app.add_subcommand("example", "list or print built-in examples");
    ex->add_flag("--list", list, "list the built-in examples");
    ex->add_option("name", ex_words, "NAME [PARAMS...]");
    ex->add_option("-o,--output", ex_path, "write the stack data to PATH");
    ex->callback([&] {
        action = [&]() -> int {
            if (list || ex_words.empty()) {
                for (const auto& n : builtin_example_names())
                    out << builtin_example_usage(n) << '\n';
                return kOk;
            }
            StackData d = example_from_words(ex_words);
            if (!ex_path.empty())
                save_stack(d, ex_path);
            else
                out << stack_to_json(d).dump(2) << '\n';
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        return action ? action() : kInputError;
    } catch (const HypothesisError& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace ktoric::cli
