#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mms/cli.hpp"
#include "mms/errors.hpp"
#include "mms/families.hpp"
#include "mms/hilbert.hpp"
#include "mms/oracle.hpp"

namespace mms::cli
{

namespace
{

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::optional<std::string> partition;
    std::optional<std::string> ideal;
    std::optional<std::string> with;
    std::optional<std::string> vars;
    std::size_t codim = 2;
    std::optional<int> n;
    std::optional<int> max_d;
    std::optional<int> degree_bound;
    std::optional<int> start;
    std::string a;
    std::string b;
    std::string lam;
    std::string mu;
    bool run_oracle = false;
};

std::uint64_t oracle_cap()
{
    if (const char *env = std::getenv("MMS_ORACLE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw UsageError(std::string("MMS_ORACLE_CAP is not a number: ") + env);
        }
    }
    return oracle::kDefaultCap;
}

VariableList variables(const Options &o)
{
    if (o.vars) {
        return VariableList::parse(*o.vars, o.codim);
    }
    return VariableList::standard(o.codim);
}

std::string join(const std::vector<int> &v)
{
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k ? "," : "") + std::to_string(v[k]);
    }
    return out + "]";
}

std::string corners_text(const std::set<Box> &corners)
{
    std::string out;
    for (const Box &b : corners) {
        out += (out.empty() ? "" : " ") + to_string(b) + " w" + std::to_string(box_weight(b));
    }
    return out.empty() ? "(none)" : out;
}

json corners_json(const std::set<Box> &corners)
{
    json out = json::array();
    for (const Box &b : corners) {
        out.push_back(b.coords);
    }
    return out;
}

void add_rendering(Report &r, const Diagram &d)
{
    if (d.dim() != 2 && d.dim() != 3) {
        r.warnings.push_back("diagrams of dimension " + std::to_string(d.dim())
                             + " are not drawn; see the box list in JSON output");
        return;
    }
    const std::string picture = render_diagram(d);
    r.results["rendering"] = picture;
    if (picture.empty()) {
        r.lines.emplace_back("(empty diagram)");
        return;
    }
    std::istringstream in(picture);
    for (std::string line; std::getline(in, line);) {
        r.lines.push_back(line);
    }
}

std::string describe(const Diagram &d)
{
    if (d.dim() == 2) {
        return to_string(diagram_to_partition(d));
    }
    return std::to_string(d.dim()) + "D diagram with " + std::to_string(d.size()) + " boxes";
}

// The diagram named by --partition or --ideal.
Diagram input_diagram(const Options &o, Report &r)
{
    if (o.partition && o.ideal) {
        throw UsageError("give either --partition or --ideal, not both");
    }
    if (o.partition) {
        const Partition p = Partition::parse(*o.partition);
        r.inputs["partition"] = p.parts();
        return partition_to_diagram(p);
    }
    if (o.ideal) {
        const VariableList vars = variables(o);
        const MonomialIdeal ideal = parse_ideal(*o.ideal, vars);
        r.inputs["ideal"] = to_string(ideal);
        r.inputs["vars"] = vars.names();
        r.inputs["codim"] = vars.codim_count();
        return diagram_from_ideal(ideal);
    }
    throw UsageError("an input structure is required: --partition or --ideal");
}

int support_dimension(const Options &o, Report &r)
{
    int n = 0;
    if (o.n) {
        n = *o.n;
    } else if (o.vars) {
        n = static_cast<int>(variables(o).support_count()) - 1;
        if (n < 0) {
            throw UsageError("--vars has no support variables; pass --n explicitly");
        }
    } else {
        throw UsageError("--n is required when --vars is not given");
    }
    if (n < 0) {
        throw UsageError("--n must be non-negative");
    }
    r.inputs["n"] = n;
    return n;
}

// ---------------------------------------------------------------------------

Report cmd_diagram(const Options &o)
{
    Report r;
    r.command = "diagram";
    const Diagram d = input_diagram(o, r);
    const DiagonalProfile profile = diagonal_profile(d);
    const auto inner = inner_corners(d);
    r.results["diagram"] = diagram_json(d);
    r.results["diagonal_profile"] = profile;
    r.results["inner_corners"] = corners_json(inner);
    r.lines.push_back("diagram: " + describe(d));
    r.lines.push_back("boxes: " + std::to_string(d.size()));
    r.lines.push_back("diagonal profile: " + join(profile));
    r.lines.push_back("inner corners: " + corners_text(inner));
    if (d.dim() == 2) {
        const auto outer = outer_corners(d);
        r.results["outer_corners"] = corners_json(outer);
        r.lines.push_back("outer corners: " + corners_text(outer));
    }
    const VariableList vars = o.vars ? variables(o) : VariableList::standard(d.dim());
    const std::string ideal = to_string(ideal_from_diagram(d, vars));
    r.results["ideal"] = ideal;
    r.lines.push_back("ideal: " + ideal);
    add_rendering(r, d);
    return r;
}

Report cmd_ideal(const Options &o)
{
    Report r;
    r.command = "ideal";
    const VariableList vars = variables(o);
    std::optional<MonomialIdeal> ideal;
    if (o.partition && o.ideal) {
        throw UsageError("give either --partition or --ideal, not both");
    }
    if (o.partition) {
        const Partition p = Partition::parse(*o.partition);
        r.inputs["partition"] = p.parts();
        ideal = ideal_from_diagram(partition_to_diagram(p), vars);
    } else if (o.ideal) {
        ideal = parse_ideal(*o.ideal, vars);
        r.inputs["ideal"] = *o.ideal;
    } else {
        throw UsageError("an input is required: --ideal or --partition");
    }
    r.inputs["vars"] = vars.names();
    r.inputs["codim"] = vars.codim_count();

    const bool cm = is_cm_structure(*ideal);
    r.results["ideal"] = to_string(*ideal);
    r.results["cm_structure"] = cm;
    r.lines.push_back("ideal: " + to_string(*ideal));
    r.lines.push_back(std::string("cohen-macaulay structure: ") + (cm ? "true" : "false"));
    if (cm) {
        const Diagram d = diagram_from_ideal(*ideal);
        r.results["diagram"] = diagram_json(d);
        r.lines.push_back("diagram: " + describe(d));
        const MonomialIdeal thick = product_with_support_ideal(*ideal);
        r.results["product_with_support_ideal"] = to_string(thick);
        r.lines.push_back("I*I_X: " + to_string(thick));
        json filtration = json::array();
        std::string chain;
        for (const Diagram &term : s1_filtration(d)) {
            filtration.push_back(diagram_json(term));
            chain += (chain.empty() ? "" : " < ") + describe(term);
        }
        r.results["s1_filtration"] = std::move(filtration);
        r.lines.push_back("S1-filtration: " + (chain.empty() ? std::string("(empty)") : chain));
        add_rendering(r, d);
    }
    if (o.with) {
        const MonomialIdeal other = parse_ideal(*o.with, vars);
        r.inputs["with"] = *o.with;
        const MonomialIdeal sum = ideal_sum(*ideal, other);
        const MonomialIdeal meet = ideal_intersection(*ideal, other);
        r.results["sum"] = to_string(sum);
        r.results["intersection"] = to_string(meet);
        r.lines.push_back("I+J: " + to_string(sum));
        r.lines.push_back("I∩J: " + to_string(meet));
        if (cm && is_cm_structure(other)) {
            r.results["sum_diagram"] = diagram_json(diagram_from_ideal(sum));
            r.results["intersection_diagram"] = diagram_json(diagram_from_ideal(meet));
            r.lines.push_back("diagram of I+J: " + describe(diagram_from_ideal(sum)));
            r.lines.push_back("diagram of I∩J: " + describe(diagram_from_ideal(meet)));
        }
    }
    return r;
}

Report cmd_hilbert(const Options &o)
{
    Report r;
    r.command = "hilbert";
    const Diagram d = input_diagram(o, r);
    const int n = support_dimension(o, r);
    const ExactPolynomial hp = hilbert_polynomial(d, n);
    const StructureDecomposition dec = structure_decomposition(d, n);
    const int max_d = o.max_d.value_or(std::max(d.max_weight(), 0) + 2);
    if (max_d < 0) {
        throw UsageError("--max-d must be non-negative");
    }
    r.inputs["max_d"] = max_d;
    r.results["hilbert_polynomial"] = polynomial_json(hp);
    r.results["multiplicity"] = multiplicity(d);
    r.results["structure_weights"] = dec.weights;
    json layers_out = json::array();
    std::string layer_text;
    for (const FiltrationLayer &layer : filtration_layers(d)) {
        layers_out.push_back(json{{"level", layer.level}, {"twists", layer.twists}});
        layer_text += (layer_text.empty() ? "" : " ") + std::string("L") + std::to_string(layer.level) + "="
                      + join(layer.twists);
    }
    r.results["filtration_layers"] = std::move(layers_out);
    json table = json::array();
    std::string table_text;
    for (int deg = 0; deg <= max_d; ++deg) {
        const Integer v = hilbert_function(d, n, deg);
        table.push_back(exact_json(v));
        table_text += (table_text.empty() ? "" : " ") + v.get_str();
    }
    r.results["hilbert_function"] = std::move(table);
    r.lines.push_back("hilbert polynomial: " + to_string(hp));
    r.lines.push_back("multiplicity: " + std::to_string(multiplicity(d)));
    r.lines.push_back("O_Y = sum of O_X(-w), w in " + join(dec.weights));
    r.lines.push_back("filtration layers: " + (layer_text.empty() ? std::string("(none)") : layer_text));
    r.lines.push_back("hilbert function d=0.." + std::to_string(max_d) + ": " + table_text);
    return r;
}

Report cmd_resolution(const Options &o)
{
    Report r;
    r.command = "resolution";
    const Diagram d = input_diagram(o, r);
    const DegreePair p = degree_pair(d);
    const DegreePair reduced = reduce_pair(p);
    const bool k_ok = oracle::k_polynomial_check(d, p);
    r.results["resolution"] = format_resolution(p);
    r.results["degree_pair"] = pair_json(p);
    r.results["valid"] = validate_pair(p);
    r.results["reduced_pair"] = pair_json(reduced);
    r.results["k_polynomial_check"] = k_ok;
    r.lines.push_back(format_resolution(p));
    r.lines.push_back("generators: " + join(p.gen_degrees) + "  syzygies: " + join(p.syz_degrees));
    r.lines.push_back("reduced: " + join(reduced.gen_degrees) + " / " + join(reduced.syz_degrees));
    r.lines.push_back(std::string("k-polynomial check: ") + (k_ok ? "PASS" : "FAIL"));
    return r;
}

Report cmd_hilbdim(const Options &o)
{
    Report r;
    r.command = "hilbdim";
    const Diagram d = input_diagram(o, r);
    const int n = support_dimension(o, r);
    const Integer dim = hilbert_scheme_dimension(d, n);
    r.results["dimension"] = exact_json(dim);
    r.lines.push_back("hilbert scheme dimension in P^" + std::to_string(n + 2) + ": " + dim.get_str());
    return r;
}

Report cmd_equiv(const Options &o)
{
    Report r;
    r.command = "equiv";
    const Partition a = Partition::parse(o.a);
    const Partition b = Partition::parse(o.b);
    r.inputs["a"] = a.parts();
    r.inputs["b"] = b.parts();
    const Diagram da = partition_to_diagram(a);
    const Diagram db = partition_to_diagram(b);
    const bool big_r = R_equivalent(da, db);
    r.results["R"] = big_r;
    std::string line = std::string("R: ") + (big_r ? "true" : "false");
    if (!da.empty() && !db.empty()) {
        const bool small_r = r_equivalent(da, db);
        r.results["r"] = small_r;
        line += std::string(", r: ") + (small_r ? "true" : "false");
    } else {
        r.results["r"] = nullptr;
        r.warnings.push_back("r is undefined for the empty diagram");
    }
    const bool same = same_component(da, db);
    r.results["same_component"] = same;
    r.lines.push_back(line);
    r.lines.push_back(std::string("same component: ") + (same ? "true" : "false"));
    return r;
}

Report cmd_sum(const Options &o)
{
    Report r;
    r.command = "sum";
    const Partition lam = Partition::parse(o.lam);
    const Partition mu = Partition::parse(o.mu);
    r.inputs["lam"] = lam.parts();
    r.inputs["mu"] = mu.parts();
    const Partition s = partition_sum(lam, mu);
    r.results["sum"] = s.parts();
    r.lines.push_back(to_string(lam) + " + " + to_string(mu) + " = " + to_string(s));
    add_rendering(r, partition_to_diagram(s));
    return r;
}

Report cmd_intersect(const Options &o)
{
    Report r;
    r.command = "intersect-structures";
    const Partition lam = Partition::parse(o.lam);
    const Partition mu = Partition::parse(o.mu);
    r.inputs["lam"] = lam.parts();
    r.inputs["mu"] = mu.parts();
    const Diagram d3 = three_dim_diagram(lam, mu);
    r.results["diagram"] = diagram_json(d3);
    r.results["diagonal_profile"] = diagonal_profile(d3);
    r.lines.push_back("boxes: " + std::to_string(d3.size()));
    r.lines.push_back("diagonal profile: " + join(diagonal_profile(d3)));
    add_rendering(r, d3);
    return r;
}

Report cmd_flat_check(const Options &o)
{
    Report r;
    r.command = "flat-check";
    const Partition lam = Partition::parse(o.lam);
    const Partition mu = Partition::parse(o.mu);
    r.inputs["lam"] = lam.parts();
    r.inputs["mu"] = mu.parts();
    const int n = support_dimension(o, r);
    const FamilySetup f(lam, mu, n);
    const FlatnessEvidence e = flatness_check(f);
    const Diagram d3 = intersection_structure(f);
    const MonomialIdeal special = special_fiber_ideal(f);
    r.results["hilb_lam"] = polynomial_json(e.hilb_lam);
    r.results["hilb_mu"] = polynomial_json(e.hilb_mu);
    r.results["hilb_intersection"] = polynomial_json(e.hilb_intersection);
    r.results["hilb_union"] = polynomial_json(e.hilb_union);
    r.results["hilb_special"] = polynomial_json(e.hilb_special);
    r.results["intersection"] = diagram_json(d3);
    r.results["generic_fiber_ideal"] = to_string(generic_fiber_ideal(f));
    r.results["special_fiber_ideal"] = to_string(special);
    r.results["special_fiber_partition"] = partition_sum(lam, mu).parts();
    r.lines.push_back("Hilb(lam)          = " + to_string(e.hilb_lam));
    r.lines.push_back("Hilb(mu)           = " + to_string(e.hilb_mu));
    r.lines.push_back("Hilb(intersection) = " + to_string(e.hilb_intersection));
    r.lines.push_back("Hilb(special)      = " + to_string(e.hilb_special));
    r.lines.push_back("generic fiber: " + to_string(generic_fiber_ideal(f)));
    r.lines.push_back("special fiber: " + to_string(special));
    r.lines.push_back("intersection diagram (" + std::to_string(d3.size()) + " boxes):");
    add_rendering(r, d3);
    bool pass = e.holds;
    if (o.run_oracle) {
        const MonomialIdeal generic = generic_fiber_ideal(f);
        const int from = std::max(oracle::stabilization_bound(generic), oracle::stabilization_bound(special));
        const int to = from + n + 3;
        const auto mismatch = oracle::first_count_mismatch(generic, special, from, to, oracle_cap());
        r.results["oracle"] = json{{"from", from}, {"to", to}, {"agree", !mismatch.has_value()}};
        r.lines.push_back("oracle degrees " + std::to_string(from) + ".." + std::to_string(to) + ": "
                          + (mismatch ? "mismatch at d=" + std::to_string(*mismatch) : std::string("agree")));
        pass = pass && !mismatch;
    }
    r.results["flat"] = pass;
    r.lines.push_back(pass ? "PASS" : "FAIL");
    return r;
}

Report cmd_oracle(const Options &o)
{
    Report r;
    r.command = "oracle";
    if (!o.ideal) {
        throw UsageError("oracle needs --ideal");
    }
    const VariableList vars = variables(o);
    const MonomialIdeal ideal = parse_ideal(*o.ideal, vars);
    const int max_d = o.max_d.value_or(12);
    if (max_d < 0) {
        throw UsageError("--max-d must be non-negative");
    }
    const int degree_bound = o.degree_bound.value_or(static_cast<int>(vars.size()) - 1);
    r.inputs["ideal"] = to_string(ideal);
    r.inputs["vars"] = vars.names();
    r.inputs["codim"] = vars.codim_count();
    r.inputs["max_d"] = max_d;
    r.inputs["degree_bound"] = degree_bound;
    const oracle::DegreeTable table = oracle::degree_table(ideal, max_d, oracle_cap());
    r.results["degree_table"] = table.values;
    std::string values;
    for (auto v : table.values) {
        values += (values.empty() ? "" : " ") + std::to_string(v);
    }
    r.lines.push_back("degree table d=0.." + std::to_string(max_d) + ": " + values);
    const int start = o.start.value_or(max_d - degree_bound - 1);
    r.inputs["start"] = start;
    try {
        const ExactPolynomial p = oracle::interpolate_polynomial(table, start, degree_bound);
        r.results["polynomial"] = polynomial_json(p);
        r.lines.push_back("interpolated polynomial: " + to_string(p));
    } catch (const InconsistentValues &e) {
        r.results["polynomial"] = nullptr;
        r.warnings.emplace_back(e.what());
    } catch (const InvalidRange &e) {
        r.results["polynomial"] = nullptr;
        r.warnings.emplace_back(e.what());
    }
    return r;
}

void add_structure_options(CLI::App *sub, Options &o)
{
    sub->add_option("--partition", o.partition, "2D diagram as a partition, e.g. 5,4");
    sub->add_option("--ideal", o.ideal, "monomial ideal, e.g. \"x^5, x^4*y, y^2\"");
    sub->add_option("--vars", o.vars, "comma-separated variable names");
    sub->add_option("--codim", o.codim, "number of leading thickening variables")->check(CLI::PositiveNumber);
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Young-diagram calculus for monomial multiple structures"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto *diagram = app.add_subcommand("diagram", "corners, profile and ideal of a diagram");
    add_structure_options(diagram, o);

    auto *ideal = app.add_subcommand("ideal", "ideal operations and the diagram dictionary");
    add_structure_options(ideal, o);
    ideal->add_option("--with", o.with, "second ideal for sum and intersection");

    auto *hilbert = app.add_subcommand("hilbert", "Hilbert polynomial and function");
    add_structure_options(hilbert, o);
    hilbert->add_option("--n", o.n, "dimension of the support P^n");
    hilbert->add_option("--max-d", o.max_d, "last degree of the Hilbert function table");

    auto *resolution = app.add_subcommand("resolution", "minimal free resolution of a 2D structure");
    add_structure_options(resolution, o);

    auto *hilbdim = app.add_subcommand("hilbdim", "dimension of the Hilbert scheme at the structure");
    add_structure_options(hilbdim, o);
    hilbdim->add_option("--n", o.n, "dimension of the support P^n");

    auto *equiv = app.add_subcommand("equiv", "R and r equivalence of two diagrams");
    equiv->add_option("--a", o.a, "first partition")->required();
    equiv->add_option("--b", o.b, "second partition")->required();

    auto *sum = app.add_subcommand("sum", "partswise sum of two partitions");
    sum->add_option("--lam", o.lam, "first partition")->required();
    sum->add_option("--mu", o.mu, "second partition")->required();

    auto *intersect = app.add_subcommand("intersect-structures", "3D diagram of the intersection");
    intersect->add_option("--lam", o.lam, "structure on X")->required();
    intersect->add_option("--mu", o.mu, "structure on Z")->required();

    auto *flat = app.add_subcommand("flat-check", "flatness of the degeneration to lam + mu");
    flat->add_option("--lam", o.lam, "structure on X")->required();
    flat->add_option("--mu", o.mu, "structure on Z")->required();
    flat->add_option("--n", o.n, "dimension of the supports P^n")->required();
    flat->add_flag("--oracle", o.run_oracle, "also compare fiber degree tables by brute force");

    auto *orc = app.add_subcommand("oracle", "brute-force degree table and interpolation");
    orc->add_option("--ideal", o.ideal, "monomial ideal")->required();
    orc->add_option("--vars", o.vars, "comma-separated variable names");
    orc->add_option("--codim", o.codim, "number of leading thickening variables")->check(CLI::PositiveNumber);
    orc->add_option("--max-d", o.max_d, "last degree to count (default 12)");
    orc->add_option("--degree-bound", o.degree_bound, "degree bound for interpolation (default #vars - 1)");
    orc->add_option("--start", o.start, "first degree used for interpolation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        Report report;
        if (*diagram) {
            report = cmd_diagram(o);
        } else if (*ideal) {
            report = cmd_ideal(o);
        } else if (*hilbert) {
            report = cmd_hilbert(o);
        } else if (*resolution) {
            report = cmd_resolution(o);
        } else if (*hilbdim) {
            report = cmd_hilbdim(o);
        } else if (*equiv) {
            report = cmd_equiv(o);
        } else if (*sum) {
            report = cmd_sum(o);
        } else if (*intersect) {
            report = cmd_intersect(o);
        } else if (*flat) {
            report = cmd_flat_check(o);
        } else {
            report = cmd_oracle(o);
        }
        if (o.format == "json") {
            out << report.to_json().dump(2) << '\n';
        } else {
            out << report.to_text();
        }
        if (*flat && !report.results["flat"].get<bool>()) {
            return 1;
        }
        return 0;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv;
    argv.push_back("mms");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace mms::cli
