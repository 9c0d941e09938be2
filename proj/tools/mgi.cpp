// mgi: invariants of polarized metric graphs from the command line.
//
// Every command prints one JSON object
//   {"command": ..., "input_digest": sha256, "payload": ..., "status": code}
// and exits with `status`:
//   0  success
//   1  usage error
//   2  unreadable or malformed input, unknown point
//   3  invalid graph or arguments (disconnected, length <= 0, genus 0,
//      bad ids or q, offset outside its edge, inconsistent counts)
//   4  internal cross-check failure
//   5  a requested check or identity failed

#include "mgi/errors.hpp"
#include "mgi/genus2.hpp"
#include "mgi/graph_io.hpp"
#include "mgi/hyperelliptic.hpp"
#include "mgi/invariants.hpp"
#include "mgi/oracle.hpp"
#include "mgi/recovery.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using mgi::Error;
using mgi::ErrorKind;
using mgi::Json;
using mgi::Rational;

std::string sha256(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr);
    static const char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < size; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

struct Context {
    std::string command;
    std::string inputs;  // everything the result depends on, for the digest
    int digits = 12;
    std::uint64_t seed = 1;

    std::string read(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        inputs += text.str();
        inputs += '\0';
        return text.str();
    }

    Json exact(const Rational& value) const
    {
        return Json{{"exact", mgi::to_string(value)}, {"decimal", mgi::to_decimal(value, digits)}};
    }
};

struct Outcome {
    Json payload;
    int status = 0;
};

mgi::PolarizedMetricGraph load_graph(Context& ctx, const std::string& path, bool lengths_optional = false)
{
    std::string text = ctx.read(path);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, path + ": " + ex.what());
    }
    return mgi::graph_from_json(doc, lengths_optional);
}

Outcome cmd_invariants(Context& ctx, const std::string& path)
{
    auto g = load_graph(ctx, path);
    return {mgi::report_to_json(mgi::report(g), ctx.digits)};
}

std::vector<mgi::GraphPoint> points(const mgi::PolarizedMetricGraph& g, const std::vector<std::string>& specs,
                                    std::size_t count)
{
    if (specs.size() != count)
        throw Error(ErrorKind::Precondition,
                    "expected " + std::to_string(count) + " --at points, got " + std::to_string(specs.size()));
    std::vector<mgi::GraphPoint> out;
    for (const auto& s : specs)
        out.push_back(mgi::parse_point(g, s));
    return out;
}

Outcome cmd_green(Context& ctx, const std::string& path, const std::vector<std::string>& at)
{
    auto g = load_graph(ctx, path);
    auto p = points(g, at, 2);
    ctx.inputs += at[0] + '\0' + at[1];
    mgi::PotentialField field(g);
    return {Json{{"x", at[0]}, {"y", at[1]}, {"green", ctx.exact(field.green(p[0], p[1]))}}};
}

Outcome cmd_potential(Context& ctx, const std::string& path, const std::vector<std::string>& at)
{
    auto g = load_graph(ctx, path);
    auto p = points(g, at, 1);
    ctx.inputs += at[0];
    mgi::PotentialField field(g);
    Rational f = field.potential(p[0]);
    return {Json{{"x", at[0]},
                 {"f", ctx.exact(f)},
                 {"capacity", ctx.exact(field.capacity())},
                 {"f_minus_c", ctx.exact(f - field.capacity())}}};
}

Outcome cmd_resistance(Context& ctx, const std::string& path, const std::vector<std::string>& at)
{
    auto g = load_graph(ctx, path);
    auto p = points(g, at, 2);
    ctx.inputs += at[0] + '\0' + at[1];
    return {Json{{"x", at[0]}, {"y", at[1]}, {"resistance", ctx.exact(mgi::resistance(g, p[0], p[1]))}}};
}

Outcome cmd_measure(Context& ctx, const std::string& path)
{
    auto g = load_graph(ctx, path);
    mgi::PotentialField field(g);
    Json payload;
    payload["h"] = field.genus().h;
    payload["b1"] = field.genus().b1;
    payload["foster_sum"] = mgi::to_string(mgi::foster_sum(g));
    payload["edge_resistance"] = Json::object();
    for (const auto& e : g.edges())
        payload["edge_resistance"][e.id] = field.excised(e.id).to_string();
    for (const auto* m : {&field.canonical(), &field.admissible()}) {
        Json j = mgi::measure_to_json(*m, ctx.digits);
        j["mass"] = mgi::to_string(m->total_mass(g));
        payload[mgi::to_string(m->kind)] = j;
    }
    return {payload};
}

Outcome cmd_genus2(Context& ctx, const std::string& tag_text, const std::vector<std::string>& length_texts)
{
    for (const auto& s : length_texts)
        ctx.inputs += s + '\0';
    ctx.inputs += tag_text;
    auto tag = mgi::parse_genus2_type(tag_text);
    std::vector<Rational> lengths;
    for (const auto& s : length_texts)
        lengths.push_back(mgi::parse_rational(s));
    auto g = mgi::build(tag, lengths);
    mgi::PotentialField field(g);
    auto table = mgi::EqualityReport{mgi::phi(field), mgi::table1_phi(tag, lengths)};
    auto identities = mgi::check_identities(field, mgi::documented_counts(tag, lengths));

    Json payload;
    payload["type"] = mgi::to_string(tag);
    payload["lengths"] = length_texts;
    payload["graph"] = mgi::graph_to_json(g);
    payload["engine_phi"] = ctx.exact(table.engine);
    payload["table_phi"] = ctx.exact(table.expected);
    payload["discrepancy"] = mgi::to_string(table.discrepancy());
    payload["table_status"] = table.equal() ? "exact" : "mismatch";
    payload["counts"] = mgi::counts_to_json(mgi::documented_counts(tag, lengths));
    payload["identities"] = mgi::identity_report_to_json(identities, ctx.digits);
    bool ok = table.equal() && identities.holds();
    if (tag == mgi::Genus2Type::I) {
        auto sg = mgi::sunset_supergrav_crosscheck(lengths);
        payload["supergravity"] = {{"leading_term", mgi::to_string(sg.leading_term.coefficient)},
                                   {"pi_power", sg.leading_term.power},
                                   {"table_phi", mgi::to_string(sg.table_value)},
                                   {"status", sg.equal() ? "exact" : "mismatch"}};
        ok = ok && sg.equal();
    }
    return {payload, ok ? 0 : 5};
}

Outcome cmd_hyperelliptic(Context& ctx, const std::string& graph_path, const std::string& counts_path)
{
    auto g = load_graph(ctx, graph_path);
    std::string text = ctx.read(counts_path);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, counts_path + ": " + ex.what());
    }
    auto report = mgi::check_identities(g, mgi::counts_from_json(doc));
    return {mgi::identity_report_to_json(report, ctx.digits), report.holds() ? 0 : 5};
}

Outcome cmd_fit(Context& ctx, const std::string& path)
{
    auto family = load_graph(ctx, path, true);
    ctx.inputs += std::to_string(ctx.seed);
    mgi::FitOptions options;
    options.seed = ctx.seed;
    return {mgi::fit_to_json(mgi::fit_phi(family, options))};
}

Outcome cmd_oracle(Context& ctx, const std::string& path, const std::vector<int>& orders, double tolerance,
                   const std::string& csv)
{
    auto g = load_graph(ctx, path);
    for (int m : orders) {
        if (m < 2)
            throw Error(ErrorKind::Precondition, "quadrature order " + std::to_string(m) + " is below 2");
        ctx.inputs += std::to_string(m) + ',';
    }
    mgi::PotentialField field(g);
    auto phi = mgi::oracle_phi(field, orders, tolerance);
    auto eps = mgi::oracle_epsilon(field, orders, tolerance);
    if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out)
            throw Error(ErrorKind::Parse, "cannot write '" + csv + "'");
        std::string eps_csv = mgi::oracle_to_csv(eps);
        out << mgi::oracle_to_csv(phi) << eps_csv.substr(eps_csv.find('\n') + 1);
    }
    bool ok = true;
    for (const auto* r : {&phi, &eps})
        ok = ok && r->errors_non_increasing() && r->ratios_within(3, 5) && r->converged();
    return {Json{{"phi", mgi::oracle_to_json(phi)}, {"epsilon", mgi::oracle_to_json(eps)}, {"passed", ok}},
            ok ? 0 : 5};
}

Outcome cmd_probe(Context& ctx, const std::string& path, const std::vector<std::string>& at, const std::string& edge,
                  const std::string& step_text, double tolerance)
{
    auto g = load_graph(ctx, path);
    auto p = points(g, at, 1);
    const auto& e = g.edge(edge);
    Rational step = step_text.empty() ? Rational(e.length / 256) : mgi::parse_rational(step_text);
    ctx.inputs += at[0] + '\0' + edge + '\0' + mgi::to_string(step);
    mgi::PotentialField field(g);
    auto report = mgi::laplacian_probe(field, p[0], edge, step, tolerance);
    Json payload = mgi::probe_to_json(report);
    payload["x"] = at[0];
    return {payload, report.passed() ? 0 : 5};
}

Outcome cmd_subdivide(Context& ctx, const std::string& path, std::size_t trials)
{
    auto g = load_graph(ctx, path);
    ctx.inputs += std::to_string(trials) + '\0' + std::to_string(ctx.seed);
    auto report = mgi::subdivision_invariance_check(g, trials, ctx.seed);
    return {mgi::subdivision_to_json(report), report.passed() ? 0 : 5};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact invariants of polarized metric graphs"};
    app.require_subcommand(1);

    Context ctx;
    double tolerance = 1e-6;
    app.add_option("--seed", ctx.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--decimal", ctx.digits, "Significant digits of decimal renderings")
        ->check(CLI::Range(1, 60))
        ->capture_default_str();

    std::string graph, counts, tag, edge, step, csv;
    std::vector<std::string> at, lengths;
    std::vector<int> orders = {8, 16, 32, 64};
    std::size_t trials = 10;

    auto* invariants = app.add_subcommand("invariants", "delta, epsilon, phi, psi and the capacity c");
    invariants->add_option("graph", graph, "Graph JSON file")->required();

    auto* green = app.add_subcommand("green", "Green's function g(x,y)");
    green->add_option("graph", graph, "Graph JSON file")->required();
    green->add_option("--at", at, "vertex:ID or edge:ID@p/q, given twice")->required();

    auto* potential = app.add_subcommand("potential", "f(x) and c");
    potential->add_option("graph", graph, "Graph JSON file")->required();
    potential->add_option("--at", at, "vertex:ID or edge:ID@p/q")->required();

    auto* resistance = app.add_subcommand("resistance", "Effective resistance r(x,y)");
    resistance->add_option("graph", graph, "Graph JSON file")->required();
    resistance->add_option("--at", at, "vertex:ID or edge:ID@p/q, given twice")->required();

    auto* measure = app.add_subcommand("measure", "Canonical and admissible measures");
    measure->add_option("graph", graph, "Graph JSON file")->required();

    auto* genus2 = app.add_subcommand("genus2", "Catalog graph against its closed form");
    genus2->add_option("type", tag, "trivial, I, II, III, IV, V or VI")->required();
    genus2->add_option("lengths", lengths, "Edge lengths x1 x2 ... as p/q");

    auto* hyperelliptic = app.add_subcommand("hyperelliptic", "Identities between phi, eps, psi and node counts");
    hyperelliptic->add_option("graph", graph, "Graph JSON file")->required();
    hyperelliptic->add_option("counts", counts, "Node-type counts JSON file")->required();

    auto* fit = app.add_subcommand("fit", "Recover phi as P/Q in the edge lengths");
    fit->add_option("family", graph, "Graph JSON file; lengths are ignored")->required();

    auto* oracle = app.add_subcommand("oracle", "Midpoint-rule ladder for phi and eps");
    oracle->add_option("graph", graph, "Graph JSON file")->required();
    oracle->add_option("--orders", orders, "Quadrature orders, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    oracle->add_option("--tolerance", tolerance, "Required final error")->capture_default_str();
    oracle->add_option("--csv", csv, "Also write the ladders as CSV");

    auto* probe = app.add_subcommand("probe", "Second differences of g(x,.) along an edge");
    probe->add_option("graph", graph, "Graph JSON file")->required();
    probe->add_option("--at", at, "The fixed point x")->required();
    probe->add_option("--edge", edge, "Edge to probe")->required();
    probe->add_option("--step", step, "Step p/q dividing the edge length (default length/256)");
    probe->add_option("--tolerance", tolerance, "Allowed deviation")->capture_default_str();

    auto* subdivide = app.add_subcommand("subdivide-check", "Exact invariance under random refinements");
    subdivide->add_option("graph", graph, "Graph JSON file")->required();
    subdivide->add_option("--trials", trials, "Number of refinements")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    for (int i = 1; i < argc; ++i)
        ctx.command += (i > 1 ? " " : "") + std::string(argv[i]);

    Outcome outcome;
    try {
        if (*invariants)
            outcome = cmd_invariants(ctx, graph);
        else if (*green)
            outcome = cmd_green(ctx, graph, at);
        else if (*potential)
            outcome = cmd_potential(ctx, graph, at);
        else if (*resistance)
            outcome = cmd_resistance(ctx, graph, at);
        else if (*measure)
            outcome = cmd_measure(ctx, graph);
        else if (*genus2)
            outcome = cmd_genus2(ctx, tag, lengths);
        else if (*hyperelliptic)
            outcome = cmd_hyperelliptic(ctx, graph, counts);
        else if (*fit)
            outcome = cmd_fit(ctx, graph);
        else if (*oracle)
            outcome = cmd_oracle(ctx, graph, orders, tolerance, csv);
        else if (*probe)
            outcome = cmd_probe(ctx, graph, at, edge, step, tolerance);
        else if (*subdivide)
            outcome = cmd_subdivide(ctx, graph, trials);
    } catch (const Error& e) {
        outcome.status = mgi::exit_status(e.kind());
        outcome.payload = Json{{"error", mgi::to_string(e.kind())}, {"message", e.what()}};
        std::cerr << "mgi: " << e.what() << '\n';
    }

    Json result;
    result["command"] = ctx.command;
    result["input_digest"] = sha256(ctx.inputs);
    result["payload"] = outcome.payload;
    result["status"] = outcome.status;
    std::cout << result.dump(2) << '\n';
    return outcome.status;
}
