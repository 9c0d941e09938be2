#include "mgi/oracle.hpp"

#include "mgi/errors.hpp"
#include "mgi/invariants.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <random>
#include <sstream>

namespace mgi {

namespace {

// Vertex weights plus per-edge densities, in long double.
struct Weight {
    std::vector<long double> atoms;
    std::vector<long double> densities;
};

Weight weight(const PotentialField& field, long mu_factor, long kq_factor)
{
    const auto& g = field.graph();
    Divisor kq = polarized_divisor(g);
    Weight w;
    for (const auto& v : g.vertices())
        w.atoms.push_back(to_long_double(mu_factor * field.admissible().atom(v.id) + kq_factor * kq.at(v.id)));
    for (const auto& e : g.edges())
        w.densities.push_back(to_long_double(mu_factor * field.admissible().density(e.id)));
    return w;
}

template <class F>
long double midpoint_integral(const PotentialField& field, const Weight& w, int m, F&& value)
{
    if (m < 2)
        throw Error(ErrorKind::Precondition, "quadrature order " + std::to_string(m) + " is below 2");
    const auto& g = field.graph();
    long double total = 0;
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
        if (w.atoms[v] != 0)
            total += w.atoms[v] * value(GraphPoint(VertexPoint{g.vertices()[v].id}));
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (w.densities[e] == 0)
            continue;
        const auto& edge = g.edges()[e];
        long double sum = 0;
        for (int k = 0; k < m; ++k)
            sum += value(GraphPoint(InteriorPoint{edge.id, edge.length * (2 * k + 1) / (2 * m)}));
        total += w.densities[e] * sum * to_long_double(edge.length) / m;
    }
    return total;
}

long double diagonal(const PotentialField& field, const GraphPoint& x)
{
    return to_long_double(field.green(x, x));
}

}  // namespace

long double quadrature_phi(const PotentialField& field, int m)
{
    const long h = field.genus().h;
    long double integral = midpoint_integral(field, weight(field, 10 * h + 2, -1), m,
                                             [&field](const GraphPoint& x) { return diagonal(field, x); });
    return -to_long_double(total_length(field.graph())) / 4 + integral / 4;
}

long double quadrature_phi(const PolarizedMetricGraph& g, int m)
{
    return quadrature_phi(PotentialField(g), m);
}

long double quadrature_epsilon(const PotentialField& field, int m)
{
    const long h = field.genus().h;
    return midpoint_integral(field, weight(field, 2 * h - 2, 1), m,
                             [&field](const GraphPoint& x) { return diagonal(field, x); });
}

long double quadrature_epsilon(const PolarizedMetricGraph& g, int m)
{
    return quadrature_epsilon(PotentialField(g), m);
}

long double quadrature_capacity(const PotentialField& field, int m)
{
    return midpoint_integral(field, weight(field, 1, 0), m,
                             [&field](const GraphPoint& x) { return to_long_double(field.potential(x)); })
         / 2;
}

long double quadrature_green(const PotentialField& field, const GraphPoint& x, const GraphPoint& y, int m)
{
    long double fx = to_long_double(field.potential(x));
    long double fy = to_long_double(field.potential(y));
    long double r = to_long_double(field.resistance(x, y));
    return (fx + fy - r) / 2 - quadrature_capacity(field, m);
}

bool OracleReport::errors_non_increasing() const
{
    for (std::size_t i = 2; i < ladder.size(); ++i)
        if (ladder[i].error > ladder[i - 1].error)
            return false;
    return true;
}

namespace {

// Below this, an error is rounding noise and a ratio says nothing.
constexpr long double kNoiseFloor = 1e-15L;

}  // namespace

bool OracleReport::ratios_within(long double low, long double high) const
{
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        if (ladder[i - 1].error < kNoiseFloor)
            continue;
        if (ladder[i].ratio < low || ladder[i].ratio > high)
            return false;
    }
    return true;
}

namespace {

template <class F>
OracleReport ladder(std::string quantity, Rational exact, const std::vector<int>& orders, long double tolerance,
                    F&& approximate)
{
    OracleReport report{std::move(quantity), std::move(exact), {}, tolerance};
    std::vector<std::future<long double>> jobs;
    for (int m : orders)
        jobs.push_back(std::async(std::launch::async, [&approximate, m] { return approximate(m); }));
    const long double target = to_long_double(report.exact);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        OracleRung rung;
        rung.m = orders[i];
        rung.approximation = jobs[i].get();
        rung.error = std::fabs(rung.approximation - target);
        if (i > 0 && rung.error > 0)
            rung.ratio = report.ladder.back().error / rung.error;
        report.ladder.push_back(rung);
    }
    return report;
}

}  // namespace

OracleReport oracle_phi(const PotentialField& field, const std::vector<int>& orders, long double tolerance)
{
    return ladder("phi", phi(field), orders, tolerance, [&field](int m) { return quadrature_phi(field, m); });
}

OracleReport oracle_epsilon(const PotentialField& field, const std::vector<int>& orders, long double tolerance)
{
    return ladder("epsilon", epsilon(field), orders, tolerance,
                  [&field](int m) { return quadrature_epsilon(field, m); });
}

ProbeReport laplacian_probe(const PotentialField& field, const GraphPoint& x, const std::string& edge,
                            const Rational& step, long double tolerance)
{
    const auto& g = field.graph();
    const auto& e = g.edge(edge);
    check_point(g, x);
    if (const auto* p = std::get_if<InteriorPoint>(&x); p && p->edge == edge)
        throw Error(ErrorKind::Precondition, to_string(x) + " lies on the probed edge '" + edge + "'");
    if (step <= 0)
        throw Error(ErrorKind::Precondition, "probe step must be positive");
    Rational parts = e.length / step;
    if (parts.get_den() != 1 || parts < 4)
        throw Error(ErrorKind::Precondition,
                    "step " + to_string(step) + " must divide the length " + to_string(e.length) + " into >= 4 parts");
    const long n = parts.get_num().get_si();

    std::vector<Rational> values;
    for (long k = 0; k <= n; ++k) {
        GraphPoint y = k == 0   ? GraphPoint(VertexPoint{e.ends[0]})
                       : k == n ? GraphPoint(VertexPoint{e.ends[1]})
                                : GraphPoint(InteriorPoint{edge, step * k});
        values.push_back(field.green(x, y));
    }

    ProbeReport report;
    report.edge = edge;
    report.step = to_long_double(step);
    report.tolerance = tolerance;
    report.expected = -to_long_double(field.admissible().density(edge));
    const long double step2 = report.step * report.step;
    long double sum = 0;
    for (long k = 1; k < n; ++k) {
        long double second = to_long_double(values[k - 1]) - 2 * to_long_double(values[k]) + to_long_double(values[k + 1]);
        long double constant = -second / step2;
        report.constants.push_back(constant);
        sum += constant;
        report.max_deviation = std::max(report.max_deviation, std::fabs(constant - report.expected));
    }
    report.mean = sum / static_cast<long double>(report.constants.size());
    return report;
}

namespace {

struct Snapshot {
    Rational delta, phi, epsilon, psi, capacity;
    std::vector<Rational> greens;
};

Snapshot snapshot(const PotentialField& field, const std::vector<std::pair<GraphPoint, GraphPoint>>& pairs)
{
    Snapshot s;
    s.delta = total_length(field.graph());
    s.epsilon = epsilon(field);
    s.phi = phi(field);
    s.psi = psi_from(field.genus().h, s.epsilon, s.phi);
    s.capacity = field.capacity();
    for (const auto& [x, y] : pairs)
        s.greens.push_back(field.green(x, y));
    return s;
}

Rational random_fraction(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> denominator(2, 97);
    long b = denominator(rng);
    std::uniform_int_distribution<long> numerator(1, b - 1);
    return Rational(numerator(rng)) / b;
}

GraphPoint random_point(const PolarizedMetricGraph& g, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, g.vertices().size() + g.edges().size() - 1);
    std::size_t k = pick(rng);
    if (k < g.vertices().size())
        return VertexPoint{g.vertices()[k].id};
    const auto& e = g.edges()[k - g.vertices().size()];
    return InteriorPoint{e.id, e.length * random_fraction(rng)};
}

}  // namespace

SubdivisionReport subdivision_invariance_check(const PolarizedMetricGraph& g, std::size_t trials, std::uint64_t seed)
{
    SubdivisionReport report;
    report.trials = trials;
    report.seed = seed;
    std::mt19937_64 rng(seed);

    std::vector<std::pair<GraphPoint, GraphPoint>> pairs;
    for (int k = 0; k < 4; ++k)
        pairs.emplace_back(random_point(g, rng), random_point(g, rng));
    const PotentialField base_field(g);
    const Snapshot base = snapshot(base_field, pairs);

    std::vector<std::vector<std::pair<std::string, Rational>>> plans(trials);
    for (auto& plan : plans) {
        std::uniform_int_distribution<int> count(1, 5);
        int n = count(rng);
        for (int k = 0; k < n && !g.edges().empty(); ++k) {
            std::uniform_int_distribution<std::size_t> pick(0, g.edges().size() - 1);
            const auto& e = g.edges()[pick(rng)];
            plan.emplace_back(e.id, e.length * random_fraction(rng));
        }
        report.inserted.push_back(plan.size());
    }

    std::vector<std::future<std::vector<SubdivisionFailure>>> jobs;
    for (std::size_t t = 0; t < trials; ++t)
        jobs.push_back(std::async(std::launch::async, [&, t] {
            Refinement refined(g);
            for (const auto& [edge, position] : plans[t])
                refined.insert(edge, position);
            std::vector<std::pair<GraphPoint, GraphPoint>> mapped;
            for (const auto& [x, y] : pairs)
                mapped.emplace_back(refined.map(x), refined.map(y));
            Snapshot s = snapshot(PotentialField(refined.current()), mapped);
            std::vector<SubdivisionFailure> failures;
            auto compare = [&](const std::string& name, const Rational& a, const Rational& b) {
                if (a != b)
                    failures.push_back({t, name, a, b});
            };
            compare("delta", base.delta, s.delta);
            compare("phi", base.phi, s.phi);
            compare("epsilon", base.epsilon, s.epsilon);
            compare("psi", base.psi, s.psi);
            compare("capacity", base.capacity, s.capacity);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                compare("green(" + to_string(pairs[k].first) + ", " + to_string(pairs[k].second) + ")",
                        base.greens[k], s.greens[k]);
            return failures;
        }));
    for (auto& job : jobs) {
        auto failures = job.get();
        report.failures.insert(report.failures.end(), failures.begin(), failures.end());
    }
    report.comparisons = trials * (5 + pairs.size());
    return report;
}

std::string to_decimal(long double value, int digits)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*Lg", digits, value);
    return buffer;
}

Json oracle_to_json(const OracleReport& r)
{
    Json out;
    out["quantity"] = r.quantity;
    out["exact"] = to_string(r.exact);
    out["exact_decimal"] = to_decimal(r.exact, 18);
    out["tolerance"] = to_decimal(r.tolerance, 6);
    Json rungs = Json::array();
    for (const auto& rung : r.ladder)
        rungs.push_back({{"M", rung.m},
                         {"approximation", to_decimal(rung.approximation, 18)},
                         {"error", to_decimal(rung.error, 6)},
                         {"ratio", rung.ratio == 0 ? Json(nullptr) : Json(to_decimal(rung.ratio, 6))}});
    out["ladder"] = rungs;
    out["errors_non_increasing"] = r.errors_non_increasing();
    out["ratios_in_3_5"] = r.ratios_within(3, 5);
    out["converged"] = r.converged();
    return out;
}

std::string oracle_to_csv(const OracleReport& r)
{
    std::ostringstream out;
    out << "quantity,M,approximation,error,ratio\n";
    for (const auto& rung : r.ladder)
        out << r.quantity << ',' << rung.m << ',' << to_decimal(rung.approximation, 18) << ','
            << to_decimal(rung.error, 6) << ',' << (rung.ratio == 0 ? std::string() : to_decimal(rung.ratio, 6))
            << '\n';
    return out.str();
}

Json probe_to_json(const ProbeReport& r)
{
    Json out;
    out["edge"] = r.edge;
    out["step"] = to_decimal(r.step, 12);
    out["mean_constant"] = to_decimal(r.mean, 12);
    out["expected"] = to_decimal(r.expected, 12);
    out["max_deviation"] = to_decimal(r.max_deviation, 6);
    out["tolerance"] = to_decimal(r.tolerance, 6);
    out["passed"] = r.passed();
    return out;
}

Json subdivision_to_json(const SubdivisionReport& r)
{
    Json out;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["inserted"] = r.inserted;
    out["comparisons"] = r.comparisons;
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"trial", f.trial},
                            {"quantity", f.quantity},
                            {"base", to_string(f.base)},
                            {"refined", to_string(f.refined)}});
    out["failures"] = failures;
    out["passed"] = r.passed();
    return out;
}

}  // namespace mgi
