#include "mgi/recovery.hpp"

#include "mgi/errors.hpp"
#include "mgi/invariants.hpp"
#include "mgi/linalg.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace mgi {

Rational evaluate(const MultivariateRationalFunction& f, const std::vector<Rational>& lengths)
{
    Rational q = f.denominator(lengths);
    if (q == 0)
        throw Error(ErrorKind::DenominatorZero, "denominator vanishes at the given lengths");
    return f.numerator(lengths) / q;
}

bool same_function(const Polynomial& p, const Polynomial& q, const Polynomial& p2, const Polynomial& q2)
{
    return (p * q2 - p2 * q).is_zero();
}

Polynomial symanzik(const PolarizedMetricGraph& g)
{
    const auto& edges = g.edges();
    const std::size_t r = edges.size();
    const std::size_t n = g.vertices().size();
    Polynomial u(r);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < r; ++i)
        if (!edges[i].is_loop())
            candidates.push_back(i);
    const std::size_t tree_size = n - 1;
    if (candidates.size() < tree_size)
        return u;

    std::vector<bool> chosen(candidates.size(), false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(tree_size), true);
    do {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&parent](std::size_t v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        Exponents e(r, 1);
        for (std::size_t k = 0; k < candidates.size() && acyclic; ++k) {
            if (!chosen[k])
                continue;
            const auto& edge = edges[candidates[k]];
            auto a = root(g.vertex_index(edge.ends[0]));
            auto b = root(g.vertex_index(edge.ends[1]));
            if (a == b)
                acyclic = false;
            parent[a] = b;
            e[candidates[k]] = 0;
        }
        if (acyclic)
            u.add_term(e, 1);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return u;
}

void normalize(Polynomial& p, Polynomial& q)
{
    if (q.is_zero())
        throw Error(ErrorKind::DenominatorZero, "zero denominator");
    Integer lcm = 1;
    for (const auto* poly : {&p, &q})
        for (const auto& [_, c] : poly->terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer gcd = 0;
    for (const auto* poly : {&p, &q})
        for (const auto& [_, c] : poly->terms()) {
            Integer scaled = c.get_num() * (lcm / c.get_den());
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    Rational factor = make_rational(lcm, gcd);
    if (q.leading().second < 0)
        factor = -factor;
    p = p * factor;
    q = q * factor;
}

namespace {

struct Sample {
    std::vector<Rational> lengths;
    Rational phi;
};

PolarizedMetricGraph with_lengths(const PolarizedMetricGraph& family, const std::vector<Rational>& lengths)
{
    std::vector<Edge> edges = family.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        edges[i].length = lengths[i];
    return PolarizedMetricGraph(family.vertices(), std::move(edges));
}

std::vector<Sample> draw_samples(const PolarizedMetricGraph& family, std::size_t count, const FitOptions& options)
{
    const std::size_t r = family.edges().size();
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> length(options.min_length, options.max_length);
    std::set<std::vector<int>> seen;
    std::vector<Sample> samples;
    while (samples.size() < count) {
        std::vector<int> draw(r);
        for (auto& x : draw)
            x = length(rng);
        if (!seen.insert(draw).second)
            continue;
        Sample s;
        for (int x : draw)
            s.lengths.emplace_back(x);
        samples.push_back(std::move(s));
    }

    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < samples.size(); i += workers)
                samples[i].phi = phi(with_lengths(family, samples[i].lengths));
        }));
    for (auto& job : jobs)
        job.get();
    return samples;
}

// Rows P(x) - phi(x) Q(x) = 0 over the first `rows` samples; unknowns are the
// coefficients of P (degree k+1) followed by those of Q (degree k).
Matrix system(const std::vector<Sample>& samples, std::size_t rows, const std::vector<Exponents>& p_basis,
              const std::vector<Exponents>& q_basis)
{
    Matrix a(rows, p_basis.size() + q_basis.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& s = samples[i];
        for (std::size_t j = 0; j < p_basis.size(); ++j)
            a(i, j) = monomial_value(p_basis[j], s.lengths);
        for (std::size_t j = 0; j < q_basis.size(); ++j)
            a(i, p_basis.size() + j) = -s.phi * monomial_value(q_basis[j], s.lengths);
    }
    return a;
}

MultivariateRationalFunction from_vector(const std::vector<std::string>& names, const std::vector<Rational>& v,
                                         const std::vector<Exponents>& p_basis, const std::vector<Exponents>& q_basis)
{
    MultivariateRationalFunction f{names, Polynomial(names.size()), Polynomial(names.size())};
    for (std::size_t j = 0; j < p_basis.size(); ++j)
        f.numerator.add_term(p_basis[j], v[j]);
    for (std::size_t j = 0; j < q_basis.size(); ++j)
        f.denominator.add_term(q_basis[j], v[p_basis.size() + j]);
    return f;
}

std::string dims(std::size_t p, std::size_t q)
{
    return std::to_string(p) + "+" + std::to_string(q);
}

}  // namespace

FitResult fit_phi(const PolarizedMetricGraph& family, const FitOptions& options)
{
    const std::size_t r = family.edges().size();
    if (r == 0)
        throw Error(ErrorKind::Precondition, "family has no edges, so phi has no variables");
    if (options.min_length < 1 || options.max_length < options.min_length)
        throw Error(ErrorKind::Precondition, "sample lengths must be a non-empty range of positive integers");
    require_valid(with_lengths(family, std::vector<Rational>(r, Rational(1))));

    FitResult result;
    result.seed = options.seed;
    result.b1 = genus(family).b1;
    const int top = static_cast<int>(2 * result.b1);
    std::vector<std::string> names;
    for (const auto& e : family.edges())
        names.push_back(e.id);

    const auto full_p = monomials(r, top + 1);
    const auto full_q = monomials(r, top);
    const std::size_t oversampling = std::max<std::size_t>(options.oversampling, 2);
    const std::size_t fit_rows = oversampling * (full_p.size() + full_q.size());
    result.samples = fit_rows;
    auto samples = draw_samples(family, fit_rows + std::max<std::size_t>(options.holdout, 10), options);

    // Lowest degree with a one-dimensional kernel: the fit in lowest terms.
    int k0 = -1;
    std::vector<Rational> reduced_vector;
    std::vector<Exponents> reduced_p, reduced_q;
    for (int k = 0; k <= top && k0 < 0; ++k) {
        auto p_basis = monomials(r, k + 1);
        auto q_basis = monomials(r, k);
        auto kernel = nullspace(system(samples, oversampling * (p_basis.size() + q_basis.size()), p_basis, q_basis));
        if (kernel.empty())
            continue;
        if (kernel.size() != 1)
            throw Error(ErrorKind::RankDeficient, "kernel of dimension " + std::to_string(kernel.size())
                                                      + " at degrees " + std::to_string(k + 1) + "/"
                                                      + std::to_string(k) + " (unknowns " + dims(p_basis.size(), q_basis.size()) + ")");
        k0 = k;
        reduced_vector = kernel.front();
        reduced_p = std::move(p_basis);
        reduced_q = std::move(q_basis);
    }
    if (k0 < 0)
        throw Error(ErrorKind::RankDeficient,
                    "no rational function of degree at most " + std::to_string(top + 1) + "/" + std::to_string(top) + " fits");
    result.reduced_degree = k0;
    result.reduced = from_vector(names, reduced_vector, reduced_p, reduced_q);
    normalize(result.reduced.numerator, result.reduced.denominator);

    auto kernel = nullspace(system(samples, fit_rows, full_p, full_q));
    result.kernel_dimension = kernel.size();
    const std::size_t expected = monomials(r, top - k0).size();
    if (kernel.size() != expected)
        throw Error(ErrorKind::RankDeficient, "kernel of dimension " + std::to_string(kernel.size()) + " at degrees "
                                                  + std::to_string(top + 1) + "/" + std::to_string(top)
                                                  + ", expected " + std::to_string(expected)
                                                  + " multiples of the reduced fit");

    // Look for the kernel element whose denominator is a multiple of U^2.
    Polynomial u = symanzik(family);
    Polynomial u2 = u * u;
    std::vector<Rational> chosen = kernel.front();
    if (u2.is_homogeneous(top) && !u2.is_zero()) {
        Matrix a(full_q.size(), kernel.size() + 1);
        for (std::size_t i = 0; i < full_q.size(); ++i) {
            for (std::size_t j = 0; j < kernel.size(); ++j)
                a(i, j) = kernel[j][full_p.size() + i];
            a(i, kernel.size()) = -u2.coefficient(full_q[i]);
        }
        for (const auto& v : nullspace(a)) {
            if (v.back() == 0)
                continue;
            chosen.assign(full_p.size() + full_q.size(), Rational(0));
            for (std::size_t j = 0; j < kernel.size(); ++j)
                for (std::size_t i = 0; i < chosen.size(); ++i)
                    chosen[i] += v[j] / v.back() * kernel[j][i];
            result.symanzik_normalized = true;
            break;
        }
    }
    result.function = from_vector(names, chosen, full_p, full_q);
    normalize(result.function.numerator, result.function.denominator);

    if (!result.function.numerator.is_homogeneous(top + 1) || !result.function.denominator.is_homogeneous(top))
        throw Error(ErrorKind::ValidationFailure, "fitted P or Q is not homogeneous of the expected degree");
    if (!same_function(result.function.numerator, result.function.denominator, result.reduced.numerator,
                       result.reduced.denominator))
        throw Error(ErrorKind::ValidationFailure, "full-degree fit differs from the reduced fit");

    for (std::size_t i = fit_rows; i < samples.size(); ++i) {
        HoldoutCheck check{samples[i].lengths, samples[i].phi, evaluate(result.function, samples[i].lengths)};
        if (check.engine != check.fitted) {
            std::string at;
            for (const auto& x : check.lengths)
                at += (at.empty() ? "" : ",") + to_string(x);
            throw Error(ErrorKind::ValidationFailure, "held-out sample (" + at + "): engine " + to_string(check.engine)
                                                          + ", fit " + to_string(check.fitted));
        }
        result.holdout.push_back(std::move(check));
    }
    return result;
}

Json polynomial_to_json(const Polynomial& p)
{
    Json out = Json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out[exponents_key(it->first)] = to_string(it->second);
    return out;
}

Json fit_to_json(const FitResult& fit)
{
    Json out;
    out["variables"] = fit.function.variables;
    out["b1"] = fit.b1;
    out["degrees"] = {fit.function.numerator.degree(), fit.function.denominator.degree()};
    out["numerator"] = polynomial_to_json(fit.function.numerator);
    out["denominator"] = polynomial_to_json(fit.function.denominator);
    out["display"] = "(" + fit.function.numerator.to_string(fit.function.variables) + ") / ("
                     + fit.function.denominator.to_string(fit.function.variables) + ")";
    out["symanzik_normalized"] = fit.symanzik_normalized;
    out["reduced"] = {
        {"degrees", {fit.reduced_degree + 1, fit.reduced_degree}},
        {"numerator", polynomial_to_json(fit.reduced.numerator)},
        {"denominator", polynomial_to_json(fit.reduced.denominator)},
        {"display", "(" + fit.reduced.numerator.to_string(fit.reduced.variables) + ") / ("
                        + fit.reduced.denominator.to_string(fit.reduced.variables) + ")"},
    };
    out["kernel_dimension"] = fit.kernel_dimension;
    out["seed"] = fit.seed;
    out["samples"] = fit.samples;
    Json transcript = Json::array();
    for (const auto& check : fit.holdout) {
        Json lengths = Json::array();
        for (const auto& x : check.lengths)
            lengths.push_back(to_string(x));
        transcript.push_back({{"lengths", lengths},
                              {"engine", to_string(check.engine)},
                              {"fitted", to_string(check.fitted)},
                              {"equal", check.engine == check.fitted}});
    }
    out["holdout"] = transcript;
    return out;
}

}  // namespace mgi
