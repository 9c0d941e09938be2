#include "mgi/genus2.hpp"
#include "mgi/invariants.hpp"
#include "support/discrete_model.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace mgi;

namespace {

PolarizedMetricGraph sunset()
{
    return PolarizedMetricGraph({{"a", 0}, {"b", 0}},
                                {{"e1", {"a", "b"}, 1}, {"e2", {"a", "b"}, 1}, {"e3", {"a", "b"}, 1}});
}

PolarizedMetricGraph point() { return PolarizedMetricGraph({{"v", 2}}, {}); }

}  // namespace

TEST_CASE("epsilon examples")
{
    for (auto m : {Rational(1), Rational(7, 3), Rational(12)}) {
        CHECK(epsilon(build(Genus2Type::II, {m})) == m);
        CHECK(epsilon(build(Genus2Type::III, {m})) == m / 6);
    }
    for (auto [m1, m2] : {std::pair{1, 1}, std::pair{2, 9}}) {
        CHECK(epsilon(build(Genus2Type::V, {m1, m2})) == Rational(m1 + m2) / 6);
    }
}

TEST_CASE("phi and psi examples")
{
    CHECK(phi(sunset()) == Rational(1) / 9);
    CHECK(phi(build(Genus2Type::II, {Rational(5, 2)})) == Rational(5, 2));
    CHECK(phi(build(Genus2Type::III, {3})) == Rational(1) / 4);
    CHECK(phi(point()) == 0);
    CHECK(epsilon(point()) == 0);
    CHECK(psi(point()) == 0);
    CHECK(psi(build(Genus2Type::II, {1})) == Rational(7) / 5);
    CHECK(psi(build(Genus2Type::III, {1})) == Rational(1) / 5);
    CHECK(psi_from(2, 1, 1) == Rational(7) / 5);
}

TEST_CASE("report examples")
{
    auto r = report(sunset());
    CHECK(r.h == 2);
    CHECK(r.b1 == 2);
    CHECK(r.delta == 3);
    CHECK(r.phi == Rational(1) / 9);
    CHECK(r.epsilon == Rational(5) / 9);
    CHECK(r.psi == Rational(3) / 5);
    CHECK(r.capacity == Rational(1) / 6);
    CHECK(r.epsilon_paths_agree);
    CHECK(r.phi_paths_agree);
    CHECK(r.measures_agree);
    CHECK(r.stable);

    Rational m1(3), m2(5, 2), m3(1, 7);
    CHECK(phi(build(Genus2Type::VI, {m1, m2, m3})) == m1 + (m2 + m3) / 12);
    CHECK(phi(build(Genus2Type::IV, {m1, m2})) == m1 + m2 / 12);

    auto json = report_to_json(r);
    CHECK(json["phi"]["exact"] == "1/9");
    CHECK(json["phi"]["decimal"] == "0.111111111111");
    CHECK(json["crosschecks"]["epsilon_paths"] == true);
    CHECK(json["edge_resistance"]["e1"] == "1/2");
}

TEST_CASE("genus one graphs are reported")
{
    PolarizedMetricGraph circle({{"v", 0}}, {{"e1", {"v", "v"}, 4}});
    auto r = report(circle);
    CHECK(r.h == 1);
    CHECK(r.epsilon_paths_agree);
    CHECK(r.phi_paths_agree);
    CHECK(r.psi == r.epsilon);
}

TEST_CASE("weight-one homogeneity")
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 4));
        Rational lambda = gen::length(rng, 13, 7);
        auto base = report(g);
        auto big = report(scaled(g, lambda));
        CHECK(big.phi == lambda * base.phi);
        CHECK(big.epsilon == lambda * base.epsilon);
        CHECK(big.psi == lambda * base.psi);
        CHECK(big.capacity == lambda * base.capacity);
        CHECK(big.delta == lambda * base.delta);
    }
}

TEST_CASE("invariants are unchanged by refinement")
{
    gen::Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 4));
        if (g.edges().empty())
            continue;
        Refinement refined(g);
        for (int k = 0; k < 4; ++k) {
            const auto& e = g.edges()[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(g.edges().size()) - 1))];
            refined.insert(e.id, e.length * gen::uniform(rng, 1, 96) / 97);
        }
        auto base = report(g);
        auto fine = report(refined.current());
        CHECK(fine.phi == base.phi);
        CHECK(fine.epsilon == base.epsilon);
        CHECK(fine.psi == base.psi);
        CHECK(fine.delta == base.delta);
        CHECK(fine.capacity == base.capacity);
    }
}

TEST_CASE("dual paths agree and phi is non-negative on stable graphs")
{
    gen::Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = gen::stable(rng, gen::uniform(rng, 2, 4));
        auto r = report(g);
        CHECK(r.stable);
        CHECK(r.epsilon_paths_agree);
        CHECK(r.phi_paths_agree);
        CHECK(r.phi >= 0);
    }
}

TEST_CASE("phi and epsilon agree with a fine discretization")
{
    gen::Rng rng(44);
    for (int trial = 0; trial < 6; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 3));
        auto r = report(g);
        long double phi_hat = oracle::extrapolate(g, 16, [](const oracle::DiscreteModel& m) { return m.phi(); });
        long double eps_hat = oracle::extrapolate(g, 16, [](const oracle::DiscreteModel& m) { return m.epsilon(); });
        CHECK(std::fabs(phi_hat - to_long_double(r.phi)) < 1e-6L);
        CHECK(std::fabs(eps_hat - to_long_double(r.epsilon)) < 1e-6L);
    }
    PolarizedMetricGraph k4 = parse_graph(
        R"({"vertices":[{"id":"p","q":0},{"id":"q","q":0},{"id":"r","q":0},{"id":"s","q":0}],"edges":[)"
        R"({"id":"pq","ends":["p","q"],"length":"1"},{"id":"pr","ends":["p","r"],"length":"2"},)"
        R"({"id":"ps","ends":["p","s"],"length":"1/2"},{"id":"qr","ends":["q","r"],"length":"3"},)"
        R"({"id":"qs","ends":["q","s"],"length":"1"},{"id":"rs","ends":["r","s"],"length":"5/3"}]})");
    long double k4_phi = oracle::extrapolate(k4, 16, [](const oracle::DiscreteModel& m) { return m.phi(); });
    CHECK(phi(k4) == Rational(9101, 14526));
    CHECK(std::fabs(k4_phi - to_long_double(Rational(9101, 14526))) < 1e-6L);
}
