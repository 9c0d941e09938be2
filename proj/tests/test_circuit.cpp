#include "mgi/circuit.hpp"
#include "mgi/errors.hpp"
#include "support/discrete_model.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace mgi;

namespace {

PolarizedMetricGraph sunset()
{
    return PolarizedMetricGraph({{"a", 0}, {"b", 0}},
                                {{"e1", {"a", "b"}, 1}, {"e2", {"a", "b"}, 1}, {"e3", {"a", "b"}, 1}});
}

PolarizedMetricGraph segment(const Rational& length = 1)
{
    return PolarizedMetricGraph({{"a", 1}, {"b", 1}}, {{"e1", {"a", "b"}, length}});
}

PolarizedMetricGraph loop(const Rational& length = 1)
{
    return PolarizedMetricGraph({{"v", 1}}, {{"e1", {"v", "v"}, length}});
}

// Breadth-first search over vertices, never crossing `removed`.
bool ends_still_connected(const PolarizedMetricGraph& g, const std::string& removed)
{
    const auto& cut = g.edge(removed);
    std::set<std::string> seen{cut.ends[0]};
    std::vector<std::string> frontier{cut.ends[0]};
    while (!frontier.empty()) {
        auto v = frontier.back();
        frontier.pop_back();
        for (const auto& e : g.edges()) {
            if (e.id == removed)
                continue;
            for (int side = 0; side < 2; ++side)
                if (e.ends[side] == v && seen.insert(e.ends[1 - side]).second)
                    frontier.push_back(e.ends[1 - side]);
        }
    }
    return seen.count(cut.ends[1]) != 0;
}

}  // namespace

TEST_CASE("resistance examples")
{
    CHECK(resistance(segment(), VertexPoint{"a"}, VertexPoint{"b"}) == 1);
    CHECK(resistance(sunset(), VertexPoint{"a"}, VertexPoint{"b"}) == Rational(1) / 3);
    CHECK(resistance(loop(), VertexPoint{"v"}, InteriorPoint{"e1", Rational(1) / 2}) == Rational(1) / 4);
    for (int a = 1; a < 7; ++a) {
        Rational length(7), arc(a);
        CHECK(resistance(loop(length), VertexPoint{"v"}, InteriorPoint{"e1", arc}) == arc * (length - arc) / length);
    }
}

TEST_CASE("excised edge resistance examples")
{
    auto r = excised_edge_resistance(sunset(), "e2");
    REQUIRE_FALSE(r.is_infinite());
    CHECK(r.value() == Rational(1) / 2);
    CHECK(excised_edge_resistance(segment(), "e1").is_infinite());
    CHECK(excised_edge_resistance(loop(), "e1").value() == 0);
    CHECK(excised_edge_resistance(segment(), "e1").to_string() == "inf");
}

TEST_CASE("resistance profile examples")
{
    auto bridge = resistance_profile(segment(), VertexPoint{"a"}, "e1");
    CHECK(bridge.a == 0);
    CHECK(bridge.b == 1);
    CHECK(bridge.c == 0);

    auto circle = resistance_profile(loop(), VertexPoint{"v"}, "e1");
    CHECK(circle.a == -1);
    CHECK(circle.b == 1);
    CHECK(circle.c == 0);

    auto sun = resistance_profile(sunset(), VertexPoint{"a"}, "e1");
    CHECK(sun(0) == 0);
    CHECK(sun(1) == Rational(1) / 3);

    CHECK_THROWS_AS(resistance_profile(sunset(), InteriorPoint{"e1", Rational(1) / 2}, "e1"), Error);
}

TEST_CASE("same-edge resistance examples")
{
    CHECK(same_edge_resistance(loop(), "e1", 0, Rational(1) / 2) == Rational(1) / 4);
    CHECK(same_edge_resistance(segment(), "e1", 0, Rational(1) / 2) == Rational(1) / 2);
    CHECK(same_edge_resistance(sunset(), "e1", 0, 1) == Rational(1) / 3);
}

TEST_CASE("foster sum examples")
{
    CHECK(foster_sum(sunset()) == 2);
    PolarizedMetricGraph tree({{"a", 1}, {"b", 0}, {"c", 1}}, {{"x", {"a", "b"}, 2}, {"y", {"b", "c"}, 3}});
    CHECK(foster_sum(tree) == 0);
    PolarizedMetricGraph rose({{"v", 0}}, {{"e1", {"v", "v"}, 2}, {"e2", {"v", "v"}, 5}});
    CHECK(foster_sum(rose) == 2);
}

TEST_CASE("resistance is a metric on random point triples")
{
    gen::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 4));
        if (g.edges().empty())
            continue;
        ResistanceTable table(g);
        auto x = gen::point(rng, g), y = gen::point(rng, g), z = gen::point(rng, g);
        Rational xy = table.between(x, y), yx = table.between(y, x);
        Rational yz = table.between(y, z), xz = table.between(x, z);
        CHECK(xy == yx);
        CHECK(table.between(x, x) == 0);
        CHECK(xy >= 0);
        CHECK(xz <= xy + yz);
        if (to_string(x) != to_string(y))
            CHECK(xy > 0);
    }
}

TEST_CASE("table resistances agree with per-pair grounded solves")
{
    gen::Rng rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 4));
        if (g.edges().empty())
            continue;
        ResistanceTable table(g);
        for (int k = 0; k < 3; ++k) {
            auto x = gen::point(rng, g), y = gen::point(rng, g);
            CHECK(table.between(x, y) == resistance(g, x, y));
        }
    }
}

TEST_CASE("bridges are exactly the edges with infinite excised resistance")
{
    gen::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 5));
        for (const auto& e : g.edges()) {
            bool connected = e.is_loop() || ends_still_connected(g, e.id);
            CHECK(excised_edge_resistance(g, e.id).is_infinite() == !connected);
        }
    }
}

TEST_CASE("profiles hit the endpoint resistances exactly")
{
    gen::Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 4));
        for (const auto& e : g.edges()) {
            if (e.is_loop())
                continue;
            const auto& v = g.vertices()[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(g.vertices().size()) - 1))];
            VertexPoint x{v.id};
            auto profile = resistance_profile(g, x, e.id);
            CHECK(profile(0) == resistance(g, x, VertexPoint{e.ends[0]}));
            CHECK(profile(e.length) == resistance(g, x, VertexPoint{e.ends[1]}));
        }
    }
}

TEST_CASE("foster sum equals b1 on random graphs")
{
    gen::Rng rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 6));
        CHECK(foster_sum(g) == genus(g).b1);
    }
}

TEST_CASE("circuit quantities are unchanged by refinement")
{
    gen::Rng rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 4));
        if (g.edges().empty())
            continue;
        Refinement refined(g);
        for (int k = 0; k < 3; ++k) {
            const auto& e = g.edges()[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(g.edges().size()) - 1))];
            refined.insert(e.id, e.length * gen::uniform(rng, 1, 10) / 11);
        }
        const auto& h = refined.current();
        CHECK(foster_sum(h) == foster_sum(g));
        ResistanceTable base(g), fine(h);
        for (int k = 0; k < 3; ++k) {
            auto x = gen::point(rng, g), y = gen::point(rng, g);
            CHECK(fine.between(refined.map(x), refined.map(y)) == base.between(x, y));
        }
    }
}

TEST_CASE("vertex resistances and excised resistances match a fine discretization")
{
    gen::Rng rng(27);
    for (int trial = 0; trial < 8; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 3));
        oracle::DiscreteModel model(g, 4);
        ResistanceTable table(g);
        for (const auto& u : g.vertices())
            for (const auto& v : g.vertices())
                CHECK(std::fabs(model.resistance(model.vertex_node(u.id), model.vertex_node(v.id))
                                - to_long_double(table.between(VertexPoint{u.id}, VertexPoint{v.id})))
                      < 1e-12L);
        for (const auto& e : g.edges()) {
            auto exact = excised_edge_resistance(g, e.id);
            CHECK(exact.is_infinite() == model.bridge(e.id));
            if (!exact.is_infinite())
                CHECK(std::fabs(model.edge_resistance(e.id) - to_long_double(exact.value())) < 1e-12L);
            // Interior nodes of the subdivided edge are exact points of the metric graph.
            if (!e.is_loop()) {
                auto mid = InteriorPoint{e.id, e.length / 2};
                CHECK(std::fabs(model.resistance(model.edge_node(e.id, 2), model.vertex_node(e.ends[0]))
                                - to_long_double(table.between(mid, VertexPoint{e.ends[0]})))
                      < 1e-12L);
            }
        }
    }
}
