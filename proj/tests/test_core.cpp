#include "mgi/errors.hpp"
#include "mgi/graph.hpp"
#include "mgi/graph_io.hpp"
#include "mgi/linalg.hpp"
#include "mgi/rational.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace mgi;

namespace {

Rational q(const char* text) { return parse_rational(text); }

PolarizedMetricGraph sunset()
{
    return PolarizedMetricGraph({{"a", 0}, {"b", 0}},
                                {{"e1", {"a", "b"}, 1}, {"e2", {"a", "b"}, 1}, {"e3", {"a", "b"}, 1}});
}

PolarizedMetricGraph loop(const Rational& length = 1, long qv = 1)
{
    return PolarizedMetricGraph({{"v", qv}}, {{"e1", {"v", "v"}, length}});
}

PolarizedMetricGraph point() { return PolarizedMetricGraph({{"v", 2}}, {}); }

template <class F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms")
{
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-10/5")) == "-2");
    CHECK(to_string(q("0/7")) == "0");
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_rational("1.5"); }) == ErrorKind::Parse);
    CHECK(to_decimal(q("1/3"), 5) == "0.33333");
    CHECK(to_long_double(q("1/4")) == 0.25L);
}

TEST_CASE("exact solve and nullspace")
{
    Matrix a(3, 3);
    long values[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            a(i, j) = values[i][j];
    auto inv = solve(a, Matrix::identity(3));
    CHECK(inv(0, 0) == q("3/4"));
    CHECK(inv(1, 1) == q("1"));
    CHECK(inv(0, 2) == q("1/4"));
    CHECK(rank(a) == 3);

    Matrix s(2, 3);
    s(0, 0) = 1, s(0, 1) = 2, s(0, 2) = 3;
    s(1, 0) = 2, s(1, 1) = 4, s(1, 2) = 6;
    CHECK(rank(s) == 1);
    auto kernel = nullspace(s);
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel)
        CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);

    Matrix singular(2, 2);
    singular(0, 0) = 1, singular(0, 1) = 1, singular(1, 0) = 1, singular(1, 1) = 1;
    CHECK(kind_of([&] { solve(singular, Matrix::identity(2)); }) == ErrorKind::Precondition);
}

TEST_CASE("random solves reproduce the right-hand side")
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
        Matrix a(n, n), b(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            b(i, 0) = Rational(gen::uniform(rng, -9, 9)) / gen::uniform(rng, 1, 5);
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = Rational(gen::uniform(rng, -9, 9)) / gen::uniform(rng, 1, 5);
            a(i, i) += 50;
        }
        auto x = solve(a, b);
        for (std::size_t i = 0; i < n; ++i) {
            Rational row;
            for (std::size_t j = 0; j < n; ++j)
                row += a(i, j) * x(j, 0);
            CHECK(row == b(i, 0));
        }
    }
}

TEST_CASE("validation")
{
    auto p = validate(point());
    CHECK(p.ok());
    CHECK(p.stable);
    CHECK(p.h == 2);

    PolarizedMetricGraph segment({{"a", 0}, {"b", 0}}, {{"e1", {"a", "b"}, 1}});
    auto s = validate(segment);
    CHECK(s.connected);
    CHECK(s.positive_lengths);
    CHECK_FALSE(s.stable);

    PolarizedMetricGraph split({{"a", 1}, {"b", 1}}, {});
    auto d = validate(split);
    CHECK_FALSE(d.connected);
    CHECK(kind_of([&] { require_valid(split); }) == ErrorKind::DisconnectedGraph);

    PolarizedMetricGraph zero({{"a", 1}, {"b", 1}}, {{"e1", {"a", "b"}, 0}});
    CHECK(kind_of([&] { require_valid(zero); }) == ErrorKind::NonPositiveLength);
    CHECK(kind_of([&] { require_valid(segment); }) == ErrorKind::GenusZero);

    CHECK(kind_of([] { PolarizedMetricGraph({{"a", 0}, {"a", 1}}, {}); }) == ErrorKind::DuplicateId);
    CHECK(kind_of([] { PolarizedMetricGraph({{"a", -1}}, {}); }) == ErrorKind::InvalidPolarization);
    CHECK(kind_of([] { PolarizedMetricGraph({{"a", 0}}, {{"e", {"a", "z"}, 1}}); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("genus and divisors")
{
    auto gs = genus(sunset());
    CHECK(gs.b1 == 2);
    CHECK(gs.h == 2);
    CHECK(genus(loop()).b1 == 1);
    CHECK(genus(loop()).h == 2);
    CHECK(genus(point()).b1 == 0);
    CHECK(genus(point()).h == 2);

    auto k = canonical_divisor(sunset());
    CHECK(k.at("a") == 1);
    CHECK(k.at("b") == 1);
    CHECK(k.degree() == 2);

    CHECK(canonical_divisor(loop()).at("v") == 0);
    CHECK(polarized_divisor(loop()).at("v") == 2);

    PolarizedMetricGraph segment({{"a", 1}, {"b", 1}}, {{"e1", {"a", "b"}, 1}});
    auto kq = polarized_divisor(segment);
    CHECK(kq.at("a") == 1);
    CHECK(kq.at("b") == 1);
    CHECK(kq.degree() == 2);
}

TEST_CASE("degree of K_can and K_q on random graphs")
{
    gen::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 6));
        auto gg = genus(g);
        CHECK(canonical_divisor(g).degree() == 2 * gg.b1 - 2);
        CHECK(polarized_divisor(g).degree() == 2 * gg.h - 2);
    }
}

TEST_CASE("total length")
{
    CHECK(total_length(sunset()) == 3);
    CHECK(total_length(point()) == 0);
    PolarizedMetricGraph ii({{"a", 1}, {"b", 1}}, {{"e1", {"a", "b"}, q("5/2")}});
    CHECK(total_length(ii) == q("5/2"));
}

TEST_CASE("insert_point examples")
{
    PolarizedMetricGraph unit({{"a", 1}, {"b", 1}}, {{"e1", {"a", "b"}, 1}});
    auto half = insert_point(unit, InteriorPoint{"e1", q("1/2")});
    CHECK(half.graph.edge("e1.0").length == q("1/2"));
    CHECK(half.graph.edge("e1.1").length == q("1/2"));
    CHECK(half.graph.vertex(half.vertex).q == 0);

    auto cut = insert_point(loop(3), InteriorPoint{"e1", 1});
    const auto& g = cut.graph;
    REQUIRE(g.edges().size() == 2);
    for (const auto& e : g.edges()) {
        CHECK_FALSE(e.is_loop());
        CHECK(((e.ends[0] == "v" && e.ends[1] == cut.vertex) || (e.ends[1] == "v" && e.ends[0] == cut.vertex)));
    }
    CHECK(g.edge("e1.0").length == 1);
    CHECK(g.edge("e1.1").length == 2);

    Refinement chain(PolarizedMetricGraph({{"a", 1}, {"b", 1}}, {{"e1", {"a", "b"}, 5}}));
    for (int k = 1; k < 5; ++k)
        chain.insert("e1", k);
    CHECK(chain.current().edges().size() == 5);
    for (const auto& e : chain.current().edges())
        CHECK(e.length == 1);

    CHECK(kind_of([&] { insert_point(unit, InteriorPoint{"e1", 1}); }) == ErrorKind::OffsetOutOfRange);
    CHECK(kind_of([&] { insert_point(unit, InteriorPoint{"nope", q("1/2")}); }) == ErrorKind::UnknownEdge);
}

TEST_CASE("insert_point preserves genus, total length and K_q degree")
{
    gen::Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 5));
        if (g.edges().empty())
            continue;
        Refinement r(g);
        for (int k = 0; k < 4; ++k) {
            const auto& e = g.edges()[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(g.edges().size()) - 1))];
            r.insert(e.id, e.length * gen::uniform(rng, 1, 96) / 97);
        }
        const auto& h = r.current();
        CHECK(genus(h).b1 == genus(g).b1);
        CHECK(genus(h).h == genus(g).h);
        CHECK(total_length(h) == total_length(g));
        CHECK(polarized_divisor(h).degree() == polarized_divisor(g).degree());
        CHECK(validate(h).ok());
    }
}

TEST_CASE("graph JSON is bit-exact and round-trips")
{
    auto text = serialize_graph(sunset());
    CHECK(text
          == R"({"vertices":[{"id":"a","q":0},{"id":"b","q":0}],"edges":[{"id":"e1","ends":["a","b"],"length":"1"},)"
             R"({"id":"e2","ends":["a","b"],"length":"1"},{"id":"e3","ends":["a","b"],"length":"1"}]})");

    auto shuffled = parse_graph(
        R"({"vertices":[{"id":"z","q":1},{"id":"m","q":0}],"edges":[{"id":"k","ends":["z","m"],"length":"6/4"},)"
        R"({"id":"c","ends":["m","m"],"length":3}]})");
    CHECK(shuffled.vertices().front().id == "m");
    CHECK(shuffled.edge("k").ends[0] == "m");
    CHECK(shuffled.edge("k").length == q("3/2"));

    gen::Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = gen::of_genus(rng, gen::uniform(rng, 1, 5));
        auto once = serialize_graph(g);
        CHECK(parse_graph(once) == g);
        CHECK(serialize_graph(parse_graph(once)) == once);
    }

    CHECK(kind_of([] { parse_graph("{"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_graph(R"({"vertices":[{"id":"a","q":0.5}]})"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_graph(R"({"vertices":[{"id":"a"}],"edges":[{"id":"e","ends":["a","a"]}]})"); })
          == ErrorKind::Parse);
}

TEST_CASE("point syntax")
{
    auto g = sunset();
    auto v = parse_point(g, "vertex:a");
    CHECK(std::get<VertexPoint>(v).vertex == "a");
    auto p = parse_point(g, "edge:e2@1/3");
    CHECK(std::get<InteriorPoint>(p).edge == "e2");
    CHECK(std::get<InteriorPoint>(p).offset == q("1/3"));
    CHECK(to_string(p) == "edge:e2@1/3");
    CHECK(kind_of([&] { parse_point(g, "vertex:zz"); }) == ErrorKind::UnknownPoint);
    CHECK(kind_of([&] { parse_point(g, "edge:e9@1/2"); }) == ErrorKind::UnknownPoint);
    CHECK(kind_of([&] { parse_point(g, "edge:e1@1"); }) == ErrorKind::OffsetOutOfRange);
    CHECK(kind_of([&] { parse_point(g, "edge:e1@0"); }) == ErrorKind::OffsetOutOfRange);
    CHECK(kind_of([&] { parse_point(g, "a"); }) == ErrorKind::UnknownPoint);
}

TEST_CASE("every error kind maps to a documented exit status")
{
    CHECK(exit_status(ErrorKind::Parse) == 2);
    CHECK(exit_status(ErrorKind::UnknownPoint) == 2);
    for (auto kind : {ErrorKind::DuplicateId, ErrorKind::UnknownVertex, ErrorKind::UnknownEdge,
                      ErrorKind::InvalidPolarization, ErrorKind::DisconnectedGraph, ErrorKind::NonPositiveLength,
                      ErrorKind::GenusZero, ErrorKind::OffsetOutOfRange, ErrorKind::Precondition,
                      ErrorKind::InconsistentCounts, ErrorKind::GenusMismatch, ErrorKind::LengthMismatch,
                      ErrorKind::ArityMismatch})
        CHECK(exit_status(kind) == 3);
    CHECK(exit_status(ErrorKind::ProfileSampleMismatch) == 4);
    CHECK(exit_status(ErrorKind::CrosscheckFailure) == 4);
    for (auto kind : {ErrorKind::RankDeficient, ErrorKind::ValidationFailure, ErrorKind::DenominatorZero})
        CHECK(exit_status(kind) == 5);
    Error e(ErrorKind::UnknownEdge, "'e7'");
    CHECK(std::string(e.what()) == "UnknownEdge: 'e7'");
}
