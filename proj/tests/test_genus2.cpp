#include "mgi/errors.hpp"
#include "mgi/genus2.hpp"
#include "mgi/invariants.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace mgi;

TEST_CASE("catalog graphs")
{
    auto sun = build(Genus2Type::I, {1, 1, 1});
    CHECK(sun.vertices().size() == 2);
    CHECK(sun.edges().size() == 3);
    for (const auto& e : sun.edges())
        CHECK_FALSE(e.is_loop());

    auto vi = build(Genus2Type::VI, {2, 1, 1});
    CHECK(vi.edge("e1").length == 2);
    CHECK_FALSE(vi.edge("e1").is_loop());
    CHECK(vi.edge("e2").is_loop());
    CHECK(vi.edge("e3").is_loop());
    CHECK(vi.edge("e2").ends[0] != vi.edge("e3").ends[0]);

    auto trivial = build(Genus2Type::Trivial, {});
    CHECK(trivial.vertices().size() == 1);
    CHECK(trivial.vertices()[0].q == 2);
    CHECK(trivial.edges().empty());

    for (auto tag : all_genus2_types()) {
        std::vector<Rational> lengths(arity(tag), Rational(1));
        auto g = build(tag, lengths);
        auto v = validate(g);
        CHECK(v.ok());
        CHECK(v.stable);
        CHECK(v.h == 2);
        CHECK(parse_genus2_type(to_string(tag)) == tag);
    }
}

TEST_CASE("catalog input errors")
{
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind([] { build(Genus2Type::I, {1, 2}); }) == ErrorKind::ArityMismatch);
    CHECK(kind([] { build(Genus2Type::II, {0}); }) == ErrorKind::NonPositiveLength);
    CHECK_THROWS_AS(parse_genus2_type("VII"), Error);
}

TEST_CASE("closed-form values")
{
    CHECK(table1_phi(Genus2Type::I, {1, 1, 1}) == Rational(1) / 9);
    CHECK(table1_phi(Genus2Type::IV, {2, 3}) == Rational(9) / 4);
    for (int m = 1; m < 5; ++m)
        CHECK(table1_phi(Genus2Type::V, {m, m}) == Rational(m) / 6);
    CHECK(table1_phi(Genus2Type::Trivial, {}) == 0);
}

TEST_CASE("engine equals the closed forms")
{
    auto i = check_table1(Genus2Type::I, {2, 3, 5});
    CHECK(i.equal());
    CHECK(i.expected == Rational(5) / 6 - Rational(25) / 62);

    auto ii = check_table1(Genus2Type::II, {Rational(7) / 3});
    CHECK(ii.equal());
    CHECK(ii.engine == Rational(7) / 3);

    auto iii = check_table1(Genus2Type::III, {4});
    CHECK(iii.equal());
    CHECK(iii.engine == Rational(1) / 3);

    gen::Rng rng(61);
    for (auto tag : all_genus2_types())
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<Rational> lengths;
            for (std::size_t k = 0; k < arity(tag); ++k)
                lengths.push_back(gen::length(rng, 50, 9));
            CHECK_MESSAGE(check_table1(tag, lengths).equal(), to_string(tag));
        }
}

TEST_CASE("closed-form rational functions")
{
    gen::Rng rng(62);
    for (auto tag : all_genus2_types()) {
        auto f = table1_function(tag);
        auto g = build(tag, std::vector<Rational>(arity(tag), Rational(1)));
        long b1 = genus(g).b1;
        // Lowest terms: I has degrees 3/2, the rest are linear forms over constants.
        if (tag == Genus2Type::I) {
            CHECK(f.numerator.is_homogeneous(2 * b1 - 1));
            CHECK(f.denominator.is_homogeneous(2 * b1 - 2));
        } else if (tag != Genus2Type::Trivial) {
            CHECK(f.numerator.is_homogeneous(1));
            CHECK(f.denominator.is_homogeneous(0));
        }
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Rational> x;
            for (std::size_t k = 0; k < arity(tag); ++k)
                x.push_back(gen::length(rng));
            CHECK(f.numerator(x) / f.denominator(x) == table1_phi(tag, x));
        }
    }
}

TEST_CASE("sunset leading term")
{
    auto one = sunset_supergrav_crosscheck({1, 1, 1});
    CHECK(one.equal());
    CHECK(one.table_value == Rational(1) / 9);
    CHECK(one.leading_term.power == 0);

    auto two = sunset_supergrav_crosscheck({2, 2, 2});
    CHECK(two.equal());
    CHECK(two.table_value == Rational(2) / 9);

    CHECK(sunset_supergrav_crosscheck({1, 2, 3}).equal());

    PiMonomial a{Rational(1), 1}, b{Rational(2), 2};
    CHECK_THROWS_AS(a + b, Error);
    CHECK((b / a).power == 1);
}

TEST_CASE("documented counts have the graph's total length")
{
    gen::Rng rng(63);
    for (auto tag : all_genus2_types()) {
        std::vector<Rational> lengths;
        for (std::size_t k = 0; k < arity(tag); ++k)
            lengths.push_back(gen::length(rng));
        auto c = documented_counts(tag, lengths);
        validate_counts(c);
        CHECK(c.total() == total_length(build(tag, lengths)));
    }
}
