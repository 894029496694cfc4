#include "../support.hh"

#include <muig/builder.hh>
#include <muig/catalog.hh>
#include <muig/errors.hh>
#include <muig/recognizer.hh>

#include <doctest.h>

using namespace muig;

namespace
{
    auto closed(long a, long b) -> Interval { return Interval(Rational(a), Rational(b)); }
}

TEST_CASE("unitize examples")
{
    Representation one{closed(0, 5)};
    CHECK(unitize(one) == Representation{closed(0, 1)});

    Representation claw{closed(1, 3), closed(0, 1), Interval(Rational(1), Rational(3), BoundaryType::open), closed(3, 4)};
    Representation expected{closed(1, 2), closed(0, 1), Interval(Rational(1), Rational(2), BoundaryType::open), closed(2, 3)};
    CHECK(unitize(claw) == expected);

    Representation unit{closed(0, 1), Interval(Rational(1, 2), Rational(3, 2), BoundaryType::closed_open)};
    CHECK(unitize(unit) == unit);

    Representation nested{closed(0, 3), closed(1, 2)};
    CHECK_THROWS_AS(unitize(nested), std::invalid_argument);
}

TEST_CASE("unitize keeps the realized graph")
{
    for (auto & g : test::read_graph6_lines(test::data_path("connected_1to7.g6"))) {
        if (! recognize_interval(g) || ! is_twin_free(g) || find_forbidden(g, ForbiddenList::twin_free))
            continue;
        auto p = build_mixed_pipeline(g);
        REQUIRE(is_mixed_proper(p.mixed));
        REQUIRE(realizes(g, p.mixed).empty());
        REQUIRE(is_unit(p.unit));
        REQUIRE(realizes(g, p.unit).empty());
        for (int v = 0; v < g.size(); ++v)
            REQUIRE(p.unit[v].type() == p.mixed[v].type());
    }
}

TEST_CASE("pipeline stages on the claw")
{
    auto p = build_mixed_pipeline(star_graph(3));
    REQUIRE(p.pairs.size() == 1);
    auto [u, v] = p.pairs[0];
    CHECK(v == 0);
    REQUIRE(p.chains.size() == 1);
    CHECK(p.chains[0].lmax() == 1);
    CHECK(p.chains[0].rmax() == 1);
    CHECK(p.mixed[u].type() == BoundaryType::open);
    CHECK(p.mixed[u].lo() == p.mixed[v].lo());
    CHECK(p.mixed[u].hi() == p.mixed[v].hi());
}

TEST_CASE("Fig2 chains reach one level left and two right")
{
    auto g = generate({Family::Fig2, {}});
    auto p = build_mixed_pipeline(g);
    REQUIRE(p.chains.size() == 1);
    CHECK(p.chains[0].lmax() == 1);
    CHECK(p.chains[0].rmax() == 2);
    CHECK(p.chains[0].right[0].members.size() == 2);
}

TEST_CASE("extract_chains needs a bad pair")
{
    auto g = path_graph(2);
    Representation rep{closed(0, 2), closed(1, 3)};
    CHECK_THROWS_AS(extract_chains(g, rep, 0, 1), std::invalid_argument);
}

TEST_CASE("certificates for small graphs")
{
    auto claw = build_certificate(star_graph(3));
    CHECK(claw.verdict == Verdict::mixed_unit);
    REQUIRE(claw.rep);
    CHECK(realizes(star_graph(3), *claw.rep).empty());
    CHECK(is_unit(*claw.rep));
    CHECK(claw.transcript.bad_pairs == 1);

    auto k14 = build_certificate(star_graph(4));
    CHECK(k14.verdict == Verdict::not_mixed_unit);
    REQUIRE(k14.embedding);
    CHECK(k14.embedding->family == FamilyId{Family::R, {0}});
    CHECK(verify_induced(star_graph(4), generate(k14.embedding->family), k14.embedding->map));

    auto c4 = build_certificate(cycle_graph(4));
    CHECK(c4.verdict == Verdict::not_interval);
    CHECK(! c4.rep);
    CHECK(! c4.embedding);

    for (int n = 1; n <= 6; ++n) {
        CHECK(build_certificate(path_graph(n)).verdict == Verdict::mixed_unit);
        CHECK(build_certificate(complete_graph(n)).verdict == Verdict::mixed_unit);
    }
    CHECK(build_certificate(Graph(3, {})).verdict == Verdict::mixed_unit);
    CHECK(build_certificate(Graph()).verdict == Verdict::mixed_unit);

    CHECK(verdict_name(Verdict::not_interval) == "not-interval");
}

TEST_CASE("twins share an interval")
{
    // K_{2,3}* has twins; its quotient is handled and copies expanded
    auto g = generate({Family::K23star, {}});
    auto cert = build_certificate(g);
    REQUIRE(cert.verdict == Verdict::mixed_unit);
    auto part = twin_partition(g);
    CHECK(cert.transcript.quotient_vertices == static_cast<int>(part.classes.size()));
    for (auto & cls : part.classes)
        for (int v : cls)
            CHECK((*cert.rep)[v] == (*cert.rep)[cls.front()]);
}
