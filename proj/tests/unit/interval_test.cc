#include <muig/graph.hh>
#include <muig/interval.hh>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace muig;

namespace
{
    const BoundaryType all_types[] = {BoundaryType::closed, BoundaryType::open, BoundaryType::open_closed, BoundaryType::closed_open};

    // Endpoints, midpoints between them, and one point beyond each side.
    auto sample_points(const std::vector<Interval> & is) -> std::vector<Rational>
    {
        std::vector<Rational> values;
        for (auto & i : is) {
            values.push_back(i.lo());
            values.push_back(i.hi());
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::vector<Rational> result{values.front() - Rational(1), values.back() + Rational(1)};
        for (std::size_t i = 0; i < values.size(); ++i) {
            result.push_back(values[i]);
            if (i + 1 < values.size())
                result.push_back((values[i] + values[i + 1]) / Rational(2));
        }
        return result;
    }

    auto random_interval(std::mt19937_64 & rng) -> Interval
    {
        long a = static_cast<long>(rng() % 5), b = static_cast<long>(rng() % 5);
        if (a == b)
            ++b;
        return Interval(Rational(std::min(a, b)), Rational(std::max(a, b)), all_types[rng() % 4]);
    }
}

TEST_CASE("interval construction and naming")
{
    CHECK_THROWS_AS(Interval(Rational(1), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), std::invalid_argument);
    CHECK(Interval(Rational(1, 2), Rational(3), BoundaryType::open_closed).str() == "(1/2,3]");
    CHECK(Interval(Rational(0), Rational(1), BoundaryType::closed_open).str() == "[0,1)");
    for (auto t : all_types)
        CHECK(parse_boundary(boundary_name(t)) == t);
    CHECK(make_boundary(true, false) == BoundaryType::closed_open);
    CHECK(make_boundary(false, true) == BoundaryType::open_closed);
    CHECK_THROWS(parse_boundary("half"));
}

TEST_CASE("touching ends meet only when both are closed")
{
    Interval a(Rational(0), Rational(1), BoundaryType::closed);
    CHECK(intersects(a, Interval(Rational(1), Rational(2), BoundaryType::closed)));
    CHECK(! intersects(a, Interval(Rational(1), Rational(2), BoundaryType::open_closed)));
    CHECK(! intersects(Interval(Rational(0), Rational(1), BoundaryType::closed_open), Interval(Rational(1), Rational(2))));
    CHECK(intersects(Interval(Rational(0), Rational(1), BoundaryType::open), Interval(Rational(0), Rational(1), BoundaryType::open)));
}

TEST_CASE("intersects and contains agree with point sampling")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        auto a = random_interval(rng), b = random_interval(rng);
        bool meet = false, subset = true;
        for (auto & x : sample_points({a, b})) {
            meet = meet || (a.has_point(x) && b.has_point(x));
            subset = subset && (! b.has_point(x) || a.has_point(x));
        }
        INFO(a.str() << " " << b.str());
        REQUIRE(intersects(a, b) == meet);
        REQUIRE(intersects(b, a) == meet);
        REQUIRE(contains(a, b) == subset);
    }
}

TEST_CASE("realized graph is invariant under a monotone remap")
{
    std::mt19937_64 rng(5);
    auto remap = [] (const Rational & x) { return x * x * x + Rational(2) * x; };
    for (int trial = 0; trial < 200; ++trial) {
        Representation rep, moved;
        for (int v = 0; v < 6; ++v) {
            rep.push_back(random_interval(rng));
            moved.emplace_back(remap(rep.back().lo()), remap(rep.back().hi()), rep.back().type());
        }
        std::vector<Edge> edges;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (intersects(rep[u], rep[v]))
                    edges.emplace_back(u, v);
        Graph g(6, edges);
        REQUIRE(realizes(g, rep).empty());
        REQUIRE(realizes(g, moved).empty());
    }
}

TEST_CASE("realizes reports each mismatch once")
{
    auto g = path_graph(3);
    Representation rep{Interval(Rational(0), Rational(1)), Interval(Rational(2), Rational(3)), Interval(Rational(3), Rational(4))};
    auto bad = realizes(g, rep);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == Mismatch{0, 1, Mismatch::Kind::missing_edge});

    rep[2] = Interval(Rational(0), Rational(4));
    bad = realizes(g, rep);
    REQUIRE(bad.size() == 2);
    CHECK(bad[0] == Mismatch{0, 1, Mismatch::Kind::missing_edge});
    CHECK(bad[1] == Mismatch{0, 2, Mismatch::Kind::extra_edge});

    CHECK_THROWS_AS(realizes(g, Representation(rep.begin(), rep.begin() + 2)), std::invalid_argument);
}

TEST_CASE("representation predicates")
{
    Representation claw{Interval(Rational(1), Rational(2)), Interval(Rational(0), Rational(1)),
        Interval(Rational(1), Rational(2), BoundaryType::open), Interval(Rational(2), Rational(3))};
    CHECK(is_unit(claw));
    CHECK(is_mixed_proper(claw));
    CHECK(! is_closed_only(claw));
    CHECK(! has_distinct_endpoints(claw));
    CHECK(min_gap(claw) == Rational(1));
    CHECK_THROWS(bad_pairs(claw));

    // a lone open interval has no closed partner
    claw[0] = Interval(Rational(1), Rational(2), BoundaryType::closed_open);
    CHECK(! is_mixed_proper(claw));

    Representation nested{Interval(Rational(0), Rational(3)), Interval(Rational(1), Rational(2)), Interval(Rational(5, 2), Rational(4))};
    CHECK(! is_mixed_proper(nested));
    CHECK(has_distinct_endpoints(nested));
    CHECK(bad_pairs(nested) == std::vector<std::pair<int, int>>{{1, 0}});
    CHECK(min_gap(nested) == Rational(1, 2));
}
