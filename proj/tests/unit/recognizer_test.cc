#include "../support.hh"

#include <muig/errors.hh>
#include <muig/recognizer.hh>

#include <doctest.h>

#include <random>
#include <set>

using namespace muig;

namespace
{
    auto is_clique(const Graph & g, const std::vector<int> & c) -> bool
    {
        for (int a : c)
            for (int b : c)
                if (a != b && ! g.adjacent(a, b))
                    return false;
        return true;
    }

    auto is_maximal_clique(const Graph & g, const std::vector<int> & c) -> bool
    {
        if (! is_clique(g, c))
            return false;
        std::set<int> in(c.begin(), c.end());
        for (int z = 0; z < g.size(); ++z) {
            if (in.count(z))
                continue;
            auto bigger = c;
            bigger.push_back(z);
            if (is_clique(g, bigger))
                return false;
        }
        return true;
    }

    auto random_rep(std::mt19937_64 & rng, int n, int span) -> Representation
    {
        Representation rep;
        for (int v = 0; v < n; ++v) {
            long a = static_cast<long>(rng() % span), b = static_cast<long>(rng() % span);
            if (a == b)
                ++b;
            rep.emplace_back(Rational(std::min(a, b)), Rational(std::max(a, b)));
        }
        return rep;
    }

    auto graph_of(const Representation & rep) -> Graph
    {
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < rep.size(); ++u)
            for (std::size_t v = u + 1; v < rep.size(); ++v)
                if (intersects(rep[u], rep[v]))
                    edges.emplace_back(u, v);
        return Graph(static_cast<int>(rep.size()), edges);
    }
}

TEST_CASE("interval recognition agrees with chordal and AT-free over the census")
{
    int intervals = 0;
    for (auto & g : test::read_graph6_lines(test::data_path("all_1to7.g6"))) {
        auto model = recognize_interval(g);
        REQUIRE(model.has_value() == test::brute_interval(g));
        REQUIRE(perfect_elimination_order(g).has_value() == test::brute_chordal(g));
        if (! model)
            continue;
        ++intervals;

        REQUIRE(realizes(g, model->rep).empty());
        REQUIRE(is_closed_only(model->rep));
        REQUIRE(has_distinct_endpoints(model->rep));

        // consecutive maximal cliques
        auto & cliques = model->path.cliques;
        for (auto & c : cliques)
            REQUIRE(is_maximal_clique(g, c));
        for (int v = 0; v < g.size(); ++v) {
            std::vector<int> at;
            for (std::size_t i = 0; i < cliques.size(); ++i)
                if (std::find(cliques[i].begin(), cliques[i].end(), v) != cliques[i].end())
                    at.push_back(static_cast<int>(i));
            REQUIRE(! at.empty());
            REQUIRE(at.back() - at.front() + 1 == static_cast<int>(at.size()));
        }
    }
    CHECK(intervals == 505);
}

TEST_CASE("perfect elimination orders are valid")
{
    for (auto & g : test::read_graph6_lines(test::data_path("connected_1to7.g6"))) {
        auto order = perfect_elimination_order(g);
        if (! order)
            continue;
        std::vector<int> pos(g.size());
        for (int i = 0; i < g.size(); ++i)
            pos[(*order)[i]] = i;
        for (int v = 0; v < g.size(); ++v) {
            std::vector<int> later;
            for (int z : g.neighbours(v))
                if (pos[z] > pos[v])
                    later.push_back(z);
            REQUIRE(is_clique(g, later));
        }
    }
    CHECK(! perfect_elimination_order(cycle_graph(4)));
}

TEST_CASE("perturbation separates endpoints and keeps the graph")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        auto rep = random_rep(rng, 2 + static_cast<int>(rng() % 6), 5);
        auto g = graph_of(rep);
        auto moved = perturb_endpoints(rep);
        REQUIRE(has_distinct_endpoints(moved));
        REQUIRE(realizes(g, moved).empty());
        for (std::size_t u = 0; u < rep.size(); ++u)
            for (std::size_t v = 0; v < rep.size(); ++v)
                if (u != v && rep[u] != rep[v] && contains(rep[v], rep[u]))
                    REQUIRE(contains(moved[v], moved[u]));
    }
}

TEST_CASE("perturbation example")
{
    Representation rep{Interval(Rational(0), Rational(1)), Interval(Rational(1), Rational(2))};
    auto moved = perturb_endpoints(rep);
    CHECK(has_distinct_endpoints(moved));
    CHECK(intersects(moved[0], moved[1]));
    CHECK(moved[0].lo() == Rational(0));
    CHECK(moved[1].hi() == Rational(2));
}

TEST_CASE("repair ends with strict witnesses on every interval graph")
{
    for (auto & g : test::read_graph6_lines(test::data_path("all_1to7.g6"))) {
        auto model = recognize_interval(g);
        if (! model)
            continue;
        auto result = repair_bad_pairs(g, model->rep);
        REQUIRE(realizes(g, result.rep).empty());
        REQUIRE(has_strict_witnesses(result.rep));
        REQUIRE(result.stats.moves <= result.stats.initial_bad_pairs);
        REQUIRE(result.stats.counts.size() == static_cast<std::size_t>(result.stats.moves + 1));
        REQUIRE(result.stats.final_bad_pairs == static_cast<int>(bad_pairs(result.rep).size()));
        for (std::size_t i = 1; i < result.stats.counts.size(); ++i)
            REQUIRE(result.stats.counts[i] < result.stats.counts[i - 1]);
    }
}

TEST_CASE("repair removes an unwitnessed containment")
{
    // leaf 1 sits inside 0 with nothing to its left
    auto g = star_graph(2);
    Representation rep{Interval(Rational(0), Rational(4)), Interval(Rational(1), Rational(2)), Interval(Rational(3), Rational(5))};
    auto result = repair_bad_pairs(g, rep);
    CHECK(result.stats.initial_bad_pairs == 1);
    CHECK(result.stats.final_bad_pairs == 0);
    CHECK(realizes(g, result.rep).empty());
    CHECK(has_strict_witnesses(result.rep));
}

TEST_CASE("the claw keeps its one bad pair")
{
    auto g = star_graph(3);
    auto result = repair_bad_pairs(g, recognize_interval(g)->rep);
    auto pairs = bad_pairs(result.rep);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].second == 0);
    CHECK(has_strict_witnesses(result.rep));
}

TEST_CASE("containment uniqueness")
{
    Representation ok{Interval(Rational(0), Rational(3)), Interval(Rational(1), Rational(2))};
    CHECK_NOTHROW(check_containment_uniqueness(ok));
    Representation twice{Interval(Rational(0), Rational(10)), Interval(Rational(1), Rational(2)), Interval(Rational(3), Rational(4))};
    CHECK_THROWS_AS(check_containment_uniqueness(twice), InternalInconsistency);
    Representation inside_two{Interval(Rational(0), Rational(10)), Interval(Rational(1), Rational(9)), Interval(Rational(3), Rational(4))};
    CHECK_THROWS_AS(check_containment_uniqueness(inside_two), InternalInconsistency);
}
