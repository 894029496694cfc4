#include "../support.hh"

#include <muig/errors.hh>
#include <muig/graph.hh>
#include <muig/graph_io.hh>
#include <muig/rational.hh>

#include <doctest.h>

#include <random>

using namespace muig;

TEST_CASE("rational arithmetic stays exact")
{
    Rational third(1, 3);
    CHECK((third + third + third) == Rational(1));
    CHECK((Rational(3, 4) - Rational(1, 4)).str() == "1/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(abs(Rational(-2, 3)) == Rational(2, 3));
    CHECK_THROWS(Rational::parse("0.5"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("graph construction rejects malformed edges")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);

    Graph g(4, {{2, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(g.closed_neighbourhood(2) == std::vector<int>{0, 1, 2});
    CHECK(g.degree(3) == 0);
}

TEST_CASE("induced subgraph keeps the given order")
{
    auto g = path_graph(5);
    auto s = induced_subgraph(g, {3, 1, 2});
    CHECK(s.to_old == std::vector<int>{3, 1, 2});
    CHECK(s.to_new[2] == 2);
    CHECK(s.to_new[0] == -1);
    CHECK(s.graph.adjacent(0, 2));
    CHECK(s.graph.adjacent(1, 2));
    CHECK(! s.graph.adjacent(0, 1));
}

TEST_CASE("twin partition matches the quadratic definition")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 != 0)
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        auto p = twin_partition(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                REQUIRE((p.class_of[u] == p.class_of[v]) == test::brute_twins(g, u, v));
        CHECK(is_twin_free(g) == (static_cast<int>(p.classes.size()) == n));

        auto q = twin_quotient(g);
        CHECK(is_twin_free(q.graph));
        for (std::size_t a = 0; a < p.classes.size(); ++a)
            for (std::size_t b = 0; b < p.classes.size(); ++b)
                if (a != b)
                    CHECK(q.graph.adjacent(a, b) == g.adjacent(p.representative(a), p.representative(b)));
    }
}

TEST_CASE("graph6 round trip over the census corpus")
{
    std::ifstream in(test::data_path("all_1to7.g6"));
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        auto g = parse_graph(line, GraphFormat::graph6);
        REQUIRE(emit_graph(g, GraphFormat::graph6) == line);
        REQUIRE(parse_graph(emit_graph(g, GraphFormat::edge_list), GraphFormat::edge_list) == g);
        ++count;
    }
    CHECK(count == 1252);
}

TEST_CASE("graph6 known codes")
{
    CHECK(parse_graph("?", GraphFormat::graph6).size() == 0);
    CHECK(parse_graph("A_", GraphFormat::graph6) == complete_graph(2));
    CHECK(parse_graph("Bw", GraphFormat::graph6) == complete_graph(3));
    CHECK(parse_graph(">>graph6<<Bw", GraphFormat::graph6) == complete_graph(3));
    CHECK(emit_graph(path_graph(4), GraphFormat::graph6) == "Ch");

    // large n uses the four-byte header
    auto big = path_graph(70);
    CHECK(parse_graph(emit_graph(big, GraphFormat::graph6), GraphFormat::graph6) == big);
}

TEST_CASE("graph6 errors")
{
    CHECK_THROWS_AS(parse_graph("B", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("Bww", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("A`", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("B\x1f", GraphFormat::graph6), ParseError);
}

TEST_CASE("edge-list parsing and errors")
{
    auto g = parse_graph("# a path\nn 4\n0 1\n1 2   # trailing comment\n\n2 3\n", GraphFormat::edge_list);
    CHECK(g == path_graph(4));

    // without a header the vertex count is one past the largest id
    CHECK(parse_graph("0 1\n1 2\n", GraphFormat::edge_list).size() == 3);

    try {
        parse_graph("n 3\n0 1\n1 0\n", GraphFormat::edge_list);
        FAIL("duplicate edge accepted");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
        CHECK(e.offset() == 8);
    }
    CHECK_THROWS_AS(parse_graph("n 3\n1 1\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 3\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 x\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 1 2\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("0 1\nn 3\n", GraphFormat::edge_list), ParseError);

    CHECK(guess_format("Bw\n") == GraphFormat::graph6);
    CHECK(guess_format("0 1\n") == GraphFormat::edge_list);
    CHECK(parse_format("g6") == GraphFormat::graph6);
    CHECK_THROWS(parse_format("dot"));
}
