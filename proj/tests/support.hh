#ifndef MUIG_TESTS_SUPPORT_HH
#define MUIG_TESTS_SUPPORT_HH

#include <muig/graph.hh>
#include <muig/graph_io.hh>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

// Slow, definition-level checks used to cross-examine the library.
namespace muig::test
{
    inline auto data_path(const std::string & rel) -> std::string
    {
        return std::string(MUIG_TEST_DATA) + "/" + rel;
    }

    inline auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    inline auto read_graph6_lines(const std::string & path) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line))
            if (! line.empty())
                result.push_back(parse_graph(line, GraphFormat::graph6));
        return result;
    }

    // Tries every bijection, pruned only by the degree multiset.
    inline auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return false;
        const int n = a.size();
        std::vector<int> da, db;
        for (int v = 0; v < n; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;

        std::vector<int> map(n, -1);
        std::vector<bool> used(n, false);
        auto extend = [&] (auto & self, int i) -> bool {
            if (i == n)
                return true;
            for (int w = 0; w < n; ++w) {
                if (used[w] || da[i] != db[w])
                    continue;
                bool ok = true;
                for (int j = 0; j < i && ok; ++j)
                    ok = a.adjacent(i, j) == b.adjacent(w, map[j]);
                if (! ok)
                    continue;
                used[w] = true;
                map[i] = w;
                if (self(self, i + 1))
                    return true;
                used[w] = false;
            }
            return false;
        };
        return extend(extend, 0);
    }

    // Chordal iff repeatedly deleting simplicial vertices empties the graph.
    inline auto brute_chordal(const Graph & g) -> bool
    {
        const int n = g.size();
        std::vector<bool> alive(n, true);
        for (int round = 0; round < n; ++round) {
            int found = -1;
            for (int v = 0; v < n && found < 0; ++v) {
                if (! alive[v])
                    continue;
                bool simplicial = true;
                for (int a : g.neighbours(v))
                    for (int b : g.neighbours(v))
                        if (a < b && alive[a] && alive[b] && ! g.adjacent(a, b))
                            simplicial = false;
                if (simplicial)
                    found = v;
            }
            if (found < 0)
                return false;
            alive[found] = false;
        }
        return true;
    }

    // a and b joined by a path avoiding N[c].
    inline auto avoids(const Graph & g, int a, int b, int c) -> bool
    {
        std::vector<bool> blocked(g.size(), false), seen(g.size(), false);
        for (int z : g.closed_neighbourhood(c))
            blocked[z] = true;
        if (blocked[a] || blocked[b])
            return false;
        std::queue<int> q;
        q.push(a);
        seen[a] = true;
        while (! q.empty()) {
            int x = q.front();
            q.pop();
            if (x == b)
                return true;
            for (int y : g.neighbours(x))
                if (! blocked[y] && ! seen[y]) {
                    seen[y] = true;
                    q.push(y);
                }
        }
        return false;
    }

    inline auto has_asteroidal_triple(const Graph & g) -> bool
    {
        const int n = g.size();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (! g.adjacent(a, b) && ! g.adjacent(a, c) && ! g.adjacent(b, c)
                            && avoids(g, a, b, c) && avoids(g, a, c, b) && avoids(g, b, c, a))
                        return true;
        return false;
    }

    // Interval graphs are exactly the chordal graphs without asteroidal triples.
    inline auto brute_interval(const Graph & g) -> bool
    {
        return brute_chordal(g) && ! has_asteroidal_triple(g);
    }

    inline auto brute_twins(const Graph & g, int u, int v) -> bool
    {
        if (u == v)
            return true;
        if (! g.adjacent(u, v))
            return false;
        for (int z = 0; z < g.size(); ++z)
            if (z != u && z != v && g.adjacent(z, u) != g.adjacent(z, v))
                return false;
        return true;
    }

    // Adds a copy of v adjacent to v and to all of N(v).
    inline auto duplicate_vertex(const Graph & g, int v) -> Graph
    {
        auto edges = g.edges();
        const int c = g.size();
        edges.emplace_back(v, c);
        for (int z : g.neighbours(v))
            edges.emplace_back(z, c);
        return Graph(c + 1, edges);
    }
}

#endif
