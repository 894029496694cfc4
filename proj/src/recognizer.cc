#include <muig/recognizer.hh>
#include <muig/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace muig
{
    namespace
    {
        auto interval_strings(const Representation & rep, const vector<int> & vs) -> vector<string>
        {
            vector<string> result;
            for (int v : vs)
                result.push_back(rep[v].str());
            return result;
        }

        // Golumbic's TRO decomposition on the complement of g. Returns arc
        // matrix oriented[a * n + b], or nothing if the complement is not a
        // comparability graph.
        auto orient_complement(const Graph & g) -> optional<vector<bool>>
        {
            const int n = g.size();
            auto at = [n] (int a, int b) { return static_cast<std::size_t>(a) * n + b; };

            vector<bool> remaining(static_cast<std::size_t>(n) * n, false);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    remaining[at(a, b)] = a != b && ! g.adjacent(a, b);

            vector<bool> oriented(static_cast<std::size_t>(n) * n, false);
            vector<int> stamp(static_cast<std::size_t>(n) * n, -1);
            int current = 0;

            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    if (! remaining[at(x, y)])
                        continue;

                    // implication class of x->y relative to the remaining edges
                    vector<pair<int, int>> cls{{x, y}};
                    stamp[at(x, y)] = current;
                    for (std::size_t q = 0; q < cls.size(); ++q) {
                        auto [a, b] = cls[q];
                        auto force = [&] (int c, int d) {
                            if (stamp[at(d, c)] == current)
                                return false;
                            if (stamp[at(c, d)] != current) {
                                stamp[at(c, d)] = current;
                                cls.emplace_back(c, d);
                            }
                            return true;
                        };
                        for (int c = 0; c < n; ++c) {
                            if (c != b && c != a && remaining[at(a, c)] && ! remaining[at(b, c)])
                                if (! force(a, c))
                                    return std::nullopt;
                            if (c != a && c != b && remaining[at(c, b)] && ! remaining[at(a, c)])
                                if (! force(c, b))
                                    return std::nullopt;
                        }
                    }

                    for (auto [a, b] : cls) {
                        oriented[at(a, b)] = true;
                        remaining[at(a, b)] = remaining[at(b, a)] = false;
                    }
                    ++current;
                }

            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (oriented[at(a, b)])
                        for (int c = 0; c < n; ++c)
                            if (oriented[at(b, c)] && ! oriented[at(a, c)])
                                return std::nullopt;

            return oriented;
        }

        auto maximal_cliques(const Graph & g, const vector<int> & peo) -> vector<vector<int>>
        {
            const int n = g.size();
            vector<int> pos(n);
            for (int i = 0; i < n; ++i)
                pos[peo[i]] = i;

            vector<vector<int>> later(n);
            vector<int> parent(n, -1);
            for (int v = 0; v < n; ++v) {
                for (int w : g.neighbours(v))
                    if (pos[w] > pos[v])
                        later[v].push_back(w);
                for (int w : later[v])
                    if (parent[v] == -1 || pos[w] < pos[parent[v]])
                        parent[v] = w;
            }

            // {v} + later(v) fails to be maximal exactly when it is swallowed
            // by the clique of some u whose parent is v
            vector<bool> maximal(n, true);
            for (int u = 0; u < n; ++u)
                if (parent[u] != -1 && later[u].size() == later[parent[u]].size() + 1)
                    maximal[parent[u]] = false;

            vector<vector<int>> result;
            for (int v : peo)
                if (maximal[v]) {
                    auto c = later[v];
                    c.push_back(v);
                    std::sort(c.begin(), c.end());
                    result.push_back(std::move(c));
                }
            return result;
        }
    }

    auto perfect_elimination_order(const Graph & g) -> optional<vector<int>>
    {
        const int n = g.size();
        vector<int> weight(n, 0), order(n);
        vector<bool> numbered(n, false);
        for (int i = n - 1; i >= 0; --i) {
            int best = -1;
            for (int v = 0; v < n; ++v)
                if (! numbered[v] && (best == -1 || weight[v] > weight[best]))
                    best = v;
            numbered[best] = true;
            order[i] = best;
            for (int w : g.neighbours(best))
                if (! numbered[w])
                    ++weight[w];
        }

        vector<int> pos(n);
        for (int i = 0; i < n; ++i)
            pos[order[i]] = i;
        for (int v = 0; v < n; ++v) {
            int parent = -1;
            for (int w : g.neighbours(v))
                if (pos[w] > pos[v] && (parent == -1 || pos[w] < pos[parent]))
                    parent = w;
            if (parent == -1)
                continue;
            for (int w : g.neighbours(v))
                if (pos[w] > pos[v] && w != parent && ! g.adjacent(w, parent))
                    return std::nullopt;
        }
        return order;
    }

    auto recognize_interval(const Graph & g) -> optional<IntervalModel>
    {
        auto peo = perfect_elimination_order(g);
        if (! peo)
            return std::nullopt;
        auto oriented = orient_complement(g);
        if (! oriented)
            return std::nullopt;

        const int n = g.size();
        auto cliques = maximal_cliques(g, *peo);
        const int m = static_cast<int>(cliques.size());

        // A before B iff some a in A, b in B are nonadjacent with a -> b
        vector<vector<int>> members(m, vector<int>(n, 0));
        for (int c = 0; c < m; ++c)
            for (int v : cliques[c])
                members[c][v] = 1;

        vector<int> rank(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j)
                    continue;
                optional<bool> before;
                for (int a : cliques[i]) {
                    for (int b : cliques[j])
                        if (a != b && ! g.adjacent(a, b)) {
                            before = (*oriented)[static_cast<std::size_t>(a) * n + b];
                            break;
                        }
                    if (before)
                        break;
                }
                if (! before)
                    throw InternalInconsistency("recognize_interval", "two maximal cliques with no nonadjacent pair");
                if (*before)
                    ++rank[j];
            }

        vector<int> by_rank(m);
        std::iota(by_rank.begin(), by_rank.end(), 0);
        std::sort(by_rank.begin(), by_rank.end(), [&] (int a, int b) { return rank[a] < rank[b]; });
        for (int i = 0; i < m; ++i)
            if (rank[by_rank[i]] != i)
                throw InternalInconsistency("recognize_interval", "clique order is not a total order");

        IntervalModel model;
        for (int c : by_rank)
            model.path.cliques.push_back(cliques[c]);

        vector<int> first(n, -1), last(n, -1);
        for (int i = 0; i < m; ++i)
            for (int v : model.path.cliques[i]) {
                if (first[v] == -1)
                    first[v] = i;
                else if (last[v] != i - 1)
                    throw InternalInconsistency("recognize_interval", "cliques of a vertex are not consecutive", {v});
                last[v] = i;
            }

        Representation rep;
        for (int v = 0; v < n; ++v)
            rep.emplace_back(Rational{2L * first[v]}, Rational{2L * last[v] + 1});
        if (! realizes(g, rep).empty())
            throw InternalInconsistency("recognize_interval", "clique path does not realize the graph");

        model.rep = perturb_endpoints(std::move(rep));
        return model;
    }

    auto perturb_endpoints(Representation rep) -> Representation
    {
        const int n = static_cast<int>(rep.size());
        vector<Rational> lo, hi;
        vector<BoundaryType> type;
        for (auto & i : rep) {
            lo.push_back(i.lo());
            hi.push_back(i.hi());
            type.push_back(i.type());
        }

        struct End
        {
            Rational value;
            bool right;
            int vertex;
        };

        while (true) {
            vector<End> ends;
            for (int v = 0; v < n; ++v) {
                ends.push_back({lo[v], false, v});
                ends.push_back({hi[v], true, v});
            }
            std::sort(ends.begin(), ends.end(), [] (const End & a, const End & b) { return a.value < b.value; });

            std::size_t start = ends.size();
            for (std::size_t i = 0; i + 1 < ends.size(); ++i)
                if (ends[i].value == ends[i + 1].value) {
                    start = i;
                    break;
                }
            if (start == ends.size())
                break;

            std::size_t stop = start;
            while (stop < ends.size() && ends[stop].value == ends[start].value)
                ++stop;

            Rational eps{0};
            for (std::size_t i = 1; i < ends.size(); ++i)
                if (ends[i].value != ends[i - 1].value && (eps == Rational{0} || ends[i].value - ends[i - 1].value < eps))
                    eps = ends[i].value - ends[i - 1].value;
            if (eps == Rational{0})
                throw std::logic_error("perturbation needs two distinct endpoint values");

            // Left endpoints before right ones keeps touching intervals
            // overlapping; longer intervals first keeps containments.
            vector<End> group(ends.begin() + start, ends.begin() + stop);
            std::sort(group.begin(), group.end(), [&] (const End & a, const End & b) {
                if (a.right != b.right)
                    return ! a.right;
                if (! a.right && hi[a.vertex] != hi[b.vertex])
                    return hi[a.vertex] > hi[b.vertex];
                if (a.right && lo[a.vertex] != lo[b.vertex])
                    return lo[a.vertex] > lo[b.vertex];
                return a.vertex < b.vertex;
            });

            const long m = static_cast<long>(group.size());
            for (long k = 1; k < m; ++k) {
                Rational offset = Rational{k} * eps / Rational{2 * (m - 1)};
                auto & e = group[k];
                (e.right ? hi : lo)[e.vertex] += offset;
            }
        }

        Representation result;
        for (int v = 0; v < n; ++v)
            result.emplace_back(lo[v], hi[v], type[v]);
        return result;
    }

    namespace
    {
        auto has_left_witness(const Representation & rep, int u, int v, bool strict) -> bool
        {
            for (auto & x : rep)
                if ((strict ? rep[v].lo() < x.hi() : rep[v].lo() <= x.hi()) && x.hi() < rep[u].lo())
                    return true;
            return false;
        }

        auto has_right_witness(const Representation & rep, int u, int v, bool strict) -> bool
        {
            for (auto & y : rep)
                if (rep[u].hi() < y.lo() && (strict ? y.lo() < rep[v].hi() : y.lo() <= rep[v].hi()))
                    return true;
            return false;
        }
    }

    auto has_strict_witnesses(const Representation & rep) -> bool
    {
        for (auto [u, v] : bad_pairs(rep))
            if (! has_left_witness(rep, u, v, true) || ! has_right_witness(rep, u, v, true))
                return false;
        return true;
    }

    auto repair_bad_pairs(const Graph & g, Representation rep) -> RepairResult
    {
        if (! is_closed_only(rep))
            throw std::invalid_argument("repair needs a closed-interval representation");
        if (! realizes(g, rep).empty())
            throw std::invalid_argument("repair needs a representation of the graph");

        RepairResult result;
        result.rep = perturb_endpoints(std::move(rep));
        auto & r = result.rep;
        const int n = static_cast<int>(r.size());

        auto pairs = bad_pairs(r);
        result.stats.initial_bad_pairs = static_cast<int>(pairs.size());
        result.stats.counts.push_back(result.stats.initial_bad_pairs);

        while (true) {
            vector<vector<int>> inside(n);
            for (auto [u, v] : pairs)
                inside[v].push_back(u);

            bool moved = false;
            for (int v = 0; v < n && ! moved; ++v) {
                if (inside[v].empty())
                    continue;
                auto eps = min_gap(r);
                auto half = eps / Rational{2};

                int u_min = *std::min_element(inside[v].begin(), inside[v].end(), [&] (int a, int b) { return r[a].lo() < r[b].lo(); });
                if (! has_left_witness(r, u_min, v, false)) {
                    r[u_min] = Interval(r[v].lo() - half, r[u_min].hi());
                    r[v] = Interval(r[v].lo(), r[v].hi() + half);
                    moved = true;
                    break;
                }

                int u_max = *std::max_element(inside[v].begin(), inside[v].end(), [&] (int a, int b) { return r[a].hi() < r[b].hi(); });
                if (! has_right_witness(r, u_max, v, false)) {
                    r[u_max] = Interval(r[u_max].lo(), r[v].hi() + half);
                    r[v] = Interval(r[v].lo() - half, r[v].hi());
                    moved = true;
                }
            }
            if (! moved)
                break;

            auto next = bad_pairs(r);
            if (next.size() >= pairs.size())
                throw InternalInconsistency("repair_bad_pairs", "repair move did not reduce the bad pairs");
            if (auto bad = realizes(g, r); ! bad.empty())
                throw InternalInconsistency("repair_bad_pairs", "repair move broke the representation",
                        {bad[0].u, bad[0].v}, interval_strings(r, {bad[0].u, bad[0].v}));
            pairs = std::move(next);
            ++result.stats.moves;
            result.stats.counts.push_back(static_cast<int>(pairs.size()));
        }

        r = perturb_endpoints(std::move(r));
        result.stats.final_bad_pairs = static_cast<int>(bad_pairs(r).size());
        if (result.stats.final_bad_pairs != static_cast<int>(pairs.size()))
            throw InternalInconsistency("repair_bad_pairs", "final perturbation changed the bad pairs");
        if (! has_strict_witnesses(r))
            throw InternalInconsistency("repair_bad_pairs", "a bad pair lacks strict witnesses after repair");
        return result;
    }

    void check_containment_uniqueness(const Representation & rep)
    {
        const int n = static_cast<int>(rep.size());
        vector<vector<int>> inside(n), outside(n);
        for (auto [u, v] : bad_pairs(rep)) {
            inside[v].push_back(u);
            outside[u].push_back(v);
        }
        for (int v = 0; v < n; ++v) {
            if (inside[v].size() >= 2) {
                vector<int> triple{inside[v][0], inside[v][1], v};
                throw InternalInconsistency("containment", "an interval contains two distinct intervals", triple, interval_strings(rep, triple));
            }
            if (outside[v].size() >= 2) {
                vector<int> triple{v, outside[v][0], outside[v][1]};
                throw InternalInconsistency("containment", "an interval is contained in two distinct intervals", triple, interval_strings(rep, triple));
            }
        }
    }
}
