#include <muig/oracle.hh>
#include <muig/errors.hh>

#include <algorithm>
#include <numeric>
#include <random>

using std::optional;
using std::vector;

namespace muig
{
    auto UnitPlacement::representation() const -> Representation
    {
        Representation rep;
        for (std::size_t v = 0; v < lo.size(); ++v)
            rep.emplace_back(lo[v], lo[v] + Rational{1}, type[v]);
        return rep;
    }

    namespace
    {
        // c - s * delta for an infinitesimal delta > 0
        struct Weight
        {
            long c = 0;
            long s = 0;

            auto operator+(const Weight & o) const -> Weight { return {c + o.c, s + o.s}; }
            auto operator<(const Weight & o) const -> bool { return c < o.c || (c == o.c && s > o.s); }
            auto negative() const -> bool { return c < 0 || (c == 0 && s > 0); }
        };

        constexpr long infinity = 1L << 40;

        // Difference d = lo[u] - lo[v] for a pair u < v.
        enum class Relation
        {
            overlap,      ///< -1 < d < 1
            touch_plus,   ///< d = 1: u's left end meets v's right end
            touch_minus,  ///< d = -1: v's left end meets u's right end
            above,        ///< d > 1
            below         ///< d < -1
        };

        struct Arc
        {
            int a, b;
            Weight w;   ///< lo[b] - lo[a] <= w
        };

        struct Pair
        {
            int u, v;
            bool adjacent;
            vector<Relation> options;
        };

        auto arcs_for(const Pair & p, Relation r) -> vector<Arc>
        {
            int u = p.u, v = p.v;
            switch (r) {
                case Relation::overlap: return {{v, u, {1, 1}}, {u, v, {1, 1}}};
                case Relation::touch_plus: return {{v, u, {1, 0}}, {u, v, {-1, 0}}};
                case Relation::touch_minus: return {{u, v, {1, 0}}, {v, u, {-1, 0}}};
                case Relation::above: return {{u, v, {-1, 1}}};
                case Relation::below: return {{v, u, {-1, 1}}};
            }
            return {};
        }

        // Literal 2v is "left end of v closed", 2v+1 is "right end of v closed".
        auto left_lit(int v) -> int { return 2 * v; }
        auto right_lit(int v) -> int { return 2 * v + 1; }

        class Solver
        {
            public:
                Solver(const Graph & g, const OracleOptions & options, OracleStats * stats) :
                    _g(g), _n(g.size()), _stats(stats),
                    _dist(static_cast<std::size_t>(_n) * _n, Weight{infinity, 0}),
                    _choice(),
                    _forced(2 * _n, false)
                {
                    for (int v = 0; v < _n; ++v)
                        at(v, v) = Weight{0, 0};

                    for (int u = 0; u < _n; ++u)
                        for (int v = u + 1; v < _n; ++v) {
                            Pair p{u, v, g.adjacent(u, v), {}};
                            if (p.adjacent)
                                p.options = {Relation::overlap, Relation::touch_plus, Relation::touch_minus};
                            else
                                p.options = {Relation::above, Relation::below, Relation::touch_plus, Relation::touch_minus};
                            _pairs.push_back(std::move(p));
                        }

                    std::stable_sort(_pairs.begin(), _pairs.end(), [&] (const Pair & a, const Pair & b) {
                        if (a.adjacent != b.adjacent)
                            return a.adjacent;
                        return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
                    });

                    if (options.shuffle_seed) {
                        std::mt19937_64 rng(*options.shuffle_seed);
                        std::shuffle(_pairs.begin(), _pairs.end(), rng);
                        for (auto & p : _pairs)
                            std::shuffle(p.options.begin(), p.options.end(), rng);
                    }

                    _choice.assign(_pairs.size(), -1);
                }

                auto solve() -> optional<UnitPlacement>
                {
                    if (! search())
                        return std::nullopt;
                    return extract();
                }

            private:
                auto at(int a, int b) -> Weight & { return _dist[static_cast<std::size_t>(a) * _n + b]; }

                static auto finite(const Weight & w) -> bool { return w.c < infinity / 2; }

                auto add_arc(const Arc & arc) -> bool
                {
                    auto back = at(arc.b, arc.a);
                    if (finite(back) && (back + arc.w).negative())
                        return false;
                    for (int i = 0; i < _n; ++i) {
                        auto to_a = at(i, arc.a);
                        if (! finite(to_a))
                            continue;
                        for (int j = 0; j < _n; ++j) {
                            auto from_b = at(arc.b, j);
                            if (! finite(from_b))
                                continue;
                            auto via = to_a + arc.w + from_b;
                            if (via < at(i, j))
                                at(i, j) = via;
                        }
                    }
                    return true;
                }

                // Boolean side: adjacent touching pairs force both touching
                // ends closed; nonadjacent ones forbid both being closed.
                auto touching_ends(const Pair & p, Relation r) -> std::pair<int, int>
                {
                    if (r == Relation::touch_plus)
                        return {left_lit(p.u), right_lit(p.v)};
                    return {left_lit(p.v), right_lit(p.u)};
                }

                auto boolean_consistent() -> bool
                {
                    for (std::size_t i = 0; i < _pairs.size(); ++i) {
                        auto & p = _pairs[i];
                        if (_choice[i] == -1 || p.adjacent)
                            continue;
                        auto r = p.options[_choice[i]];
                        if (r != Relation::touch_plus && r != Relation::touch_minus)
                            continue;
                        auto [a, b] = touching_ends(p, r);
                        if (_forced[a] && _forced[b])
                            return false;
                    }
                    return true;
                }

                auto commit(std::size_t i, int option) -> bool
                {
                    auto & p = _pairs[i];
                    auto r = p.options[option];
                    _choice[i] = option;
                    for (auto & arc : arcs_for(p, r))
                        if (! add_arc(arc))
                            return false;
                    if (r == Relation::touch_plus || r == Relation::touch_minus) {
                        if (p.adjacent) {
                            auto [a, b] = touching_ends(p, r);
                            _forced[a] = _forced[b] = true;
                        }
                        return boolean_consistent();
                    }
                    return true;
                }

                auto option_possible(std::size_t i, int option) -> bool
                {
                    for (auto & arc : arcs_for(_pairs[i], _pairs[i].options[option])) {
                        auto back = at(arc.b, arc.a);
                        if (finite(back) && (back + arc.w).negative())
                            return false;
                    }
                    return true;
                }

                struct Saved
                {
                    vector<Weight> dist;
                    vector<int> choice;
                    vector<bool> forced;
                };

                auto save() const -> Saved { return {_dist, _choice, _forced}; }
                void restore(Saved s)
                {
                    _dist = std::move(s.dist);
                    _choice = std::move(s.choice);
                    _forced = std::move(s.forced);
                }

                // Forces pairs with a single remaining option; false on a wipeout.
                auto propagate() -> bool
                {
                    bool changed = true;
                    while (changed) {
                        changed = false;
                        for (std::size_t i = 0; i < _pairs.size(); ++i) {
                            if (_choice[i] != -1)
                                continue;
                            int count = 0, last = -1;
                            for (int o = 0; o < static_cast<int>(_pairs[i].options.size()); ++o)
                                if (option_possible(i, o)) {
                                    ++count;
                                    last = o;
                                }
                            if (count == 0)
                                return false;
                            if (count == 1) {
                                if (! commit(i, last))
                                    return false;
                                changed = true;
                            }
                        }
                    }
                    return true;
                }

                auto search() -> bool
                {
                    if (_stats)
                        ++_stats->nodes;
                    if (! propagate())
                        return false;

                    std::size_t next = _pairs.size();
                    for (std::size_t i = 0; i < _pairs.size(); ++i)
                        if (_choice[i] == -1) {
                            next = i;
                            break;
                        }
                    if (next == _pairs.size())
                        return true;

                    for (int o = 0; o < static_cast<int>(_pairs[next].options.size()); ++o) {
                        if (! option_possible(next, o))
                            continue;
                        auto saved = save();
                        if (commit(next, o) && search())
                            return true;
                        restore(std::move(saved));
                    }
                    return false;
                }

                auto extract() -> UnitPlacement
                {
                    // potentials from a virtual source joined to every vertex by 0
                    Rational delta{1, 4L * std::max(_n, 1)};
                    UnitPlacement result;
                    for (int v = 0; v < _n; ++v) {
                        Weight best{0, 0};
                        for (int u = 0; u < _n; ++u)
                            if (finite(at(u, v)) && at(u, v) < best)
                                best = at(u, v);
                        result.lo.push_back(Rational{best.c} - Rational{best.s} * delta);
                    }

                    // prefer closed ends; a literal may be true unless it would
                    // close both ends of a nonadjacent touching pair
                    vector<bool> value = _forced;
                    vector<vector<int>> conflicts(2 * _n);
                    for (std::size_t i = 0; i < _pairs.size(); ++i) {
                        auto & p = _pairs[i];
                        auto r = p.options[_choice[i]];
                        if (! p.adjacent && (r == Relation::touch_plus || r == Relation::touch_minus)) {
                            auto [a, b] = touching_ends(p, r);
                            conflicts[a].push_back(b);
                            conflicts[b].push_back(a);
                        }
                    }
                    for (int lit = 0; lit < 2 * _n; ++lit) {
                        if (value[lit])
                            continue;
                        bool ok = true;
                        for (int other : conflicts[lit])
                            ok = ok && ! value[other];
                        value[lit] = ok;
                    }
                    for (int v = 0; v < _n; ++v)
                        result.type.push_back(make_boundary(value[left_lit(v)], value[right_lit(v)]));
                    return result;
                }

                const Graph & _g;
                int _n;
                OracleStats * _stats;
                vector<Pair> _pairs;
                vector<Weight> _dist;
                vector<int> _choice;
                vector<bool> _forced;
        };
    }

    auto solve_disjunctive_differences(const Graph & g, const OracleOptions & options, OracleStats * stats) -> optional<UnitPlacement>
    {
        return Solver(g, options, stats).solve();
    }

    auto oracle_mixed_unit(const Graph & g, const OracleOptions & options, OracleStats * stats) -> optional<UnitPlacement>
    {
        if (g.size() > options.size_bound)
            throw SizeBoundExceeded("oracle bound is " + std::to_string(options.size_bound) + " vertices, graph has " + std::to_string(g.size()));

        auto placement = solve_disjunctive_differences(g, options, stats);
        if (placement) {
            auto rep = placement->representation();
            if (! realizes(g, rep).empty() || ! is_unit(rep))
                throw InternalInconsistency("oracle", "witness placement does not realize the graph");
        }
        return placement;
    }
}
