#include <muig/builder.hh>
#include <muig/errors.hh>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using std::map;
using std::optional;
using std::pair;
using std::set;
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

        [[noreturn]] void fail(const string & stage, const string & detail, const Representation & rep, const vector<int> & vs)
        {
            throw InternalInconsistency(stage, detail, vs, interval_strings(rep, vs));
        }

        auto mirror(const Representation & rep) -> Representation
        {
            Representation result;
            for (auto & i : rep)
                result.emplace_back(-i.hi(), -i.lo(), make_boundary(i.hi_closed(), i.lo_closed()));
            return result;
        }

        // The left-hand chain of (u, v). The right-hand chain is this applied
        // to the mirror image, whose reversed order turns "right" into "left".
        auto left_chain(const Graph & g, const Representation & rep, int u, int v, const Representation & report_rep) -> vector<ChainLevel>
        {
            auto lo = [&] (int z) -> const Rational & { return rep[z].lo(); };
            auto hi = [&] (int z) -> const Rational & { return rep[z].hi(); };
            const string stage = "extract_chains";

            vector<ChainLevel> levels;
            vector<int> level;
            for (int z : g.neighbours(v))
                if (hi(z) < lo(u))
                    level.push_back(z);

            for (int k = 1; ; ++k) {
                if (k > g.size())
                    fail(stage, "chain longer than the graph", report_rep, {u, v});

                if (k >= 2) {
                    auto & prev = levels.back();
                    level.clear();
                    for (int z : g.neighbours(prev.outer))
                        if (z != prev.inner && ! g.adjacent(z, prev.inner))
                            level.push_back(z);
                    for (int z : level)
                        if (! (hi(z) < lo(prev.inner)))
                            fail(stage, "chain level " + std::to_string(k) + " vertex is not beyond the previous inner member", report_rep, {u, v, z, prev.inner});
                }

                if (level.empty())
                    fail(stage, "chain level " + std::to_string(k) + " is empty", report_rep, {u, v});

                std::sort(level.begin(), level.end());
                if (level.size() == 1) {
                    levels.push_back({level, level[0], -1});
                    break;
                }

                for (std::size_t i = 0; i < level.size(); ++i)
                    for (std::size_t j = i + 1; j < level.size(); ++j)
                        if (! g.adjacent(level[i], level[j]))
                            fail(stage, "chain level " + std::to_string(k) + " is not a clique (R configuration)", report_rep, {u, v, level[i], level[j]});
                if (level.size() >= 3)
                    fail(stage, "chain level " + std::to_string(k) + " has " + std::to_string(level.size()) + " vertices (S' configuration)", report_rep, level);

                int x = level[0], xp = level[1];
                if (hi(xp) < hi(x))
                    std::swap(x, xp);
                if (! (lo(x) < lo(xp) && lo(xp) < hi(x) && hi(x) < hi(xp)))
                    fail(stage, "chain level " + std::to_string(k) + " members are not staggered", report_rep, {x, xp});
                for (int z = 0; z < g.size(); ++z)
                    if (hi(x) < lo(z) && g.adjacent(z, x) != g.adjacent(z, xp))
                        fail(stage, "chain level " + std::to_string(k) + " members are distinguishable from the far side", report_rep, {x, xp, z});

                levels.push_back({level, x, xp});
            }
            return levels;
        }

        struct SymbolicWeight
        {
            long c = 0;   ///< constant part
            long s = 0;   ///< multiples of -delta

            auto operator+(const SymbolicWeight & o) const -> SymbolicWeight { return {c + o.c, s + o.s}; }
            auto operator<(const SymbolicWeight & o) const -> bool { return c < o.c || (c == o.c && s > o.s); }
        };

        auto level_sets(const vector<ChainSystem> & chains, bool include_right) -> set<set<int>>
        {
            set<set<int>> result;
            for (auto & cs : chains) {
                for (auto & l : cs.left)
                    if (l.members.size() == 2)
                        result.insert(set<int>(l.members.begin(), l.members.end()));
                if (include_right)
                    for (auto & l : cs.right)
                        if (l.members.size() == 2)
                            result.insert(set<int>(l.members.begin(), l.members.end()));
            }
            return result;
        }

        void check_new_bad_pairs(const string & stage, const Representation & before, const Representation & after,
                const set<set<int>> & allowed)
        {
            auto old = bad_pairs(before);
            set<pair<int, int>> old_set(old.begin(), old.end());
            for (auto p : bad_pairs(after))
                if (! old_set.count(p) && ! allowed.count(set<int>{p.first, p.second}))
                    fail(stage, "new bad pair outside the chain levels", after, {p.first, p.second});
        }
    }

    auto extract_chains(const Graph & g, const Representation & rep, int u, int v) -> ChainSystem
    {
        if (! contains(rep[v], rep[u]) || u == v)
            throw std::invalid_argument("extract_chains needs a bad pair");
        ChainSystem result;
        result.u = u;
        result.v = v;
        result.left = left_chain(g, rep, u, v, rep);
        result.right = left_chain(g, mirror(rep), u, v, rep);
        return result;
    }

    void check_chain_bad_pairs(const vector<ChainSystem> & chains, const vector<pair<int, int>> & pairs)
    {
        set<int> any_side, contained_side;
        for (auto [a, b] : pairs) {
            any_side.insert(a);
            any_side.insert(b);
            contained_side.insert(a);
        }
        for (auto & cs : chains)
            for (auto * side : {&cs.left, &cs.right})
                for (auto & l : *side) {
                    if (l.inner == -1)
                        continue;
                    if (any_side.count(l.inner))
                        throw InternalInconsistency("chain_bad_pairs", "inner chain member lies in a bad pair", {cs.u, cs.v, l.inner});
                    if (contained_side.count(l.outer))
                        throw InternalInconsistency("chain_bad_pairs", "outer chain member is contained in another interval", {cs.u, cs.v, l.outer});
                }
    }

    auto shorten_left(const Representation & rep, const vector<ChainSystem> & chains) -> Representation
    {
        map<int, Rational> target;
        for (auto & cs : chains) {
            int prev = cs.v;
            for (auto & l : cs.left) {
                for (int x : l.members) {
                    auto [it, inserted] = target.try_emplace(x, rep[prev].lo());
                    if (! inserted && it->second != rep[prev].lo())
                        fail("shorten_left", "two chains prescribe different right ends", rep, {x, prev});
                }
                prev = l.outer;
            }
        }

        auto result = rep;
        for (auto & [x, t] : target) {
            if (! (rep[x].lo() < t) || rep[x].hi() < t)
                fail("shorten_left", "clipping would not shorten the interval", rep, {x});
            result[x] = Interval(rep[x].lo(), t);
        }
        return result;
    }

    auto shorten_right(const Representation & rep1, const vector<ChainSystem> & chains) -> Representation
    {
        map<int, Rational> target;
        for (auto & cs : chains) {
            int prev = cs.v;
            for (auto & l : cs.right) {
                for (int y : l.members) {
                    auto [it, inserted] = target.try_emplace(y, rep1[prev].hi());
                    if (! inserted && it->second != rep1[prev].hi())
                        fail("shorten_right", "two chains prescribe different left ends", rep1, {y, prev});
                }
                prev = l.outer;
            }
        }

        auto result = rep1;
        for (auto & [y, t] : target) {
            if (! (t < rep1[y].hi()) || t < rep1[y].lo())
                fail("shorten_right", "clipping would not shorten the interval", rep1, {y});
            result[y] = Interval(t, rep1[y].hi());
        }
        return result;
    }

    auto blow_up(const Representation & rep, const Representation & rep2, const vector<ChainSystem> & chains,
            const vector<pair<int, int>> & pairs) -> Representation
    {
        const int n = static_cast<int>(rep2.size());
        vector<optional<pair<int, Interval>>> assigned(n);
        auto assign = [&] (int x, int which, Interval i) {
            if (assigned[x] && (assigned[x]->first != which || assigned[x]->second != i))
                fail("blow_up", "vertex falls into two cases", rep2, {x});
            assigned[x] = pair{which, std::move(i)};
        };

        // A container may itself be clipped as the outer member of another
        // pair's chain level; inner members never lie in a bad pair.
        set<int> outer;
        for (auto & cs : chains)
            for (auto * side : {&cs.left, &cs.right})
                for (auto & l : *side)
                    outer.insert(l.outer);

        for (auto [x, v] : pairs) {
            if (rep2[v] != rep[v] && ! outer.count(v))
                fail("blow_up", "container interval was shortened", rep2, {x, v});
            assign(x, 1, Interval(rep2[v].lo(), rep2[v].hi(), BoundaryType::open));
        }
        for (auto & cs : chains) {
            for (auto & l : cs.left)
                if (l.inner != -1)
                    assign(l.inner, 2, Interval(rep2[l.outer].lo(), rep2[l.outer].hi(), BoundaryType::open_closed));
            for (auto & l : cs.right)
                if (l.inner != -1)
                    assign(l.inner, 3, Interval(rep2[l.outer].lo(), rep2[l.outer].hi(), BoundaryType::closed_open));
        }

        Representation result;
        for (int x = 0; x < n; ++x)
            result.push_back(assigned[x] ? assigned[x]->second : rep2[x]);
        return result;
    }

    auto unitize(const Representation & rep) -> Representation
    {
        if (is_unit(rep))
            return rep;
        if (! is_mixed_proper(rep))
            throw std::invalid_argument("unitize needs a mixed proper representation");

        vector<Rational> values;
        for (auto & i : rep) {
            values.push_back(i.lo());
            values.push_back(i.hi());
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        const int m = static_cast<int>(values.size());
        auto index = [&] (const Rational & x) {
            return static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
        };

        // edge a -> b with weight w encodes f(b) - f(a) <= w
        struct Arc { int a, b; SymbolicWeight w; };
        vector<Arc> arcs;
        for (int i = 0; i + 1 < m; ++i)
            arcs.push_back({i + 1, i, {0, 1}});
        for (auto & i : rep)
            if (i.is_closed()) {
                int a = index(i.lo()), b = index(i.hi());
                arcs.push_back({a, b, {1, 0}});
                arcs.push_back({b, a, {-1, 0}});
            }
        for (int i = 0; i < m; ++i)
            arcs.push_back({m, i, {0, 0}});

        vector<SymbolicWeight> dist(m + 1);
        bool changed = true;
        for (int round = 0; round <= m + 1 && changed; ++round) {
            changed = false;
            for (auto & arc : arcs)
                if (dist[arc.a] + arc.w < dist[arc.b]) {
                    dist[arc.b] = dist[arc.a] + arc.w;
                    changed = true;
                }
        }
        if (changed)
            throw UnitizationFailed("unitization failed: endpoint constraints have a negative cycle");

        Rational delta{1, 2L * m};
        vector<Rational> f(m);
        for (int i = 0; i < m; ++i)
            f[i] = Rational{dist[i].c} - Rational{dist[i].s} * delta;
        auto shift = f[0];
        for (auto & x : f)
            x -= shift;
        for (int i = 0; i + 1 < m; ++i)
            if (! (f[i] < f[i + 1]))
                throw UnitizationFailed("unitization failed: value order not preserved");

        Representation result;
        for (auto & i : rep)
            result.emplace_back(f[index(i.lo())], f[index(i.hi())], i.type());
        if (! is_unit(result))
            throw UnitizationFailed("unitization failed: lengths are not all 1");
        return result;
    }

    auto build_mixed_pipeline(const Graph & g) -> MixedPipeline
    {
        MixedPipeline p;
        auto model = recognize_interval(g);
        if (! model)
            throw std::invalid_argument("not an interval graph");
        p.initial = model->rep;

        auto repaired = repair_bad_pairs(g, p.initial);
        p.repair = repaired.stats;
        p.repaired = std::move(repaired.rep);
        check_containment_uniqueness(p.repaired);

        p.pairs = bad_pairs(p.repaired);
        for (auto [u, v] : p.pairs)
            p.chains.push_back(extract_chains(g, p.repaired, u, v));
        check_chain_bad_pairs(p.chains, p.pairs);

        auto require_realizes = [&] (const string & stage, const Representation & r) {
            if (auto bad = realizes(g, r); ! bad.empty())
                fail(stage, bad[0].kind == Mismatch::Kind::missing_edge ? "lost an edge" : "gained an edge", r, {bad[0].u, bad[0].v});
        };

        p.shortened_left = shorten_left(p.repaired, p.chains);
        require_realizes("shorten_left", p.shortened_left);
        check_new_bad_pairs("shorten_left", p.repaired, p.shortened_left, level_sets(p.chains, false));

        p.shortened_right = shorten_right(p.shortened_left, p.chains);
        require_realizes("shorten_right", p.shortened_right);
        check_new_bad_pairs("shorten_right", p.repaired, p.shortened_right, level_sets(p.chains, true));

        p.mixed = blow_up(p.repaired, p.shortened_right, p.chains, p.pairs);
        require_realizes("blow_up", p.mixed);
        if (! is_mixed_proper(p.mixed))
            throw InternalInconsistency("blow_up", "result is not mixed proper");

        p.unit = unitize(p.mixed);
        require_realizes("unitize", p.unit);
        return p;
    }

    auto verdict_name(Verdict v) -> string
    {
        switch (v) {
            case Verdict::not_interval: return "not-interval";
            case Verdict::mixed_unit: return "mixed-unit";
            case Verdict::not_mixed_unit: return "not-mixed-unit";
        }
        throw std::logic_error("bad verdict");
    }

    auto build_certificate(const Graph & g) -> Certificate
    {
        Certificate cert{Verdict::not_interval, std::nullopt, std::nullopt, {}};
        auto & t = cert.transcript;
        t.vertices = g.size();

        if (! recognize_interval(g)) {
            t.checks.push_back("interval: no");
            return cert;
        }
        t.checks.push_back("interval: yes");

        auto q = twin_quotient(g);
        t.quotient_vertices = q.graph.size();
        t.checks.push_back("twin quotient: " + std::to_string(g.size()) + " -> " + std::to_string(q.graph.size()) + " vertices");

        if (auto hit = find_forbidden(q.graph, ForbiddenList::twin_free)) {
            t.checks.push_back("quotient contains " + hit->family.name());
            auto neg = find_forbidden(g, ForbiddenList::general);
            if (! neg)
                throw InternalInconsistency("build_certificate", "quotient contains " + hit->family.name() + " but the graph avoids the general list");
            if (! verify_induced(g, generate(neg->family), neg->map))
                throw InternalInconsistency("build_certificate", "embedding of " + neg->family.name() + " does not verify", neg->map);
            t.checks.push_back("embedding of " + neg->family.name() + ": verified");
            cert.verdict = Verdict::not_mixed_unit;
            cert.embedding = std::move(neg);
            return cert;
        }

        auto p = build_mixed_pipeline(q.graph);
        t.initial_bad_pairs = p.repair.initial_bad_pairs;
        t.repair_moves = p.repair.moves;
        t.bad_pairs = static_cast<int>(p.pairs.size());
        for (auto & cs : p.chains)
            t.chains.push_back({q.partition.representative(cs.u), q.partition.representative(cs.v), cs.lmax(), cs.rmax()});
        t.quotient_mixed = p.mixed;
        t.checks.push_back("bad pairs: " + std::to_string(p.repair.initial_bad_pairs) + " initial, "
                + std::to_string(p.repair.moves) + " repair moves, " + std::to_string(p.pairs.size()) + " remaining");
        t.checks.push_back("quotient mixed proper: ok");

        Representation rep;
        for (int v = 0; v < g.size(); ++v)
            rep.push_back(p.unit[q.partition.class_of[v]]);
        if (auto bad = realizes(g, rep); ! bad.empty())
            fail("build_certificate", "expanded representation does not realize the graph", rep, {bad[0].u, bad[0].v});
        if (! is_unit(rep))
            throw InternalInconsistency("build_certificate", "expanded representation is not unit");
        t.checks.push_back("realizes: ok");
        t.checks.push_back("unit: ok");

        cert.verdict = Verdict::mixed_unit;
        cert.rep = std::move(rep);
        return cert;
    }
}
