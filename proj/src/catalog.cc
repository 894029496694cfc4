#include <muig/catalog.hh>

#include <algorithm>
#include <map>
#include <stdexcept>

using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace muig
{
    namespace
    {
        constexpr std::pair<Family, string_view> family_names[] = {
            {Family::K13, "K13"}, {Family::K14, "K14"}, {Family::K14star, "K14star"},
            {Family::K23star, "K23star"}, {Family::K24star, "K24star"}, {Family::R, "R"},
            {Family::S, "S"}, {Family::Sprime, "Sprime"}, {Family::Sdoubleprime, "Sdoubleprime"},
            {Family::T, "T"}, {Family::Q, "Q"}, {Family::G1, "G1"}, {Family::Fig2, "Fig2"}};

        /// Accumulates a labelled graph by vertex name.
        class Builder
        {
            public:
                auto vertex(const string & name) -> int
                {
                    auto [it, inserted] = _ids.try_emplace(name, static_cast<int>(_names.size()));
                    if (inserted)
                        _names.push_back(name);
                    return it->second;
                }

                void edge(const string & a, const string & b)
                {
                    int u = vertex(a), v = vertex(b);
                    _edges.emplace_back(std::min(u, v), std::max(u, v));
                }

                void remove(const string & name)
                {
                    _removed.push_back(name);
                }

                auto build() const -> Graph
                {
                    vector<int> keep;
                    for (int v = 0; v < static_cast<int>(_names.size()); ++v)
                        if (std::find(_removed.begin(), _removed.end(), _names[v]) == _removed.end())
                            keep.push_back(v);
                    return induced_subgraph(Graph(static_cast<int>(_names.size()), _edges, _names), keep).graph;
                }

            private:
                std::map<string, int> _ids;
                vector<string> _names;
                vector<Edge> _edges;
                vector<string> _removed;
        };

        auto b(int i) -> string { return "b" + std::to_string(i); }
        auto t(int i) -> string { return "t" + std::to_string(i); }

        // Bottom path b0..b(i+2); pendant tops t0 at b1 and t(i+1) at b(i+1);
        // triangle tops t1..ti on consecutive bottom pairs.
        void build_r(Builder & g, int i)
        {
            for (int j = 0; j <= i + 2; ++j)
                g.vertex(b(j));
            g.vertex(t(0));
            for (int j = 1; j <= i; ++j)
                g.vertex(t(j));
            g.vertex(t(i + 1));

            for (int j = 0; j < i + 2; ++j)
                g.edge(b(j), b(j + 1));
            g.edge(t(0), b(1));
            for (int j = 1; j <= i; ++j) {
                g.edge(t(j), b(j));
                g.edge(t(j), b(j + 1));
            }
            g.edge(t(i + 1), b(i + 1));
        }

        // Q_k drops the two degree-1 vertices hanging off b(k+1).
        void build_q(Builder & g, int k)
        {
            build_r(g, k);
            g.remove(t(k + 1));
            g.remove(b(k + 2));
        }

        // Bottom b0..b(i+1); triangle tops t0..t(i-1); pendant top ti at bi.
        void build_s_base(Builder & g, int i)
        {
            for (int j = 0; j <= i + 1; ++j)
                g.vertex(b(j));
            for (int j = 0; j <= i; ++j)
                g.vertex(t(j));
            for (int j = 0; j <= i; ++j)
                g.edge(b(j), b(j + 1));
            for (int j = 0; j < i; ++j) {
                g.edge(t(j), b(j));
                g.edge(t(j), b(j + 1));
            }
            g.edge(t(i), b(i));
        }
    }

    auto family_name(Family f) -> string_view
    {
        for (auto & [fam, name] : family_names)
            if (fam == f)
                return name;
        throw std::logic_error("unknown family");
    }

    auto parse_family(string_view name) -> Family
    {
        for (auto & [fam, n] : family_names)
            if (n == name)
                return fam;
        throw std::invalid_argument("unknown family '" + string(name) + "'");
    }

    auto parse_family_id(string_view name) -> FamilyId
    {
        vector<string_view> parts;
        std::size_t start = 0;
        while (true) {
            auto us = name.find('_', start);
            parts.push_back(name.substr(start, us == string_view::npos ? string_view::npos : us - start));
            if (us == string_view::npos)
                break;
            start = us + 1;
        }

        FamilyId id{parse_family(parts[0]), {}};
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].empty() || parts[i].find_first_not_of("0123456789") != string_view::npos)
                throw std::invalid_argument("bad family parameter in '" + string(name) + "'");
            id.params.push_back(std::stoi(string(parts[i])));
        }
        id.validate();
        return id;
    }

    auto family_arity(Family f) -> int
    {
        switch (f) {
            case Family::R: case Family::S: case Family::Sprime: case Family::Sdoubleprime: case Family::Q: return 1;
            case Family::T: return 2;
            default: return 0;
        }
    }

    auto FamilyId::name() const -> string
    {
        string result{family_name(family)};
        for (int p : params)
            result += "_" + std::to_string(p);
        return result;
    }

    void FamilyId::validate() const
    {
        if (static_cast<int>(params.size()) != family_arity(family))
            throw std::invalid_argument(string(family_name(family)) + " takes " + std::to_string(family_arity(family)) + " parameter(s)");
        auto fail = [&] (const string & why) { throw std::invalid_argument(name() + ": " + why); };
        for (int p : params)
            if (p < 0)
                fail("parameters must be nonnegative");
        switch (family) {
            case Family::S: case Family::Sprime: if (params[0] < 1) fail("needs i >= 1"); break;
            case Family::Sdoubleprime: if (params[0] < 2) fail("needs i >= 2"); break;
            case Family::T: if (params[0] < params[1]) fail("needs i >= j"); break;
            default: break;
        }
    }

    auto member_size(const FamilyId & id) -> int
    {
        id.validate();
        switch (id.family) {
            case Family::K13: return 4;
            case Family::K14: case Family::K14star: case Family::K23star: return 5;
            case Family::K24star: case Family::G1: case Family::Fig2: return 6;
            case Family::R: return 2 * id.params[0] + 5;
            case Family::S: case Family::Sprime: case Family::Sdoubleprime: return 2 * id.params[0] + 4;
            case Family::T: return 2 * id.params[0] + 2 * id.params[1] + 6;
            case Family::Q: return 2 * id.params[0] + 3;
        }
        throw std::logic_error("unknown family");
    }

    auto generate(const FamilyId & id) -> Graph
    {
        id.validate();
        Builder g;
        switch (id.family) {
            case Family::K13:
            case Family::K14:
                for (int l = 1; l <= (id.family == Family::K13 ? 3 : 4); ++l)
                    g.edge("c", "l" + std::to_string(l));
                break;

            case Family::K14star:
            case Family::Fig2:
                for (int l = 1; l <= 4; ++l)
                    g.edge("c", "l" + std::to_string(l));
                g.edge("l3", "l4");
                if (id.family == Family::Fig2)
                    g.edge("l4", "w");
                break;

            case Family::K23star:
                for (auto hub : {"h1", "h2"})
                    for (auto leaf : {"l1", "l2", "l3"})
                        g.edge(hub, leaf);
                g.edge("h1", "h2");
                break;

            case Family::K24star:
                for (auto bot : {"b0", "b1", "b2"})
                    g.edge("t1", bot);
                for (auto bot : {"b1", "b2", "b3"})
                    g.edge("t2", bot);
                g.edge("t1", "t2");
                break;

            case Family::G1:
                g.edge("x", "y");
                for (auto m : {"p", "m", "q"}) {
                    g.edge(m, "x");
                    g.edge(m, "y");
                }
                g.edge("z", "x");
                g.edge("z", "p");
                break;

            case Family::R:
                build_r(g, id.params[0]);
                break;

            case Family::Q:
                build_q(g, id.params[0]);
                break;

            case Family::S:
            case Family::Sdoubleprime:
                build_s_base(g, id.params[0]);
                for (auto & x : {t(0), t(1), b(1)})
                    g.edge("a", x);
                if (id.family == Family::Sdoubleprime)
                    g.edge("a", b(2));
                break;

            case Family::Sprime:
                build_s_base(g, id.params[0]);
                for (auto & x : {t(0), b(0), b(1)})
                    g.edge("z", x);
                break;

            case Family::T: {
                int i = id.params[0], j = id.params[1];
                auto qi = generate({Family::Q, {i}}), qj = generate({Family::Q, {j}});
                for (auto [half, q] : {pair{"A.", &qi}, pair{"B.", &qj}}) {
                    for (int v = 0; v < q->size(); ++v)
                        g.vertex(half + q->label(v));
                    for (auto [u, v] : q->edges())
                        g.edge(half + q->label(u), half + q->label(v));
                }
                auto vi = "A." + b(i + 1), wi = "A." + t(i), vj = "B." + b(j + 1), wj = "B." + t(j);
                g.edge(vi, vj);
                g.edge(vi, wj);
                g.edge(wi, vj);
                break;
            }
        }
        return g.build();
    }

    auto special_vertices(int k) -> pair<int, int>
    {
        auto q = generate({Family::Q, {k}});
        return {*q.find_label(b(k + 1)), *q.find_label(t(k))};
    }

    auto list_name(ForbiddenList l) -> string_view
    {
        return l == ForbiddenList::twin_free ? "mainthm" : "maincoro";
    }

    auto parse_list(string_view name) -> ForbiddenList
    {
        if (name == "mainthm" || name == "twin-free")
            return ForbiddenList::twin_free;
        if (name == "maincoro" || name == "general")
            return ForbiddenList::general;
        throw std::invalid_argument("unknown forbidden list '" + string(name) + "'");
    }

    auto list_members(ForbiddenList list, int max_vertices) -> vector<FamilyId>
    {
        vector<pair<int, FamilyId>> found;
        auto offer = [&] (FamilyId id) {
            auto s = member_size(id);
            if (s <= max_vertices)
                found.emplace_back(static_cast<int>(found.size()), std::move(id));
            return s <= max_vertices;
        };

        offer({list == ForbiddenList::twin_free ? Family::K23star : Family::G1, {}});
        for (int i = 0; offer({Family::R, {i}}); ++i)
            ;
        for (int i = 1; offer({Family::S, {i}}); ++i)
            ;
        if (list == ForbiddenList::twin_free)
            for (int i = 1; offer({Family::Sprime, {i}}); ++i)
                ;
        else
            for (int i = 2; offer({Family::Sdoubleprime, {i}}); ++i)
                ;
        for (int j = 0; member_size({Family::T, {j, j}}) <= max_vertices; ++j)
            for (int i = j; offer({Family::T, {i, j}}); ++i)
                ;

        std::stable_sort(found.begin(), found.end(), [] (const auto & a, const auto & b) {
            return member_size(a.second) < member_size(b.second);
        });

        vector<FamilyId> result;
        for (auto & [_, id] : found)
            result.push_back(std::move(id));
        return result;
    }

    auto verify_induced(const Graph & g, const Graph & h, const vector<int> & map) -> bool
    {
        if (static_cast<int>(map.size()) != h.size())
            return false;
        vector<bool> used(g.size(), false);
        for (int x : map) {
            if (x < 0 || x >= g.size() || used[x])
                return false;
            used[x] = true;
        }
        for (int p = 0; p < h.size(); ++p)
            for (int q = p + 1; q < h.size(); ++q)
                if (h.adjacent(p, q) != g.adjacent(map[p], map[q]))
                    return false;
        return true;
    }

    namespace
    {
        auto neighbour_degree_signature(const Graph & g, int v) -> vector<int>
        {
            vector<int> sig;
            for (int w : g.neighbours(v))
                sig.push_back(g.degree(w));
            std::sort(sig.begin(), sig.end(), std::greater<>());
            return sig;
        }

        // Each pattern neighbour needs a distinct host neighbour of at least
        // its degree; with both lists sorted descending this is elementwise.
        auto dominated(const vector<int> & pattern, const vector<int> & host) -> bool
        {
            if (pattern.size() > host.size())
                return false;
            for (std::size_t i = 0; i < pattern.size(); ++i)
                if (pattern[i] > host[i])
                    return false;
            return true;
        }

        class InducedSearch
        {
            public:
                InducedSearch(const Graph & g, const Graph & h) :
                    _g(g), _h(h), _map(h.size(), -1), _used(g.size(), false), _compatible(h.size(), vector<bool>(g.size(), false))
                {
                    vector<vector<int>> gsig(g.size());
                    for (int x = 0; x < g.size(); ++x)
                        gsig[x] = neighbour_degree_signature(g, x);
                    for (int p = 0; p < h.size(); ++p) {
                        auto psig = neighbour_degree_signature(h, p);
                        for (int x = 0; x < g.size(); ++x)
                            _compatible[p][x] = g.degree(x) >= h.degree(p) && dominated(psig, gsig[x]);
                    }

                    // most already-ordered neighbours first, then highest degree
                    vector<bool> placed(h.size(), false);
                    vector<int> ordered_nbrs(h.size(), 0);
                    for (int step = 0; step < h.size(); ++step) {
                        int best = -1;
                        for (int p = 0; p < h.size(); ++p)
                            if (! placed[p] && (best == -1 || ordered_nbrs[p] > ordered_nbrs[best]
                                        || (ordered_nbrs[p] == ordered_nbrs[best] && h.degree(p) > h.degree(best))))
                                best = p;
                        placed[best] = true;
                        _order.push_back(best);
                        for (int q : h.neighbours(best))
                            ++ordered_nbrs[q];
                    }
                }

                auto run() -> optional<vector<int>>
                {
                    if (_h.size() > _g.size() || _h.edge_count() > _g.edge_count())
                        return std::nullopt;
                    if (extend(0))
                        return _map;
                    return std::nullopt;
                }

            private:
                auto extend(std::size_t depth) -> bool
                {
                    if (depth == _order.size())
                        return true;
                    int p = _order[depth];

                    int anchor = -1;
                    for (int q : _h.neighbours(p))
                        if (_map[q] != -1) {
                            anchor = q;
                            break;
                        }

                    auto attempt = [&] (int x) {
                        if (_used[x] || ! _compatible[p][x])
                            return false;
                        for (std::size_t d = 0; d < depth; ++d) {
                            int q = _order[d];
                            if (_h.adjacent(p, q) != _g.adjacent(x, _map[q]))
                                return false;
                        }
                        _map[p] = x;
                        _used[x] = true;
                        if (extend(depth + 1))
                            return true;
                        _map[p] = -1;
                        _used[x] = false;
                        return false;
                    };

                    if (anchor != -1) {
                        for (int x : _g.neighbours(_map[anchor]))
                            if (attempt(x))
                                return true;
                    }
                    else {
                        for (int x = 0; x < _g.size(); ++x)
                            if (attempt(x))
                                return true;
                    }
                    return false;
                }

                const Graph & _g;
                const Graph & _h;
                vector<int> _order;
                vector<int> _map;
                vector<bool> _used;
                vector<vector<bool>> _compatible;
        };
    }

    auto find_induced(const Graph & g, const Graph & h) -> optional<vector<int>>
    {
        return InducedSearch(g, h).run();
    }

    auto find_forbidden(const Graph & g, ForbiddenList list) -> optional<Embedding>
    {
        for (auto & id : list_members(list, g.size()))
            if (auto map = find_induced(g, generate(id)))
                return Embedding{id, std::move(*map)};
        return std::nullopt;
    }
}
