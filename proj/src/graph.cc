#include <muig/graph.hh>

#include <algorithm>
#include <map>
#include <stdexcept>

using std::optional;
using std::string;
using std::vector;

namespace muig
{
    Graph::Graph(int n, const vector<Edge> & edges, vector<string> labels) :
        _n(n),
        _adj(static_cast<std::size_t>(n) * n, false),
        _nbrs(n),
        _labels(std::move(labels))
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        if (! _labels.empty() && static_cast<int>(_labels.size()) != n)
            throw std::invalid_argument("label count does not match vertex count");

        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
            if (u == v)
                throw std::invalid_argument("self-loop at " + std::to_string(u));
            if (_adj[u * n + v])
                throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            _adj[u * n + v] = _adj[v * n + u] = true;
            _nbrs[u].push_back(v);
            _nbrs[v].push_back(u);
            ++_m;
        }

        for (auto & l : _nbrs)
            std::sort(l.begin(), l.end());
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_m);
        for (int u = 0; u < _n; ++u)
            for (int v : _nbrs[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::label(int v) const -> string
    {
        return _labels.empty() ? std::to_string(v) : _labels[v];
    }

    auto Graph::find_label(const string & l) const -> optional<int>
    {
        auto it = std::find(_labels.begin(), _labels.end(), l);
        if (it == _labels.end())
            return std::nullopt;
        return static_cast<int>(it - _labels.begin());
    }

    auto Graph::closed_neighbourhood(int v) const -> vector<int>
    {
        auto result = _nbrs[v];
        result.insert(std::lower_bound(result.begin(), result.end(), v), v);
        return result;
    }

    auto induced_subgraph(const Graph & g, const vector<int> & s) -> InducedSubgraph
    {
        InducedSubgraph result;
        result.to_new.assign(g.size(), -1);
        result.to_old = s;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= g.size())
                throw std::out_of_range("unknown vertex " + std::to_string(s[i]));
            if (result.to_new[s[i]] != -1)
                throw std::invalid_argument("vertex " + std::to_string(s[i]) + " repeated");
            result.to_new[s[i]] = static_cast<int>(i);
        }

        vector<Edge> edges;
        vector<string> labels;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (int w : g.neighbours(s[i]))
                if (result.to_new[w] > static_cast<int>(i))
                    edges.emplace_back(static_cast<int>(i), result.to_new[w]);
            if (! g.labels().empty())
                labels.push_back(g.labels()[s[i]]);
        }

        result.graph = Graph(static_cast<int>(s.size()), edges, std::move(labels));
        return result;
    }

    auto twin_partition(const Graph & g) -> TwinPartition
    {
        // An ordered map keyed by the neighbourhood itself, so equal keys really
        // are equal neighbourhoods and no collision handling is needed.
        std::map<vector<int>, int> class_by_nbhd;
        TwinPartition result;
        result.class_of.resize(g.size());
        for (int v = 0; v < g.size(); ++v) {
            auto [it, inserted] = class_by_nbhd.try_emplace(g.closed_neighbourhood(v), static_cast<int>(result.classes.size()));
            if (inserted)
                result.classes.emplace_back();
            result.classes[it->second].push_back(v);
            result.class_of[v] = it->second;
        }
        return result;
    }

    auto is_twin_free(const Graph & g) -> bool
    {
        return static_cast<int>(twin_partition(g).classes.size()) == g.size();
    }

    auto twin_quotient(const Graph & g) -> TwinQuotient
    {
        auto partition = twin_partition(g);
        vector<int> reps;
        for (std::size_t c = 0; c < partition.classes.size(); ++c)
            reps.push_back(partition.representative(static_cast<int>(c)));
        return TwinQuotient{induced_subgraph(g, reps).graph, std::move(partition)};
    }

    auto complete_graph(int n) -> Graph
    {
        vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                e.emplace_back(u, v);
        return Graph(n, e);
    }

    auto path_graph(int n) -> Graph
    {
        vector<Edge> e;
        for (int u = 0; u + 1 < n; ++u)
            e.emplace_back(u, u + 1);
        return Graph(n, e);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw std::invalid_argument("cycle needs at least three vertices");
        vector<Edge> e;
        for (int u = 0; u < n; ++u)
            e.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
        return Graph(n, e);
    }

    auto star_graph(int leaves) -> Graph
    {
        vector<Edge> e;
        for (int v = 1; v <= leaves; ++v)
            e.emplace_back(0, v);
        return Graph(leaves + 1, e);
    }
}
