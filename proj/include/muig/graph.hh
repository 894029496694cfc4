#ifndef MUIG_GRAPH_HH
#define MUIG_GRAPH_HH

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace muig
{
    using Edge = std::pair<int, int>;

    /// Simple undirected graph on vertices 0..n-1. Immutable once built.
    class Graph
    {
        public:
            Graph() = default;

            /// Throws std::invalid_argument on self-loops, duplicate edges,
            /// or out-of-range endpoints.
            Graph(int n, const std::vector<Edge> & edges, std::vector<std::string> labels = {});

            [[nodiscard]] auto size() const noexcept -> int { return _n; }
            [[nodiscard]] auto edge_count() const noexcept -> int { return _m; }
            [[nodiscard]] auto adjacent(int u, int v) const -> bool { return _adj[u * _n + v]; }
            [[nodiscard]] auto neighbours(int v) const -> const std::vector<int> & { return _nbrs[v]; }
            [[nodiscard]] auto degree(int v) const -> int { return static_cast<int>(_nbrs[v].size()); }

            /// Sorted, u < v.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            /// Empty when no labels were supplied.
            [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return _labels; }
            [[nodiscard]] auto label(int v) const -> std::string;
            [[nodiscard]] auto find_label(const std::string & l) const -> std::optional<int>;

            /// N[v], sorted.
            [[nodiscard]] auto closed_neighbourhood(int v) const -> std::vector<int>;

            friend auto operator==(const Graph & a, const Graph & b) -> bool { return a._n == b._n && a._adj == b._adj; }

        private:
            int _n = 0;
            int _m = 0;
            std::vector<bool> _adj;
            std::vector<std::vector<int>> _nbrs;
            std::vector<std::string> _labels;
    };

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<int> to_new;   ///< host id -> new id, or -1
        std::vector<int> to_old;   ///< new id -> host id
    };

    /// Vertices keep the order given in s. Throws std::out_of_range on an unknown id.
    auto induced_subgraph(const Graph & g, const std::vector<int> & s) -> InducedSubgraph;

    struct TwinPartition
    {
        /// Each class sorted; classes ordered by their smallest member.
        std::vector<std::vector<int>> classes;
        /// Index into classes, per vertex.
        std::vector<int> class_of;

        [[nodiscard]] auto representative(int cls) const -> int { return classes[cls].front(); }
    };

    auto twin_partition(const Graph & g) -> TwinPartition;
    auto is_twin_free(const Graph & g) -> bool;

    struct TwinQuotient
    {
        /// Induced on class representatives; quotient vertex i is class i.
        Graph graph;
        TwinPartition partition;
    };

    auto twin_quotient(const Graph & g) -> TwinQuotient;

    auto complete_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
}

#endif
