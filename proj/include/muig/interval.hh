#ifndef MUIG_INTERVAL_HH
#define MUIG_INTERVAL_HH

#include <muig/graph.hh>
#include <muig/rational.hh>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace muig
{
    enum class BoundaryType
    {
        closed,       ///< [x,y]
        open,         ///< (x,y)
        open_closed,  ///< (x,y]
        closed_open   ///< [x,y)
    };

    auto boundary_name(BoundaryType t) -> std::string_view;
    auto parse_boundary(std::string_view name) -> BoundaryType;
    auto make_boundary(bool lo_closed, bool hi_closed) -> BoundaryType;

    class Interval
    {
        public:
            /// Throws std::invalid_argument unless lo < hi.
            Interval(Rational lo, Rational hi, BoundaryType type = BoundaryType::closed);

            [[nodiscard]] auto lo() const -> const Rational & { return _lo; }
            [[nodiscard]] auto hi() const -> const Rational & { return _hi; }
            [[nodiscard]] auto type() const -> BoundaryType { return _type; }
            [[nodiscard]] auto lo_closed() const -> bool { return _type == BoundaryType::closed || _type == BoundaryType::closed_open; }
            [[nodiscard]] auto hi_closed() const -> bool { return _type == BoundaryType::closed || _type == BoundaryType::open_closed; }
            [[nodiscard]] auto is_closed() const -> bool { return _type == BoundaryType::closed; }

            [[nodiscard]] auto has_point(const Rational & x) const -> bool;

            /// Bracket notation, e.g. "(1/2,3]".
            [[nodiscard]] auto str() const -> std::string;

            friend auto operator==(const Interval &, const Interval &) -> bool = default;

        private:
            Rational _lo, _hi;
            BoundaryType _type;
    };

    auto intersects(const Interval & a, const Interval & b) -> bool;

    /// True iff b is a subset of a.
    auto contains(const Interval & a, const Interval & b) -> bool;

    /// Interval of vertex v is rep[v].
    using Representation = std::vector<Interval>;

    struct Mismatch
    {
        enum class Kind
        {
            missing_edge,   ///< adjacent in the graph, intervals disjoint
            extra_edge      ///< nonadjacent in the graph, intervals meet
        };

        int u, v;
        Kind kind;

        friend auto operator==(const Mismatch &, const Mismatch &) -> bool = default;
    };

    /// Empty iff rep realizes g. Pairs are reported with u < v.
    /// Throws std::invalid_argument if rep is not total on V(g).
    auto realizes(const Graph & g, const Representation & rep) -> std::vector<Mismatch>;

    auto is_unit(const Representation & rep) -> bool;
    auto is_closed_only(const Representation & rep) -> bool;
    auto has_distinct_endpoints(const Representation & rep) -> bool;
    auto is_mixed_proper(const Representation & rep) -> bool;

    /// All ordered (u, v), u != v, with rep[u] contained in rep[v].
    /// Throws std::invalid_argument unless rep is closed only.
    auto bad_pairs(const Representation & rep) -> std::vector<std::pair<int, int>>;

    /// Smallest positive gap between distinct endpoint values; zero if there
    /// is at most one distinct value.
    auto min_gap(const Representation & rep) -> Rational;
}

#endif
