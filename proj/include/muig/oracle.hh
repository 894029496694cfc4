#ifndef MUIG_ORACLE_HH
#define MUIG_ORACLE_HH

#include <muig/graph.hh>
#include <muig/interval.hh>
#include <muig/rational.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace muig
{
    /// Unit intervals <lo[v], lo[v] + 1> with per-vertex end types.
    struct UnitPlacement
    {
        std::vector<Rational> lo;
        std::vector<BoundaryType> type;

        [[nodiscard]] auto representation() const -> Representation;
    };

    struct OracleOptions
    {
        int size_bound = 10;
        /// Randomizes pair and branch order; deterministic for a given seed.
        std::optional<std::uint64_t> shuffle_seed;
    };

    struct OracleStats
    {
        long nodes = 0;
    };

    /// Branches per vertex pair on distance below, equal to, or above 1 (as
    /// the adjacency allows), with difference-constraint feasibility and an
    /// end-closedness layer. No size bound and no witness check.
    auto solve_disjunctive_differences(const Graph & g, const OracleOptions & options = {}, OracleStats * stats = nullptr)
        -> std::optional<UnitPlacement>;

    /// Exhaustive search over unit placements. The witness is always checked
    /// against g before being returned. Throws SizeBoundExceeded above the bound.
    auto oracle_mixed_unit(const Graph & g, const OracleOptions & options = {}, OracleStats * stats = nullptr)
        -> std::optional<UnitPlacement>;
}

#endif
