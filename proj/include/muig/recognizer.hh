#ifndef MUIG_RECOGNIZER_HH
#define MUIG_RECOGNIZER_HH

#include <muig/graph.hh>
#include <muig/interval.hh>

#include <optional>
#include <utility>
#include <vector>

namespace muig
{
    /// Maximal cliques in an order where each vertex's cliques are consecutive.
    struct CliquePath
    {
        std::vector<std::vector<int>> cliques;
    };

    struct IntervalModel
    {
        CliquePath path;
        /// Closed intervals with pairwise distinct endpoints.
        Representation rep;
    };

    /// Perfect elimination order via maximum cardinality search, or nothing
    /// if g is not chordal.
    auto perfect_elimination_order(const Graph & g) -> std::optional<std::vector<int>>;

    /// Absent iff g is not an interval graph.
    auto recognize_interval(const Graph & g) -> std::optional<IntervalModel>;

    /// Separates coinciding endpoint values, smallest tie first, until all
    /// 2n endpoints are distinct. Preserves the realized graph and every
    /// containment between non-identical intervals.
    auto perturb_endpoints(Representation rep) -> Representation;

    struct RepairStats
    {
        int initial_bad_pairs = 0;
        int final_bad_pairs = 0;
        int moves = 0;
        /// Bad-pair count before the first move and after each move.
        std::vector<int> counts;
    };

    struct RepairResult
    {
        Representation rep;
        RepairStats stats;
    };

    /// Applies the containment repair move until every bad pair (u, v) has
    /// witnesses x, y with l(v) <= r(x) < l(u) and r(u) < l(y) <= r(v).
    /// Input must be closed only and realize g.
    auto repair_bad_pairs(const Graph & g, Representation rep) -> RepairResult;

    /// Every bad pair has witnesses with strict inequalities.
    auto has_strict_witnesses(const Representation & rep) -> bool;

    /// Throws InternalInconsistency if some interval contains two others, or
    /// is contained in two others.
    void check_containment_uniqueness(const Representation & rep);
}

#endif
