#ifndef MUIG_BUILDER_HH
#define MUIG_BUILDER_HH

#include <muig/catalog.hh>
#include <muig/graph.hh>
#include <muig/interval.hh>
#include <muig/recognizer.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace muig
{
    /// One level X^k (or Y^k) of the chain hanging off a bad pair.
    struct ChainLevel
    {
        /// Sorted; one or two vertices.
        std::vector<int> members;
        /// x^k (smaller right end) or y^k (larger left end).
        int outer = -1;
        /// x^k' or y^k', -1 on the last level.
        int inner = -1;
    };

    struct ChainSystem
    {
        int u = -1, v = -1;
        /// left[k - 1] is X^k; lmax is left.size().
        std::vector<ChainLevel> left;
        /// right[k - 1] is Y^k; rmax is right.size().
        std::vector<ChainLevel> right;

        [[nodiscard]] auto lmax() const -> int { return static_cast<int>(left.size()); }
        [[nodiscard]] auto rmax() const -> int { return static_cast<int>(right.size()); }
    };

    /// rep must be a repaired closed representation of the twin-free,
    /// forbidden-free graph g, and (u, v) one of its bad pairs. Structural
    /// violations throw InternalInconsistency.
    auto extract_chains(const Graph & g, const Representation & rep, int u, int v) -> ChainSystem;

    /// Throws InternalInconsistency if some x^k' or y^k' lies in a bad pair,
    /// or some x^k or y^k is the contained side of one.
    void check_chain_bad_pairs(const std::vector<ChainSystem> & chains, const std::vector<std::pair<int, int>> & pairs);

    /// Clips every X^k member to end at l(x^(k-1)), with x^0 = v.
    auto shorten_left(const Representation & rep, const std::vector<ChainSystem> & chains) -> Representation;

    /// Clips every Y^k member to start at r'(y^(k-1)), with y^0 = v.
    auto shorten_right(const Representation & rep1, const std::vector<ChainSystem> & chains) -> Representation;

    /// Opens up contained intervals and the inner chain members. rep is the
    /// repaired representation the pairs and chains were taken from.
    auto blow_up(const Representation & rep, const Representation & rep2, const std::vector<ChainSystem> & chains,
            const std::vector<std::pair<int, int>> & pairs) -> Representation;

    /// Monotone remap of the endpoint values giving every interval length 1.
    /// rep must be mixed proper; throws UnitizationFailed if infeasible.
    auto unitize(const Representation & rep) -> Representation;

    struct ChainSummary
    {
        int u, v, lmax, rmax;
    };

    /// Intermediate results of the constructive pipeline on one twin-free graph.
    struct MixedPipeline
    {
        Representation initial;
        RepairStats repair;
        Representation repaired;
        std::vector<std::pair<int, int>> pairs;
        std::vector<ChainSystem> chains;
        Representation shortened_left;
        Representation shortened_right;
        Representation mixed;
        Representation unit;
    };

    /// Runs repair, chains, both shortenings, blow-up and unitization on a
    /// twin-free interval graph free of the twin-free forbidden list.
    auto build_mixed_pipeline(const Graph & g) -> MixedPipeline;

    enum class Verdict
    {
        not_interval,
        mixed_unit,
        not_mixed_unit
    };

    auto verdict_name(Verdict v) -> std::string;

    struct Transcript
    {
        int vertices = 0;
        int quotient_vertices = 0;
        int initial_bad_pairs = 0;
        int repair_moves = 0;
        int bad_pairs = 0;
        std::vector<ChainSummary> chains;
        /// Mixed proper representation of the twin quotient, before unitization.
        Representation quotient_mixed;
        std::vector<std::string> checks;
    };

    struct Certificate
    {
        Verdict verdict;
        /// Present iff verdict is mixed_unit; verified unit representation of g.
        std::optional<Representation> rep;
        /// Present iff verdict is not_mixed_unit; verified induced copy in g.
        std::optional<Embedding> embedding;
        Transcript transcript;
    };

    auto build_certificate(const Graph & g) -> Certificate;
}

#endif
