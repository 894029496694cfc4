#ifndef MUIG_CATALOG_HH
#define MUIG_CATALOG_HH

#include <muig/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace muig
{
    enum class Family
    {
        K13, K14, K14star, K23star, K24star, R, S, Sprime, Sdoubleprime, T, Q, G1, Fig2
    };

    struct FamilyId
    {
        Family family;
        std::vector<int> params;

        /// e.g. "R_2", "T_1_0", "K23star".
        [[nodiscard]] auto name() const -> std::string;

        /// Throws std::invalid_argument if the parameters are out of range.
        void validate() const;

        friend auto operator==(const FamilyId &, const FamilyId &) -> bool = default;
    };

    auto family_name(Family f) -> std::string_view;
    auto parse_family(std::string_view name) -> Family;
    auto parse_family_id(std::string_view name) -> FamilyId;

    /// Number of parameters the family takes.
    auto family_arity(Family f) -> int;

    /// Vertex count of a member, from the closed-form formulas.
    auto member_size(const FamilyId & id) -> int;

    /// Builds the member, with role labels (b* bottom path, t* tops, a apex,
    /// z extra vertex; T members prefix the two Q halves with A. and B.).
    /// Throws std::invalid_argument for out-of-range parameters.
    auto generate(const FamilyId & id) -> Graph;

    /// The two special vertices (v, w) of Q_k, as ids in generate(Q(k)).
    auto special_vertices(int k) -> std::pair<int, int>;

    struct Embedding
    {
        FamilyId family;
        /// map[i] is the host vertex playing member vertex i.
        std::vector<int> map;
    };

    enum class ForbiddenList
    {
        twin_free,   ///< K23star, R, S, Sprime, T: for twin-free graphs
        general      ///< G1, R, S, Sdoubleprime, T: for arbitrary graphs
    };

    auto list_name(ForbiddenList l) -> std::string_view;
    auto parse_list(std::string_view name) -> ForbiddenList;

    /// Every member of the list with at most max_vertices vertices, smallest
    /// first, ties broken by family order in the list.
    auto list_members(ForbiddenList list, int max_vertices) -> std::vector<FamilyId>;

    /// Injective map from h into g preserving edges and nonedges.
    auto find_induced(const Graph & g, const Graph & h) -> std::optional<std::vector<int>>;

    auto verify_induced(const Graph & g, const Graph & h, const std::vector<int> & map) -> bool;

    auto find_forbidden(const Graph & g, ForbiddenList list) -> std::optional<Embedding>;
}

#endif
