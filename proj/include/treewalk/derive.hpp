#pragma once

#include "treewalk/graph.hpp"

#include <Eigen/SparseCore>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace treewalk {

/// Which derived-graph family a DerivedGraph belongs to.
enum class DeriveKind {
    TreeLine,          ///< ℓⁿΓ: shared parent and count condition
    BipartiteTreeLine, ///< bℓⁿΓ: count condition only
    KTree,             ///< derived k-tree graph
};

[[nodiscard]] std::string_view to_string(DeriveKind kind) noexcept;
/// Accepts "tl", "btl", "ktree"; throws std::invalid_argument otherwise.
[[nodiscard]] DeriveKind parse_kind(std::string_view text);

/// Upper bounds on a single derivation step. Exceeding either is an error.
struct GrowthLimits {
    std::uint64_t max_vertices = 200'000;
    std::uint64_t max_edges = 20'000'000;
};

/**
 * A vertex of a derived graph.
 *
 * At level k ≥ 1 the vertex is an edge of level k-1 and `parents` holds the
 * two endpoint indices in that level (at level 1 these are 0-based primitive
 * vertices). `tree` caches T(v): the primitive vertices and edges the vertex
 * flattens to, which is a k-tree of the base graph.
 */
struct DerivedVertex {
    std::uint32_t level = 0;
    std::array<std::uint32_t, 2> parents{};
    TreeData tree;
};

/**
 * Immutable handle to one level of a derivation chain.
 *
 * Copies share storage. Each level keeps its parent level alive so labels
 * and incidence matrices can be reconstructed.
 */
class DerivedGraph {
public:
    /// Level 0: the primitive graph itself, every vertex carrying a 0-tree.
    static DerivedGraph level_zero(std::shared_ptr<const PrimitiveGraph> base, DeriveKind kind);
    static DerivedGraph level_zero(const PrimitiveGraph& base, DeriveKind kind);

    [[nodiscard]] DeriveKind kind() const noexcept;
    [[nodiscard]] std::uint32_t level() const noexcept;
    [[nodiscard]] const PrimitiveGraph& base() const noexcept;
    [[nodiscard]] const std::shared_ptr<const PrimitiveGraph>& base_ptr() const noexcept;
    [[nodiscard]] const std::vector<DerivedVertex>& vertices() const noexcept;
    [[nodiscard]] const DerivedVertex& vertex(std::size_t v) const { return vertices().at(v); }
    [[nodiscard]] const SimpleGraph& graph() const noexcept;
    [[nodiscard]] std::size_t vertex_count() const noexcept { return graph().n; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return graph().edge_count(); }

    [[nodiscard]] bool has_parent() const noexcept;
    /// The level this one was derived from; throws std::logic_error at level 0 or for k-tree graphs.
    [[nodiscard]] DerivedGraph parent() const;

    /// Index of the vertex whose parents are {a, b}, in either order.
    [[nodiscard]] std::optional<std::size_t> find_by_parents(std::uint32_t a, std::uint32_t b) const;

private:
    struct Data;
    explicit DerivedGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;

    friend DerivedGraph derive_step(const DerivedGraph&, DeriveKind, const GrowthLimits&);
    friend DerivedGraph k_tree_graph(const PrimitiveGraph&, std::size_t, const GrowthLimits&);
};

/**
 * Count condition between the cached trees of two candidate vertices:
 * |t1.vt ∪ t2.vt| = |t1.vt| + 1 = |t2.vt| + 1 and |t1.vt ∪ t2.vt| = |t1.et ∪ t2.et| + 1.
 */
[[nodiscard]] bool count_condition(const TreeData& t1, const TreeData& t2);

/// Definitional adjacency test, evaluated on explicit member lists rather
/// than bitset popcounts. tl additionally requires a shared parent.
[[nodiscard]] bool adjacency_oracle(const TreeData& t1, const TreeData& t2, bool shared_parent, DeriveKind kind);

/// One application of ℓ (TreeLine) or bℓ (BipartiteTreeLine).
/// Throws NotConnected, DerivationTooLarge, or std::invalid_argument on a kind mismatch.
[[nodiscard]] DerivedGraph derive_step(const DerivedGraph& g, DeriveKind kind, const GrowthLimits& limits = {});
[[nodiscard]] DerivedGraph derive_step(const PrimitiveGraph& g, DeriveKind kind, const GrowthLimits& limits = {});

/// n-fold derive_step starting from the primitive graph (n ≥ 1).
[[nodiscard]] DerivedGraph derive_iterated(const PrimitiveGraph& g, DeriveKind kind, std::uint32_t n,
                                           const GrowthLimits& limits = {});
/// n further steps from an existing derivation of the same kind.
[[nodiscard]] DerivedGraph derive_iterated(const DerivedGraph& g, std::uint32_t n, const GrowthLimits& limits = {});

[[nodiscard]] inline const TreeData& tree_map(const DerivedVertex& v) noexcept { return v.tree; }

/// All k-trees (connected subgraphs with k+1 vertices and k edges), sorted.
[[nodiscard]] std::vector<TreeData> enumerate_k_trees(const PrimitiveGraph& g, std::size_t k);

/// Vertices are the k-trees of g; two are adjacent iff their intersection is a (k-1)-tree.
[[nodiscard]] DerivedGraph k_tree_graph(const PrimitiveGraph& g, std::size_t k, const GrowthLimits& limits = {});

/// 0/1 incidence matrix of derived vertices (rows) against parent-level vertices (columns).
[[nodiscard]] Eigen::SparseMatrix<int> incidence_matrix(const DerivedGraph& d);

/// Whether X·Xᵀ − 2I equals the adjacency matrix of g.
[[nodiscard]] bool factorization_identity_holds(const SimpleGraph& g, const Eigen::SparseMatrix<int>& x);

/// factorization_identity_holds(d.graph(), incidence_matrix(d)).
[[nodiscard]] bool incidence_factorization_check(const DerivedGraph& d);

} // namespace treewalk
