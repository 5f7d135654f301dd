#pragma once

#include "treewalk/bitset.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace treewalk {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Unordered primitive edge {u, v}, stored with u < v (1-based vertices).
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * 0-based undirected simple graph with sorted neighbor lists.
 *
 * This is the common adjacency view shared by primitive and derived graphs;
 * partition, spectral and walk code only ever sees this type.
 */
struct SimpleGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted
    std::vector<std::vector<std::uint32_t>> neighbors;           // sorted

    /// Builds from an edge list; pairs are normalized and sorted. Loops and
    /// duplicates are a programming error here and throw std::invalid_argument.
    static SimpleGraph from_edges(std::size_t n,
                                  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    [[nodiscard]] std::size_t edge_count() const noexcept { return edges.size(); }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return neighbors.at(v).size(); }
    [[nodiscard]] bool adjacent(std::uint32_t a, std::uint32_t b) const;
    /// A graph with no vertices is not connected; a single vertex is.
    [[nodiscard]] bool is_connected() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

[[nodiscard]] IntMatrix adjacency_matrix(const SimpleGraph& g);

/// Builds the graph of a symmetric 0/1 matrix; throws std::invalid_argument otherwise.
[[nodiscard]] SimpleGraph graph_from_adjacency(const IntMatrix& a);

/**
 * The input simple graph: vertices 1..n, canonical sorted edge list, and
 * per-vertex neighbor bitsets (bit i-1 stands for vertex i).
 */
class PrimitiveGraph {
public:
    PrimitiveGraph() = default;

    /// Canonicalizes the pairs. Throws InvalidEdge on loops, DuplicateEdge on
    /// repeated pairs in either orientation, VertexOutOfRange on bad endpoints.
    static PrimitiveGraph from_edge_list(std::size_t n,
                                         std::span<const std::pair<std::int64_t, std::int64_t>> pairs);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge& edge(std::size_t index) const { return edges_.at(index); }
    [[nodiscard]] const Bitset& neighbors(std::uint32_t v) const;
    [[nodiscard]] std::size_t degree(std::uint32_t v) const { return neighbors(v).count(); }
    [[nodiscard]] std::optional<std::size_t> edge_index(std::uint32_t u, std::uint32_t v) const;
    [[nodiscard]] bool is_connected() const;

    /// 0-based view: primitive vertex i becomes i-1.
    [[nodiscard]] const SimpleGraph& simple() const noexcept { return simple_; }

    friend bool operator==(const PrimitiveGraph& a, const PrimitiveGraph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
    SimpleGraph simple_;
};

/**
 * A subgraph of a primitive graph: vertex set `vt` (bit i = vertex i+1) and
 * edge set `et` (bit j = edge index j of the canonical edge list).
 */
struct TreeData {
    Bitset vt;
    Bitset et;

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vt.count(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return et.count(); }

    friend bool operator==(const TreeData&, const TreeData&) = default;
    friend std::strong_ordering operator<=>(const TreeData& a, const TreeData& b)
    {
        if (auto c = a.vt <=> b.vt; c != 0) {
            return c;
        }
        return a.et <=> b.et;
    }
};

struct TreeDataHash {
    std::size_t operator()(const TreeData& t) const noexcept
    {
        return t.vt.hash() * 31 + t.et.hash();
    }
};

[[nodiscard]] TreeData empty_subgraph(const PrimitiveGraph& g);
[[nodiscard]] TreeData vertex_subgraph(const PrimitiveGraph& g, std::uint32_t v);
[[nodiscard]] TreeData edge_subgraph(const PrimitiveGraph& g, std::size_t edge_index);
/// Builds a subgraph from 1-based vertices and primitive edges; each edge must exist in g.
[[nodiscard]] TreeData make_subgraph(const PrimitiveGraph& g, std::span<const std::uint32_t> vertices,
                                     std::span<const Edge> edges);

/// Every edge of s has both endpoints in s.vt.
[[nodiscard]] bool is_well_formed(const PrimitiveGraph& g, const TreeData& s);
/// (vt, et) is connected; throws MalformedSubgraph when not well formed.
[[nodiscard]] bool is_connected_subgraph(const PrimitiveGraph& g, const TreeData& s);
/// Connected with |vt| = |et| + 1; throws MalformedSubgraph when not well formed.
[[nodiscard]] bool is_tree(const PrimitiveGraph& g, const TreeData& s);

[[nodiscard]] TreeData subgraph_union(const TreeData& a, const TreeData& b);
[[nodiscard]] TreeData subgraph_intersection(const TreeData& a, const TreeData& b);

/// 1-based vertex list and edge list of a subgraph, for printing.
[[nodiscard]] std::vector<std::uint32_t> subgraph_vertices(const TreeData& s);
[[nodiscard]] std::vector<Edge> subgraph_edges(const PrimitiveGraph& g, const TreeData& s);

} // namespace treewalk
