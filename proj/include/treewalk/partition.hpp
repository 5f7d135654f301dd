#pragma once

#include "treewalk/derive.hpp"
#include "treewalk/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace treewalk {

/// Vertex classes of a derived graph, ordered by their tree (vt, then et).
struct TreePartition {
    std::vector<std::vector<std::uint32_t>> classes;
    std::vector<TreeData> class_trees;
    std::vector<std::uint32_t> class_of;  // vertex → class index

    [[nodiscard]] std::size_t size() const noexcept { return classes.size(); }
    [[nodiscard]] std::optional<std::size_t> find_class(const TreeData& tree) const;
};

/// Groups vertices by identical TreeData. Requires a tl/btl graph at level ≥ 1.
[[nodiscard]] TreePartition tree_partition(const DerivedGraph& d);

/// Every vertex in its own class, in vertex order.
[[nodiscard]] TreePartition singleton_partition(const DerivedGraph& d);

struct EquitabilityWitness {
    std::size_t class_i = 0;
    std::size_t class_j = 0;
    std::uint32_t vertex_a = 0;
    std::uint32_t vertex_b = 0;
    std::size_t count_a = 0;
    std::size_t count_b = 0;
};

struct EquitabilityReport {
    bool equitable = true;
    std::optional<EquitabilityWitness> witness;

    explicit operator bool() const noexcept { return equitable; }
};

/// Throws std::invalid_argument if p does not partition the vertex set of g.
[[nodiscard]] EquitabilityReport is_equitable(const SimpleGraph& g, const TreePartition& p);
[[nodiscard]] EquitabilityReport is_equitable(const DerivedGraph& d, const TreePartition& p);

struct QuotientMatrix {
    IntMatrix b;  ///< b(i, j): neighbours in class j of any vertex of class i
    std::vector<std::uint64_t> sizes;
    std::vector<TreeData> class_trees;
};

/// Throws NotEquitable (with the witness in the message) when p is not equitable.
[[nodiscard]] QuotientMatrix quotient_matrix(const SimpleGraph& g, const TreePartition& p);
[[nodiscard]] QuotientMatrix quotient_matrix(const DerivedGraph& d, const TreePartition& p);

/// No edge inside any class.
[[nodiscard]] bool classes_independent(const SimpleGraph& g, const TreePartition& p);
/// Any two classes joined by an edge are joined by all |Mᵢ|·|Mⱼ| edges.
[[nodiscard]] bool classes_fully_joined(const SimpleGraph& g, const TreePartition& p);

[[nodiscard]] std::string quotient_to_csv(const QuotientMatrix& q);
[[nodiscard]] nlohmann::json quotient_to_json(const QuotientMatrix& q, const PrimitiveGraph& base);
[[nodiscard]] nlohmann::json partition_to_json(const DerivedGraph& d, const TreePartition& p);

/**
 * bℓⁿΓ described by its tree classes alone. In a btl graph each class is an
 * independent set of twins and joined classes are completely joined, so the
 * class trees with their sizes determine the graph; nothing is materialized.
 */
struct BtlClassStructure {
    std::uint32_t level = 0;
    std::vector<TreeData> class_trees;
    std::vector<std::uint64_t> sizes;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> joined;  // class pairs, i < j
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;

    /// b(i, j) = sizes[j] when classes i and j are joined.
    [[nodiscard]] IntMatrix quotient() const;
    /// x^{N−C}·det(xI − quotient), the characteristic polynomial of the full adjacency matrix.
    [[nodiscard]] IntPoly char_poly() const;
};

/// Throws NotConnected when an intermediate level is disconnected and
/// DerivationTooLarge when a class size or count overflows 64 bits.
[[nodiscard]] BtlClassStructure btl_class_structure(const PrimitiveGraph& g, std::uint32_t level);

} // namespace treewalk
