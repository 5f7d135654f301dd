#pragma once

#include "treewalk/graph.hpp"

namespace treewalk {

/// Backtracking isomorphism test for small graphs (degree-refined candidate sets).
[[nodiscard]] bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

[[nodiscard]] SimpleGraph cycle_graph(std::size_t n);
[[nodiscard]] SimpleGraph path_graph(std::size_t n);
[[nodiscard]] SimpleGraph complete_graph(std::size_t n);

/// Connected and every vertex of degree 2.
[[nodiscard]] bool is_cycle(const SimpleGraph& g);

} // namespace treewalk
