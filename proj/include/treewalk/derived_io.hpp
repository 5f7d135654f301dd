#pragma once

#include "treewalk/derive.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace treewalk {

/// Nested-brace label of a derived vertex, e.g. {{1,2},{2,3}} at level 2.
/// Level-0 vertices print as their 1-based index. k-tree vertices print as
/// the tree itself: {1,2,3|12,23}.
[[nodiscard]] std::string vertex_label(const DerivedGraph& d, std::size_t v);

/// Number of brace levels in a label ("3" has depth 0).
[[nodiscard]] std::uint32_t label_depth(std::string_view label);

/// Resolves a nested-brace label (order-insensitive within each pair,
/// whitespace ignored) or a `#index` (0-based) to a vertex index.
/// Throws ParseError on malformed text and UnknownVertex when nothing matches.
[[nodiscard]] std::size_t resolve_label(const DerivedGraph& d, std::string_view label);

/// Tree as "vt={1,2,3} et={12,23}".
[[nodiscard]] std::string tree_to_string(const PrimitiveGraph& g, const TreeData& t);

[[nodiscard]] nlohmann::json tree_to_json(const PrimitiveGraph& g, const TreeData& t);
[[nodiscard]] nlohmann::json derived_to_json(const DerivedGraph& d);
[[nodiscard]] std::string derived_to_dot(const DerivedGraph& d);
[[nodiscard]] std::string derived_to_text(const DerivedGraph& d);

} // namespace treewalk
