#pragma once

#include "treewalk/graph.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace treewalk {

/// Edge-list text: first line `n m`, then m lines `u v` (1-based).
/// Blank lines and lines starting with '#' are ignored.
[[nodiscard]] PrimitiveGraph read_edge_list(std::istream& in);

/// JSON: {"n": int, "edges": [[u, v], ...]}.
[[nodiscard]] PrimitiveGraph read_graph_json(const nlohmann::json& doc);

/// Chooses the format from the first non-blank character ('{' means JSON).
[[nodiscard]] PrimitiveGraph parse_graph(const std::string& text);

/// Throws std::system_error-style treewalk::ParseError on unreadable files.
[[nodiscard]] PrimitiveGraph load_graph(const std::filesystem::path& path);

[[nodiscard]] nlohmann::json graph_to_json(const PrimitiveGraph& g);
[[nodiscard]] std::string graph_to_edge_list(const PrimitiveGraph& g);

} // namespace treewalk
