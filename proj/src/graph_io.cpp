#include "treewalk/graph_io.hpp"

#include "treewalk/errors.hpp"

#include <fstream>
#include <sstream>

namespace treewalk {

namespace {

bool next_content_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        return true;
    }
    return false;
}

} // namespace

PrimitiveGraph read_edge_list(std::istream& in)
{
    std::string line;
    if (!next_content_line(in, line)) {
        throw ParseError("edge list: missing header line `n m`");
    }
    std::istringstream header(line);
    long long n = 0;
    long long m = 0;
    if (!(header >> n >> m) || n < 1 || m < 0) {
        throw ParseError("edge list: malformed header `" + line + "`");
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) {
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        }
        std::istringstream row(line);
        long long u = 0;
        long long v = 0;
        std::string rest;
        if (!(row >> u >> v) || (row >> rest)) {
            throw ParseError("edge list: malformed edge line `" + line + "`");
        }
        pairs.emplace_back(u, v);
    }
    if (next_content_line(in, line)) {
        throw ParseError("edge list: trailing content after " + std::to_string(m) + " edges");
    }
    return PrimitiveGraph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

PrimitiveGraph read_graph_json(const nlohmann::json& doc)
{
    try {
        const auto n = doc.at("n").get<long long>();
        if (n < 1) {
            throw ParseError("graph json: n must be positive");
        }
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("graph json: every edge must be a pair");
            }
            pairs.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
        }
        return PrimitiveGraph::from_edge_list(static_cast<std::size_t>(n), pairs);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("graph json: ") + ex.what());
    }
}

PrimitiveGraph parse_graph(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(std::string("graph json: ") + ex.what());
        }
        return read_graph_json(doc);
    }
    std::istringstream in(text);
    return read_edge_list(in);
}

PrimitiveGraph load_graph(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

nlohmann::json graph_to_json(const PrimitiveGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

std::string graph_to_edge_list(const PrimitiveGraph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

} // namespace treewalk
