#include "treewalk/graph.hpp"

#include "treewalk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace treewalk {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
{
    SimpleGraph g;
    g.n = n;
    for (auto& [a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("SimpleGraph: loop edge");
        }
        if (a >= n || b >= n) {
            throw std::invalid_argument("SimpleGraph: endpoint out of range");
        }
        if (a > b) {
            std::swap(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("SimpleGraph: duplicate edge");
    }
    g.neighbors.assign(n, {});
    for (const auto& [a, b] : edges) {
        g.neighbors[a].push_back(b);
        g.neighbors[b].push_back(a);
    }
    for (auto& list : g.neighbors) {
        std::sort(list.begin(), list.end());
    }
    g.edges = std::move(edges);
    return g;
}

bool SimpleGraph::adjacent(std::uint32_t a, std::uint32_t b) const
{
    const auto& list = neighbors.at(a);
    return std::binary_search(list.begin(), list.end(), b);
}

bool SimpleGraph::is_connected() const
{
    if (n == 0) {
        return false;
    }
    std::vector<char> seen(n, 0);
    std::queue<std::uint32_t> queue;
    queue.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop();
        for (auto w : neighbors[v]) {
            if (seen[w] == 0) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == n;
}

IntMatrix adjacency_matrix(const SimpleGraph& g)
{
    const auto n = static_cast<Eigen::Index>(g.n);
    IntMatrix a = IntMatrix::Zero(n, n);
    for (const auto& [i, j] : g.edges) {
        a(i, j) = 1;
        a(j, i) = 1;
    }
    return a;
}

SimpleGraph graph_from_adjacency(const IntMatrix& a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("adjacency matrix must be square");
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (a(i, i) != 0) {
            throw std::invalid_argument("adjacency matrix has a nonzero diagonal");
        }
        for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
            if (a(i, j) != a(j, i) || (a(i, j) != 0 && a(i, j) != 1)) {
                throw std::invalid_argument("adjacency matrix must be symmetric 0/1");
            }
            if (a(i, j) == 1) {
                edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            }
        }
    }
    return SimpleGraph::from_edges(static_cast<std::size_t>(a.rows()), std::move(edges));
}

PrimitiveGraph PrimitiveGraph::from_edge_list(std::size_t n,
                                              std::span<const std::pair<std::int64_t, std::int64_t>> pairs)
{
    if (n == 0) {
        throw VertexOutOfRange("graph must have at least one vertex");
    }
    PrimitiveGraph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const auto limit = static_cast<std::int64_t>(n);
        if (a < 1 || a > limit || b < 1 || b > limit) {
            throw VertexOutOfRange("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                   "} has an endpoint outside 1.." + std::to_string(n));
        }
        if (a == b) {
            throw InvalidEdge("loop edge at vertex " + std::to_string(a));
        }
        g.edges_.push_back(Edge{static_cast<std::uint32_t>(std::min(a, b)),
                                static_cast<std::uint32_t>(std::max(a, b))});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto it = std::adjacent_find(g.edges_.begin(), g.edges_.end()); it != g.edges_.end()) {
        throw DuplicateEdge("duplicate edge {" + std::to_string(it->u) + "," + std::to_string(it->v) + "}");
    }
    g.adj_.assign(n, Bitset(n));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> zero_based;
    zero_based.reserve(g.edges_.size());
    for (const auto& e : g.edges_) {
        g.adj_[e.u - 1].set(e.v - 1);
        g.adj_[e.v - 1].set(e.u - 1);
        zero_based.emplace_back(e.u - 1, e.v - 1);
    }
    g.simple_ = SimpleGraph::from_edges(n, std::move(zero_based));
    return g;
}

const Bitset& PrimitiveGraph::neighbors(std::uint32_t v) const
{
    if (v < 1 || v > n_) {
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    }
    return adj_[v - 1];
}

std::optional<std::size_t> PrimitiveGraph::edge_index(std::uint32_t u, std::uint32_t v) const
{
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

bool PrimitiveGraph::is_connected() const { return simple_.is_connected(); }

TreeData empty_subgraph(const PrimitiveGraph& g)
{
    return TreeData{Bitset(g.vertex_count()), Bitset(g.edge_count())};
}

TreeData vertex_subgraph(const PrimitiveGraph& g, std::uint32_t v)
{
    if (v < 1 || v > g.vertex_count()) {
        throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    }
    auto t = empty_subgraph(g);
    t.vt.set(v - 1);
    return t;
}

TreeData edge_subgraph(const PrimitiveGraph& g, std::size_t edge_index)
{
    const auto& e = g.edge(edge_index);
    auto t = empty_subgraph(g);
    t.vt.set(e.u - 1);
    t.vt.set(e.v - 1);
    t.et.set(edge_index);
    return t;
}

TreeData make_subgraph(const PrimitiveGraph& g, std::span<const std::uint32_t> vertices,
                       std::span<const Edge> edges)
{
    auto t = empty_subgraph(g);
    for (auto v : vertices) {
        if (v < 1 || v > g.vertex_count()) {
            throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
        }
        t.vt.set(v - 1);
    }
    for (const auto& e : edges) {
        auto idx = g.edge_index(e.u, e.v);
        if (!idx) {
            throw InvalidEdge("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} is not in the graph");
        }
        t.et.set(*idx);
    }
    return t;
}

bool is_well_formed(const PrimitiveGraph& g, const TreeData& s)
{
    if (s.vt.size() != g.vertex_count() || s.et.size() != g.edge_count()) {
        return false;
    }
    bool ok = true;
    s.et.for_each([&](std::size_t idx) {
        const auto& e = g.edge(idx);
        ok = ok && s.vt.test(e.u - 1) && s.vt.test(e.v - 1);
    });
    return ok;
}

bool is_connected_subgraph(const PrimitiveGraph& g, const TreeData& s)
{
    if (!is_well_formed(g, s)) {
        throw MalformedSubgraph("subgraph edge has an endpoint outside its vertex set");
    }
    const auto verts = s.vt.members();
    if (verts.empty()) {
        return false;
    }
    DisjointSets sets(g.vertex_count());
    s.et.for_each([&](std::size_t idx) {
        const auto& e = g.edge(idx);
        sets.unite(e.u - 1, e.v - 1);
    });
    const auto root = sets.find(verts.front());
    return std::all_of(verts.begin(), verts.end(), [&](std::size_t v) { return sets.find(v) == root; });
}

bool is_tree(const PrimitiveGraph& g, const TreeData& s)
{
    const bool connected = is_connected_subgraph(g, s);
    return connected && s.vertex_count() == s.edge_count() + 1;
}

TreeData subgraph_union(const TreeData& a, const TreeData& b) { return TreeData{a.vt | b.vt, a.et | b.et}; }

TreeData subgraph_intersection(const TreeData& a, const TreeData& b)
{
    return TreeData{a.vt & b.vt, a.et & b.et};
}

std::vector<std::uint32_t> subgraph_vertices(const TreeData& s)
{
    std::vector<std::uint32_t> out;
    s.vt.for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i + 1)); });
    return out;
}

std::vector<Edge> subgraph_edges(const PrimitiveGraph& g, const TreeData& s)
{
    std::vector<Edge> out;
    s.et.for_each([&](std::size_t i) { out.push_back(g.edge(i)); });
    return out;
}

} // namespace treewalk
