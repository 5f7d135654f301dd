#include "treewalk/derive.hpp"

#include "treewalk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace treewalk {

struct DerivedGraph::Data {
    DeriveKind kind = DeriveKind::TreeLine;
    std::uint32_t level = 0;
    std::shared_ptr<const PrimitiveGraph> base;
    std::vector<DerivedVertex> vertices;
    SimpleGraph graph;
    std::shared_ptr<const Data> parent;
    std::unordered_map<std::uint64_t, std::uint32_t> by_parents;
};

namespace {

std::uint64_t parent_key(std::uint32_t a, std::uint32_t b)
{
    if (a > b) {
        std::swap(a, b);
    }
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        return UINT64_MAX;
    }
    return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        return UINT64_MAX;
    }
    return out;
}

std::vector<std::size_t> sorted_union(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    std::vector<std::size_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

std::string_view to_string(DeriveKind kind) noexcept
{
    switch (kind) {
    case DeriveKind::TreeLine:
        return "tl";
    case DeriveKind::BipartiteTreeLine:
        return "btl";
    case DeriveKind::KTree:
        return "ktree";
    }
    return "unknown";
}

DeriveKind parse_kind(std::string_view text)
{
    if (text == "tl") {
        return DeriveKind::TreeLine;
    }
    if (text == "btl") {
        return DeriveKind::BipartiteTreeLine;
    }
    if (text == "ktree") {
        return DeriveKind::KTree;
    }
    throw std::invalid_argument("unknown derivation kind `" + std::string(text) + "` (expected tl, btl or ktree)");
}

DerivedGraph DerivedGraph::level_zero(std::shared_ptr<const PrimitiveGraph> base, DeriveKind kind)
{
    if (!base) {
        throw std::invalid_argument("level_zero: null base graph");
    }
    auto data = std::make_shared<Data>();
    data->kind = kind;
    data->level = 0;
    data->base = base;
    data->vertices.reserve(base->vertex_count());
    for (std::uint32_t v = 1; v <= base->vertex_count(); ++v) {
        data->vertices.push_back(DerivedVertex{0, {v - 1, v - 1}, vertex_subgraph(*base, v)});
    }
    data->graph = base->simple();
    return DerivedGraph(std::move(data));
}

DerivedGraph DerivedGraph::level_zero(const PrimitiveGraph& base, DeriveKind kind)
{
    return level_zero(std::make_shared<const PrimitiveGraph>(base), kind);
}

DeriveKind DerivedGraph::kind() const noexcept { return data_->kind; }
std::uint32_t DerivedGraph::level() const noexcept { return data_->level; }
const PrimitiveGraph& DerivedGraph::base() const noexcept { return *data_->base; }
const std::shared_ptr<const PrimitiveGraph>& DerivedGraph::base_ptr() const noexcept { return data_->base; }
const std::vector<DerivedVertex>& DerivedGraph::vertices() const noexcept { return data_->vertices; }
const SimpleGraph& DerivedGraph::graph() const noexcept { return data_->graph; }
bool DerivedGraph::has_parent() const noexcept { return data_->parent != nullptr; }

DerivedGraph DerivedGraph::parent() const
{
    if (!data_->parent) {
        throw std::logic_error("derived graph has no parent level");
    }
    return DerivedGraph(data_->parent);
}

std::optional<std::size_t> DerivedGraph::find_by_parents(std::uint32_t a, std::uint32_t b) const
{
    auto it = data_->by_parents.find(parent_key(a, b));
    if (it == data_->by_parents.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool count_condition(const TreeData& t1, const TreeData& t2)
{
    const auto vu = union_count(t1.vt, t2.vt);
    if (vu != t1.vt.count() + 1 || vu != t2.vt.count() + 1) {
        return false;
    }
    return vu == union_count(t1.et, t2.et) + 1;
}

bool adjacency_oracle(const TreeData& t1, const TreeData& t2, bool shared_parent, DeriveKind kind)
{
    if (kind == DeriveKind::KTree) {
        throw std::invalid_argument("adjacency_oracle: k-tree graphs use intersection adjacency");
    }
    if (kind == DeriveKind::TreeLine && !shared_parent) {
        return false;
    }
    const auto v1 = t1.vt.members();
    const auto v2 = t2.vt.members();
    const auto vertex_union = sorted_union(v1, v2).size();
    const auto edge_union = sorted_union(t1.et.members(), t2.et.members()).size();
    return vertex_union == v1.size() + 1 && vertex_union == v2.size() + 1 && vertex_union == edge_union + 1;
}

DerivedGraph derive_step(const DerivedGraph& g, DeriveKind kind, const GrowthLimits& limits)
{
    if (kind == DeriveKind::KTree) {
        throw std::invalid_argument("derive_step: k-tree graphs are built with k_tree_graph");
    }
    if (g.kind() == DeriveKind::KTree) {
        throw std::invalid_argument("derive_step: cannot derive from a k-tree graph");
    }
    if (g.level() > 0 && g.kind() != kind) {
        throw std::invalid_argument("derive_step: kind does not match the derivation chain");
    }
    const auto& in = g.graph();
    if (!in.is_connected()) {
        throw NotConnected("derive_step: level " + std::to_string(g.level()) + " graph is not connected");
    }
    if (in.edge_count() > limits.max_vertices) {
        throw DerivationTooLarge("derived vertex count exceeds cap", in.edge_count(), limits.max_vertices);
    }

    const auto& base = g.base();
    const auto level = g.level() + 1;
    std::vector<DerivedVertex> raw;
    raw.reserve(in.edge_count());
    for (const auto& [i, j] : in.edges) {
        DerivedVertex v{level, {i, j}, subgraph_union(g.vertex(i).tree, g.vertex(j).tree)};
        if (g.level() == 0) {
            v.tree.et.set(*base.edge_index(i + 1, j + 1));
        }
        if (v.tree.vertex_count() != level + 1 || v.tree.edge_count() != level) {
            throw std::logic_error("derive_step: derived vertex tree is not a " + std::to_string(level) + "-tree");
        }
        raw.push_back(std::move(v));
    }

    std::vector<std::uint32_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        if (auto c = raw[a].tree <=> raw[b].tree; c != 0) {
            return c < 0;
        }
        return raw[a].parents < raw[b].parents;
    });

    auto data = std::make_shared<DerivedGraph::Data>();
    data->kind = kind;
    data->level = level;
    data->base = g.base_ptr();
    data->parent = g.data_;
    data->vertices.reserve(raw.size());
    for (auto idx : order) {
        data->vertices.push_back(std::move(raw[idx]));
    }
    const auto& verts = data->vertices;
    for (std::uint32_t v = 0; v < verts.size(); ++v) {
        data->by_parents.emplace(parent_key(verts[v].parents[0], verts[v].parents[1]), v);
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    if (kind == DeriveKind::TreeLine) {
        // Candidates share a parent: enumerate pairs around each parent vertex.
        std::vector<std::vector<std::uint32_t>> incident(in.n);
        for (std::uint32_t v = 0; v < verts.size(); ++v) {
            incident[verts[v].parents[0]].push_back(v);
            incident[verts[v].parents[1]].push_back(v);
        }
        for (const auto& around : incident) {
            for (std::size_t a = 0; a < around.size(); ++a) {
                for (std::size_t b = a + 1; b < around.size(); ++b) {
                    if (count_condition(verts[around[a]].tree, verts[around[b]].tree)) {
                        edges.emplace_back(around[a], around[b]);
                        if (edges.size() > limits.max_edges) {
                            throw DerivationTooLarge("derived edge count exceeds cap", edges.size(),
                                                     limits.max_edges);
                        }
                    }
                }
            }
        }
    } else {
        // Adjacency depends on trees only; vertices are sorted by tree, so the
        // classes are contiguous runs. Decide per class pair, then expand.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> runs;  // [begin, end)
        for (std::uint32_t v = 0; v < verts.size();) {
            std::uint32_t w = v + 1;
            while (w < verts.size() && verts[w].tree == verts[v].tree) {
                ++w;
            }
            runs.emplace_back(v, w);
            v = w;
        }
        std::vector<std::pair<std::size_t, std::size_t>> joined;
        std::uint64_t projected = 0;
        for (std::size_t a = 0; a < runs.size(); ++a) {
            for (std::size_t b = a + 1; b < runs.size(); ++b) {
                if (count_condition(verts[runs[a].first].tree, verts[runs[b].first].tree)) {
                    joined.emplace_back(a, b);
                    projected = saturating_add(
                        projected, checked_product(runs[a].second - runs[a].first, runs[b].second - runs[b].first));
                }
            }
        }
        if (projected > limits.max_edges) {
            throw DerivationTooLarge("derived edge count exceeds cap", projected, limits.max_edges);
        }
        edges.reserve(projected);
        for (const auto& [a, b] : joined) {
            for (auto x = runs[a].first; x < runs[a].second; ++x) {
                for (auto y = runs[b].first; y < runs[b].second; ++y) {
                    edges.emplace_back(x, y);
                }
            }
        }
    }
    data->graph = SimpleGraph::from_edges(verts.size(), std::move(edges));
    return DerivedGraph(std::move(data));
}

DerivedGraph derive_step(const PrimitiveGraph& g, DeriveKind kind, const GrowthLimits& limits)
{
    return derive_step(DerivedGraph::level_zero(g, kind), kind, limits);
}

DerivedGraph derive_iterated(const PrimitiveGraph& g, DeriveKind kind, std::uint32_t n, const GrowthLimits& limits)
{
    if (n < 1) {
        throw std::invalid_argument("derive_iterated: level must be at least 1");
    }
    return derive_iterated(DerivedGraph::level_zero(g, kind), n, limits);
}

DerivedGraph derive_iterated(const DerivedGraph& g, std::uint32_t n, const GrowthLimits& limits)
{
    DerivedGraph current = g;
    for (std::uint32_t i = 0; i < n; ++i) {
        current = derive_step(current, g.kind(), limits);
    }
    return current;
}

std::vector<TreeData> enumerate_k_trees(const PrimitiveGraph& g, std::size_t k)
{
    std::vector<TreeData> current;
    for (std::uint32_t v = 1; v <= g.vertex_count(); ++v) {
        current.push_back(vertex_subgraph(g, v));
    }
    if (k > g.edge_count()) {
        return {};
    }
    for (std::size_t size = 1; size <= k && !current.empty(); ++size) {
        std::vector<TreeData> next;
        for (const auto& t : current) {
            t.vt.for_each([&](std::size_t v) {
                g.neighbors(static_cast<std::uint32_t>(v + 1)).for_each([&](std::size_t w) {
                    if (t.vt.test(w)) {
                        return;
                    }
                    auto grown = t;
                    grown.vt.set(w);
                    grown.et.set(*g.edge_index(static_cast<std::uint32_t>(v + 1), static_cast<std::uint32_t>(w + 1)));
                    next.push_back(std::move(grown));
                });
            });
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

DerivedGraph k_tree_graph(const PrimitiveGraph& g, std::size_t k, const GrowthLimits& limits)
{
    if (k < 1) {
        throw std::invalid_argument("k_tree_graph: k must be at least 1");
    }
    auto trees = enumerate_k_trees(g, k);
    if (trees.size() > limits.max_vertices) {
        throw DerivationTooLarge("k-tree count exceeds cap", trees.size(), limits.max_vertices);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t a = 0; a < trees.size(); ++a) {
        for (std::uint32_t b = a + 1; b < trees.size(); ++b) {
            if (intersection_count(trees[a].vt, trees[b].vt) != k) {
                continue;
            }
            const auto meet = subgraph_intersection(trees[a], trees[b]);
            if (is_tree(g, meet)) {
                edges.emplace_back(a, b);
                if (edges.size() > limits.max_edges) {
                    throw DerivationTooLarge("k-tree graph edge count exceeds cap", edges.size(), limits.max_edges);
                }
            }
        }
    }
    auto data = std::make_shared<DerivedGraph::Data>();
    data->kind = DeriveKind::KTree;
    data->level = static_cast<std::uint32_t>(k);
    data->base = std::make_shared<const PrimitiveGraph>(g);
    data->vertices.reserve(trees.size());
    for (auto& t : trees) {
        data->vertices.push_back(DerivedVertex{static_cast<std::uint32_t>(k), {0, 0}, std::move(t)});
    }
    data->graph = SimpleGraph::from_edges(data->vertices.size(), std::move(edges));
    return DerivedGraph(std::move(data));
}

Eigen::SparseMatrix<int> incidence_matrix(const DerivedGraph& d)
{
    if (d.kind() == DeriveKind::KTree || !d.has_parent()) {
        throw std::invalid_argument("incidence_matrix: needs a tl/btl graph at level >= 1");
    }
    const auto rows = static_cast<Eigen::Index>(d.vertex_count());
    const auto cols = static_cast<Eigen::Index>(d.parent().vertex_count());
    std::vector<Eigen::Triplet<int>> entries;
    entries.reserve(2 * d.vertex_count());
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        for (auto p : d.vertex(v).parents) {
            entries.emplace_back(static_cast<int>(v), static_cast<int>(p), 1);
        }
    }
    Eigen::SparseMatrix<int> x(rows, cols);
    x.setFromTriplets(entries.begin(), entries.end());
    return x;
}

bool factorization_identity_holds(const SimpleGraph& g, const Eigen::SparseMatrix<int>& x)
{
    if (static_cast<std::size_t>(x.rows()) != g.n) {
        return false;
    }
    const Eigen::SparseMatrix<int> xt = x.transpose();
    const Eigen::SparseMatrix<int> gram = x * xt;
    std::size_t off_diagonal = 0;
    std::vector<char> diagonal_seen(g.n, 0);
    for (Eigen::Index col = 0; col < gram.outerSize(); ++col) {
        for (Eigen::SparseMatrix<int>::InnerIterator it(gram, col); it; ++it) {
            const auto i = static_cast<std::uint32_t>(it.row());
            const auto j = static_cast<std::uint32_t>(it.col());
            if (it.value() == 0) {
                continue;
            }
            if (i == j) {
                if (it.value() != 2) {
                    return false;
                }
                diagonal_seen[i] = 1;
                continue;
            }
            if (it.value() != 1 || !g.adjacent(i, j)) {
                return false;
            }
            ++off_diagonal;
        }
    }
    const bool diagonal_ok = std::all_of(diagonal_seen.begin(), diagonal_seen.end(), [](char c) { return c != 0; });
    return diagonal_ok && off_diagonal == 2 * g.edge_count();
}

bool incidence_factorization_check(const DerivedGraph& d)
{
    return factorization_identity_holds(d.graph(), incidence_matrix(d));
}

} // namespace treewalk
