#include "treewalk/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace treewalk {

namespace {

std::vector<std::size_t> sorted_degrees(const SimpleGraph& g)
{
    std::vector<std::size_t> d(g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
        d[v] = g.degree(v);
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b)
{
    if (a.n != b.n || a.edge_count() != b.edge_count() || sorted_degrees(a) != sorted_degrees(b)) {
        return false;
    }
    const auto n = a.n;
    // Map a's vertices in decreasing-degree order so constraints bite early.
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return a.degree(x) > a.degree(y); });

    std::vector<std::int64_t> map(n, -1);
    std::vector<char> used(n, 0);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n) {
            return true;
        }
        const auto v = order[depth];
        for (std::uint32_t w = 0; w < n; ++w) {
            if (used[w] != 0 || a.degree(v) != b.degree(w)) {
                continue;
            }
            bool consistent = true;
            for (std::size_t k = 0; k < depth && consistent; ++k) {
                const auto u = order[k];
                const auto image = static_cast<std::uint32_t>(map[u]);
                consistent = a.adjacent(v, u) == b.adjacent(w, image);
            }
            if (!consistent) {
                continue;
            }
            map[v] = w;
            used[w] = 1;
            if (extend(depth + 1)) {
                return true;
            }
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return extend(0);
}

SimpleGraph cycle_graph(std::size_t n)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        edges.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
    }
    return SimpleGraph::from_edges(n, std::move(edges));
}

SimpleGraph path_graph(std::size_t n)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return SimpleGraph::from_edges(n, std::move(edges));
}

SimpleGraph complete_graph(std::size_t n)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return SimpleGraph::from_edges(n, std::move(edges));
}

bool is_cycle(const SimpleGraph& g)
{
    if (g.n < 3 || !g.is_connected()) {
        return false;
    }
    for (std::size_t v = 0; v < g.n; ++v) {
        if (g.degree(v) != 2) {
            return false;
        }
    }
    return true;
}

} // namespace treewalk
