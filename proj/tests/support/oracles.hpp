#pragma once

// Independent reference implementations used only by tests. None of these
// share code paths with the library routines they check.

#include "treewalk/graph.hpp"
#include "treewalk/graph_io.hpp"
#include "treewalk/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#ifndef TREEWALK_FIXTURE_DIR
#error "TREEWALK_FIXTURE_DIR must be defined"
#endif

namespace oracle {

using treewalk::BigInt;
using treewalk::IntMatrix;
using treewalk::PrimitiveGraph;

inline PrimitiveGraph fixture(const std::string& name)
{
    return treewalk::load_graph(std::string(TREEWALK_FIXTURE_DIR) + "/" + name + ".edges");
}

inline PrimitiveGraph make(std::size_t n, std::vector<std::pair<std::int64_t, std::int64_t>> edges)
{
    return PrimitiveGraph::from_edge_list(n, edges);
}

/// Bareiss fraction-free determinant over BigInt.
inline BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    const auto n = m.size();
    if (n == 0) {
        return 1;
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// det(xI − A) at an integer point.
inline BigInt char_poly_at(const IntMatrix& a, long long x)
{
    const auto n = static_cast<std::size_t>(a.rows());
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = -BigInt(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
        m[i][i] += x;
    }
    return determinant(std::move(m));
}

/// Union-find connectivity of an explicit vertex/edge set.
inline bool connected(const std::vector<std::uint32_t>& vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
{
    if (vertices.empty()) {
        return false;
    }
    std::vector<std::uint32_t> parent(*std::max_element(vertices.begin(), vertices.end()) + 1);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : edges) {
        parent[find(u)] = find(v);
    }
    const auto root = find(vertices.front());
    return std::all_of(vertices.begin(), vertices.end(), [&](auto v) { return find(v) == root; });
}

/// A k-tree as (sorted 1-based vertices, sorted edge indices).
using PlainTree = std::pair<std::vector<std::uint32_t>, std::vector<std::size_t>>;

/// Every k-edge subset whose endpoint set has k+1 vertices and is connected.
inline std::set<PlainTree> brute_force_k_trees(const PrimitiveGraph& g, std::size_t k)
{
    std::set<PlainTree> out;
    const auto m = g.edge_count();
    if (k == 0) {
        for (std::uint32_t v = 1; v <= g.vertex_count(); ++v) {
            out.insert({{v}, {}});
        }
        return out;
    }
    if (k > m) {
        return out;
    }
    std::vector<char> pick(m, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::set<std::uint32_t> vs;
        std::vector<std::size_t> es;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (std::size_t e = 0; e < m; ++e) {
            if (pick[e]) {
                vs.insert(g.edge(e).u);
                vs.insert(g.edge(e).v);
                es.push_back(e);
                pairs.emplace_back(g.edge(e).u, g.edge(e).v);
            }
        }
        std::vector<std::uint32_t> vlist(vs.begin(), vs.end());
        if (vlist.size() == k + 1 && connected(vlist, pairs)) {
            out.insert({vlist, es});
        }
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

/// Classical line graph: edges adjacent iff they share an endpoint. Vertices
/// are edge indices; returns sorted pairs of edge indices.
inline std::set<std::pair<std::size_t, std::size_t>> line_graph_edges(const PrimitiveGraph& g)
{
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < g.edge_count(); ++a) {
        for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
            const auto& x = g.edge(a);
            const auto& y = g.edge(b);
            if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) {
                out.insert({a, b});
            }
        }
    }
    return out;
}

/// Random connected graph: a random spanning tree plus `extra` random chords.
inline PrimitiveGraph random_connected(std::mt19937& rng, std::size_t n, std::size_t extra)
{
    std::set<std::pair<std::int64_t, std::int64_t>> edges;
    for (std::size_t v = 2; v <= n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(1, v - 1);
        const auto u = static_cast<std::int64_t>(pick(rng));
        edges.insert({u, static_cast<std::int64_t>(v)});
    }
    const std::size_t max_edges = n * (n - 1) / 2;
    std::uniform_int_distribution<std::int64_t> any(1, static_cast<std::int64_t>(n));
    for (std::size_t tries = 0; edges.size() < std::min(max_edges, n - 1 + extra) && tries < 1000; ++tries) {
        auto a = any(rng);
        auto b = any(rng);
        if (a == b) {
            continue;
        }
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> list(edges.begin(), edges.end());
    std::shuffle(list.begin(), list.end(), rng);
    return PrimitiveGraph::from_edge_list(n, list);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi, bool symmetric)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            a(i, j) = d(rng);
        }
    }
    if (symmetric) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < i; ++j) {
                a(i, j) = a(j, i);
            }
        }
    }
    return a;
}

inline std::vector<std::string> all_fixtures()
{
    return {"c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12", "gamma8", "k2", "k4", "p3", "p4"};
}

} // namespace oracle
