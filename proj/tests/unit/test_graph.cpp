#include "oracles.hpp"

#include "treewalk/bitset.hpp"
#include "treewalk/errors.hpp"
#include "treewalk/graph.hpp"
#include "treewalk/graph_io.hpp"
#include "treewalk/isomorphism.hpp"

#include <doctest.h>

#include <sstream>

using namespace treewalk;

TEST_SUITE("bitset") {
TEST_CASE("set algebra and counts")
{
    Bitset a(130);
    Bitset b(130);
    a.set(1);
    a.set(64);
    a.set(129);
    b.set(64);
    b.set(2);
    CHECK(a.count() == 3);
    CHECK(union_count(a, b) == 4);
    CHECK(intersection_count(a, b) == 1);
    CHECK((a & b).members() == std::vector<std::size_t>{64});
    CHECK((a | b).count() == 4);
    CHECK((a & b).is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    a.reset(129);
    CHECK_FALSE(a.test(129));
}

TEST_CASE("ordering is lexicographic on ascending members")
{
    auto of = [](std::initializer_list<std::size_t> xs) {
        Bitset s(8);
        for (auto x : xs) {
            s.set(x);
        }
        return s;
    };
    CHECK(of({1, 2}) < of({1, 2, 5}));
    CHECK(of({1, 2, 5}) < of({1, 3}));
    CHECK(of({1, 3}) < of({2}));
    CHECK(of({}) < of({7}));
    CHECK((of({3}) <=> of({3})) == 0);
}
}

TEST_SUITE("graph-core") {
TEST_CASE("from_edge_list builds C4")
{
    const auto g = oracle::make(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(g.edge_count() == 4);
    CHECK(isomorphic(g.simple(), cycle_graph(4)));
}

TEST_CASE("gamma8 has exactly two trivalent vertices, 2 and 3")
{
    const auto g = oracle::fixture("gamma8");
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 9);
    std::vector<std::uint32_t> trivalent;
    for (std::uint32_t v = 1; v <= 8; ++v) {
        if (g.degree(v) == 3) {
            trivalent.push_back(v);
        }
    }
    CHECK(trivalent == std::vector<std::uint32_t>{2, 3});
}

TEST_CASE("invalid edge lists are rejected")
{
    CHECK_THROWS_AS(oracle::make(3, {{1, 1}}), InvalidEdge);
    CHECK_THROWS_AS(oracle::make(3, {{1, 2}, {2, 1}}), DuplicateEdge);
    CHECK_THROWS_AS(oracle::make(3, {{1, 4}}), VertexOutOfRange);
    CHECK_THROWS_AS(oracle::make(3, {{0, 2}}), VertexOutOfRange);
}

TEST_CASE("from_edge_list is canonical under input permutation")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_connected(rng, 7, 4);
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        for (const auto& e : g.edges()) {
            if (rng() % 2) {
                pairs.emplace_back(e.v, e.u);
            } else {
                pairs.emplace_back(e.u, e.v);
            }
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        CHECK(PrimitiveGraph::from_edge_list(7, pairs) == g);
    }
}

TEST_CASE("is_tree examples")
{
    const auto g = oracle::fixture("gamma8");
    const std::vector<std::uint32_t> path_v{1, 2, 3};
    const std::vector<Edge> path_e{{1, 2}, {2, 3}};
    CHECK(is_tree(g, make_subgraph(g, path_v, path_e)));

    const std::vector<std::uint32_t> square_v{1, 2, 4, 5};
    const std::vector<Edge> square_e{{1, 2}, {2, 4}, {4, 5}, {1, 5}};
    CHECK_FALSE(is_tree(g, make_subgraph(g, square_v, square_e)));

    const std::vector<std::uint32_t> apart{1, 3};
    CHECK_FALSE(is_tree(g, make_subgraph(g, apart, {})));
}

TEST_CASE("malformed subgraphs raise")
{
    const auto g = oracle::fixture("gamma8");
    TreeData s = empty_subgraph(g);
    s.vt.set(0);
    s.et.set(*g.edge_index(1, 2));
    CHECK_THROWS_AS((void)is_tree(g, s), MalformedSubgraph);
}

TEST_CASE("union and intersection")
{
    const auto g = oracle::fixture("gamma8");
    const std::vector<std::uint32_t> v1{1, 2, 3};
    const std::vector<Edge> e1{{1, 2}, {2, 3}};
    const std::vector<std::uint32_t> v2{2, 3, 4};
    const std::vector<Edge> e2{{2, 3}, {2, 4}};
    const auto a = make_subgraph(g, v1, e1);
    const auto b = make_subgraph(g, v2, e2);
    CHECK(subgraph_union(a, a) == a);
    CHECK(subgraph_intersection(a, a) == a);
    CHECK(subgraph_union(a, empty_subgraph(g)) == a);
    CHECK(subgraph_vertices(subgraph_union(a, b)) == std::vector<std::uint32_t>{1, 2, 3, 4});
    const auto meet = subgraph_intersection(a, b);
    CHECK(subgraph_vertices(meet) == std::vector<std::uint32_t>{2, 3});
    CHECK(meet.edge_count() == 1);

    const std::vector<std::uint32_t> far_v{6, 8};
    const std::vector<Edge> far_e{{6, 8}};
    const auto far = make_subgraph(g, far_v, far_e);
    CHECK(subgraph_intersection(a, far) == empty_subgraph(g));
}

TEST_CASE("union of trees with connected intersection is a tree")
{
    std::mt19937 rng(11);
    std::size_t pairs_checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(trial % 4);
        const auto g = oracle::random_connected(rng, n, 2 + static_cast<std::size_t>(trial % 3));
        std::vector<TreeData> trees;
        for (std::size_t k = 0; k < n; ++k) {
            for (const auto& [vs, es] : oracle::brute_force_k_trees(g, k)) {
                TreeData t = empty_subgraph(g);
                for (auto v : vs) {
                    t.vt.set(v - 1);
                }
                for (auto e : es) {
                    t.et.set(e);
                }
                trees.push_back(t);
            }
        }
        for (const auto& a : trees) {
            for (const auto& b : trees) {
                const auto meet = subgraph_intersection(a, b);
                if (meet.vt.none() || !is_connected_subgraph(g, meet)) {
                    continue;
                }
                ++pairs_checked;
                const auto joined = subgraph_union(a, b);
                REQUIRE(is_tree(g, joined));
                CHECK(joined.vertex_count() == joined.edge_count() + 1);
            }
        }
    }
    CHECK(pairs_checked > 1000);
}

TEST_CASE("edge-list and JSON readers")
{
    std::istringstream text("# comment\n3 2\n1 2\n\n2 3\n");
    const auto a = read_edge_list(text);
    CHECK(a.edge_count() == 2);
    CHECK(parse_graph(R"({"n": 3, "edges": [[2, 1], [3, 2]]})") == a);
    CHECK(parse_graph(graph_to_edge_list(a)) == a);
    CHECK(read_graph_json(graph_to_json(a)) == a);

    std::istringstream short_list("3 2\n1 2\n");
    CHECK_THROWS_AS((void)read_edge_list(short_list), ParseError);
    std::istringstream junk("3 1\n1 x\n");
    CHECK_THROWS_AS((void)read_edge_list(junk), ParseError);
    CHECK_THROWS_AS((void)parse_graph(R"({"n": 3})"), ParseError);
    CHECK_THROWS_AS((void)load_graph("/nonexistent/graph.edges"), ParseError);
}

TEST_CASE("isomorphism helper")
{
    CHECK(isomorphic(cycle_graph(6), cycle_graph(6)));
    CHECK_FALSE(isomorphic(cycle_graph(6), path_graph(6)));
    CHECK(is_cycle(cycle_graph(5)));
    CHECK_FALSE(is_cycle(path_graph(5)));
    // Relabelled C5 is still C5.
    const auto relabelled = SimpleGraph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(isomorphic(relabelled, cycle_graph(5)));
    // Same degree sequence, different graphs: C6 vs two triangles.
    const auto triangles = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(isomorphic(triangles, cycle_graph(6)));
}
}
