#include "treewalk/partition.hpp"

#include "treewalk/derived_io.hpp"
#include "treewalk/errors.hpp"
#include "treewalk/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace treewalk {

namespace {

void check_partition(std::size_t n, const TreePartition& p)
{
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (const auto& cls : p.classes) {
        for (auto v : cls) {
            if (v >= n || seen[v]) {
                throw std::invalid_argument("partition does not partition the vertex set");
            }
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n || p.class_of.size() != n) {
        throw std::invalid_argument("partition does not cover the vertex set");
    }
}

/// counts[j] = neighbours of v in class j.
std::vector<std::size_t> neighbour_counts(const SimpleGraph& g, const TreePartition& p, std::uint32_t v)
{
    std::vector<std::size_t> counts(p.size(), 0);
    for (auto w : g.neighbors[v]) {
        ++counts[p.class_of[w]];
    }
    return counts;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw DerivationTooLarge("btl class size overflows 64 bits", UINT64_MAX, UINT64_MAX);
    }
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw DerivationTooLarge("btl count overflows 64 bits", UINT64_MAX, UINT64_MAX);
    }
    return out;
}

bool class_graph_connected(std::size_t classes, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& joined)
{
    std::vector<std::size_t> parent(classes);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    std::size_t components = classes;
    for (const auto& [a, b] : joined) {
        const auto ra = find(a);
        const auto rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components == 1;
}

} // namespace

std::optional<std::size_t> TreePartition::find_class(const TreeData& tree) const
{
    for (std::size_t i = 0; i < class_trees.size(); ++i) {
        if (class_trees[i] == tree) {
            return i;
        }
    }
    return std::nullopt;
}

TreePartition tree_partition(const DerivedGraph& d)
{
    if (d.kind() == DeriveKind::KTree || d.level() < 1) {
        throw std::invalid_argument("tree_partition: needs a tl/btl graph at level >= 1");
    }
    std::map<TreeData, std::vector<std::uint32_t>> groups;
    for (std::uint32_t v = 0; v < d.vertex_count(); ++v) {
        groups[d.vertex(v).tree].push_back(v);
    }
    TreePartition p;
    p.class_of.resize(d.vertex_count());
    for (auto& [tree, members] : groups) {
        for (auto v : members) {
            p.class_of[v] = static_cast<std::uint32_t>(p.classes.size());
        }
        p.class_trees.push_back(tree);
        p.classes.push_back(std::move(members));
    }
    return p;
}

TreePartition singleton_partition(const DerivedGraph& d)
{
    TreePartition p;
    p.class_of.resize(d.vertex_count());
    for (std::uint32_t v = 0; v < d.vertex_count(); ++v) {
        p.classes.push_back({v});
        p.class_trees.push_back(d.vertex(v).tree);
        p.class_of[v] = v;
    }
    return p;
}

EquitabilityReport is_equitable(const SimpleGraph& g, const TreePartition& p)
{
    check_partition(g.n, p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& cls = p.classes[i];
        if (cls.size() < 2) {
            continue;
        }
        const auto reference = neighbour_counts(g, p, cls.front());
        for (std::size_t k = 1; k < cls.size(); ++k) {
            const auto counts = neighbour_counts(g, p, cls[k]);
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (counts[j] != reference[j]) {
                    return {false, EquitabilityWitness{i, j, cls.front(), cls[k], reference[j], counts[j]}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

EquitabilityReport is_equitable(const DerivedGraph& d, const TreePartition& p) { return is_equitable(d.graph(), p); }

QuotientMatrix quotient_matrix(const SimpleGraph& g, const TreePartition& p)
{
    const auto report = is_equitable(g, p);
    if (!report) {
        const auto& w = *report.witness;
        throw NotEquitable("partition is not equitable: vertices #" + std::to_string(w.vertex_a) + " and #" +
                           std::to_string(w.vertex_b) + " of class " + std::to_string(w.class_i) + " have " +
                           std::to_string(w.count_a) + " and " + std::to_string(w.count_b) +
                           " neighbours in class " + std::to_string(w.class_j));
    }
    QuotientMatrix q;
    const auto c = static_cast<Eigen::Index>(p.size());
    q.b = IntMatrix::Zero(c, c);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto counts = neighbour_counts(g, p, p.classes[i].front());
        for (std::size_t j = 0; j < p.size(); ++j) {
            q.b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<std::int64_t>(counts[j]);
        }
        q.sizes.push_back(p.classes[i].size());
    }
    q.class_trees = p.class_trees;
    return q;
}

QuotientMatrix quotient_matrix(const DerivedGraph& d, const TreePartition& p) { return quotient_matrix(d.graph(), p); }

bool classes_independent(const SimpleGraph& g, const TreePartition& p)
{
    for (const auto& [a, b] : g.edges) {
        if (p.class_of[a] == p.class_of[b]) {
            return false;
        }
    }
    return true;
}

bool classes_fully_joined(const SimpleGraph& g, const TreePartition& p)
{
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> between;
    for (const auto& [a, b] : g.edges) {
        auto ca = p.class_of[a];
        auto cb = p.class_of[b];
        if (ca == cb) {
            continue;
        }
        ++between[{std::min(ca, cb), std::max(ca, cb)}];
    }
    for (const auto& [key, count] : between) {
        if (count != p.classes[key.first].size() * p.classes[key.second].size()) {
            return false;
        }
    }
    return true;
}

std::string quotient_to_csv(const QuotientMatrix& q)
{
    std::ostringstream out;
    for (Eigen::Index i = 0; i < q.b.rows(); ++i) {
        for (Eigen::Index j = 0; j < q.b.cols(); ++j) {
            out << (j == 0 ? "" : ",") << q.b(i, j);
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json quotient_to_json(const QuotientMatrix& q, const PrimitiveGraph& base)
{
    auto rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < q.b.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < q.b.cols(); ++j) {
            row.push_back(q.b(i, j));
        }
        rows.push_back(std::move(row));
    }
    auto classes = nlohmann::json::array();
    for (std::size_t i = 0; i < q.class_trees.size(); ++i) {
        auto entry = tree_to_json(base, q.class_trees[i]);
        entry["size"] = q.sizes[i];
        classes.push_back(std::move(entry));
    }
    return {{"n_classes", q.class_trees.size()}, {"matrix", std::move(rows)}, {"classes", std::move(classes)}};
}

nlohmann::json partition_to_json(const DerivedGraph& d, const TreePartition& p)
{
    auto classes = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto entry = tree_to_json(d.base(), p.class_trees[i]);
        auto members = nlohmann::json::array();
        for (auto v : p.classes[i]) {
            members.push_back(vertex_label(d, v));
        }
        entry["size"] = p.classes[i].size();
        entry["members"] = std::move(members);
        classes.push_back(std::move(entry));
    }
    return {{"kind", to_string(d.kind())}, {"level", d.level()}, {"n_classes", p.size()},
            {"classes", std::move(classes)}};
}

IntMatrix BtlClassStructure::quotient() const
{
    const auto c = static_cast<Eigen::Index>(class_trees.size());
    IntMatrix b = IntMatrix::Zero(c, c);
    for (const auto& [i, j] : joined) {
        b(i, j) = static_cast<std::int64_t>(sizes[j]);
        b(j, i) = static_cast<std::int64_t>(sizes[i]);
    }
    return b;
}

IntPoly BtlClassStructure::char_poly() const
{
    return IntPoly::monomial(1, vertex_count - class_trees.size()) * char_poly_exact(quotient());
}

BtlClassStructure btl_class_structure(const PrimitiveGraph& g, std::uint32_t level)
{
    if (level < 1) {
        throw std::invalid_argument("btl_class_structure: level must be at least 1");
    }
    if (!g.is_connected()) {
        throw NotConnected("btl_class_structure: base graph is not connected");
    }
    BtlClassStructure s;
    s.level = 1;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        s.class_trees.push_back(edge_subgraph(g, e));
        s.sizes.push_back(1);
    }
    std::sort(s.class_trees.begin(), s.class_trees.end());
    const auto link = [](BtlClassStructure& st) {
        st.joined.clear();
        st.edge_count = 0;
        st.vertex_count = 0;
        for (auto sz : st.sizes) {
            st.vertex_count = checked_add(st.vertex_count, sz);
        }
        for (std::uint32_t a = 0; a < st.class_trees.size(); ++a) {
            for (std::uint32_t b = a + 1; b < st.class_trees.size(); ++b) {
                if (count_condition(st.class_trees[a], st.class_trees[b])) {
                    st.joined.emplace_back(a, b);
                    st.edge_count = checked_add(st.edge_count, checked_mul(st.sizes[a], st.sizes[b]));
                }
            }
        }
    };
    link(s);
    while (s.level < level) {
        const bool connected = s.class_trees.size() == 1 ? s.sizes.front() == 1
                                                         : class_graph_connected(s.class_trees.size(), s.joined);
        if (!connected) {
            throw NotConnected("btl_class_structure: level " + std::to_string(s.level) + " is not connected");
        }
        std::map<TreeData, std::uint64_t> next;
        for (const auto& [a, b] : s.joined) {
            auto& slot = next[subgraph_union(s.class_trees[a], s.class_trees[b])];
            slot = checked_add(slot, checked_mul(s.sizes[a], s.sizes[b]));
        }
        BtlClassStructure n;
        n.level = s.level + 1;
        for (auto& [tree, count] : next) {
            n.class_trees.push_back(tree);
            n.sizes.push_back(count);
        }
        link(n);
        s = std::move(n);
    }
    return s;
}

} // namespace treewalk
