#include "treewalk/derived_io.hpp"

#include "treewalk/errors.hpp"

#include <cctype>
#include <charconv>
#include <memory>
#include <sstream>

namespace treewalk {

namespace {

struct LabelNode {
    std::uint32_t leaf = 0;  // 1-based primitive vertex when children are empty
    std::unique_ptr<LabelNode> left;
    std::unique_ptr<LabelNode> right;

    [[nodiscard]] bool is_leaf() const { return !left; }
    [[nodiscard]] std::uint32_t depth() const { return is_leaf() ? 0 : 1 + left->depth(); }
};

class LabelParser {
public:
    explicit LabelParser(std::string_view text)
    {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                text_.push_back(c);
            }
        }
    }

    std::unique_ptr<LabelNode> parse()
    {
        auto node = parse_node();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return node;
    }

private:
    std::unique_ptr<LabelNode> parse_node()
    {
        auto node = std::make_unique<LabelNode>();
        if (peek() == '{') {
            ++pos_;
            node->left = parse_node();
            expect(',');
            node->right = parse_node();
            expect('}');
            if (node->left->depth() != node->right->depth()) {
                fail("pair members have different nesting depth");
            }
            return node;
        }
        const auto* begin = text_.data() + pos_;
        const auto* end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, node->leaf);
        if (ec != std::errc{} || ptr == begin || node->leaf == 0) {
            fail("expected a positive vertex number");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return node;
    }

    [[nodiscard]] char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("vertex label `" + text_ + "`: " + why + " at offset " + std::to_string(pos_));
    }

    std::string text_;
    std::size_t pos_ = 0;
};

std::optional<std::size_t> resolve_node(const DerivedGraph& d, const LabelNode& node)
{
    if (node.is_leaf()) {
        if (d.level() != 0 || node.leaf > d.vertex_count()) {
            return std::nullopt;
        }
        return node.leaf - 1;
    }
    if (d.level() == 0) {
        return std::nullopt;
    }
    const auto parent = d.parent();
    const auto a = resolve_node(parent, *node.left);
    const auto b = resolve_node(parent, *node.right);
    if (!a || !b) {
        return std::nullopt;
    }
    return d.find_by_parents(static_cast<std::uint32_t>(*a), static_cast<std::uint32_t>(*b));
}

std::string label_recursive(const DerivedGraph& d, std::size_t v)
{
    if (d.level() == 0) {
        return std::to_string(v + 1);
    }
    const auto parent = d.parent();
    const auto& p = d.vertex(v).parents;
    return "{" + label_recursive(parent, p[0]) + "," + label_recursive(parent, p[1]) + "}";
}

std::string edge_token(const Edge& e) { return std::to_string(e.u) + std::to_string(e.v); }

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i == 0 ? "" : ",") + parts[i];
    }
    return out;
}

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string vertex_label(const DerivedGraph& d, std::size_t v)
{
    if (v >= d.vertex_count()) {
        throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
    }
    if (d.kind() == DeriveKind::KTree) {
        std::vector<std::string> vs;
        std::vector<std::string> es;
        for (auto x : subgraph_vertices(d.vertex(v).tree)) {
            vs.push_back(std::to_string(x));
        }
        for (const auto& e : subgraph_edges(d.base(), d.vertex(v).tree)) {
            es.push_back(edge_token(e));
        }
        return "{" + join(vs) + "|" + join(es) + "}";
    }
    return label_recursive(d, v);
}

std::uint32_t label_depth(std::string_view label)
{
    return LabelParser(label).parse()->depth();
}

std::size_t resolve_label(const DerivedGraph& d, std::string_view label)
{
    std::string text;
    for (char c : label) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            text.push_back(c);
        }
    }
    if (!text.empty() && text.front() == '#') {
        std::size_t index = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
        if (ec != std::errc{} || ptr != text.data() + text.size() || text.size() == 1) {
            throw ParseError("vertex label `" + text + "`: malformed #index");
        }
        if (index >= d.vertex_count()) {
            throw UnknownVertex("vertex #" + std::to_string(index) + " out of range (graph has " +
                                std::to_string(d.vertex_count()) + " vertices)");
        }
        return index;
    }
    auto node = LabelParser(text).parse();
    if (d.kind() == DeriveKind::KTree) {
        throw UnknownVertex("k-tree graph vertices are addressed by #index, not `" + text + "`");
    }
    if (node->depth() != d.level()) {
        throw UnknownVertex("vertex `" + text + "` has depth " + std::to_string(node->depth()) +
                            " but the graph is at level " + std::to_string(d.level()));
    }
    auto found = resolve_node(d, *node);
    if (!found) {
        throw UnknownVertex("no vertex `" + text + "` at level " + std::to_string(d.level()));
    }
    return *found;
}

std::string tree_to_string(const PrimitiveGraph& g, const TreeData& t)
{
    std::vector<std::string> vs;
    std::vector<std::string> es;
    for (auto x : subgraph_vertices(t)) {
        vs.push_back(std::to_string(x));
    }
    for (const auto& e : subgraph_edges(g, t)) {
        es.push_back(edge_token(e));
    }
    return "vt={" + join(vs) + "} et={" + join(es) + "}";
}

nlohmann::json tree_to_json(const PrimitiveGraph& g, const TreeData& t)
{
    auto et = nlohmann::json::array();
    for (const auto& e : subgraph_edges(g, t)) {
        et.push_back({e.u, e.v});
    }
    return {{"vt", subgraph_vertices(t)}, {"et", std::move(et)}};
}

nlohmann::json derived_to_json(const DerivedGraph& d)
{
    auto edges = nlohmann::json::array();
    for (const auto& [i, j] : d.graph().edges) {
        edges.push_back({i, j});
    }
    auto vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        auto entry = tree_to_json(d.base(), d.vertex(v).tree);
        entry["index"] = v;
        entry["label"] = vertex_label(d, v);
        vertices.push_back(std::move(entry));
    }
    return {
        {"kind", to_string(d.kind())},
        {"level", d.level()},
        {"n_vertices", d.vertex_count()},
        {"n_edges", d.edge_count()},
        {"edges", std::move(edges)},
        {"vertices", std::move(vertices)},
    };
}

std::string derived_to_dot(const DerivedGraph& d)
{
    std::ostringstream out;
    out << "graph \"" << to_string(d.kind()) << d.level() << "\" {\n";
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << dot_escape(vertex_label(d, v)) << "\"];\n";
    }
    for (const auto& [i, j] : d.graph().edges) {
        out << "  " << i << " -- " << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string derived_to_text(const DerivedGraph& d)
{
    std::ostringstream out;
    out << "kind " << to_string(d.kind()) << " level " << d.level() << ": " << d.vertex_count() << " vertices, "
        << d.edge_count() << " edges\n";
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
        out << "#" << v << " " << vertex_label(d, v) << " " << tree_to_string(d.base(), d.vertex(v).tree) << "\n";
    }
    for (const auto& [i, j] : d.graph().edges) {
        out << i << " " << j << "\n";
    }
    return out.str();
}

} // namespace treewalk
