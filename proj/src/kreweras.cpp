#include "ferrers/kreweras.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ferrers/christoffel.hpp"
#include "ferrers/decompose.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/oracle.hpp"

namespace ferrers {

namespace {

bool node_before(const Diagram& x, const Diagram& y) {
    if (x.cells() != y.cells()) return x.cells() < y.cells();
    return x.rows() < y.rows();
}

std::vector<std::pair<std::int64_t, std::int64_t>> covering_edges(
    const std::vector<Diagram>& nodes) {
    std::map<Diagram, std::int64_t> index;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(nodes.size()); ++i)
        index.emplace(nodes[static_cast<std::size_t>(i)], i);

    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(nodes.size()); ++i) {
        const Diagram& parent = nodes[static_cast<std::size_t>(i)];
        if (parent.empty()) continue;
        for (const CellRef& c : corners(parent)) {
            Diagram child = split_at(parent, c).removed;
            edges.emplace_back(i, index.at(child));  // down-closed: child is a node
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

std::optional<std::int64_t> PosetGraph::index_of(const Diagram& d) const {
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(nodes.size()); ++i)
        if (nodes[static_cast<std::size_t>(i)] == d) return i;
    return std::nullopt;
}

PosetGraph build_poset(const Lattice& lat, std::int64_t node_cap) {
    Diagram root = christoffel_diagram(lat);
    Natural node_count = count_contained(root);
    if (node_count > node_cap)
        raise(errc::cap_exceeded, node_count.str() + " nodes, cap " + std::to_string(node_cap));

    PosetGraph g;
    g.nodes.reserve(static_cast<std::size_t>(node_count));
    for_each_contained(root, [&](const Diagram& d) { g.nodes.push_back(d); });
    std::sort(g.nodes.begin(), g.nodes.end(), node_before);
    g.edges = covering_edges(g.nodes);
    return g;
}

PosetGraph branch(const PosetGraph& g, const Diagram& d) {
    if (!g.index_of(d)) raise(errc::not_a_node, d.bracket());

    PosetGraph sub;
    std::map<std::int64_t, std::int64_t> remap;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(g.nodes.size()); ++i) {
        const Diagram& node = g.nodes[static_cast<std::size_t>(i)];
        if (d.contains(node)) {
            remap.emplace(i, static_cast<std::int64_t>(sub.nodes.size()));
            sub.nodes.push_back(node);  // keeps the graded order
        }
    }
    for (const auto& [parent, child] : g.edges) {
        auto p = remap.find(parent);
        auto c = remap.find(child);
        if (p != remap.end() && c != remap.end()) sub.edges.emplace_back(p->second, c->second);
    }
    return sub;
}

std::string to_dot(const PosetGraph& g, const std::optional<Diagram>& highlight) {
    std::vector<bool> red(g.nodes.size(), false);
    if (highlight) {
        if (!g.index_of(*highlight)) raise(errc::not_a_node, highlight->bracket());
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            red[i] = highlight->contains(g.nodes[i]);
    }
    std::string out = "digraph kreweras {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + g.nodes[i].bracket() + "\"";
        if (red[i]) out += ", color=red";
        out += "];\n";
    }
    for (const auto& [parent, child] : g.edges)
        out += "  n" + std::to_string(parent) + " -> n" + std::to_string(child) + ";\n";
    out += "}\n";
    return out;
}

nlohmann::json to_json(const PosetGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Diagram& d : g.nodes) nodes.push_back(d.bracket());
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [parent, child] : g.edges)
        edges.push_back({parent, child});
    return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace ferrers
