#pragma once

// Covering digraph of the diagrams contained in a lattice's extremal diagram,
// ordered by containment: parent covers child when parent = child + one cell.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ferrers/diagram.hpp"

namespace ferrers {

inline constexpr std::int64_t default_node_cap = 100000;

struct PosetGraph {
    std::vector<Diagram> nodes;  // graded by cell count, ties lexicographic
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;  // (parent, child) indices

    std::optional<std::int64_t> index_of(const Diagram& d) const;
};

// Every diagram whose path fits the lattice, with all covering edges.
// Raises cap_exceeded when the node count would pass node_cap.
PosetGraph build_poset(const Lattice& lat, std::int64_t node_cap = default_node_cap);

// The principal down-set of d: nodes contained in d, edges among them,
// re-indexed with the same node order. Raises not_a_node if d is absent.
PosetGraph branch(const PosetGraph& g, const Diagram& d);

// Deterministic DOT document, edges parent -> child, labels "[4,3,1]"/"[]";
// nodes in branch(highlight) are colored red.
std::string to_dot(const PosetGraph& g,
                   const std::optional<Diagram>& highlight = std::nullopt);

// {"nodes": ["[]", "[1]", ...], "edges": [[parent_index, child_index], ...]}
nlohmann::json to_json(const PosetGraph& g);

}  // namespace ferrers
