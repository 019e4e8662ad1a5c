#include <doctest.h>

#include <set>
#include <string>

#include "ferrers/christoffel.hpp"
#include "ferrers/kreweras.hpp"
#include "ferrers/oracle.hpp"

using namespace ferrers;

TEST_CASE("build_poset node set and order") {
    PosetGraph tiny = build_poset(Lattice(1, 1));
    CHECK(tiny.nodes.size() == 1);
    CHECK(tiny.nodes[0] == Diagram{});
    CHECK(tiny.edges.empty());

    PosetGraph two = build_poset(Lattice(2, 2));
    REQUIRE(two.nodes.size() == 2);
    CHECK(two.nodes[0] == Diagram{});
    CHECK(two.nodes[1] == Diagram{1});
    REQUIRE(two.edges.size() == 1);
    CHECK(two.edges[0] == std::pair<std::int64_t, std::int64_t>(1, 0));

    // Graded order: cell count first, then lexicographic rows.
    PosetGraph five = build_poset(Lattice(3, 3));
    REQUIRE(five.nodes.size() == 5);
    CHECK(five.nodes[0] == Diagram{});
    CHECK(five.nodes[1] == Diagram{1});
    CHECK(five.nodes[2] == Diagram{1, 1});
    CHECK(five.nodes[3] == Diagram{2});
    CHECK(five.nodes[4] == Diagram{2, 1});

    CHECK(five.index_of(Diagram{2}) == 3);
    CHECK(!five.index_of(Diagram{3}).has_value());
}

TEST_CASE("build_poset covering edges") {
    PosetGraph g = build_poset(Lattice(4, 6));
    CHECK(g.nodes.size() == 23);
    CHECK(g.nodes.back() == christoffel_diagram(Lattice(4, 6)));
    CHECK(g.edges.size() == 39);

    std::set<std::int64_t> covered;
    for (const auto& [parent, child] : g.edges) {
        const Diagram& p = g.nodes[static_cast<std::size_t>(parent)];
        const Diagram& c = g.nodes[static_cast<std::size_t>(child)];
        CHECK(p.contains(c));
        CHECK(p.cells() == c.cells() + 1);
        covered.insert(child);
    }
    // Every node except the root is covered by something.
    CHECK(covered.size() == g.nodes.size() - 1);
    CHECK(covered.count(static_cast<std::int64_t>(g.nodes.size()) - 1) == 0);
}

TEST_CASE("build_poset node cap") {
    CHECK_THROWS_WITH_AS(build_poset(Lattice(4, 6), 22), doctest::Contains("CapExceeded"),
                         error);
    CHECK(build_poset(Lattice(4, 6), 23).nodes.size() == 23);
}

TEST_CASE("branch is the principal down-set") {
    PosetGraph g = build_poset(Lattice(4, 6));

    PosetGraph b = branch(g, Diagram{2, 2, 1});
    CHECK(b.nodes.size() == 9);
    CHECK(b.nodes[0] == Diagram{});
    CHECK(b.nodes.back() == Diagram{2, 2, 1});
    for (const auto& [parent, child] : b.edges) {
        CHECK(b.nodes[static_cast<std::size_t>(parent)].contains(
            b.nodes[static_cast<std::size_t>(child)]));
    }

    // Branch at the root is the whole graph.
    PosetGraph whole = branch(g, christoffel_diagram(Lattice(4, 6)));
    CHECK(whole.nodes == g.nodes);
    CHECK(whole.edges == g.edges);

    CHECK(branch(g, Diagram{}).nodes.size() == 1);
    CHECK_THROWS_WITH_AS(branch(g, Diagram{5}), doctest::Contains("NotANode"), error);
}

TEST_CASE("branch size equals the contained count at every node") {
    PosetGraph g = build_poset(Lattice(3, 5));
    for (const Diagram& node : g.nodes)
        CHECK(branch(g, node).nodes.size() == count_contained(node));
}

TEST_CASE("to_dot") {
    PosetGraph two = build_poset(Lattice(2, 2));
    CHECK(to_dot(two) ==
          "digraph kreweras {\n"
          "  n0 [label=\"[]\"];\n"
          "  n1 [label=\"[1]\"];\n"
          "  n1 -> n0;\n"
          "}\n");

    CHECK(to_dot(two, Diagram{}) ==
          "digraph kreweras {\n"
          "  n0 [label=\"[]\", color=red];\n"
          "  n1 [label=\"[1]\"];\n"
          "  n1 -> n0;\n"
          "}\n");

    CHECK(to_dot(two, Diagram{1}).find("  n1 [label=\"[1]\", color=red];") != std::string::npos);
    CHECK_THROWS_WITH_AS(to_dot(two, Diagram{7}), doctest::Contains("NotANode"), error);
}

TEST_CASE("to_json") {
    nlohmann::json j = to_json(build_poset(Lattice(2, 2)));
    CHECK(j["nodes"] == nlohmann::json({"[]", "[1]"}));
    CHECK(j["edges"] == nlohmann::json({{1, 0}}));

    j = to_json(build_poset(Lattice(4, 6)));
    CHECK(j["nodes"].size() == 23);
    CHECK(j["edges"].size() == 39);
    CHECK(j["nodes"][22] == "[4,3,1]");
}
