#include <doctest.h>

#include <vector>

#include "ferrers/christoffel.hpp"
#include "ferrers/oracle.hpp"

using namespace ferrers;

TEST_CASE("christoffel_diagram goldens") {
    CHECK(christoffel_diagram(Lattice(4, 6)) == Diagram{4, 3, 1});
    CHECK(christoffel_diagram(Lattice(8, 14)) == Diagram{12, 10, 8, 7, 5, 3, 1});
    CHECK(christoffel_diagram(Lattice(3, 5)) == Diagram{3, 1});
    CHECK(christoffel_diagram(Lattice(6, 4)) == Diagram{3, 2, 2, 1});
    CHECK(christoffel_diagram(Lattice(1, 9)) == Diagram{});
    CHECK(christoffel_diagram(Lattice(2, 2)) == Diagram{1});
    CHECK(christoffel_diagram(Lattice(5, 5)) == staircase_of(5));
}

TEST_CASE("christoffel_word goldens") {
    CHECK(christoffel_word(Lattice(3, 5)).letters() == "01011011");
    CHECK(christoffel_word(Lattice(4, 6)).letters() == "0101101011");
    CHECK(christoffel_word(Lattice(1, 4)).letters() == "01111");
    CHECK(christoffel_word(Lattice(3, 3)).letters() == "010101");
}

TEST_CASE("christoffel_word is the largest dyck word of its lattice") {
    for (std::int64_t a = 1; a <= 4; ++a)
        for (std::int64_t b = 1; b <= 4; ++b) {
            Lattice lat(a, b);
            std::vector<DyckWord> words = enumerate_dyck_words(lat);
            REQUIRE(!words.empty());
            CHECK(words.back() == christoffel_word(lat));
        }
}

TEST_CASE("christoffel_cell_count matches the diagram") {
    CHECK(christoffel_cell_count(Lattice(4, 6)) == 8);
    CHECK(christoffel_cell_count(Lattice(8, 14)) == 46);
    CHECK(christoffel_cell_count(Lattice(1, 7)) == 0);

    for (std::int64_t a = 1; a <= 30; ++a)
        for (std::int64_t b = 1; b <= 30; ++b)
            CHECK(christoffel_cell_count(Lattice(a, b)) ==
                  christoffel_diagram(Lattice(a, b)).cells());
}

TEST_CASE("row_increment") {
    CHECK(row_increment(Lattice(4, 6), 1) == 0);
    CHECK(row_increment(Lattice(4, 6), 2) == 1);
    CHECK(row_increment(Lattice(4, 6), 3) == 1);

    CHECK_THROWS_AS(row_increment(Lattice(4, 4), 1), error);  // needs a < b
    CHECK_THROWS_AS(row_increment(Lattice(6, 4), 1), error);
    CHECK_THROWS_AS(row_increment(Lattice(4, 6), 0), error);
    CHECK_THROWS_AS(row_increment(Lattice(4, 6), 4), error);

    for (std::int64_t a = 2; a <= 15; ++a)
        for (std::int64_t b = a + 1; b <= 15; ++b) {
            Diagram narrow = christoffel_diagram(Lattice(a, b - 1));
            Diagram wide = christoffel_diagram(Lattice(a, b));
            Natural gained = 0;
            for (std::int64_t l = 1; l <= a - 1; ++l) {
                int inc = row_increment(Lattice(a, b), l);
                CHECK((inc == 0 || inc == 1));
                CHECK(inc == wide.row(a - l) - narrow.row(a - l));
                gained += inc;
            }
            CHECK(christoffel_cell_count(Lattice(a, b - 1)) + gained ==
                  christoffel_cell_count(Lattice(a, b)));
        }
}

TEST_CASE("excess_cells lists the grown cells, shortest row first") {
    std::vector<CellRef> two = excess_cells(Lattice(4, 5), Lattice(4, 6));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == CellRef{2, 3});
    CHECK(two[1] == CellRef{1, 4});

    std::vector<CellRef> one = excess_cells(Lattice(3, 4), Lattice(3, 5));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == CellRef{1, 3});

    CHECK(excess_cells(Lattice(2, 2), Lattice(2, 3)).empty());
    CHECK(excess_cells(Lattice(1, 3), Lattice(1, 4)).empty());

    CHECK_THROWS_WITH_AS(excess_cells(Lattice(4, 5), Lattice(5, 6)),
                         doctest::Contains("UnsupportedGap"), error);
    CHECK_THROWS_AS(excess_cells(Lattice(4, 5), Lattice(4, 7)), error);
    CHECK_THROWS_AS(excess_cells(Lattice(4, 5), Lattice(4, 5)), error);
}

TEST_CASE("comparison_difference goldens") {
    CHECK(comparison_difference(Lattice(4, 5), Lattice(4, 6)) == 9);
    CHECK(comparison_difference(Lattice(3, 4), Lattice(3, 5)) == 2);
    CHECK(comparison_difference(Lattice(2, 2), Lattice(2, 3)) == 0);
    CHECK(comparison_difference(Lattice(7, 2), Lattice(7, 3)) == 8);
}

TEST_CASE("comparison_difference equals the width-step count difference") {
    for (std::int64_t a = 2; a <= 7; ++a)
        for (std::int64_t b = 2; b <= 10; ++b) {
            Natural narrow = count_contained(christoffel_diagram(Lattice(a, b - 1)));
            Natural wide = count_contained(christoffel_diagram(Lattice(a, b)));
            CAPTURE(a);
            CAPTURE(b);
            REQUIRE(narrow + comparison_difference(Lattice(a, b - 1), Lattice(a, b)) == wide);
        }
}
