#include <doctest.h>

#include <algorithm>

#include "ferrers/oracle.hpp"

using namespace ferrers;

// The counting DP and the enumerations are the reference everything else is
// measured against, so they get fixed expected values of their own.

TEST_CASE("count_contained on small diagrams") {
    CHECK(count_contained(Diagram{}) == 1);
    CHECK(count_contained(Diagram{1}) == 2);
    CHECK(count_contained(Diagram{1, 1}) == 3);
    CHECK(count_contained(Diagram{2, 1}) == 5);
    CHECK(count_contained(Diagram{2, 2}) == 6);
    CHECK(count_contained(Diagram{2, 2, 1}) == 9);
    CHECK(count_contained(Diagram{3, 1, 1}) == 10);
    CHECK(count_contained(Diagram{3, 2, 1}) == 14);
    CHECK(count_contained(Diagram{3, 2, 2}) == 16);
    CHECK(count_contained(Diagram{4, 3, 1}) == 23);
    CHECK(count_contained(Diagram{4, 3, 3, 1}) == 46);
    CHECK(count_contained(Diagram{5, 4, 2, 1}) == 66);
    CHECK(count_contained(Diagram{5, 5, 2, 2}) == 81);
    CHECK(count_contained(Diagram{7, 7, 2, 2}) == 155);
    CHECK(count_contained(Diagram{12, 10, 8, 7, 5, 3, 1}) == 14985);
    CHECK(count_contained(Diagram{4, 3, 2, 1}) == 42);  // staircases count Catalan numbers
}

TEST_CASE("count_contained matches the plain enumeration") {
    for (const Diagram& d : {Diagram{}, Diagram{3, 1}, Diagram{4, 4, 2}, Diagram{5, 3, 3, 1},
                             Diagram{6, 5, 4, 3, 2, 1}}) {
        CAPTURE(d.bracket());
        CHECK(count_contained(d) == enumerate_contained(d).size());
    }
}

TEST_CASE("enumerate_contained is lexicographically sorted and complete") {
    std::vector<Diagram> found = enumerate_contained(Diagram{1, 1});
    CHECK(found == std::vector<Diagram>{Diagram{}, Diagram{1}, Diagram{1, 1}});

    found = enumerate_contained(Diagram{2, 1});
    CHECK(found == std::vector<Diagram>{Diagram{}, Diagram{1}, Diagram{1, 1}, Diagram{2},
                                        Diagram{2, 1}});
    CHECK(std::is_sorted(found.begin(), found.end()));

    found = enumerate_contained(Diagram{4, 3, 1});
    CHECK(found.size() == 23);
    CHECK(std::is_sorted(found.begin(), found.end()));
    for (const Diagram& d : found) CHECK(Diagram{4, 3, 1}.contains(d));
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_WITH_AS(enumerate_contained(Diagram{65}), doctest::Contains("BudgetExceeded"),
                         error);
    CHECK_THROWS_WITH_AS(enumerate_dyck_words(Lattice(12, 11)),
                         doctest::Contains("BudgetExceeded"), error);
    CHECK_NOTHROW(enumerate_contained(Diagram{64}));
}

TEST_CASE("enumerate_dyck_words") {
    std::vector<DyckWord> words = enumerate_dyck_words(Lattice(1, 4));
    REQUIRE(words.size() == 1);
    CHECK(words[0] == DyckWord("01111"));

    words = enumerate_dyck_words(Lattice(3, 3));
    CHECK(words.size() == 5);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(words.front() == DyckWord("000111"));
    CHECK(words.back() == DyckWord("010101"));

    CHECK(enumerate_dyck_words(Lattice(4, 6)).size() == 23);
    CHECK(enumerate_dyck_words(Lattice(6, 4)).size() == 23);
}
