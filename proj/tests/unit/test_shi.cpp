#include <doctest.h>

#include <stdexcept>

#include <set>

#include "shiish/parking.h"
#include "shiish/shi.h"

using namespace shiish;

TEST_SUITE("shi-regions") {

TEST_CASE("omega on the eight-letter example") {
    auto d = omega(Word::parse("32371272"));
    CHECK(d.pi == Permutation::parse("52163847"));
    CHECK(d.Pi == SetPartition(8, {{1}, {2, 4, 6}, {3, 5}, {7, 8}}));
    CHECK(omega_inverse(d) == Word::parse("32371272"));
}

TEST_CASE("statistics") {
    ShiCeilingDiagram fig{Permutation::parse("52163847"), SetPartition(8, {{1}, {2, 4, 6}, {3, 5}, {7, 8}})};
    auto s = shi_statistics(fig);
    CHECK(s.ceiling_partition == SetPartition(8, {{1, 3}, {2, 6, 8}, {4, 7}, {5}}));
    CHECK(s.dof == 3);
    CHECK_FALSE(s.dominant);

    auto id = shi_statistics({Permutation::identity(4), SetPartition::singletons(4)});
    CHECK(id.ceiling_partition == SetPartition::singletons(4));
    CHECK(id.dof == 4);
    CHECK(id.dominant);

    auto one = shi_statistics({Permutation::parse("123"), SetPartition(3, {{1, 3}, {2}})});
    CHECK(one.dof == 1);
    CHECK(one.relatively_bounded);
}

TEST_CASE("diagram validity") {
    CHECK(is_shi_diagram({Permutation::parse("123"), SetPartition(3, {{1, 3}, {2}})}));
    // Nesting partitions are rejected.
    CHECK_FALSE(is_shi_diagram({Permutation::identity(4), SetPartition(4, {{1, 4}, {2, 3}})}));
    // Within a block the letters of pi must increase.
    CHECK_FALSE(is_shi_diagram({Permutation::parse("321"), SetPartition(3, {{1, 2}, {3}})}));
    ShiCeilingDiagram d{Permutation::parse("123"), SetPartition(3, {{1, 3}, {2}})};
    CHECK(validate_shi(d, Graph::complete(3)));
    CHECK_FALSE(validate_shi(d, Graph::path(3)));
}

TEST_CASE("enumeration") {
    Graph k3 = Graph::complete(3);
    CHECK(enumerate_shi(3, k3).size() == 16);
    CHECK(enumerate_shi(3, Graph::empty(3)).size() == 6);
    int dominant = 0;
    for (const auto& d : enumerate_shi(3, k3)) dominant += shi_statistics(d).dominant;
    CHECK(dominant == 5);
    CHECK(enumerate_shi(4, Graph::complete(4)).size() == 125);
}

TEST_CASE("omega round trips and matches the direct enumeration") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : enumerate_parking(n)) CHECK(omega_inverse(omega(w)) == w);
        Graph kn = Graph::complete(n);
        for (const auto& d : enumerate_shi_direct(n, kn)) CHECK(omega(omega_inverse(d)) == d);
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : Graph::all_graphs(n)) {
            auto a = enumerate_shi(n, g), b = enumerate_shi_direct(n, g);
            CHECK(std::set<ShiCeilingDiagram>(a.begin(), a.end()) == std::set<ShiCeilingDiagram>(b.begin(), b.end()));
        }
}

TEST_CASE("ceiling partition equals the position partition") {
    for (const auto& w : enumerate_parking(5))
        CHECK(shi_statistics(omega(w)).ceiling_partition == position_partition(w));
}

}
