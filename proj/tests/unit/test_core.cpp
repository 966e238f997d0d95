#include <doctest.h>

#include <stdexcept>

#include <set>

#include "shiish/core.h"

using namespace shiish;

namespace {

SetPartition sp(int n, std::vector<std::vector<int>> blocks) { return SetPartition(n, std::move(blocks)); }

}  // namespace

TEST_SUITE("core") {

TEST_CASE("word basics") {
    Word w = Word::parse("373822712");
    CHECK(w.size() == 9);
    CHECK(w.alphabet_size() == 9);
    CHECK(w.at(1) == 3);
    CHECK(w.at(9) == 2);
    CHECK(w.to_string() == "373822712");
    CHECK_THROWS_AS(w.at(0), std::out_of_range);
    CHECK_THROWS_AS(Word({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Word({3, 1}), std::invalid_argument);
    CHECK(Word({10, 1}, 12).to_string() == "10,1");
}

TEST_CASE("position partition") {
    CHECK(position_partition(Word::parse("1331", 4)) == sp(4, {{1, 4}, {2, 3}}));
    CHECK(position_partition(Word::parse("1111")) == SetPartition::single_block(4));
    CHECK(position_partition(Word::parse("32371272")) == sp(8, {{1, 3}, {2, 6, 8}, {4, 7}, {5}}));
}

TEST_CASE("cyclic shift") {
    CHECK(cyclic_shift(Word::parse("14425", 6), 3) == Word::parse("41152", 6));
    CHECK(cyclic_shift(Word::parse("28818825", 9), 2) == Word::parse("41131147", 9));
    Word w = Word::parse("14425", 6);
    CHECK(cyclic_shift(w, 0) == w);
    CHECK(cyclic_shift(w, 6) == w);
    CHECK(cyclic_shift(w, -1) == cyclic_shift(w, 5));
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 4; ++k)
            for_each_word(m, k, [&](const Word& v) {
                for (int s = 0; s < m; ++s) {
                    CHECK(cyclic_shift(cyclic_shift(v, s), 1) == cyclic_shift(v, s + 1));
                    CHECK(position_partition(cyclic_shift(v, s)) == position_partition(v));
                }
            });
}

TEST_CASE("permutations") {
    Permutation p = Permutation::parse("52163847");
    CHECK(p(1) == 5);
    CHECK(p.position_of(5) == 1);
    CHECK(p.inverse().inverse() == p);
    CHECK(Permutation::identity(4).is_identity());
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("set partitions") {
    auto p = sp(4, {{2, 4}, {3, 1}});
    CHECK(p.to_string() == "{{1,3},{2,4}}");
    CHECK(p.same_block(1, 3));
    CHECK_FALSE(p.same_block(1, 2));
    CHECK(p.arcs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK_THROWS_AS(sp(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(sp(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    std::vector<std::pair<int, int>> pairs{{1, 3}, {3, 5}};
    CHECK(SetPartition::generated_by(5, pairs) == sp(5, {{1, 3, 5}, {2}, {4}}));
    // Bell numbers.
    CHECK(all_set_partitions(1).size() == 1);
    CHECK(all_set_partitions(4).size() == 15);
    CHECK(all_set_partitions(5).size() == 52);
}

TEST_CASE("nonnesting") {
    CHECK(is_nonnesting(sp(4, {{1, 3}, {2, 4}})));
    CHECK_FALSE(is_nonnesting(sp(6, {{1, 4, 5}, {2, 6}, {3}})));
    CHECK(is_nonnesting(SetPartition::singletons(5)));
    // Catalan many nonnesting partitions.
    int count = 0;
    for_each_set_partition(5, [&](const SetPartition& q) { count += is_nonnesting(q); });
    CHECK(count == 42);
}

TEST_CASE("connected components") {
    CHECK(connected_components(sp(7, {{1, 3}, {2}, {4, 5, 6}, {7}})).size() == 3);
    CHECK(connected_components(sp(6, {{1, 4, 5}, {2, 6}, {3}})).size() == 1);
    CHECK(connected_components(SetPartition::singletons(4)).size() == 4);
    auto comps = connected_components(sp(7, {{1, 3}, {2}, {4, 5, 6}, {7}}));
    CHECK(comps[1].first == 4);
    CHECK(comps[1].last == 6);
    CHECK(comps[1].partition == SetPartition::single_block(3));
}

TEST_CASE("apply permutation") {
    auto P = sp(8, {{1}, {2, 4, 6}, {3, 5}, {7, 8}});
    CHECK(apply_permutation(Permutation::parse("52163847"), P) == sp(8, {{5}, {2, 6, 8}, {1, 3}, {4, 7}}));
    CHECK(apply_permutation(Permutation::identity(8), P) == P);
    CHECK(apply_permutation(Permutation::parse("23415786"), sp(8, {{1, 2, 5, 8}, {3}, {4, 6}, {7}})) ==
          sp(8, {{2, 3, 5, 6}, {4}, {1, 7}, {8}}));
}

TEST_CASE("nonnesting from block specs") {
    std::vector<BlockSpec> specs{{1, 4}, {3, 1}, {4, 2}, {7, 1}};
    CHECK(nonnesting_from_block_specs(specs, 8) == sp(8, {{1, 2, 5, 8}, {3}, {4, 6}, {7}}));
    std::vector<BlockSpec> one{{1, 5}};
    CHECK(nonnesting_from_block_specs(one, 5) == SetPartition::single_block(5));
    std::vector<BlockSpec> two{{1, 2}, {2, 2}};
    CHECK(nonnesting_from_block_specs(two, 4) == sp(4, {{1, 3}, {2, 4}}));
    // Round trip over every nonnesting partition.
    for (int n = 1; n <= 6; ++n)
        for_each_set_partition(n, [&](const SetPartition& q) {
            if (!is_nonnesting(q)) return;
            auto s = block_specs(q);
            CHECK(nonnesting_from_block_specs(s, n) == q);
        });
    std::vector<BlockSpec> bad{{1, 3}, {2, 3}};
    CHECK_THROWS_AS(nonnesting_from_block_specs(bad, 5), std::invalid_argument);
}

TEST_CASE("LIFO would nest where FIFO does not") {
    // Two blocks open at 1 and 2; a last-in-first-out rule would give
    // {{1,4},{2,3}}, which nests.
    std::vector<BlockSpec> specs{{1, 2}, {2, 2}};
    auto fifo = nonnesting_from_block_specs(specs, 4);
    CHECK(is_nonnesting(fifo));
    CHECK_FALSE(is_nonnesting(sp(4, {{1, 4}, {2, 3}})));
    CHECK(fifo != sp(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("graphs") {
    Graph g(4, {{1, 2}, {2, 3}});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.to_string() == "1-2,2-3");
    CHECK(g.contains_arcs(sp(4, {{1, 2, 3}, {4}})));
    CHECK_FALSE(g.contains_arcs(sp(4, {{1, 3}, {2}, {4}})));
    CHECK(Graph::complete(4).is_complete());
    CHECK(Graph::path(3) == Graph(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(Graph(3, {{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK(Graph::all_graphs(3).size() == 8);
    CHECK(Graph::all_graphs(4).size() == 64);
    CHECK(Graph::from_mask(3, 7) == Graph::complete(3));
}

TEST_CASE("word enumeration") {
    int count = 0;
    std::set<Word> seen;
    for_each_word(3, 4, [&](const Word& w) {
        ++count;
        seen.insert(w);
    });
    CHECK(count == 81);
    CHECK(seen.size() == 81);
}

}
