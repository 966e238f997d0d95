#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shiish {

/// A finite word over the alphabet [m] = {1, ..., m}.
///
/// Positions and letters are 1-based everywhere in the public interface.
/// The alphabet is part of the value: the same letters over [n] and over
/// [n+1] are different words, because cyclic shifting depends on m.
class Word {
public:
    Word() = default;
    /// Alphabet defaults to the word length (the natural alphabet for
    /// parking functions and rook words of size n).
    explicit Word(std::vector<int> letters);
    Word(std::vector<int> letters, int alphabet_size);

    /// Parses a string of decimal digits such as "373822712".
    /// An alphabet size of 0 means "use the word length".
    static Word parse(std::string_view digits, int alphabet_size = 0);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int alphabet_size() const noexcept { return alphabet_; }

    /// Letter at a 1-based position.
    int at(std::size_t position) const;
    const std::vector<int>& letters() const noexcept { return letters_; }

    Word with_alphabet(int alphabet_size) const { return Word(letters_, alphabet_size); }

    /// Digits run together when every letter fits in one digit, otherwise
    /// letters are comma separated.
    std::string to_string() const;

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    int alphabet_ = 0;
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation parse(std::string_view digits);

    int size() const noexcept { return static_cast<int>(one_line_.size()); }
    /// pi_i for 1 <= i <= n.
    int operator()(int i) const;
    /// pi^{-1}(value).
    int position_of(int value) const;
    Permutation inverse() const;
    bool is_identity() const;
    const std::vector<int>& one_line() const noexcept { return one_line_; }
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> one_line_;
    std::vector<int> inverse_;
};

/// Set partition of [n] in canonical form: blocks sorted by minimum,
/// elements sorted within each block. Equality is structural.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int ground_size, std::vector<std::vector<int>> blocks);

    static SetPartition singletons(int n);
    static SetPartition single_block(int n);
    /// Finest partition of [n] in which every listed pair lies in one block.
    static SetPartition generated_by(int n, std::span<const std::pair<int, int>> pairs);

    int ground_size() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    /// Index (0-based, into blocks()) of the block holding a 1-based element.
    std::size_t block_index_of(int element) const;
    bool same_block(int a, int b) const { return block_index_of(a) == block_index_of(b); }

    /// Arcs of the arc diagram: (i, j) with i < j consecutive in a block.
    std::vector<std::pair<int, int>> arcs() const;

    /// "{{1,3},{2}}".
    std::string to_string() const;

    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Simple graph on [n]; edges are stored as (i, j) with i < j.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edges);

    static Graph complete(int n);
    static Graph empty(int n) { return Graph(n); }
    /// The path 1 - 2 - ... - n.
    static Graph path(int n);
    /// Bit k of the mask selects the k-th pair of [n] in lexicographic order.
    static Graph from_mask(int n, std::uint64_t mask);
    /// All 2^(n choose 2) graphs on [n], in mask order.
    static std::vector<Graph> all_graphs(int n);

    int vertex_count() const noexcept { return n_; }
    const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }
    /// Order-insensitive edge query.
    bool has_edge(int i, int j) const;
    /// True iff every arc of the partition's arc diagram is an edge.
    bool contains_arcs(const SetPartition& p) const;
    bool is_complete() const;
    std::string to_string() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::set<std::pair<int, int>> edges_;
    std::vector<char> adjacency_;
};

SetPartition position_partition(const Word& w);

/// Adds t to every letter modulo the alphabet size, keeping letters in [1, m].
Word cyclic_shift(const Word& w, long long t);

bool is_nonnesting(const SetPartition& p);

/// One connected component: the restriction of a partition to the interval
/// [first, last], relabelled onto [1, last - first + 1].
struct PartitionComponent {
    int first = 0;
    int last = 0;
    SetPartition partition;
};

std::vector<PartitionComponent> connected_components(const SetPartition& p);

/// Blockwise image {pi(B) : B in P}.
SetPartition apply_permutation(const Permutation& pi, const SetPartition& p);

struct BlockSpec {
    int min = 0;
    int size = 0;
    friend auto operator<=>(const BlockSpec&, const BlockSpec&) = default;
};

/// Rebuilds a nonnesting partition of [n] from its block minima and sizes.
///
/// Positions are scanned left to right. A declared minimum opens a new
/// block; any other position joins the open, incomplete block whose most
/// recently added element is smallest (first in, first out). Throws
/// std::invalid_argument on malformed specs or an unassignable position.
SetPartition nonnesting_from_block_specs(std::span<const BlockSpec> specs, int n);

/// (min, size) for every block, ordered by min.
std::vector<BlockSpec> block_specs(const SetPartition& p);

// Exhaustive generators shared by the enumerators and test oracles.

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> all_set_partitions(int n);
std::vector<Permutation> all_permutations(int n);
/// Every word of length k over [m], in lexicographic order.
void for_each_word(int m, int k, const std::function<void(const Word&)>& visit);

}  // namespace shiish
