#pragma once

#include <functional>
#include <vector>

#include "shiish/core.h"

namespace shiish {

bool is_parking_function(const Word& w);
/// Sorted letters satisfy a_1 <= 1 and a_i <= i - 1 for i >= 2. The single
/// word "1" is treated as prime.
bool is_prime_parking_function(const Word& w);

/// Labeled Dyck path stored column by column. Column c (1-based) holds the
/// increasing labels whose north steps sit at x = c - 1. Empty columns are
/// explicit, so there are always exactly n columns.
class LabeledDyckPath {
public:
    LabeledDyckPath() = default;
    explicit LabeledDyckPath(std::vector<std::vector<int>> columns);

    int size() const noexcept { return static_cast<int>(columns_.size()); }
    const std::vector<std::vector<int>>& columns() const noexcept { return columns_; }
    const std::vector<int>& column(int c) const { return columns_.at(c - 1); }
    /// Number of points (j, j) with 0 < j < n on the path.
    int return_count() const;

    friend auto operator<=>(const LabeledDyckPath&, const LabeledDyckPath&) = default;

private:
    std::vector<std::vector<int>> columns_;
};

LabeledDyckPath word_to_dyck(const Word& w);
Word dyck_to_word(const LabeledDyckPath& d);

/// A maximal piece of a Dyck path between consecutive diagonal touches.
/// Labels are the parent's labels; standardized() relabels them onto [k].
struct PrimeComponent {
    int first_column = 0;  // 1-based, in the parent
    std::vector<std::vector<int>> columns;

    int size() const noexcept { return static_cast<int>(columns.size()); }
    int last_column() const noexcept { return first_column + size() - 1; }
    std::vector<int> labels() const;
    bool contains_label(int label) const;
    LabeledDyckPath standardized() const;
};

std::vector<PrimeComponent> prime_components(const LabeledDyckPath& d);
/// Index into prime_components(d) of the component holding label 1.
std::size_t component_with_label_one(const std::vector<PrimeComponent>& components);

/// u(I) (x) v(J): positions in I read u, the remaining positions read v
/// with every letter raised by |u|. `positions_of_u` must be increasing.
Word shuffle_compose(const Word& u, const Word& v, const std::vector<int>& positions_of_u);

/// Generalization to d factors: block i receives u_i shifted by the sizes of
/// the blocks before it.
Word shuffle_compose(const std::vector<std::vector<int>>& blocks, const std::vector<Word>& factors);

struct ParkingFactorization {
    std::vector<std::vector<int>> blocks;  // ordered set partition B_1 / ... / B_d
    std::vector<Word> primes;              // u_1 ... u_d
};

ParkingFactorization factorize_parking(const Word& w);

/// Parking functions of size n in lexicographic order. With a graph, only
/// words whose position-partition arcs are all edges of G are produced.
void for_each_parking(int n, const Graph* g, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_parking(int n, const Graph* g = nullptr);

}  // namespace shiish
