#include "shiish/parking.h"

#include <algorithm>
#include <stdexcept>

namespace shiish {

bool is_parking_function(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> sorted(w.letters());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] < 1 || sorted[i] > i + 1) return false;
    return true;
}

bool is_prime_parking_function(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return false;
    std::vector<int> sorted(w.letters());
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] != 1) return false;
    for (int i = 1; i < n; ++i)
        if (sorted[i] > i) return false;
    return true;
}

// ---------------------------------------------------------------- Dyck paths

LabeledDyckPath::LabeledDyckPath(std::vector<std::vector<int>> columns) : columns_(std::move(columns)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    int height = 0;
    for (int c = 0; c < n; ++c) {
        auto& col = columns_[c];
        std::sort(col.begin(), col.end());
        for (int label : col) {
            if (label < 1 || label > n || seen[label]) throw std::invalid_argument("LabeledDyckPath: bad label set");
            seen[label] = 1;
        }
        height += static_cast<int>(col.size());
        if (height < c + 1) throw std::invalid_argument("LabeledDyckPath: path dips below the diagonal");
    }
}

int LabeledDyckPath::return_count() const {
    int height = 0;
    int returns = 0;
    for (int c = 0; c + 1 < size(); ++c) {
        height += static_cast<int>(columns_[c].size());
        if (height == c + 1) ++returns;
    }
    return returns;
}

LabeledDyckPath word_to_dyck(const Word& w) {
    if (!is_parking_function(w)) throw std::invalid_argument("word_to_dyck: " + w.to_string() + " is not a parking function");
    const int n = static_cast<int>(w.size());
    std::vector<std::vector<int>> columns(n);
    for (int i = 1; i <= n; ++i) columns[w.at(i) - 1].push_back(i);
    return LabeledDyckPath(std::move(columns));
}

Word dyck_to_word(const LabeledDyckPath& d) {
    std::vector<int> letters(d.size());
    for (int c = 1; c <= d.size(); ++c)
        for (int label : d.column(c)) letters[label - 1] = c;
    return Word(std::move(letters));
}

std::vector<int> PrimeComponent::labels() const {
    std::vector<int> out;
    for (const auto& col : columns) out.insert(out.end(), col.begin(), col.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool PrimeComponent::contains_label(int label) const {
    for (const auto& col : columns)
        if (std::binary_search(col.begin(), col.end(), label)) return true;
    return false;
}

LabeledDyckPath PrimeComponent::standardized() const {
    auto all = labels();
    std::vector<std::vector<int>> cols;
    for (const auto& col : columns) {
        std::vector<int> c;
        for (int label : col) c.push_back(static_cast<int>(std::lower_bound(all.begin(), all.end(), label) - all.begin()) + 1);
        cols.push_back(std::move(c));
    }
    return LabeledDyckPath(std::move(cols));
}

std::vector<PrimeComponent> prime_components(const LabeledDyckPath& d) {
    std::vector<PrimeComponent> out;
    PrimeComponent current;
    current.first_column = 1;
    int height = 0;
    for (int c = 1; c <= d.size(); ++c) {
        current.columns.push_back(d.column(c));
        height += static_cast<int>(d.column(c).size());
        if (height == c) {
            out.push_back(std::move(current));
            current = PrimeComponent{};
            current.first_column = c + 1;
        }
    }
    return out;
}

std::size_t component_with_label_one(const std::vector<PrimeComponent>& components) {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].contains_label(1)) return i;
    throw std::invalid_argument("component_with_label_one: label 1 not present");
}

// ---------------------------------------------------------------- shuffles

Word shuffle_compose(const Word& u, const Word& v, const std::vector<int>& positions_of_u) {
    const int n = static_cast<int>(u.size());
    const int m = static_cast<int>(v.size());
    if (static_cast<int>(positions_of_u.size()) != n) throw std::invalid_argument("shuffle_compose: |I| must equal |u|");
    std::vector<int> j;
    std::vector<char> in_i(n + m + 1, 0);
    for (int p : positions_of_u) {
        if (p < 1 || p > n + m || in_i[p]) throw std::invalid_argument("shuffle_compose: I is not a subset of [n+m]");
        in_i[p] = 1;
    }
    for (int p = 1; p <= n + m; ++p)
        if (!in_i[p]) j.push_back(p);
    std::vector<int> sorted_i(positions_of_u);
    std::sort(sorted_i.begin(), sorted_i.end());
    return shuffle_compose(std::vector<std::vector<int>>{sorted_i, j}, std::vector<Word>{u, v});
}

Word shuffle_compose(const std::vector<std::vector<int>>& blocks, const std::vector<Word>& factors) {
    if (blocks.size() != factors.size()) throw std::invalid_argument("shuffle_compose: block/factor count mismatch");
    int total = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != factors[i].size()) throw std::invalid_argument("shuffle_compose: block size mismatch");
        total += static_cast<int>(blocks[i].size());
    }
    std::vector<int> letters(total, 0);
    int offset = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<int> b(blocks[i]);
        std::sort(b.begin(), b.end());
        for (std::size_t k = 0; k < b.size(); ++k) {
            int p = b[k];
            if (p < 1 || p > total || letters[p - 1] != 0) throw std::invalid_argument("shuffle_compose: blocks do not partition [n]");
            letters[p - 1] = factors[i].letters()[k] + offset;
        }
        offset += static_cast<int>(b.size());
    }
    return Word(std::move(letters));
}

ParkingFactorization factorize_parking(const Word& w) {
    auto d = word_to_dyck(w);
    ParkingFactorization out;
    for (const auto& comp : prime_components(d)) {
        auto labels = comp.labels();
        std::vector<int> u;
        for (int label : labels) u.push_back(w.at(label) - (comp.first_column - 1));
        out.blocks.push_back(std::move(labels));
        out.primes.emplace_back(std::move(u));
    }
    return out;
}

// ---------------------------------------------------------------- enumeration

void for_each_parking(int n, const Graph* g, const std::function<void(const Word&)>& visit) {
    if (g && g->vertex_count() != n) throw std::invalid_argument("enumerate_parking: graph size differs from n");
    std::vector<int> letters(n, 0);
    std::vector<int> count(n + 2, 0);  // count[c] = occurrences of letter c so far
    std::vector<int> last(n + 2, 0);   // last position holding letter c

    // Completion is possible iff for every j, #(letters <= j) + remaining >= j.
    auto completable = [&](int placed) {
        int remaining = n - placed;
        int below = 0;
        for (int j = 1; j <= n; ++j) {
            below += count[j];
            if (below + remaining < j) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int p) {
        if (p > n) {
            visit(Word(letters));
            return;
        }
        for (int c = 1; c <= n; ++c) {
            if (g && last[c] != 0 && !g->has_edge(last[c], p)) continue;
            int saved = last[c];
            letters[p - 1] = c;
            ++count[c];
            last[c] = p;
            if (completable(p)) rec(p + 1);
            --count[c];
            last[c] = saved;
        }
    };
    if (n == 0) {
        visit(Word());
        return;
    }
    rec(1);
}

std::vector<Word> enumerate_parking(int n, const Graph* g) {
    std::vector<Word> out;
    for_each_parking(n, g, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace shiish
