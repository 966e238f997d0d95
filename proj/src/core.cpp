#include "shiish/core.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shiish {

namespace {

std::string join_ints(const std::vector<int>& xs, bool compact) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0 && !compact) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

// Union-find over 1..n, used by SetPartition::generated_by.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

// ---------------------------------------------------------------- Word

Word::Word(std::vector<int> letters) : Word(letters, static_cast<int>(letters.size())) {}

Word::Word(std::vector<int> letters, int alphabet_size) : letters_(std::move(letters)), alphabet_(alphabet_size) {
    if (alphabet_ < 0) throw std::invalid_argument("Word: negative alphabet size");
    if (alphabet_ == 0 && !letters_.empty()) throw std::invalid_argument("Word: empty alphabet");
    for (int c : letters_) {
        if (c < 1 || c > alphabet_) {
            throw std::invalid_argument("Word: letter " + std::to_string(c) + " outside [1," +
                                        std::to_string(alphabet_) + "]");
        }
    }
}

Word Word::parse(std::string_view digits, int alphabet_size) {
    std::vector<int> letters;
    letters.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("Word::parse: non-digit character");
        letters.push_back(ch - '0');
    }
    int m = alphabet_size == 0 ? static_cast<int>(letters.size()) : alphabet_size;
    return Word(std::move(letters), m);
}

int Word::at(std::size_t position) const {
    if (position < 1 || position > letters_.size()) throw std::out_of_range("Word::at: position out of range");
    return letters_[position - 1];
}

std::string Word::to_string() const {
    bool compact = std::all_of(letters_.begin(), letters_.end(), [](int c) { return c <= 9; });
    return join_ints(letters_, compact);
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = size();
    inverse_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = one_line_[i];
        if (v < 1 || v > n || inverse_[v - 1] != 0) throw std::invalid_argument("Permutation: not a rearrangement of 1..n");
        inverse_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view digits) {
    std::vector<int> v;
    for (char ch : digits) {
        if (ch < '1' || ch > '9') throw std::invalid_argument("Permutation::parse: expected digits 1-9");
        v.push_back(ch - '0');
    }
    return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Permutation: index out of range");
    return one_line_[i - 1];
}

int Permutation::position_of(int value) const {
    if (value < 1 || value > size()) throw std::out_of_range("Permutation: value out of range");
    return inverse_[value - 1];
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (one_line_[i] != i + 1) return false;
    return true;
}

std::string Permutation::to_string() const { return join_ints(one_line_, size() <= 9); }

// ---------------------------------------------------------------- SetPartition

SetPartition::SetPartition(int ground_size, std::vector<std::vector<int>> blocks) : n_(ground_size) {
    if (n_ < 0) throw std::invalid_argument("SetPartition: negative ground size");
    std::vector<char> seen(n_ + 1, 0);
    int total = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n_) throw std::invalid_argument("SetPartition: element outside ground set");
            if (seen[x]) throw std::invalid_argument("SetPartition: blocks not disjoint");
            seen[x] = 1;
            ++total;
        }
    }
    if (total != n_) throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
}

SetPartition SetPartition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::single_block(int n) {
    if (n == 0) return SetPartition(0, {});
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return SetPartition(n, {all});
}

SetPartition SetPartition::generated_by(int n, std::span<const std::pair<int, int>> pairs) {
    DisjointSets ds(n);
    for (auto [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("generated_by: pair outside [n]");
        ds.unite(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 1; i <= n; ++i) groups[ds.find(i)].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, b] : groups) blocks.push_back(std::move(b));
    return SetPartition(n, std::move(blocks));
}

std::size_t SetPartition::block_index_of(int element) const {
    if (element < 1 || element > n_) throw std::out_of_range("SetPartition: element out of range");
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        if (std::binary_search(blocks_[k].begin(), blocks_[k].end(), element)) return k;
    throw std::logic_error("SetPartition: element missing");
}

std::vector<std::pair<int, int>> SetPartition::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& b : blocks_)
        for (std::size_t i = 0; i + 1 < b.size(); ++i) out.emplace_back(b[i], b[i + 1]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string SetPartition::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0) out += ',';
        out += '{' + join_ints(blocks_[k], false) + '}';
    }
    return out + '}';
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : Graph(n) {
    for (auto [i, j] : edges) {
        if (!(1 <= i && i < j && j <= n)) {
            throw std::invalid_argument("Graph: edge (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") must satisfy 1 <= i < j <= n");
        }
        if (!edges_.emplace(i, j).second) throw std::invalid_argument("Graph: duplicate edge");
        adjacency_[i * (n_ + 1) + j] = adjacency_[j * (n_ + 1) + i] = 1;
    }
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> e;
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit)
            if (mask >> bit & 1U) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

std::vector<Graph> Graph::all_graphs(int n) {
    int pairs = n * (n - 1) / 2;
    if (pairs > 20) throw std::invalid_argument("Graph::all_graphs: too many graphs");
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) out.push_back(from_mask(n, mask));
    return out;
}

bool Graph::has_edge(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return adjacency_[i * (n_ + 1) + j] != 0;
}

bool Graph::contains_arcs(const SetPartition& p) const {
    for (const auto& b : p.blocks())
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (!has_edge(b[i], b[i + 1])) return false;
    return true;
}

bool Graph::is_complete() const { return static_cast<int>(edges_.size()) == n_ * (n_ - 1) / 2; }

std::string Graph::to_string() const {
    std::string out;
    for (auto [i, j] : edges_) {
        if (!out.empty()) out += ',';
        out += std::to_string(i) + '-' + std::to_string(j);
    }
    return out;
}

// ---------------------------------------------------------------- operations

SetPartition position_partition(const Word& w) {
    std::map<int, std::vector<int>> by_letter;
    for (std::size_t i = 0; i < w.size(); ++i) by_letter[w.letters()[i]].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [c, b] : by_letter) blocks.push_back(std::move(b));
    return SetPartition(static_cast<int>(w.size()), std::move(blocks));
}

Word cyclic_shift(const Word& w, long long t) {
    const long long m = w.alphabet_size();
    if (m == 0) return w;
    std::vector<int> out(w.letters());
    long long s = ((t % m) + m) % m;
    for (int& c : out) c = static_cast<int>((c - 1 + s) % m + 1);
    return Word(std::move(out), w.alphabet_size());
}

bool is_nonnesting(const SetPartition& p) {
    auto arcs = p.arcs();
    for (auto [a, d] : arcs)
        for (auto [b, c] : arcs)
            if (a < b && c < d) return false;
    return true;
}

std::vector<PartitionComponent> connected_components(const SetPartition& p) {
    const int n = p.ground_size();
    // reach[i] = largest element in a block meeting [1, i]; a component ends at i when reach equals i.
    std::vector<int> block_max(n + 1, 0);
    for (const auto& b : p.blocks())
        for (int x : b) block_max[x] = b.back();

    std::vector<PartitionComponent> out;
    int first = 1;
    int reach = 0;
    for (int i = 1; i <= n; ++i) {
        reach = std::max(reach, block_max[i]);
        if (reach == i) {
            std::vector<std::vector<int>> blocks;
            for (const auto& b : p.blocks()) {
                if (b.front() < first || b.front() > i) continue;
                std::vector<int> shifted;
                for (int x : b) shifted.push_back(x - first + 1);
                blocks.push_back(std::move(shifted));
            }
            out.push_back({first, i, SetPartition(i - first + 1, std::move(blocks))});
            first = i + 1;
        }
    }
    return out;
}

SetPartition apply_permutation(const Permutation& pi, const SetPartition& p) {
    if (pi.size() != p.ground_size()) throw std::invalid_argument("apply_permutation: size mismatch");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : p.blocks()) {
        std::vector<int> image;
        for (int x : b) image.push_back(pi(x));
        blocks.push_back(std::move(image));
    }
    return SetPartition(p.ground_size(), std::move(blocks));
}

SetPartition nonnesting_from_block_specs(std::span<const BlockSpec> specs, int n) {
    std::vector<int> size_at(n + 1, 0);
    int total = 0;
    for (const auto& s : specs) {
        if (s.min < 1 || s.min > n) throw std::invalid_argument("block specs: minimum outside [n]");
        if (s.size < 1) throw std::invalid_argument("block specs: block size must be positive");
        if (size_at[s.min] != 0) throw std::invalid_argument("block specs: repeated minimum");
        size_at[s.min] = s.size;
        total += s.size;
    }
    if (total != n) throw std::invalid_argument("block specs: sizes do not sum to n");

    struct Open {
        std::vector<int> elements;
        int target;
    };
    std::vector<Open> blocks;
    std::vector<std::size_t> open;  // indices of incomplete blocks
    for (int p = 1; p <= n; ++p) {
        if (size_at[p] != 0) {
            blocks.push_back({{p}, size_at[p]});
            if (size_at[p] > 1) open.push_back(blocks.size() - 1);
            continue;
        }
        if (open.empty()) throw std::invalid_argument("block specs: unassignable position " + std::to_string(p));
        auto it = std::min_element(open.begin(), open.end(), [&](std::size_t a, std::size_t b) {
            return blocks[a].elements.back() < blocks[b].elements.back();
        });
        Open& target = blocks[*it];
        target.elements.push_back(p);
        if (static_cast<int>(target.elements.size()) == target.target) open.erase(it);
    }
    if (!open.empty()) throw std::invalid_argument("block specs: blocks left incomplete");

    std::vector<std::vector<int>> out;
    for (auto& b : blocks) out.push_back(std::move(b.elements));
    return SetPartition(n, std::move(out));
}

std::vector<BlockSpec> block_specs(const SetPartition& p) {
    std::vector<BlockSpec> out;
    for (const auto& b : p.blocks()) out.push_back({b.front(), static_cast<int>(b.size())});
    return out;
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
    // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]).
    if (n == 0) {
        visit(SetPartition(0, {}));
        return;
    }
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int max_label) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(max_label + 1);
            for (int k = 0; k < n; ++k) blocks[a[k]].push_back(k + 1);
            visit(SetPartition(n, std::move(blocks)));
            return;
        }
        for (int c = 0; c <= max_label + 1; ++c) {
            a[i] = c;
            rec(i + 1, std::max(max_label, c));
        }
    };
    a[0] = 0;
    rec(1, 0);
}

std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

void for_each_word(int m, int k, const std::function<void(const Word&)>& visit) {
    if (m < 1 && k > 0) return;
    std::vector<int> letters(k, 1);
    while (true) {
        visit(Word(letters, m));
        int i = k - 1;
        while (i >= 0 && letters[i] == m) letters[i--] = 1;
        if (i < 0) return;
        ++letters[i];
    }
}

}  // namespace shiish
