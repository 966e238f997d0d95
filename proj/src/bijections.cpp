#include "shiish/bijections.h"

#include <algorithm>
#include <stdexcept>

#include "shiish/parking.h"
#include "shiish/rook_words.h"

namespace shiish {

std::string to_string(const DiamondWord& w) {
    bool compact = std::all_of(w.begin(), w.end(), [](const auto& s) { return !s || *s <= 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !compact) out += ',';
        out += w[i] ? std::to_string(*w[i]) : "◇";
    }
    return out;
}

namespace {

std::optional<int> lowest_label(const std::vector<int>& column) {
    if (column.empty()) return std::nullopt;
    return column.front();
}

void require_graph(const IshCeilingDiagram& d, const Graph& g, const char* who) {
    if (!validate_ish(d, g)) throw std::invalid_argument(std::string(who) + ": diagram is not valid for the graph");
}

}  // namespace

// ---------------------------------------------------------------- delta

IshCeilingDiagram delta(const Word& w, DeltaTrace* trace) {
    const int n = static_cast<int>(w.size());
    auto comps = prime_components(word_to_dyck(w));
    const int d = static_cast<int>(comps.size());
    const int left_of_one = static_cast<int>(component_with_label_one(comps));
    auto component = [&](int i) -> const PrimeComponent& { return comps[(left_of_one + i - 1) % d]; };

    DiamondWord word;
    const auto& c1 = component(1);
    if (c1.size() == 1) {
        word.push_back(1);
    } else {
        int start = 0;
        while (lowest_label(c1.columns[start]) != 1) ++start;
        const int k = c1.size();
        for (int t = 0; t < k - 1; ++t) word.push_back(lowest_label(c1.columns[(start + t) % (k - 1)]));
        word.push_back(std::nullopt);
    }
    if (trace) trace->after_first_component = word;

    for (int i = 2; i <= d; ++i) {
        DiamondWord piece;
        for (const auto& col : component(i).columns) piece.push_back(lowest_label(col));
        word.insert(word.begin() + (i - 1), piece.begin(), piece.end());
        if (trace) trace->after_component.push_back(word);
    }

    std::rotate(word.begin(), word.begin() + 1, word.begin() + d);
    if (trace) trace->after_prefix_rotation = word;

    std::rotate(word.begin(), word.begin() + (d - 1 - left_of_one), word.end());
    if (trace) trace->after_global_rotation = word;
    if (word[left_of_one] != 1) throw std::logic_error("delta: label 1 misplaced after rotation");

    // Non-minimal block elements become dotted letters, dotted by their
    // predecessor in the block; they fill the diamonds in order of that dot count.
    std::vector<std::pair<int, int>> dotted;  // (eps, letter)
    const SetPartition blocks = position_partition(w);
    for (const auto& b : blocks.blocks())
        for (std::size_t t = 1; t < b.size(); ++t) dotted.emplace_back(b[t - 1], b[t]);
    std::sort(dotted.begin(), dotted.end());

    std::vector<int> one_line(n);
    std::vector<int> eps(n, 0);
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
        if (word[i]) {
            one_line[i] = *word[i];
        } else {
            if (next == dotted.size()) throw std::logic_error("delta: more diamonds than dotted letters");
            eps[i] = dotted[next].first;
            one_line[i] = dotted[next].second;
            ++next;
        }
    }
    IshCeilingDiagram out{Permutation(std::move(one_line)), std::move(eps)};
    if (!is_ish_diagram(out)) throw std::logic_error("delta: result is not an Ish ceiling diagram");
    return out;
}

// ---------------------------------------------------------------- gamma

Word gamma(const IshCeilingDiagram& diagram, GammaTrace* trace) {
    auto stats = ish_statistics(diagram);
    const int n = diagram.pi.size();
    const int d = stats.dof;
    const auto& ceiling = stats.ceiling_partition;

    DiamondWord word;
    for (int i = 1; i <= n; ++i) {
        if (diagram.eps[i - 1] > 0)
            word.push_back(std::nullopt);
        else
            word.push_back(diagram.pi(i));
    }
    const int cycle_index = d - diagram.pi.position_of(1);
    if (cycle_index < 0 || cycle_index >= d) throw std::logic_error("gamma: cycle index out of range");
    std::rotate(word.rbegin(), word.rbegin() + cycle_index, word.rend());
    std::rotate(word.rbegin() + (n - d), word.rbegin() + (n - d) + 1, word.rend());
    if (word.front() != 1) throw std::logic_error("gamma: word does not start with 1");

    auto column_of = [&](const std::optional<int>& s) -> std::vector<int> {
        if (!s) return {};
        return ceiling.blocks()[ceiling.block_index_of(*s)];
    };

    std::vector<std::vector<std::vector<int>>> comps(d);
    for (int i = d; i >= 2; --i) {
        std::size_t start = i - 1;
        std::size_t end = start;
        int height = 0;
        std::vector<std::vector<int>> cols;
        do {
            if (end >= word.size()) throw std::logic_error("gamma: component runs past the end of the word");
            cols.push_back(column_of(word[end]));
            height += static_cast<int>(cols.back().size());
            ++end;
        } while (height != static_cast<int>(end - start));
        word.erase(word.begin() + start, word.begin() + end);
        comps[i - 1] = std::move(cols);
    }

    if (word.size() == 1) {
        comps[0] = {column_of(word[0])};
    } else {
        if (word.back()) throw std::logic_error("gamma: special component does not end in a diamond");
        word.pop_back();
        const int m = static_cast<int>(word.size());
        int rotation = -1;
        for (int r = 0; r < m && rotation < 0; ++r) {
            int excess = 0;
            bool ok = true;
            for (int t = 0; t < m && ok; ++t) {
                excess += static_cast<int>(column_of(word[(r + t) % m]).size()) - 1;
                ok = excess >= 1;
            }
            if (ok) rotation = r;
        }
        if (rotation < 0) throw std::logic_error("gamma: no rotation gives a prime path");
        std::vector<std::vector<int>> cols;
        for (int t = 0; t < m; ++t) cols.push_back(column_of(word[(rotation + t) % m]));
        cols.emplace_back();
        comps[0] = std::move(cols);
    }

    // Components left of C_1 in the path are C_{k+2} .. C_d.
    std::vector<int> order;
    for (int i = cycle_index + 2; i <= d; ++i) order.push_back(i);
    for (int i = 1; i <= cycle_index + 1; ++i) order.push_back(i);

    std::vector<std::vector<int>> columns;
    for (int i : order) columns.insert(columns.end(), comps[i - 1].begin(), comps[i - 1].end());
    Word out = dyck_to_word(LabeledDyckPath(std::move(columns)));

    if (trace) {
        trace->cycle_index = cycle_index;
        trace->components = std::move(comps);
        trace->concatenation = std::move(order);
    }
    return out;
}

// ---------------------------------------------------------------- theorem-level maps

BijectionKind parse_bijection_kind(std::string_view name) {
    if (name == "basic") return BijectionKind::basic;
    if (name == "dominance") return BijectionKind::dominance;
    if (name == "bounded") return BijectionKind::bounded;
    if (name == "freedom") return BijectionKind::freedom;
    throw std::invalid_argument("unknown bijection '" + std::string(name) + "'");
}

std::string_view bijection_name(BijectionKind kind) {
    switch (kind) {
        case BijectionKind::basic: return "basic";
        case BijectionKind::dominance: return "dominance";
        case BijectionKind::bounded: return "bounded";
        case BijectionKind::freedom: return "freedom";
    }
    return "?";
}

ShiCeilingDiagram bijection_basic(const IshCeilingDiagram& d) {
    return omega(alpha(rho(d, Graph::complete(d.pi.size()))));
}

ShiCeilingDiagram bijection_dominance(const IshCeilingDiagram& d, const Graph& g) {
    require_graph(d, g, "bijection_dominance");
    return omega(beta(lambda(rho_hat(d, g))));
}

ShiCeilingDiagram bijection_bounded(const IshCeilingDiagram& d, const Graph& g) {
    require_graph(d, g, "bijection_bounded");
    if (!ish_statistics(d).relatively_bounded) throw std::invalid_argument("bijection_bounded: input is not relatively bounded");
    return omega(beta_prime(lambda(rho_hat(d, g))));
}

ShiCeilingDiagram bijection_freedom(const IshCeilingDiagram& d, const Graph& g) {
    require_graph(d, g, "bijection_freedom");
    return omega(gamma(d));
}

ShiCeilingDiagram apply_bijection(BijectionKind kind, const IshCeilingDiagram& d, const Graph& g) {
    switch (kind) {
        case BijectionKind::basic:
            if (!g.is_complete()) throw std::invalid_argument("bijection_basic: only defined for the complete graph");
            return bijection_basic(d);
        case BijectionKind::dominance: return bijection_dominance(d, g);
        case BijectionKind::bounded: return bijection_bounded(d, g);
        case BijectionKind::freedom: return bijection_freedom(d, g);
    }
    throw std::logic_error("apply_bijection: bad kind");
}

IshCeilingDiagram invert_bijection(BijectionKind kind, const ShiCeilingDiagram& s, const Graph& g) {
    if (!validate_shi(s, g)) throw std::invalid_argument("invert_bijection: Shi diagram is not valid for the graph");
    Word w = omega_inverse(s);
    switch (kind) {
        case BijectionKind::basic: return rho_inverse(alpha_inverse(w));
        case BijectionKind::dominance: return rho_hat_inverse(lambda_inverse(beta_inverse(w), g));
        case BijectionKind::bounded: return rho_hat_inverse(lambda_inverse(beta_prime_inverse(w), g));
        case BijectionKind::freedom: return delta(w);
    }
    throw std::logic_error("invert_bijection: bad kind");
}

}  // namespace shiish
