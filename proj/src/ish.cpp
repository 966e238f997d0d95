#include "shiish/ish.h"

#include <algorithm>
#include <stdexcept>

#include "shiish/parking.h"
#include "shiish/rook_words.h"

namespace shiish {

bool is_ish_diagram(const IshCeilingDiagram& d) {
    const int n = d.pi.size();
    if (static_cast<int>(d.eps.size()) != n) return false;
    if (n == 0) return true;
    const int p1 = d.pi.position_of(1);
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        int e = d.eps[i - 1];
        if (e < 0) return false;
        if (e == 0) continue;
        if (i <= p1 || e <= prev || e >= d.pi(i)) return false;
        prev = e;
    }
    return true;
}

bool validate_ish(const IshCeilingDiagram& d, const Graph& g) {
    if (g.vertex_count() != d.pi.size() || !is_ish_diagram(d)) return false;
    for (int i = 1; i <= d.pi.size(); ++i) {
        int e = d.eps[i - 1];
        if (e > 0 && !g.has_edge(e, d.pi(i))) return false;
    }
    return true;
}

IshStatistics ish_statistics(const IshCeilingDiagram& d) {
    if (!is_ish_diagram(d)) throw std::invalid_argument("ish_statistics: not an Ish ceiling diagram");
    const int n = d.pi.size();
    IshStatistics s;
    std::vector<std::pair<int, int>> pairs;
    s.last_dotted = d.pi.position_of(1);
    for (int i = 1; i <= n; ++i) {
        if (d.eps[i - 1] > 0) {
            pairs.emplace_back(d.eps[i - 1], d.pi(i));
            s.last_dotted = i;
        }
    }
    s.ceiling_partition = SetPartition::generated_by(n, pairs);
    s.dof = n - s.last_dotted + d.pi.position_of(1);
    s.dominant = d.pi.is_identity();
    s.relatively_bounded = d.pi(1) == 1 && d.eps[n - 1] > 0;
    // n = 1 has a single region, which is trivially of minimal freedom.
    if (n == 1) s.relatively_bounded = true;
    return s;
}

void for_each_ish(int n, const Graph& g, const std::function<void(const IshCeilingDiagram&)>& visit) {
    if (g.vertex_count() != n) throw std::invalid_argument("enumerate_ish: graph size differs from n");
    for (const auto& pi : all_permutations(n)) {
        IshCeilingDiagram d{pi, std::vector<int>(n, 0)};
        const int p1 = pi.position_of(1);
        std::function<void(int, int)> rec = [&](int pos, int prev) {
            if (pos > n) {
                visit(d);
                return;
            }
            d.eps[pos - 1] = 0;
            rec(pos + 1, prev);
            for (int e = prev + 1; e < pi(pos); ++e) {
                if (!g.has_edge(e, pi(pos))) continue;
                d.eps[pos - 1] = e;
                rec(pos + 1, e);
            }
            d.eps[pos - 1] = 0;
        };
        rec(p1 + 1, 0);
    }
}

std::vector<IshCeilingDiagram> enumerate_ish(int n, const Graph& g) {
    std::vector<IshCeilingDiagram> out;
    for_each_ish(n, g, [&](const IshCeilingDiagram& d) { out.push_back(d); });
    return out;
}

// ---------------------------------------------------------------- boards

Board::Board(Graph g, bool hatted) : graph_(std::move(g)), hatted_(hatted) {}

bool Board::contains(Square s) const {
    const int n = this->n();
    if (s.col < first_column() || s.col > n) return false;
    if (s.row < 1 || s.row > n + s.col - 1) return false;
    if (s.row <= n) return true;
    return graph_.has_edge(s.row - n, s.col);
}

std::vector<Square> Board::squares() const {
    std::vector<Square> out;
    for (int c = first_column(); c <= n(); ++c)
        for (int r = 1; r <= n() + c - 1; ++r)
            if (contains({c, r})) out.push_back({c, r});
    return out;
}

int RookPlacement::row_in_column(int col) const {
    for (const auto& s : rooks)
        if (s.col == col) return s.row;
    return 0;
}

bool is_non_attacking(const RookPlacement& p) {
    std::vector<int> cols;
    std::vector<int> rows;
    for (const auto& s : p.rooks) {
        if (!p.board.contains(s)) return false;
        cols.push_back(s.col);
        rows.push_back(s.row);
    }
    std::sort(cols.begin(), cols.end());
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end() &&
           std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

bool is_maximal_placement(const RookPlacement& p) {
    return !p.board.hatted() && static_cast<int>(p.rooks.size()) == p.board.n() - 1 && is_non_attacking(p);
}

bool is_valid_hatted_placement(const RookPlacement& p) {
    const int n = p.board.n();
    if (!p.board.hatted() || static_cast<int>(p.rooks.size()) != n || !is_non_attacking(p)) return false;
    int r1 = p.row_in_column(1);
    if (r1 == 0) return false;
    std::vector<char> occupied(2 * n + 1, 0);
    for (const auto& s : p.rooks) occupied[s.row] = 1;
    for (int r = 1; r < r1; ++r)
        if (!occupied[r]) return false;
    return true;
}

namespace {

RookPlacement sorted_placement(Board b, std::vector<Square> rooks) {
    std::sort(rooks.begin(), rooks.end());
    return {std::move(b), std::move(rooks)};
}

}  // namespace

RookPlacement rho_hat(const IshCeilingDiagram& d, const Graph& g) {
    if (!validate_ish(d, g)) throw std::invalid_argument("rho_hat: diagram is not valid for the graph");
    const int n = d.pi.size();
    std::vector<Square> rooks;
    for (int i = 1; i <= n; ++i) {
        int p = d.pi.position_of(i);
        int e = d.eps[p - 1];
        rooks.push_back({i, e == 0 ? p : n + e});
    }
    return sorted_placement(Board(g, true), std::move(rooks));
}

IshCeilingDiagram rho_hat_inverse(const RookPlacement& p) {
    if (!is_valid_hatted_placement(p)) throw std::invalid_argument("rho_hat_inverse: invalid placement");
    const int n = p.board.n();
    std::vector<int> one_line(n, 0);
    std::vector<int> eps(n, 0);
    std::vector<std::pair<int, int>> dotted;  // (eps, letter)
    for (const auto& s : p.rooks) {
        if (s.row <= n)
            one_line[s.row - 1] = s.col;
        else
            dotted.emplace_back(s.row - n, s.col);
    }
    std::sort(dotted.begin(), dotted.end());
    std::size_t next = 0;
    for (int pos = 1; pos <= n; ++pos) {
        if (one_line[pos - 1] != 0) continue;
        one_line[pos - 1] = dotted[next].second;
        eps[pos - 1] = dotted[next].first;
        ++next;
    }
    IshCeilingDiagram d{Permutation(std::move(one_line)), std::move(eps)};
    if (!validate_ish(d, p.board.graph())) throw std::logic_error("rho_hat_inverse: reconstruction is not a valid diagram");
    return d;
}

RookPlacement restrict_to_unhatted(const RookPlacement& hatted) {
    if (!hatted.board.hatted()) throw std::invalid_argument("restrict_to_unhatted: board is already unhatted");
    std::vector<Square> rooks;
    for (const auto& s : hatted.rooks)
        if (s.col != 1) rooks.push_back(s);
    return sorted_placement(Board(hatted.board.graph(), false), std::move(rooks));
}

RookPlacement extend_to_hatted(const RookPlacement& unhatted) {
    if (!is_maximal_placement(unhatted)) throw std::invalid_argument("extend_to_hatted: placement is not maximal");
    const int n = unhatted.board.n();
    std::vector<char> occupied(2 * n + 1, 0);
    for (const auto& s : unhatted.rooks) occupied[s.row] = 1;
    int r = 1;
    while (r <= n && occupied[r]) ++r;
    if (r > n) throw std::logic_error("extend_to_hatted: no free row below the bar");
    std::vector<Square> rooks(unhatted.rooks);
    rooks.push_back({1, r});
    return sorted_placement(Board(unhatted.board.graph(), true), std::move(rooks));
}

RookPlacement rho(const IshCeilingDiagram& d, const Graph& g) { return restrict_to_unhatted(rho_hat(d, g)); }

IshCeilingDiagram rho_inverse(const RookPlacement& p) { return rho_hat_inverse(extend_to_hatted(p)); }

// ---------------------------------------------------------------- lasers

Word alpha_laser_word(const RookPlacement& p) {
    if (!is_maximal_placement(p)) throw std::invalid_argument("alpha: placement is not maximal on the unhatted board");
    const int n = p.board.n();
    std::vector<int> v(n, 0);
    v[0] = 1;
    for (int i = 2; i <= n; ++i) {
        int h = p.row_in_column(i);
        int blocked = 0;
        for (int j = 2; j < i; ++j)
            if (p.row_in_column(j) < h) ++blocked;
        v[i - 1] = h - blocked;
    }
    return Word(std::move(v), n + 1);
}

Word alpha(const RookPlacement& p) {
    if (!p.board.graph().is_complete()) throw std::invalid_argument("alpha: defined on the complete board only");
    auto cert = orbit_certificate(alpha_laser_word(p));
    return cert.shifts[cert.parking_index].with_alphabet(p.board.n());
}

RookPlacement alpha_inverse(const Word& w) {
    if (!is_parking_function(w)) throw std::invalid_argument("alpha_inverse: " + w.to_string() + " is not a parking function");
    const int n = static_cast<int>(w.size());
    Word v = cyclic_shift(w.with_alphabet(n + 1), 1 - w.at(1));
    std::vector<char> used(2 * n + 1, 0);
    std::vector<Square> rooks;
    for (int i = 2; i <= n; ++i) {
        int free_seen = 0;
        int placed = 0;
        for (int r = 1; r <= n + i - 1; ++r) {
            if (used[r]) continue;
            if (++free_seen == v.at(i)) {
                placed = r;
                break;
            }
        }
        if (placed == 0) throw std::logic_error("alpha_inverse: column " + std::to_string(i) + " has too few free squares");
        used[placed] = 1;
        rooks.push_back({i, placed});
    }
    return sorted_placement(Board(Graph::complete(n), false), std::move(rooks));
}

Word lambda(const RookPlacement& p) {
    if (!is_valid_hatted_placement(p)) throw std::invalid_argument("lambda: invalid placement");
    const int n = p.board.n();
    std::vector<int> row(n + 1, 0);
    for (const auto& s : p.rooks) row[s.col] = s.row;
    std::function<int(int)> endpoint = [&](int j) { return row[j] <= n ? row[j] : endpoint(row[j] - n); };
    std::vector<int> w(n);
    for (int j = 1; j <= n; ++j) w[j - 1] = endpoint(j);
    Word out(std::move(w));
    if (!is_rook_word(out)) throw std::logic_error("lambda: produced " + out.to_string() + ", not a rook word");
    return out;
}

RookPlacement lambda_inverse(const Word& w, const Graph& g) {
    if (!is_rook_word(w)) throw std::invalid_argument("lambda_inverse: " + w.to_string() + " is not a rook word");
    const int n = static_cast<int>(w.size());
    if (g.vertex_count() != n) throw std::invalid_argument("lambda_inverse: graph size differs from word length");
    std::vector<int> last(n + 1, 0);
    std::vector<Square> rooks;
    for (int j = 1; j <= n; ++j) {
        int c = w.at(j);
        rooks.push_back(last[c] == 0 ? Square{j, c} : Square{j, n + last[c]});
        last[c] = j;
    }
    RookPlacement p = sorted_placement(Board(g, true), std::move(rooks));
    if (!is_valid_hatted_placement(p))
        throw std::invalid_argument("lambda_inverse: " + w.to_string() + " does not give a valid placement for the graph");
    return p;
}

unsigned long long count_rook_placements(const Board& b, int m) {
    const int n = b.n();
    std::vector<std::vector<int>> rows_by_col;
    for (int c = b.first_column(); c <= n; ++c) {
        std::vector<int> rows;
        for (int r = 1; r <= n + c - 1; ++r)
            if (b.contains({c, r})) rows.push_back(r);
        rows_by_col.push_back(std::move(rows));
    }
    std::vector<char> used(2 * n + 1, 0);
    std::function<unsigned long long(std::size_t, int)> rec = [&](std::size_t col, int left) -> unsigned long long {
        if (left == 0) return 1;
        if (rows_by_col.size() - col < static_cast<std::size_t>(left)) return 0;
        unsigned long long total = rec(col + 1, left);
        for (int r : rows_by_col[col]) {
            if (used[r]) continue;
            used[r] = 1;
            total += rec(col + 1, left - 1);
            used[r] = 0;
        }
        return total;
    };
    return rec(0, m);
}

}  // namespace shiish
