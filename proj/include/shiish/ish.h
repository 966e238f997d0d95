#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "shiish/core.h"

namespace shiish {

/// (pi, eps): eps_i counts the dots at position i.
struct IshCeilingDiagram {
    Permutation pi;
    std::vector<int> eps;

    friend auto operator<=>(const IshCeilingDiagram&, const IshCeilingDiagram&) = default;
};

/// Positive eps entries strictly increase, sit right of pi^{-1}(1), and satisfy eps_i < pi_i.
bool is_ish_diagram(const IshCeilingDiagram& d);
/// Invariants plus: (eps_i, pi_i) is an edge of G whenever eps_i > 0.
bool validate_ish(const IshCeilingDiagram& d, const Graph& g);

struct IshStatistics {
    SetPartition ceiling_partition;
    int dof = 0;
    bool dominant = false;
    bool relatively_bounded = false;  // pi_1 = 1 and eps_n > 0
    int last_dotted = 0;              // k; pi^{-1}(1) when nothing is dotted
};

IshStatistics ish_statistics(const IshCeilingDiagram& d);

void for_each_ish(int n, const Graph& g, const std::function<void(const IshCeilingDiagram&)>& visit);
std::vector<IshCeilingDiagram> enumerate_ish(int n, const Graph& g);

// ---------------------------------------------------------------- boards

struct Square {
    int col = 0;
    int row = 0;
    friend auto operator<=>(const Square&, const Square&) = default;
};

/// Column i of the hatted board has rows 1 .. n+i-1; rows above n form the
/// staircase above the bar, where (j, n+i) survives only if (i, j) is in G.
/// The unhatted board drops column 1.
class Board {
public:
    Board() = default;
    Board(Graph g, bool hatted);

    int n() const noexcept { return graph_.vertex_count(); }
    bool hatted() const noexcept { return hatted_; }
    const Graph& graph() const noexcept { return graph_; }
    int first_column() const noexcept { return hatted_ ? 1 : 2; }
    bool contains(Square s) const;
    std::vector<Square> squares() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    Graph graph_;
    bool hatted_ = true;
};

/// Rooks are kept sorted by column.
struct RookPlacement {
    Board board;
    std::vector<Square> rooks;

    /// Row of the rook in a column, or 0 when the column is empty.
    int row_in_column(int col) const;
    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
};

/// Rooks on the board, pairwise in distinct rows and columns.
bool is_non_attacking(const RookPlacement& p);
/// n - 1 non-attacking rooks on the unhatted board.
bool is_maximal_placement(const RookPlacement& p);
/// n non-attacking rooks on the hatted board, the column-1 rook below the
/// bar, and every row below it occupied.
bool is_valid_hatted_placement(const RookPlacement& p);

RookPlacement rho_hat(const IshCeilingDiagram& d, const Graph& g);
IshCeilingDiagram rho_hat_inverse(const RookPlacement& p);
RookPlacement rho(const IshCeilingDiagram& d, const Graph& g);
/// Restores the column-1 rook in the lowest free row, then inverts rho_hat.
IshCeilingDiagram rho_inverse(const RookPlacement& p);
RookPlacement restrict_to_unhatted(const RookPlacement& hatted);
RookPlacement extend_to_hatted(const RookPlacement& unhatted);

/// The word v before the cycle-lemma step of alpha; lives in [n+1]^n.
Word alpha_laser_word(const RookPlacement& p);
/// Maximal placement on B_n(K_n) -> parking function.
Word alpha(const RookPlacement& p);
RookPlacement alpha_inverse(const Word& parking_function);

/// Valid placement on the hatted board -> rook word via downward lasers.
Word lambda(const RookPlacement& p);
RookPlacement lambda_inverse(const Word& rook_word, const Graph& g);

/// Number of placements of m non-attacking rooks, by exhaustive search.
unsigned long long count_rook_placements(const Board& b, int m);

}  // namespace shiish
