#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace shiish::lp {

using Vector = std::vector<mpq_class>;

struct LpResult {
    enum class Status { optimal, unbounded } status = Status::optimal;
    mpq_class value;
    Vector x;     // primal optimum
    Vector dual;  // one multiplier per row of A, all >= 0
};

/// max c.x subject to A x <= b with x free. Requires b >= 0 so the origin is
/// a starting vertex. Dense tableau simplex with Bland's rule.
LpResult maximize(const Vector& c, const std::vector<Vector>& a, const Vector& b);

/// sign * (a.x - b) > 0, sign in {+1, -1}.
struct StrictInequality {
    Vector a;
    mpq_class b;
    int sign = 1;
};

/// a.x = b
struct Equation {
    Vector a;
    mpq_class b;
};

struct Feasibility {
    bool feasible = false;
    Vector witness;  // strict interior point when feasible
    mpq_class slack;  // the optimal margin, capped at 1
    /// When infeasible and no equations were given: u >= 0, u != 0 with
    /// sum u_i s_i a_i = 0 and sum u_i s_i b_i >= 0.
    Vector certificate;
};

/// Decides whether the strict system (together with any equations) has a
/// solution in dimension `dim` by maximizing the common slack.
Feasibility strict_feasible(const std::vector<StrictInequality>& strict, int dim,
                            const std::vector<Equation>& equations = {});

/// Independent check of an infeasibility certificate.
bool verify_certificate(const std::vector<StrictInequality>& strict, const Vector& u);

/// True iff the witness satisfies every strict inequality.
bool satisfies(const std::vector<StrictInequality>& strict, const Vector& x);

/// Rank of an integer/rational matrix by fraction-free elimination.
int rank(std::vector<std::vector<mpz_class>> rows);

}  // namespace shiish::lp
