#include "shiish/lp.h"

#include <stdexcept>

namespace shiish::lp {

LpResult maximize(const Vector& c, const std::vector<Vector>& a, const Vector& b) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("lp::maximize: row count mismatch");
    const std::size_t cols = 2 * n + m;

    // Row i: sum_j t[i][j] y_j = rhs[i], y = (x+, x-, slack).
    std::vector<Vector> t(m, Vector(cols));
    Vector rhs(m);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("lp::maximize: row length mismatch");
        if (sgn(b[i]) < 0) throw std::invalid_argument("lp::maximize: right-hand side must be nonnegative");
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = a[i][j];
            t[i][n + j] = -a[i][j];
        }
        t[i][2 * n + i] = 1;
        rhs[i] = b[i];
        basis[i] = 2 * n + i;
    }
    // Objective row: z + sum r_j y_j = value.
    Vector r(cols);
    for (std::size_t j = 0; j < n; ++j) {
        r[j] = -c[j];
        r[n + j] = c[j];
    }
    mpq_class value = 0;

    LpResult result;
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(r[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            mpq_class ratio = rhs[i] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            result.status = LpResult::Status::unbounded;
            return result;
        }

        mpq_class pivot = t[leave][enter];
        for (auto& v : t[leave])
            if (sgn(v) != 0) v /= pivot;
        rhs[leave] /= pivot;
        const Vector& prow = t[leave];
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            mpq_class f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(prow[j]) != 0) t[i][j] -= f * prow[j];
            rhs[i] -= f * rhs[leave];
        }
        mpq_class f = r[enter];
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(prow[j]) != 0) r[j] -= f * prow[j];
        value -= f * rhs[leave];
        basis[leave] = enter;
    }

    result.value = value;
    Vector y(cols);
    for (std::size_t i = 0; i < m; ++i) y[basis[i]] = rhs[i];
    result.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) result.x[j] = y[j] - y[n + j];
    result.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) result.dual[i] = r[2 * n + i];
    return result;
}

namespace {

mpq_class dot(const Vector& a, const Vector& x) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) s += a[i] * x[i];
    return s;
}

}  // namespace

bool satisfies(const std::vector<StrictInequality>& strict, const Vector& x) {
    for (const auto& h : strict) {
        if (h.a.size() != x.size()) return false;
        mpq_class v = dot(h.a, x) - h.b;
        if (sgn(v) * h.sign <= 0) return false;
    }
    return true;
}

bool verify_certificate(const std::vector<StrictInequality>& strict, const Vector& u) {
    if (u.size() != strict.size() || strict.empty()) return false;
    const std::size_t dim = strict.front().a.size();
    Vector combo(dim);
    mpq_class rhs = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (sgn(u[i]) < 0) return false;
        if (sgn(u[i]) == 0) continue;
        nonzero = true;
        for (std::size_t j = 0; j < dim; ++j) combo[j] += u[i] * strict[i].sign * strict[i].a[j];
        rhs += u[i] * strict[i].sign * strict[i].b;
    }
    if (!nonzero) return false;
    for (const auto& v : combo)
        if (sgn(v) != 0) return false;
    return sgn(rhs) >= 0;
}

Feasibility strict_feasible(const std::vector<StrictInequality>& strict_in, int dim, const std::vector<Equation>& equations) {
    std::vector<StrictInequality> strict(strict_in);
    for (const auto& h : strict) {
        if (static_cast<int>(h.a.size()) != dim) throw std::invalid_argument("strict_feasible: dimension mismatch");
        if (h.sign != 1 && h.sign != -1) throw std::invalid_argument("strict_feasible: sign must be +1 or -1");
    }

    // Eliminate one variable per equation.
    struct Substitution {
        Equation eq;
        std::size_t pivot;
    };
    std::vector<Substitution> subs;
    std::vector<Equation> pending(equations);
    Feasibility out;
    for (std::size_t e = 0; e < pending.size(); ++e) {
        Equation eq = pending[e];
        std::size_t p = 0;
        while (p < eq.a.size() && sgn(eq.a[p]) == 0) ++p;
        if (p == eq.a.size()) {
            if (sgn(eq.b) != 0) return out;  // 0 = nonzero
            continue;
        }
        auto eliminate = [&](Vector& a, mpq_class& b) {
            if (sgn(a[p]) == 0) return;
            mpq_class f = a[p] / eq.a[p];
            for (std::size_t j = 0; j < a.size(); ++j) a[j] -= f * eq.a[j];
            b -= f * eq.b;
        };
        for (auto& h : strict) eliminate(h.a, h.b);
        for (std::size_t later = e + 1; later < pending.size(); ++later) eliminate(pending[later].a, pending[later].b);
        subs.push_back({eq, p});
    }

    std::vector<std::size_t> active;
    for (int j = 0; j < dim; ++j) {
        for (const auto& h : strict) {
            if (sgn(h.a[j]) != 0) {
                active.push_back(j);
                break;
            }
        }
    }

    Vector x(dim);
    if (strict.empty()) {
        out.feasible = true;
        out.slack = 1;
    } else {
        mpq_class big = 0;
        for (const auto& h : strict) {
            mpq_class sb = h.sign * h.b;
            if (sb > big) big = sb;
        }
        const std::size_t k = active.size();
        std::vector<Vector> rows;
        Vector rhs;
        for (const auto& h : strict) {
            Vector row(k + 1);
            for (std::size_t q = 0; q < k; ++q) row[q] = -h.sign * h.a[active[q]];
            row[k] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(big - h.sign * h.b);
        }
        Vector cap(k + 1);
        cap[k] = 1;
        rows.push_back(std::move(cap));
        rhs.push_back(big + 1);
        Vector c(k + 1);
        c[k] = 1;

        LpResult lp = maximize(c, rows, rhs);
        if (lp.status != LpResult::Status::optimal) throw std::logic_error("strict_feasible: slack LP unbounded");
        out.slack = lp.value - big;
        out.feasible = sgn(out.slack) > 0;
        if (!out.feasible) {
            if (subs.empty()) out.certificate.assign(lp.dual.begin(), lp.dual.begin() + static_cast<long>(strict.size()));
            return out;
        }
        for (std::size_t q = 0; q < k; ++q) x[active[q]] = lp.x[q];
    }

    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        const auto& eq = it->eq;
        mpq_class s = eq.b;
        for (std::size_t j = 0; j < eq.a.size(); ++j)
            if (j != it->pivot && sgn(eq.a[j]) != 0) s -= eq.a[j] * x[j];
        x[it->pivot] = s / eq.a[it->pivot];
    }
    out.witness = std::move(x);
    return out;
}

int rank(std::vector<std::vector<mpz_class>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                rows[i][j] = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
                mpz_divexact(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace shiish::lp
