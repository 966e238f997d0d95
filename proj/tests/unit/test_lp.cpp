#include <doctest.h>

#include <stdexcept>

#include "shiish/lp.h"

using namespace shiish::lp;

namespace {

Vector v(std::initializer_list<int> xs) {
    Vector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("maximize") {
    // max x + y s.t. x <= 2, y <= 3, x + y <= 4
    auto r = maximize(v({1, 1}), {v({1, 0}), v({0, 1}), v({1, 1})}, v({2, 3, 4}));
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.value == 4);
    // Dual feasibility: y >= 0 and y^T A = c.
    CHECK(r.dual[0] * 1 + r.dual[2] == 1);
    CHECK(r.dual[1] * 1 + r.dual[2] == 1);
    auto u = maximize(v({1, 0}), {v({0, 1})}, v({1}));
    CHECK(u.status == LpResult::Status::unbounded);
}

TEST_CASE("contradictory pair") {
    std::vector<StrictInequality> s{{v({1, -1}), 0, 1}, {v({-1, 1}), 0, 1}};
    auto f = strict_feasible(s, 2);
    CHECK_FALSE(f.feasible);
    CHECK(verify_certificate(s, f.certificate));
}

TEST_CASE("a region of Shi(3) above every affine hyperplane") {
    std::vector<StrictInequality> s{{v({1, -1, 0}), 0, 1}, {v({0, 1, -1}), 0, 1}, {v({1, -1, 0}), 1, 1},
                                    {v({1, 0, -1}), 1, 1}, {v({0, 1, -1}), 1, 1}};
    auto f = strict_feasible(s, 3);
    REQUIRE(f.feasible);
    CHECK(satisfies(s, f.witness));
    CHECK(satisfies(s, Vector{mpq_class(3), mpq_class(3, 2), mpq_class(0)}));
}

TEST_CASE("sandwiched difference is infeasible") {
    // 1 < x1 - x2 <= x1 - x3 < 1
    std::vector<StrictInequality> s{{v({1, -1, 0}), 0, 1}, {v({0, 1, -1}), 0, 1}, {v({1, 0, -1}), 1, -1},
                                    {v({1, -1, 0}), 1, 1}};
    auto f = strict_feasible(s, 3);
    CHECK_FALSE(f.feasible);
    CHECK(verify_certificate(s, f.certificate));
    CHECK_FALSE(verify_certificate(s, v({1, 0, 0, 0})));
}

TEST_CASE("equations restrict the search") {
    std::vector<StrictInequality> s{{v({1, 0}), 0, 1}};
    CHECK(strict_feasible(s, 2, {{v({1, 0}), 1}}).feasible);
    CHECK_FALSE(strict_feasible(s, 2, {{v({1, 0}), -1}}).feasible);
}

TEST_CASE("rank") {
    CHECK(rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
    CHECK(rank({}) == 0);
}

}
