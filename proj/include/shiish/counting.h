#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "shiish/core.h"

namespace shiish {

/// Dense polynomial in one variable with big-integer coefficients;
/// coefficient k multiplies p^k. Trailing zeros are trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    static IntPolynomial constant(const mpz_class& c);
    /// p - r
    static IntPolynomial linear_root(const mpz_class& r);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    mpz_class evaluate(const mpz_class& x) const;
    /// "p^3 - 6*p^2 + 9*p"
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

/// Number of k-block partitions of [n] whose arcs are all edges of G.
mpz_class stir(const Graph& g, int k);
/// stir(g, k) for k = 0..n in one pass.
std::vector<mpz_class> stir_table(const Graph& g);

/// Sum over k of Stir(G, n-k) n!/(k+1)!.
mpz_class ish_region_count(const Graph& g);
/// n!/(k+1)! for a partition with n-k blocks; the arcs must lie in G.
mpz_class ceiling_partition_count(const Graph& g, const SetPartition& p);
/// Sum over k of Stir(G, n-k) C(n-k-1, m-k) n!/(n-m+k)!, for 0 <= m <= n-1.
mpz_class rook_number(const Graph& g, int m);
/// p * sum over k of (-1)^k Stir(G, n-k) (p-k-1)(p-k-2)...(p-n+1).
IntPolynomial ish_char_poly(const Graph& g);

}  // namespace shiish
