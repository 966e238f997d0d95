#include "shiish/counting.h"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace shiish {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::linear_root(const mpz_class& r) { return IntPolynomial({-r, mpz_class(1)}); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool show_coeff = mag != 1 || k == 0;
        if (show_coeff) out += mag.get_str();
        if (k > 0) {
            if (show_coeff) out += '*';
            out += 'p';
            if (k > 1) out += '^' + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return IntPolynomial();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::vector<mpz_class> stir_table(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<mpz_class> table(n + 1, 0);
    if (g.is_complete()) {
        // S(j, k) = k S(j-1, k) + S(j-1, k-1)
        table[0] = 1;
        for (int j = 1; j <= n; ++j) {
            for (int k = j; k >= 1; --k) table[k] = k * table[k] + table[k - 1];
            table[0] = 0;
        }
        return table;
    }
    if (n > 32) throw std::invalid_argument("stir_table: graphs other than K_n are limited to 32 vertices");
    // Scan 1..n keeping the set of current block maxima; joining j to the
    // block ending at i adds the arc (i, j).
    std::map<std::uint32_t, mpz_class> states{{1u, 1}};
    for (int j = 2; j <= n; ++j) {
        std::map<std::uint32_t, mpz_class> next;
        const std::uint32_t bit = std::uint32_t{1} << (j - 1);
        for (const auto& [mask, count] : states) {
            next[mask | bit] += count;
            for (int i = 1; i < j; ++i) {
                const std::uint32_t from = std::uint32_t{1} << (i - 1);
                if ((mask & from) && g.has_edge(i, j)) next[(mask & ~from) | bit] += count;
            }
        }
        states = std::move(next);
    }
    for (const auto& [mask, count] : states) table[std::popcount(mask)] += count;
    return table;
}

mpz_class stir(const Graph& g, int k) {
    if (k < 0 || k > g.vertex_count()) throw std::invalid_argument("stir: k outside [0, n]");
    return stir_table(g)[k];
}

mpz_class ish_region_count(const Graph& g) {
    const int n = g.vertex_count();
    auto s = stir_table(g);
    mpz_class total = 0;
    for (int k = 0; k <= n - 1; ++k) total += s[n - k] * factorial(n) / factorial(k + 1);
    return total;
}

mpz_class ceiling_partition_count(const Graph& g, const SetPartition& p) {
    const int n = g.vertex_count();
    if (p.ground_size() != n) throw std::invalid_argument("ceiling_partition_count: size mismatch");
    if (!g.contains_arcs(p)) throw std::invalid_argument("ceiling_partition_count: partition arcs not all in G");
    int k = n - static_cast<int>(p.block_count());
    return factorial(n) / factorial(k + 1);
}

mpz_class rook_number(const Graph& g, int m) {
    const int n = g.vertex_count();
    if (m < 0 || m > n - 1) throw std::invalid_argument("rook_number: m outside [0, n-1]");
    auto s = stir_table(g);
    mpz_class total = 0;
    for (int k = 0; k <= m; ++k) total += s[n - k] * binomial(n - k - 1, m - k) * factorial(n) / factorial(n - m + k);
    return total;
}

IntPolynomial ish_char_poly(const Graph& g) {
    const int n = g.vertex_count();
    auto s = stir_table(g);
    IntPolynomial sum;
    for (int k = 0; k <= n - 1; ++k) {
        IntPolynomial term = IntPolynomial::constant(k % 2 == 0 ? s[n - k] : mpz_class(-s[n - k]));
        for (int r = k + 1; r <= n - 1; ++r) term = term * IntPolynomial::linear_root(r);
        sum = sum + term;
    }
    return IntPolynomial::linear_root(0) * sum;
}

}  // namespace shiish
