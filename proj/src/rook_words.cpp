#include "shiish/rook_words.h"

#include <stdexcept>

#include "shiish/parking.h"

namespace shiish {

bool is_rook_word(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return false;
    std::vector<char> seen(n + 1, 0);
    for (int c : w.letters()) {
        if (c < 1 || c > n) return false;
        seen[c] = 1;
    }
    for (int c = 1; c <= w.at(1); ++c)
        if (!seen[c]) return false;
    return true;
}

bool is_prime_rook_word(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0 || w.at(1) != 1) return false;
    if (n == 1) return true;
    for (int c : w.letters())
        if (c > n - 1) return false;
    return true;
}

namespace {

OrbitCertificate scan_orbit(const Word& w, bool (*parking)(const Word&), bool (*rook)(const Word&)) {
    OrbitCertificate cert;
    cert.base = w;
    const int m = w.alphabet_size();
    int parking_hits = 0;
    int rook_hits = 0;
    for (int t = 0; t < m; ++t) {
        Word s = cyclic_shift(w, t);
        if (parking(s)) {
            cert.parking_index = t;
            ++parking_hits;
        }
        if (rook(s)) {
            cert.rook_index = t;
            ++rook_hits;
        }
        cert.shifts.push_back(std::move(s));
    }
    if (parking_hits != 1 || rook_hits != 1) {
        throw std::logic_error("cycle lemma violated on orbit of " + w.to_string() + ": " + std::to_string(parking_hits) +
                               " parking functions, " + std::to_string(rook_hits) + " rook words");
    }
    return cert;
}

}  // namespace

OrbitCertificate orbit_certificate(const Word& w) {
    if (w.alphabet_size() != static_cast<int>(w.size()) + 1)
        throw std::invalid_argument("orbit_certificate: word must lie in [n+1]^n");
    return scan_orbit(w, is_parking_function, is_rook_word);
}

OrbitCertificate prime_orbit_certificate(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n < 2 || w.alphabet_size() != n - 1)
        throw std::invalid_argument("prime_orbit_certificate: word must lie in [n-1]^n with n >= 2");
    return scan_orbit(w, is_prime_parking_function, is_prime_rook_word);
}

Word beta(const Word& rook_word) {
    if (!is_rook_word(rook_word)) throw std::invalid_argument("beta: " + rook_word.to_string() + " is not a rook word");
    const int n = static_cast<int>(rook_word.size());
    auto cert = orbit_certificate(rook_word.with_alphabet(n + 1));
    return cert.shifts[cert.parking_index].with_alphabet(n);
}

Word beta_inverse(const Word& parking_function) {
    if (!is_parking_function(parking_function))
        throw std::invalid_argument("beta_inverse: " + parking_function.to_string() + " is not a parking function");
    const int n = static_cast<int>(parking_function.size());
    auto cert = orbit_certificate(parking_function.with_alphabet(n + 1));
    const Word& r = cert.shifts[cert.rook_index];
    for (int c : r.letters())
        if (c == n + 1) throw std::logic_error("beta_inverse: rook word uses letter n+1");
    return r.with_alphabet(n);
}

Word beta_prime(const Word& prime_rook_word) {
    if (!is_prime_rook_word(prime_rook_word))
        throw std::invalid_argument("beta_prime: " + prime_rook_word.to_string() + " is not a prime rook word");
    const int n = static_cast<int>(prime_rook_word.size());
    if (n == 1) return prime_rook_word;
    auto cert = prime_orbit_certificate(prime_rook_word.with_alphabet(n - 1));
    return cert.shifts[cert.parking_index].with_alphabet(n);
}

Word beta_prime_inverse(const Word& prime_parking_function) {
    if (!is_prime_parking_function(prime_parking_function))
        throw std::invalid_argument("beta_prime_inverse: " + prime_parking_function.to_string() +
                                    " is not a prime parking function");
    const int n = static_cast<int>(prime_parking_function.size());
    if (n == 1) return prime_parking_function;
    auto cert = prime_orbit_certificate(prime_parking_function.with_alphabet(n - 1));
    return cert.shifts[cert.rook_index].with_alphabet(n);
}

int pollak_empty_spot(const Word& w) {
    const int spots = static_cast<int>(w.size()) + 1;
    std::vector<char> taken(spots + 1, 0);
    for (int c : w.letters()) {
        if (c < 1 || c > spots) throw std::invalid_argument("pollak_empty_spot: letter outside [n+1]");
        int s = c;
        while (taken[s]) s = s % spots + 1;
        taken[s] = 1;
    }
    for (int s = 1; s <= spots; ++s)
        if (!taken[s]) return s;
    throw std::logic_error("pollak_empty_spot: lot full");
}

TailAndDof tail_and_dof(const Word& rook_word) {
    if (!is_rook_word(rook_word)) throw std::invalid_argument("tail_and_dof: " + rook_word.to_string() + " is not a rook word");
    const int n = static_cast<int>(rook_word.size());
    std::vector<char> seen(n + 1, 0);
    for (int c : rook_word.letters()) seen[c] = 1;
    int j = n + 1;
    while (j - 1 >= rook_word.at(1) + 1 && seen[j - 1]) --j;
    TailAndDof out;
    for (int c = j; c <= n; ++c) out.tail.push_back(c);
    out.dof = rook_word.at(1) + static_cast<int>(out.tail.size());
    return out;
}

}  // namespace shiish
