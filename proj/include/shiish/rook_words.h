#pragma once

#include <cstddef>
#include <vector>

#include "shiish/core.h"

namespace shiish {

/// Letters lie in [n] and every integer in [1, w_1] occurs.
bool is_rook_word(const Word& w);
/// w_1 = 1 and letters lie in [n - 1]; the single word "1" counts as prime.
bool is_prime_rook_word(const Word& w);

/// All cyclic shifts of a word, with the unique parking function and rook
/// word located. Construction throws std::logic_error if either is missing
/// or repeated, which would contradict the cycle lemma.
struct OrbitCertificate {
    Word base;
    std::vector<Word> shifts;  // shifts[t] = cyclic_shift(base, t)
    std::size_t parking_index = 0;
    std::size_t rook_index = 0;
};

/// Orbit of w in [n+1]^n under Z_{n+1}. The alphabet of w must be n + 1.
OrbitCertificate orbit_certificate(const Word& w);
/// Orbit of w in [n-1]^n under Z_{n-1}, locating the prime versions.
OrbitCertificate prime_orbit_certificate(const Word& w);

/// Rook word -> the parking function in its Z_{n+1}-orbit.
Word beta(const Word& rook_word);
Word beta_inverse(const Word& parking_function);
/// Prime rook word -> the prime parking function in its Z_{n-1}-orbit.
Word beta_prime(const Word& prime_rook_word);
Word beta_prime_inverse(const Word& prime_parking_function);

/// Circular lot with n + 1 spaces: car i starts at w_i and takes the first
/// free space clockwise. Returns the space left empty.
int pollak_empty_spot(const Word& w);

struct TailAndDof {
    std::vector<int> tail;  // the interval [j, n], possibly empty
    int dof = 0;
};

TailAndDof tail_and_dof(const Word& rook_word);

}  // namespace shiish
