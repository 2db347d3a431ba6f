#pragma once

// Tail sums of |i|^{-a} over Gaussian integers outside a disk.

#include <cstdint>

#include "hurwitz/digit_set.hpp"

namespace hurwitz {

/// sum over N <= |i| < M of |i|^{-a}, by enumeration.
long double lattice_annulus_sum(std::int64_t n, std::int64_t m, double a);

/// sum over |i| >= N of |i|^{-a} for a > 2, N >= 1. Rows of the lattice are
/// summed in closed form (Poisson) outside the disk and corrected row by row
/// inside it; endpoint terms are kept through N^{-a-2}, leaving a relative
/// error of order N^{-3}.
long double lattice_tail_sum(std::int64_t n, double a);

/// Rigorous bracket for the lattice tail from monotone integral comparison:
/// every unit cell [x, x+1) x [y, y+1) is compared with its nearest/farthest corner.
struct TailBracket {
    long double lower = 0.0L;
    long double upper = 0.0L;
};
TailBracket lattice_tail_bracket(std::int64_t n, double a, std::int64_t enumerate_to);

struct DigitTail {
    long double value = 0.0L;
    bool exact = true;  // false: value is an upper bound
};

/// sum over i in S with |i| >= N of |i|^{-a}.
DigitTail digit_tail_sum(const DigitSet& s, std::int64_t n, double a);

}  // namespace hurwitz
