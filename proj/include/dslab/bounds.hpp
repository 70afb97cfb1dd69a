#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dslab/ackermann.hpp"

namespace dslab::bounds {

bigint binom(std::uint64_t n, std::uint64_t k);

/// Per-symbol multiplicity coefficients, exact.
/// mu(s,i) is the closed form for s >= 4 (even/odd shapes differ).
bigint mu(unsigned s, unsigned i);

/// Feather-count coefficient, odd s >= 5.
bigint nu(unsigned s, unsigned i);

/// The coefficient used when an inductive step invokes order 2 or 3:
/// mu_happy(2,i) = 2, mu_happy(3,i) = 3i (i >= 2), otherwise mu(s,i).
bigint mu_happy(unsigned s, unsigned i);

/// Order-3 bound coefficients (2i+2, 3i-2).
std::pair<bigint, bigint> mu3_pair(unsigned i);

/// Sharp order-5 ensemble.
bigint nu5p(unsigned i);      // dove-or-hawk feather coefficient, order 4
bigint nu5pp(unsigned i);     // double-feather coefficient, order 5
bigint mu5_sharp(unsigned i); // i * 2^{i+7}

struct BlockedBound {
    bigint value;
    std::uint64_t j;  // minimal j with m <= a_{i,j}^c
};

/// Length bound for an order-s sequence with n symbols and m blocks,
/// at inductive parameter i and block-partition constant c >= s-2.
/// s=1,2 are exact; s=3 uses the (2i+2, 3i-2) pair.
BlockedBound upper_bound_blocked(unsigned s, const bigint& n, const bigint& m, unsigned c,
                                 unsigned i);

/// Same shape with the sharp order-5 coefficient i*2^{i+7}; c is fixed at 3.
BlockedBound upper_bound_blocked_sharp5(const bigint& n, const bigint& m, unsigned i);

/// Double-feather count bound nu''_i (n + (3j)^3 (m-1)), c fixed at 3.
BlockedBound double_feather_bound(const bigint& n, const bigint& m, unsigned i);

/// Feather bound nu_{s,i} (n + (cj)^{s-2}(m-1)) for odd s >= 5.
BlockedBound feather_bound(unsigned s, const bigint& n, const bigint& m, unsigned c, unsigned i);

struct BestBound {
    bigint value;
    unsigned chosen_i;  // 0 when no parameter applies (s <= 2)
    std::uint64_t j;
    unsigned alpha;     // alpha(n,m), reported alongside
};

/// Applies the minimal-i selection rule with c = max(3, s-2).
BestBound best_upper_bound(unsigned s, const bigint& n, const bigint& m);

struct Order3Sharp {
    bigint value;  // (2*iota+4)*n + 7*m with m = 2n-1
    unsigned iota;
};

/// Two-sparse order-3 chain through m = 2n-1 blocks.
Order3Sharp order3_sharp_bound(const bigint& n);

/// Verify the inductive coefficient inequalities (with their weaker rational
/// variants), the base-case floors, and the order-4 exact identity.
/// Returns human-readable failure descriptions; empty means all hold.
std::vector<std::string> check_happiness(unsigned s_max, unsigned i_max);

/// Verify the sharp order-5 coefficient inequalities up to i_max.
std::vector<std::string> check_feather_ineqs(unsigned i_max);

/// Per-symbol multiplicity cap gamma_s(n) used as a greedy-partition length
/// cap: best_upper_bound(s, n, 2n-1) / n, rounded up.
bigint gamma_cap(unsigned s, const bigint& n);

}  // namespace dslab::bounds
