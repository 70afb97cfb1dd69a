#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dslab/ackermann.hpp"
#include "dslab/sequence.hpp"

namespace dslab::gen {

struct ConstructionStats {
    unsigned s = 0, i = 0, j = 0;
    bigint N;       // alphabet size
    bigint B;       // block count
    bigint mult;    // per-symbol multiplicity
    bigint length;  // mult * N
    bigint xi;      // 3^i 2^{C(i+1,2)}, order 5 only
};

/// Exact evaluation of the N/B recurrences. Intermediate recursion indices are
/// guarded (resource_limit_error) once they leave desk scale.
ConstructionStats predict_stats(unsigned s, unsigned i, unsigned j);

/// Saturating evaluation good enough to decide generation feasibility.
/// Returns false when the sequence would exceed `cap` symbols or blocks.
bool fits_cap(unsigned s, unsigned i, unsigned j, std::uint64_t cap);

bigint xi(unsigned i);

/// Two blocks [0..j-1][j-1..0].
BlockedSequence s2(std::uint64_t j);

enum class MapOrder {
    positional,  // mid id k is matched to the k-th symbol in block order
    canonical,   // ... to the k-th block symbol by first appearance in top
};

/// Substitute a copy of `mid` (canonical) for every block of `top`.
/// Copies keep mid's block structure, including emptied blocks.
BlockedSequence compose(const BlockedSequence& top, const BlockedSequence& mid,
                        MapOrder order = MapOrder::positional);

/// Disjoint-alphabet copies of `bot`, one per block of `sub`; the k-th symbol
/// of the l-th block of `sub` lands at the end of the k-th block of the l-th
/// copy. Output is not re-canonicalized.
BlockedSequence shuffle(const BlockedSequence& sub, const BlockedSequence& bot);

struct Compose3Mode {
    bool positional_maps = true;  // map targets in block order (else first-appearance order)
    bool mirror_last = false;     // substitute the reversed mid_l for last batches
};

/// Per block: categorize symbols as first/middle/last by the block range they
/// occupy in `top`, and substitute mid_f / mid_m / mid_l copies accordingly.
/// Every symbol of `top` must occupy at least two blocks.
BlockedSequence compose3(const BlockedSequence& top, const BlockedSequence& mid_f,
                         const BlockedSequence& mid_m, const BlockedSequence& mid_l,
                         const Compose3Mode& mode = {});

BlockedSequence s4(unsigned i, unsigned j, std::uint64_t cap = default_symbol_cap());
BlockedSequence s5(unsigned i, unsigned j, std::uint64_t cap = default_symbol_cap());

/// Scan for the forbidden patterns around blocks: an in-block xy preceded by
/// x..y, or followed by y..x. Returns descriptions of violations.
std::vector<std::string> scan_forbidden_block_patterns(const BlockedSequence& b);

/// Reinterpret a flat sequence as blocks of exactly `width` in reading order.
BlockedSequence reblock(const Sequence& s, std::uint64_t width);

BlockedSequence mirror(const BlockedSequence& b);

}  // namespace dslab::gen
