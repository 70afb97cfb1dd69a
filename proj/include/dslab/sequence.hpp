#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dslab/common.hpp"

namespace dslab {

/// A sequence over a dense 0-based integer alphabet.
struct Sequence {
    std::vector<symbol> symbols;

    Sequence() = default;
    explicit Sequence(std::vector<symbol> syms) : symbols(std::move(syms)) {}

    std::size_t length() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    /// Number of distinct symbols.
    std::size_t alphabet_size() const;

    /// True if symbol ids appear in order of first occurrence (0,1,2,...).
    bool is_canonical() const;
};

/// A sequence partitioned into blocks of pairwise-distinct symbols.
/// `block_ends` holds strictly increasing cut positions; the last entry
/// equals symbols.size(). Empty blocks are permitted (consecutive equal
/// cut positions are not; an empty block is encoded by repeating the end).
struct BlockedSequence {
    std::vector<symbol> symbols;
    std::vector<index_t> block_ends;

    BlockedSequence() = default;
    BlockedSequence(std::vector<symbol> syms, std::vector<index_t> ends)
        : symbols(std::move(syms)), block_ends(std::move(ends)) {}

    /// Build from explicit blocks.
    static BlockedSequence from_blocks(const std::vector<std::vector<symbol>>& blocks);

    std::size_t length() const { return symbols.size(); }
    std::size_t block_count() const { return block_ends.size(); }
    std::size_t alphabet_size() const { return flat().alphabet_size(); }

    index_t block_begin(std::size_t q) const { return q == 0 ? 0 : block_ends[q - 1]; }
    index_t block_end(std::size_t q) const { return block_ends[q]; }
    std::span<const symbol> block(std::size_t q) const {
        return {symbols.data() + block_begin(q), symbols.data() + block_end(q)};
    }

    Sequence flat() const { return Sequence(symbols); }
    std::vector<std::vector<symbol>> blocks() const;

    /// Every block consists of pairwise-distinct symbols and the cut
    /// positions are non-decreasing with last == length.
    bool valid() const;
};

/// Per-symbol occurrence positions in CSR layout.
struct OccurrenceIndex {
    std::size_t n = 0;                 // alphabet size (max id + 1)
    std::vector<index_t> starts;       // size n+1
    std::vector<index_t> pos;          // occurrence positions grouped by symbol

    OccurrenceIndex() = default;
    explicit OccurrenceIndex(std::span<const symbol> symbols);

    std::span<const index_t> occurrences(symbol a) const {
        return {pos.data() + starts[a], pos.data() + starts[a + 1]};
    }
    index_t count(symbol a) const { return starts[a + 1] - starts[a]; }
    index_t first(symbol a) const { return pos[starts[a]]; }
    index_t last(symbol a) const { return pos[starts[a + 1] - 1]; }
};

/// Length of the longest subsequence alternating between a and b
/// (starting with either). 0 if neither occurs.
std::size_t longest_alternation(const Sequence& s, symbol a, symbol b);

/// Minimal s >= 1 such that no pair alternates with length >= s+2.
std::size_t ds_order(const Sequence& s);
std::size_t ds_order(const BlockedSequence& b);

/// Exact decision: no pair alternates with length >= s+2.
/// Handles multi-million-symbol structured inputs.
bool order_at_most(const Sequence& s, std::size_t order);
bool order_at_most(const BlockedSequence& b, std::size_t order);

/// Equal symbols are at distance >= k.
bool is_k_sparse(const Sequence& s, std::size_t k);

/// Pattern containment up to injective relabeling (sigma <= S).
/// The search is exponential in the pattern alphabet; alphabets larger
/// than `alphabet_guard` raise resource_limit_error.
bool contains_pattern(const Sequence& s, const Sequence& sigma, std::size_t alphabet_guard = 8);

/// Order-preserving deletion of all symbols not in `keep`.
Sequence project(const Sequence& s, std::span<const symbol> keep);
BlockedSequence project(const BlockedSequence& b, std::span<const symbol> keep);

/// Isomorphic copy whose ids appear in order of first occurrence.
Sequence canonicalize(const Sequence& s);
BlockedSequence canonicalize(const BlockedSequence& b);

}  // namespace dslab
