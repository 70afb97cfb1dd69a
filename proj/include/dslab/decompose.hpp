#pragma once

#include <string>
#include <vector>

#include "dslab/sequence.hpp"

namespace dslab {

/// The local/global first/middle/last decomposition of a blocked sequence
/// under a partition into intervals of consecutive blocks.
struct Decomposition {
    std::vector<index_t> interval_ends;       // interval q covers blocks [ends[q-1], ends[q])
    std::vector<std::vector<symbol>> local_alphabets;   // per interval
    std::vector<symbol> global_alphabet;
    std::vector<std::vector<symbol>> first_alphabets;   // global, first appearance in interval q
    std::vector<std::vector<symbol>> middle_alphabets;
    std::vector<std::vector<symbol>> last_alphabets;
    std::vector<BlockedSequence> local_seqs;    // projections of interval q onto locals
    std::vector<BlockedSequence> global_seqs;   // ... onto globals
    std::vector<Sequence> first_seqs;           // ... onto first global symbols
    std::vector<Sequence> middle_seqs;
    std::vector<Sequence> last_seqs;
    BlockedSequence contracted;  // one block per interval: globals by first appearance

    std::size_t interval_count() const { return interval_ends.size(); }
    std::size_t global_count() const { return global_alphabet.size(); }
};

/// Partition the m blocks of `b` into intervals of the given widths
/// (must sum to m) and derive all alphabets and projections.
Decomposition decompose(const BlockedSequence& b, const std::vector<index_t>& interval_widths);

/// Check the per-interval order obligations of an order-s sequence:
/// first and last parts have order <= s-1, middle parts order <= s-2.
/// Returns human-readable violations (empty on success).
std::vector<std::string> verify_decomposition_orders(const BlockedSequence& b,
                                                     const Decomposition& d, std::size_t s);

/// Delete, at each block boundary, the later of two equal adjacent symbols.
/// The result is 2-sparse and loses at most m-1 symbols.
Sequence sparsify(const BlockedSequence& b);

struct GreedyPartition {
    std::vector<index_t> interval_ends;  // positions in the flat sequence
    BlockedSequence contracted;          // one block per interval (alphabet by first appearance)
};

/// Greedily partition a 2-sparse sequence into maximal prefixes of
/// ds_order <= max_order (and length <= length_cap when given).
GreedyPartition greedy_partition(const Sequence& s, std::size_t max_order,
                                 std::uint64_t length_cap = 0);

}  // namespace dslab
