#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dslab/common.hpp"

namespace dslab {

/// Alternation length of one pair given its sorted occurrence positions
/// (= number of runs in the merged two-symbol word).
std::size_t pair_alternation(std::span<const index_t> occ_a, std::span<const index_t> occ_b);

/// Longest alternation over all symbol pairs, straightforward pairwise scan.
/// Serial reference; quadratic in the alphabet, intended for small inputs
/// and for validating the production kernel.
std::size_t max_alternation_serial(std::span<const symbol> symbols);

/// Longest alternation over all symbol pairs. Exact. Exploits span structure
/// (short-span sweep, projection onto long-span symbols) and falls back to an
/// OpenMP pairwise kernel, so it handles multi-million-symbol sequences whose
/// high-alternation pairs are sparse or whose alphabet is moderate.
std::size_t max_alternation(std::span<const symbol> symbols);

/// Exact decision: does any pair alternate with length >= threshold?
/// For threshold >= 7 a concatenation-split refinement keeps huge
/// structured inputs tractable.
bool exists_alternation_of_length(std::span<const symbol> symbols, std::size_t threshold);

/// Same decision, reporting one witnessing pair (lexicographically least).
std::optional<std::pair<symbol, symbol>> find_alternation_of_length(
    std::span<const symbol> symbols, std::size_t threshold);

}  // namespace dslab
