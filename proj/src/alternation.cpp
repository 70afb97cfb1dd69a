#include "dslab/alternation.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dslab/sequence.hpp"

namespace dslab {

std::size_t pair_alternation(std::span<const index_t> occ_a, std::span<const index_t> occ_b) {
    std::size_t i = 0, j = 0, runs = 0;
    int last = -1;
    while (i < occ_a.size() || j < occ_b.size()) {
        int cur;
        if (j == occ_b.size() || (i < occ_a.size() && occ_a[i] < occ_b[j])) {
            cur = 0;
            ++i;
        } else {
            cur = 1;
            ++j;
        }
        if (cur != last) {
            ++runs;
            last = cur;
        }
    }
    return runs;
}

namespace {

// Symbols present in `idx`, sorted by first occurrence.
std::vector<symbol> present_by_first(const OccurrenceIndex& idx) {
    std::vector<symbol> out;
    out.reserve(idx.n);
    for (symbol a = 0; a < idx.n; ++a)
        if (idx.count(a) > 0) out.push_back(a);
    std::sort(out.begin(), out.end(),
              [&](symbol a, symbol b) { return idx.first(a) < idx.first(b); });
    return out;
}

// Shared sink for candidate pairs. Every candidate is re-verified against the
// top-level occurrence index, so deeper passes may emit supersets freely.
struct Sink {
    const OccurrenceIndex* top;
    std::size_t threshold;        // report pairs with alternation >= threshold
    bool want_max;                // track the maximum instead of short-circuiting
    std::atomic<std::size_t> best{0};
    std::atomic<bool> found{false};
    symbol wa = std::numeric_limits<symbol>::max();
    symbol wb = std::numeric_limits<symbol>::max();

    // `alt_hint` is the pair's alternation measured on a projection level,
    // which equals the top-level value; halves-split callers pass 0 to force
    // re-measurement.
    void emit(symbol a, symbol b, std::size_t alt_hint) {
        std::size_t alt = alt_hint;
        if (alt == 0) alt = pair_alternation(top->occurrences(a), top->occurrences(b));
        if (want_max) {
            std::size_t prev = best.load(std::memory_order_relaxed);
            while (prev < alt && !best.compare_exchange_weak(prev, alt)) {
            }
        }
        if (alt >= threshold) {
            found.store(true, std::memory_order_relaxed);
            if (a > b) std::swap(a, b);
#ifdef _OPENMP
#pragma omp critical(dslab_alt_witness)
#endif
            {
                if (a < wa || (a == wa && b < wb)) {
                    wa = a;
                    wb = b;
                }
            }
        }
    }

    bool done() const { return !want_max && found.load(std::memory_order_relaxed); }
};

// Enumerate span-overlapping pairs of the current level and emit those whose
// level alternation reaches `emit_floor`.
void all_overlapping_pairs(const OccurrenceIndex& idx, const std::vector<symbol>& by_first,
                           std::size_t emit_floor, Sink& sink) {
    const std::size_t k = by_first.size();
    std::vector<index_t> firsts(k), lasts(k);
    for (std::size_t i = 0; i < k; ++i) {
        firsts[i] = idx.first(by_first[i]);
        lasts[i] = idx.last(by_first[i]);
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::size_t i = 0; i < k; ++i) {
        if (sink.done()) continue;
        symbol a = by_first[i];
        auto occ_a = idx.occurrences(a);
        // spans sorted by first: partners form a contiguous range
        auto hi = std::upper_bound(firsts.begin() + i + 1, firsts.end(), lasts[i]) - firsts.begin();
        for (std::size_t j = i + 1; j < static_cast<std::size_t>(hi); ++j) {
            symbol b = by_first[j];
            std::size_t alt = pair_alternation(occ_a, idx.occurrences(b));
            if (alt >= emit_floor) sink.emit(a, b, alt);
        }
    }
}

// Collect a superset of {pairs with level alternation >= level_floor}.
// Exact for level_floor >= 4 (such pairs are mutually piercing).
// `top_floor_hint`: when >= 7 a stalled level may split by position.
void collect_pairs(std::span<const symbol> word, std::size_t level_floor,
                   std::size_t top_floor_hint, Sink& sink, int depth) {
    if (word.size() < 2 || sink.done()) return;
    OccurrenceIndex idx(word);
    auto by_first = present_by_first(idx);
    const std::size_t k = by_first.size();
    if (k < 2) return;

    if (k <= 2048 || word.size() <= 1u << 14 || depth > 48) {
        all_overlapping_pairs(idx, by_first, level_floor, sink);
        return;
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> span(k);
    for (std::size_t i = 0; i < k; ++i)
        span[i] = idx.last(by_first[i]) - idx.first(by_first[i]);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return span[x] < span[y]; });

    std::vector<char> is_short(idx.n, 0);
    std::size_t budget = 8 * word.size();
    const std::size_t max_budget = 512 * word.size();
    std::size_t n_short = 0;
    std::vector<symbol> shorts;

    auto classify = [&](std::size_t b) {
        shorts.clear();
        std::fill(is_short.begin(), is_short.end(), 0);
        std::size_t acc = 0;
        n_short = 0;
        for (std::size_t r = 0; r < k; ++r) {
            std::size_t i = order[r];
            if (acc + span[i] > b) break;
            acc += span[i];
            is_short[by_first[i]] = 1;
            shorts.push_back(by_first[i]);
            ++n_short;
        }
    };

    classify(budget);
    std::size_t long_occ = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (!is_short[by_first[i]]) long_occ += idx.count(by_first[i]);
    while (long_occ > (word.size() * 19) / 20 && budget < max_budget) {
        budget *= 4;
        classify(budget);
        long_occ = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (!is_short[by_first[i]]) long_occ += idx.count(by_first[i]);
    }

    // Sweep short-span symbols: any pair alternating >= 4 with a short member
    // has an occurrence strictly inside the short member's span.
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<index_t> stamp(idx.n, std::numeric_limits<index_t>::max());
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
        for (std::size_t si = 0; si < shorts.size(); ++si) {
            if (sink.done()) continue;
            symbol b = shorts[si];
            index_t lo = idx.first(b), hi = idx.last(b);
            auto occ_b = idx.occurrences(b);
            for (index_t p = lo + 1; p < hi; ++p) {
                symbol a = word[p];
                if (a == b || stamp[a] == static_cast<index_t>(si)) continue;
                stamp[a] = static_cast<index_t>(si);
                if (is_short[a] && a < b) continue;  // short-short handled once
                std::size_t alt = pair_alternation(idx.occurrences(a), occ_b);
                if (alt >= level_floor) sink.emit(a, b, alt);
            }
        }
    }
    if (sink.done()) return;

    if (long_occ == 0 || n_short == k) return;

    if (long_occ > (word.size() * 19) / 20) {
        // Stalled: nearly everything is long-span.
        if (top_floor_hint >= 7 && level_floor >= 7) {
            // An alternation of length >= 7 has >= 4 runs in one position half.
            std::vector<symbol> longs_word;
            longs_word.reserve(long_occ);
            for (symbol x : word)
                if (!is_short[x]) longs_word.push_back(x);
            std::size_t mid = longs_word.size() / 2;
            std::span<const symbol> lw(longs_word);
            collect_pairs(lw.subspan(0, mid), 4, 4, sink, depth + 1);
            collect_pairs(lw.subspan(mid), 4, 4, sink, depth + 1);
        } else {
            std::vector<symbol> by_first_long;
            for (symbol a : by_first)
                if (!is_short[a]) by_first_long.push_back(a);
            all_overlapping_pairs(idx, by_first_long, level_floor, sink);
        }
        return;
    }

    std::vector<symbol> proj;
    proj.reserve(long_occ);
    for (symbol x : word)
        if (!is_short[x]) proj.push_back(x);
    collect_pairs(proj, level_floor, top_floor_hint, sink, depth + 1);
}

// True iff some symbol repeats with another symbol strictly between
// (i.e. some pair alternates with length >= 3).
bool has_aba(std::span<const symbol> word) {
    OccurrenceIndex idx(word);
    for (symbol a = 0; a < idx.n; ++a) {
        auto occ = idx.occurrences(a);
        for (std::size_t i = 1; i < occ.size(); ++i)
            if (occ[i] > occ[i - 1] + 1) return true;
    }
    return false;
}

std::size_t distinct_count(std::span<const symbol> word) {
    symbol mx = 0;
    for (symbol a : word) mx = std::max(mx, a);
    std::vector<bool> seen(word.empty() ? 0 : static_cast<std::size_t>(mx) + 1, false);
    std::size_t n = 0;
    for (symbol a : word)
        if (!seen[a]) {
            seen[a] = true;
            ++n;
        }
    return n;
}

}  // namespace

std::size_t max_alternation_serial(std::span<const symbol> symbols) {
    if (symbols.size() < 2) return 0;
    OccurrenceIndex idx(symbols);
    std::size_t best = 0;
    for (symbol a = 0; a < idx.n; ++a) {
        if (idx.count(a) == 0) continue;
        for (symbol b = a + 1; b < idx.n; ++b) {
            if (idx.count(b) == 0) continue;
            if (idx.first(a) > idx.last(b) || idx.first(b) > idx.last(a)) continue;
            best = std::max(best, pair_alternation(idx.occurrences(a), idx.occurrences(b)));
        }
    }
    if (best == 0 && distinct_count(symbols) >= 2) best = 2;  // disjoint spans still alternate twice
    return best;
}

std::size_t max_alternation(std::span<const symbol> symbols) {
    std::size_t n_distinct = distinct_count(symbols);
    if (n_distinct < 2) return 0;
    OccurrenceIndex top(symbols);
    Sink sink{&top, 4, true};
    collect_pairs(symbols, 4, 4, sink, 0);
    std::size_t best = sink.best.load();
    if (best >= 4) return best;
    return has_aba(symbols) ? 3 : 2;
}

bool exists_alternation_of_length(std::span<const symbol> symbols, std::size_t threshold) {
    if (threshold <= 2) return distinct_count(symbols) >= 2;
    if (threshold == 3) return has_aba(symbols);
    OccurrenceIndex top(symbols);
    Sink sink{&top, threshold, false};
    collect_pairs(symbols, threshold, threshold, sink, 0);
    return sink.found.load();
}

std::optional<std::pair<symbol, symbol>> find_alternation_of_length(std::span<const symbol> symbols,
                                                                    std::size_t threshold) {
    if (threshold <= 3) {
        // rare diagnostic path; quadratic reference is fine here
        OccurrenceIndex idx(symbols);
        for (symbol a = 0; a < idx.n; ++a) {
            if (idx.count(a) == 0) continue;
            for (symbol b = a + 1; b < idx.n; ++b)
                if (idx.count(b) > 0 &&
                    pair_alternation(idx.occurrences(a), idx.occurrences(b)) >= threshold)
                    return std::make_pair(a, b);
        }
        return std::nullopt;
    }
    OccurrenceIndex top(symbols);
    Sink sink{&top, threshold, true};  // want_max: no short-circuit, deterministic witness
    collect_pairs(symbols, threshold, threshold, sink, 0);
    if (!sink.found.load()) return std::nullopt;
    return std::make_pair(sink.wa, sink.wb);
}

}  // namespace dslab
