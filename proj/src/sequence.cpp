#include "dslab/sequence.hpp"

#include <limits>
#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "dslab/alternation.hpp"

namespace dslab {

std::uint64_t default_symbol_cap() {
    if (const char* env = std::getenv("DSLAB_MAX_SYMBOLS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ull;
}

std::size_t Sequence::alphabet_size() const {
    if (symbols.empty()) return 0;
    symbol mx = 0;
    for (symbol a : symbols) mx = std::max(mx, a);
    std::vector<bool> seen(static_cast<std::size_t>(mx) + 1, false);
    std::size_t n = 0;
    for (symbol a : symbols)
        if (!seen[a]) {
            seen[a] = true;
            ++n;
        }
    return n;
}

bool Sequence::is_canonical() const {
    symbol next = 0;
    for (symbol a : symbols) {
        if (a > next) return false;
        if (a == next) ++next;
    }
    return true;
}

BlockedSequence BlockedSequence::from_blocks(const std::vector<std::vector<symbol>>& blocks) {
    BlockedSequence b;
    for (const auto& blk : blocks) {
        b.symbols.insert(b.symbols.end(), blk.begin(), blk.end());
        b.block_ends.push_back(static_cast<index_t>(b.symbols.size()));
    }
    return b;
}

std::vector<std::vector<symbol>> BlockedSequence::blocks() const {
    std::vector<std::vector<symbol>> out(block_count());
    for (std::size_t q = 0; q < block_count(); ++q) {
        auto blk = block(q);
        out[q].assign(blk.begin(), blk.end());
    }
    return out;
}

bool BlockedSequence::valid() const {
    if (block_ends.empty()) return symbols.empty();
    if (block_ends.back() != symbols.size()) return false;
    index_t prev = 0;
    std::unordered_set<symbol> seen;
    for (std::size_t q = 0; q < block_count(); ++q) {
        index_t b = block_begin(q), e = block_end(q);
        if (b < prev || e < b) return false;
        prev = e;
        seen.clear();
        for (index_t i = b; i < e; ++i)
            if (!seen.insert(symbols[i]).second) return false;
    }
    return true;
}

OccurrenceIndex::OccurrenceIndex(std::span<const symbol> symbols) {
    symbol mx = 0;
    for (symbol a : symbols) mx = std::max(mx, a);
    n = symbols.empty() ? 0 : static_cast<std::size_t>(mx) + 1;
    starts.assign(n + 1, 0);
    for (symbol a : symbols) ++starts[a + 1];
    for (std::size_t i = 0; i < n; ++i) starts[i + 1] += starts[i];
    pos.resize(symbols.size());
    std::vector<index_t> fill(starts.begin(), starts.end() - 1);
    for (index_t p = 0; p < symbols.size(); ++p) pos[fill[symbols[p]]++] = p;
}

std::size_t longest_alternation(const Sequence& s, symbol a, symbol b) {
    if (a == b) throw std::invalid_argument("longest_alternation: a and b must differ");
    std::size_t runs = 0;
    int last = -1;
    for (symbol x : s.symbols) {
        if (x != a && x != b) continue;
        int cur = (x == a) ? 0 : 1;
        if (cur != last) {
            ++runs;
            last = cur;
        }
    }
    return runs;
}

std::size_t ds_order(const Sequence& s) {
    std::size_t m = max_alternation(s.symbols);
    return std::max<std::size_t>(1, m == 0 ? 1 : m - 1);
}

std::size_t ds_order(const BlockedSequence& b) { return ds_order(b.flat()); }

bool order_at_most(const Sequence& s, std::size_t order) {
    return !exists_alternation_of_length(s.symbols, order + 2);
}

bool order_at_most(const BlockedSequence& b, std::size_t order) {
    return order_at_most(b.flat(), order);
}

bool is_k_sparse(const Sequence& s, std::size_t k) {
    if (k == 0) throw std::invalid_argument("is_k_sparse: k must be >= 1");
    symbol mx = 0;
    for (symbol a : s.symbols) mx = std::max(mx, a);
    std::vector<std::size_t> last(s.symbols.empty() ? 0 : static_cast<std::size_t>(mx) + 1,
                                  std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < s.symbols.size(); ++i) {
        symbol a = s.symbols[i];
        if (last[a] != std::numeric_limits<std::size_t>::max() && i - last[a] < k) return false;
        last[a] = i;
    }
    return true;
}

namespace {

bool match_pattern(std::span<const symbol> text, std::span<const symbol> pat, std::size_t ti,
                   std::size_t pi, std::vector<int>& map, std::vector<bool>& used) {
    if (pi == pat.size()) return true;
    if (text.size() - ti < pat.size() - pi) return false;
    symbol p = pat[pi];
    for (std::size_t t = ti; t + (pat.size() - pi) <= text.size(); ++t) {
        symbol x = text[t];
        if (map[p] >= 0) {
            if (static_cast<symbol>(map[p]) != x) continue;
            if (match_pattern(text, pat, t + 1, pi + 1, map, used)) return true;
            // a bound symbol matches any later copy equally; keep scanning
        } else {
            if (x < used.size() && used[x]) continue;
            map[p] = static_cast<int>(x);
            if (x >= used.size()) used.resize(x + 1, false);
            used[x] = true;
            if (match_pattern(text, pat, t + 1, pi + 1, map, used)) return true;
            used[x] = false;
            map[p] = -1;
        }
    }
    return false;
}

}  // namespace

bool contains_pattern(const Sequence& s, const Sequence& sigma, std::size_t alphabet_guard) {
    std::size_t k = sigma.alphabet_size();
    if (k > alphabet_guard)
        throw resource_limit_error("contains_pattern: pattern alphabet exceeds guard (" +
                                   std::to_string(k) + " > " + std::to_string(alphabet_guard) + ")");
    if (sigma.symbols.empty()) return true;
    if (sigma.symbols.size() > s.symbols.size()) return false;
    Sequence pat = canonicalize(sigma);
    std::vector<int> map(k, -1);
    std::vector<bool> used;
    return match_pattern(s.symbols, pat.symbols, 0, 0, map, used);
}

Sequence project(const Sequence& s, std::span<const symbol> keep) {
    symbol mx = 0;
    for (symbol a : keep) mx = std::max(mx, a);
    std::vector<bool> in(static_cast<std::size_t>(mx) + 1, false);
    for (symbol a : keep) in[a] = true;
    Sequence out;
    for (symbol a : s.symbols)
        if (a <= mx && in[a]) out.symbols.push_back(a);
    return out;
}

BlockedSequence project(const BlockedSequence& b, std::span<const symbol> keep) {
    symbol mx = 0;
    for (symbol a : keep) mx = std::max(mx, a);
    std::vector<bool> in(static_cast<std::size_t>(mx) + 1, false);
    for (symbol a : keep) in[a] = true;
    BlockedSequence out;
    for (std::size_t q = 0; q < b.block_count(); ++q) {
        for (symbol a : b.block(q))
            if (a <= mx && in[a]) out.symbols.push_back(a);
        out.block_ends.push_back(static_cast<index_t>(out.symbols.size()));
    }
    return out;
}

namespace {

std::vector<symbol> canonical_map(std::span<const symbol> symbols) {
    symbol mx = 0;
    for (symbol a : symbols) mx = std::max(mx, a);
    std::vector<symbol> map(symbols.empty() ? 0 : static_cast<std::size_t>(mx) + 1,
                            std::numeric_limits<symbol>::max());
    symbol next = 0;
    for (symbol a : symbols)
        if (map[a] == std::numeric_limits<symbol>::max()) map[a] = next++;
    return map;
}

}  // namespace

Sequence canonicalize(const Sequence& s) {
    auto map = canonical_map(s.symbols);
    Sequence out;
    out.symbols.reserve(s.symbols.size());
    for (symbol a : s.symbols) out.symbols.push_back(map[a]);
    return out;
}

BlockedSequence canonicalize(const BlockedSequence& b) {
    auto map = canonical_map(b.symbols);
    BlockedSequence out;
    out.symbols.reserve(b.symbols.size());
    for (symbol a : b.symbols) out.symbols.push_back(map[a]);
    out.block_ends = b.block_ends;
    return out;
}

}  // namespace dslab
