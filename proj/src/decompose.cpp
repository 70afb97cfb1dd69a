#include "dslab/decompose.hpp"

#include <algorithm>
#include <limits>

#include "dslab/alternation.hpp"

namespace dslab {

Decomposition decompose(const BlockedSequence& b, const std::vector<index_t>& interval_widths) {
    std::size_t m = b.block_count();
    std::uint64_t sum = 0;
    for (index_t w : interval_widths) sum += w;
    if (sum != m || interval_widths.empty())
        throw std::invalid_argument("decompose: interval widths must sum to the block count");

    Decomposition d;
    index_t acc = 0;
    for (index_t w : interval_widths) {
        acc += w;
        d.interval_ends.push_back(acc);
    }
    std::size_t mhat = d.interval_ends.size();

    symbol mx = 0;
    for (symbol a : b.symbols) mx = std::max(mx, a);
    std::size_t asz = b.symbols.empty() ? 0 : static_cast<std::size_t>(mx) + 1;

    // first/last interval of each symbol
    std::vector<index_t> first_iv(asz, std::numeric_limits<index_t>::max());
    std::vector<index_t> last_iv(asz, 0);
    for (std::size_t q = 0; q < mhat; ++q) {
        index_t b0 = q == 0 ? 0 : d.interval_ends[q - 1];
        for (index_t blk = b0; blk < d.interval_ends[q]; ++blk)
            for (symbol a : b.block(blk)) {
                if (first_iv[a] == std::numeric_limits<index_t>::max())
                    first_iv[a] = static_cast<index_t>(q);
                last_iv[a] = static_cast<index_t>(q);
            }
    }

    d.local_alphabets.resize(mhat);
    d.first_alphabets.resize(mhat);
    d.middle_alphabets.resize(mhat);
    d.last_alphabets.resize(mhat);
    d.local_seqs.resize(mhat);
    d.global_seqs.resize(mhat);
    d.first_seqs.resize(mhat);
    d.middle_seqs.resize(mhat);
    d.last_seqs.resize(mhat);

    std::vector<char> is_global(asz, 0);
    std::vector<char> seen(asz, 0);
    for (symbol a = 0; a < asz; ++a)
        if (first_iv[a] != std::numeric_limits<index_t>::max() && first_iv[a] != last_iv[a])
            is_global[a] = 1;

    // global alphabet in order of first appearance
    for (symbol a : b.symbols)
        if (is_global[a] && !seen[a]) {
            seen[a] = 1;
            d.global_alphabet.push_back(a);
        }

    std::vector<char> listed(asz, 0);
    for (std::size_t q = 0; q < mhat; ++q) {
        index_t b0 = q == 0 ? 0 : d.interval_ends[q - 1];
        auto& loc = d.local_seqs[q];
        auto& glo = d.global_seqs[q];
        std::vector<symbol> contracted_block;
        for (index_t blk = b0; blk < d.interval_ends[q]; ++blk) {
            for (symbol a : b.block(blk)) {
                if (is_global[a]) {
                    glo.symbols.push_back(a);
                    if (!listed[a]) {
                        listed[a] = 1;
                        contracted_block.push_back(a);
                        d.contracted.symbols.push_back(a);
                    }
                    if (first_iv[a] == q) {
                        d.first_seqs[q].symbols.push_back(a);
                    } else if (last_iv[a] == q) {
                        d.last_seqs[q].symbols.push_back(a);
                    } else {
                        d.middle_seqs[q].symbols.push_back(a);
                    }
                } else {
                    loc.symbols.push_back(a);
                    if (!listed[a]) {
                        listed[a] = 1;
                        d.local_alphabets[q].push_back(a);
                    }
                }
            }
            loc.block_ends.push_back(static_cast<index_t>(loc.symbols.size()));
            glo.block_ends.push_back(static_cast<index_t>(glo.symbols.size()));
        }
        d.contracted.block_ends.push_back(static_cast<index_t>(d.contracted.symbols.size()));
        for (symbol a : contracted_block) {
            if (first_iv[a] == q)
                d.first_alphabets[q].push_back(a);
            else if (last_iv[a] == q)
                d.last_alphabets[q].push_back(a);
            else
                d.middle_alphabets[q].push_back(a);
        }
        // reset the "listed" marks of globals so later intervals re-list them
        for (symbol a : contracted_block) listed[a] = 0;
    }
    return d;
}

std::vector<std::string> verify_decomposition_orders(const BlockedSequence& b,
                                                     const Decomposition& d, std::size_t s) {
    if (s < 2) throw std::invalid_argument("verify_decomposition_orders: s >= 2");
    if (!order_at_most(b, s))
        throw std::invalid_argument("verify_decomposition_orders: sequence order exceeds s");
    std::vector<std::string> violations;
    for (std::size_t q = 0; q < d.interval_count(); ++q) {
        if (!order_at_most(d.first_seqs[q], s - 1))
            violations.push_back("interval " + std::to_string(q) + ": first part exceeds order " +
                                 std::to_string(s - 1));
        if (!order_at_most(d.last_seqs[q], s - 1))
            violations.push_back("interval " + std::to_string(q) + ": last part exceeds order " +
                                 std::to_string(s - 1));
        std::size_t mid_cap = std::max<std::size_t>(1, s - 2);
        if (!order_at_most(d.middle_seqs[q], mid_cap))
            violations.push_back("interval " + std::to_string(q) + ": middle part exceeds order " +
                                 std::to_string(mid_cap));
    }
    return violations;
}

Sequence sparsify(const BlockedSequence& b) {
    Sequence out;
    out.symbols.reserve(b.length());
    for (std::size_t q = 0; q < b.block_count(); ++q) {
        auto blk = b.block(q);
        for (std::size_t k = 0; k < blk.size(); ++k) {
            if (k == 0 && !out.symbols.empty() && out.symbols.back() == blk[k])
                continue;  // drop the later of two equal boundary symbols
            out.symbols.push_back(blk[k]);
        }
    }
    return out;
}

namespace {

// incremental longest-alternation state over a growing window
struct AltWindow {
    // per ordered pair (a,b): length of the longest alternation ending in b
    // keyed densely once symbols are known to be small; here a hash-free
    // approach: alphabet ids are remapped on entry
    std::vector<symbol> remap;           // global symbol -> dense id (or npos)
    std::vector<symbol> dense_syms;      // dense id -> global symbol
    std::vector<std::uint16_t> end_at;   // [a*cap + b]: longest alternation ending with b
    std::size_t cap;

    explicit AltWindow(std::size_t alphabet_cap)
        : remap(alphabet_cap, std::numeric_limits<symbol>::max()) {}

    void reset() {
        for (symbol a : dense_syms) remap[a] = std::numeric_limits<symbol>::max();
        dense_syms.clear();
        end_at.clear();
        cap = 0;
    }

    std::size_t order_if_push(symbol x) {
        // longest alternation after appending x = max over other symbols of
        // (alternation ending with the other) + 1
        std::size_t best = dense_syms.empty() ? 0 : 1;
        if (remap[x] == std::numeric_limits<symbol>::max()) {
            best = dense_syms.empty() ? 1 : std::max<std::size_t>(best, 2);
            // a fresh symbol alternates once against each existing one
        }
        for (std::size_t d = 0; d < dense_syms.size(); ++d) {
            symbol y = dense_syms[d];
            if (y == x) continue;
            std::size_t ending_y;
            if (remap[x] == std::numeric_limits<symbol>::max())
                ending_y = 1;  // y alone
            else
                ending_y = std::max<std::size_t>(end_at[remap[x] * cap + d], 1);
            best = std::max(best, ending_y + 1);
        }
        return best;
    }

    void push(symbol x) {
        if (remap[x] == std::numeric_limits<symbol>::max()) {
            // grow the dense table
            std::size_t n = dense_syms.size();
            std::vector<std::uint16_t> grown((n + 1) * (n + 1), 0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b2 = 0; b2 < n; ++b2) grown[a * (n + 1) + b2] = end_at[a * cap + b2];
            end_at = std::move(grown);
            cap = n + 1;
            remap[x] = static_cast<symbol>(n);
            dense_syms.push_back(x);
            std::size_t dx = n;
            for (std::size_t d = 0; d < n; ++d) {
                end_at[d * cap + dx] = 0;
                end_at[dx * cap + d] = 0;
            }
        }
        std::size_t dx = remap[x];
        for (std::size_t d = 0; d < dense_syms.size(); ++d) {
            if (d == dx) continue;
            std::uint16_t ending_other = std::max<std::uint16_t>(end_at[dx * cap + d], 1);
            std::uint16_t cand = static_cast<std::uint16_t>(ending_other + 1);
            auto& slot = end_at[d * cap + dx];
            if (cand > slot) slot = cand;
        }
    }
};

}  // namespace

GreedyPartition greedy_partition(const Sequence& s, std::size_t max_order,
                                 std::uint64_t length_cap) {
    if (max_order < 1) throw std::invalid_argument("greedy_partition: order >= 1");
    if (!is_k_sparse(s, 2)) throw std::invalid_argument("greedy_partition: sequence must be 2-sparse");

    GreedyPartition g;
    symbol mx = 0;
    for (symbol a : s.symbols) mx = std::max(mx, a);
    AltWindow win(s.symbols.empty() ? 1 : static_cast<std::size_t>(mx) + 1);

    std::vector<symbol> interval_alpha;
    std::vector<char> in_interval(s.symbols.empty() ? 1 : static_cast<std::size_t>(mx) + 1, 0);
    std::uint64_t interval_len = 0;

    auto close_interval = [&](index_t pos) {
        g.interval_ends.push_back(pos);
        for (symbol a : interval_alpha) {
            g.contracted.symbols.push_back(a);
            in_interval[a] = 0;
        }
        g.contracted.block_ends.push_back(static_cast<index_t>(g.contracted.symbols.size()));
        interval_alpha.clear();
        win.reset();
        interval_len = 0;
    };

    for (index_t p = 0; p < s.symbols.size(); ++p) {
        symbol x = s.symbols[p];
        bool over_cap = length_cap > 0 && interval_len + 1 > length_cap;
        bool over_order = win.order_if_push(x) >= max_order + 2;
        if ((over_cap || over_order) && interval_len > 0) close_interval(p);
        win.push(x);
        ++interval_len;
        if (!in_interval[x]) {
            in_interval[x] = 1;
            interval_alpha.push_back(x);
        }
    }
    if (interval_len > 0) close_interval(static_cast<index_t>(s.symbols.size()));
    return g;
}

}  // namespace dslab
