#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dslab {

using symbol = std::uint32_t;
using index_t = std::uint32_t;

// Thrown when a configurable resource guard (symbol cap, node budget,
// pattern-alphabet guard) would be exceeded.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Default cap on generated sequence length; overridable via DSLAB_MAX_SYMBOLS.
std::uint64_t default_symbol_cap();

// Deterministic PRNG. std distributions are not portable across standard
// libraries, so bounded draws are done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        std::uint64_t x, r;
        do {
            x = next_u64();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }

    // uniform in [lo, hi] inclusive
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace dslab
