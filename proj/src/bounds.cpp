#include "dslab/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace dslab::bounds {

using boost::multiprecision::cpp_rational;

bigint binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    bigint r = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        r *= bigint(n - k + t);
        r /= t;
    }
    return r;
}

namespace {

bigint ipow(const bigint& b, std::uint64_t e) {
    bigint r = 1, base = b;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bigint pow2(const bigint& e) {
    if (e < 0 || e > 1'000'000) throw std::invalid_argument("pow2: exponent out of range");
    return bigint(1) << static_cast<std::uint64_t>(e);
}

}  // namespace

bigint mu(unsigned s, unsigned i) {
    if (s < 4 || i < 1) throw std::invalid_argument("mu: requires s >= 4, i >= 1");
    std::uint64_t t = (s - 2) / 2;
    bigint e = binom(i + t + 3, t);
    if (s % 2 == 0) return pow2(e) - 3 * ipow(2 * bigint(i + t + 1), t);
    // odd: (3/2) (2(i+t+1))^{t+1} 2^C — the half is absorbed by a power of two
    bigint raw = 3 * ipow(2 * bigint(i + t + 1), t + 1) * pow2(e);
    if (raw % 2 != 0) throw std::logic_error("mu: odd closed form not integral");
    return raw / 2;
}

bigint nu(unsigned s, unsigned i) {
    if (s < 5 || s % 2 == 0 || i < 1) throw std::invalid_argument("nu: requires odd s >= 5, i >= 1");
    std::uint64_t t = (s - 2) / 2;
    return 4 * pow2(binom(i + t + 3, t));
}

bigint mu_happy(unsigned s, unsigned i) {
    if (s == 2) return 2;
    if (s == 3) {
        if (i < 2) throw std::invalid_argument("mu_happy: order 3 defined for i >= 2");
        return bigint(3) * i;
    }
    return mu(s, i);
}

std::pair<bigint, bigint> mu3_pair(unsigned i) {
    if (i < 1) throw std::invalid_argument("mu3_pair: i >= 1");
    return {bigint(2) * i + 2, bigint(3) * i - 2};
}

bigint nu5p(unsigned i) { return 3 * binom(i + 1, 2) + 3; }

bigint nu5pp(unsigned i) { return 6 * binom(i + 2, 3) + 8 * bigint(i); }

bigint mu5_sharp(unsigned i) {
    if (i < 1) throw std::invalid_argument("mu5_sharp: i >= 1");
    return bigint(i) * pow2(bigint(i) + 7);
}

namespace {

std::uint64_t min_j_for(unsigned i, const bigint& m, unsigned c) {
    AckermannTable table(m + 1);
    for (std::uint64_t j = 1; j <= 4'000'000; ++j)
        if (table.power(i, j, c).at_least(m)) return j;
    throw std::logic_error("min_j_for: no admissible j");
}

}  // namespace

BlockedBound upper_bound_blocked(unsigned s, const bigint& n, const bigint& m, unsigned c,
                                 unsigned i) {
    if (s < 1 || n < 0 || m < 1 || i < 1) throw std::invalid_argument("upper_bound_blocked: bad arguments");
    if (s >= 3 && c < s - 2) throw std::invalid_argument("upper_bound_blocked: c must be >= s-2");
    if (c < 1) throw std::invalid_argument("upper_bound_blocked: c must be >= 1");
    if (s == 1) return {n + m - 1, 0};
    if (s == 2) return {2 * n + m - 2, 0};
    std::uint64_t j = min_j_for(i, m, c);
    bigint cj = bigint(c) * j;
    if (s == 3) {
        auto [a, b] = mu3_pair(i);
        return {a * n + b * cj * (m - 1), j};
    }
    return {mu(s, i) * (n + ipow(cj, s - 2) * (m - 1)), j};
}

BlockedBound upper_bound_blocked_sharp5(const bigint& n, const bigint& m, unsigned i) {
    std::uint64_t j = min_j_for(i, m, 3);
    bigint cj = bigint(3) * j;
    return {mu5_sharp(i) * (n + ipow(cj, 3) * (m - 1)), j};
}

BlockedBound double_feather_bound(const bigint& n, const bigint& m, unsigned i) {
    std::uint64_t j = min_j_for(i, m, 3);
    bigint cj = bigint(3) * j;
    return {nu5pp(i) * (n + ipow(cj, 3) * (m - 1)), j};
}

BlockedBound feather_bound(unsigned s, const bigint& n, const bigint& m, unsigned c, unsigned i) {
    if (s < 5 || s % 2 == 0) throw std::invalid_argument("feather_bound: odd s >= 5");
    if (c < s - 2) throw std::invalid_argument("feather_bound: c must be >= s-2");
    std::uint64_t j = min_j_for(i, m, c);
    bigint cj = bigint(c) * j;
    return {nu(s, i) * (n + ipow(cj, s - 2) * (m - 1)), j};
}

BestBound best_upper_bound(unsigned s, const bigint& n, const bigint& m) {
    if (s < 1 || n < 1 || m < 1) throw std::invalid_argument("best_upper_bound: bad arguments");
    unsigned a = alpha2(n, m);
    if (s == 1) return {n + m - 1, 0, 0, a};
    if (s == 2) return {m >= 2 ? 2 * n + m - 2 : n, 0, 0, a};
    unsigned c = std::max(3u, s - 2);
    bigint target = n / m;
    bigint floor3 = ipow(bigint(3) * c, s - 2);
    if (target < floor3) target = floor3;
    for (unsigned i = 1; i <= 64; ++i) {
        std::uint64_t j = min_j_for(i, m, c);
        if (ipow(bigint(c) * j, s - 2) <= target) {
            BlockedBound b = upper_bound_blocked(s, n, m, c, i);
            return {b.value, i, b.j, a};
        }
    }
    throw std::logic_error("best_upper_bound: iota selection did not converge");
}

Order3Sharp order3_sharp_bound(const bigint& n) {
    if (n < 1) throw std::invalid_argument("order3_sharp_bound: n >= 1");
    bigint m = 2 * n - 1;
    AckermannTable table(m + 1);
    unsigned iota = 0;
    for (unsigned i = 1; i <= 64; ++i)
        if (table.value(i, std::uint64_t(3)).at_least(m)) {
            iota = i;
            break;
        }
    if (iota == 0) throw std::logic_error("order3_sharp_bound: did not converge");
    return {(2 * bigint(iota) + 4) * n + 7 * m, iota};
}

namespace {

void expect(bool ok, std::vector<std::string>& failures, const std::string& what) {
    if (!ok) failures.push_back(what);
}

std::string tag(const char* fam, unsigned s, unsigned i) {
    std::ostringstream o;
    o << fam << " s=" << s << " i=" << i;
    return o.str();
}

}  // namespace

std::vector<std::string> check_happiness(unsigned s_max, unsigned i_max) {
    if (s_max < 4 || i_max < 2) throw std::invalid_argument("check_happiness: s_max >= 4, i_max >= 2");
    std::vector<std::string> failures;

    for (unsigned s = 4; s <= s_max; ++s) {
        // base-case floors
        expect(mu(s, 1) >= pow2(bigint(s - 1)), failures, tag("mu-floor", s, 1));
        if (s % 2 == 1) expect(nu(s, 1) >= pow2(bigint(s - 1)), failures, tag("nu-floor", s, 1));

        for (unsigned i = 2; i <= i_max; ++i) {
            if (s % 2 == 0) {
                bigint rhs = 2 * mu_happy(s - 1, i) + mu_happy(s - 2, i) * mu(s, i - 1);
                expect(mu(s, i) >= rhs, failures, tag("M-rec-even", s, i));
                cpp_rational k = cpp_rational(2 * mu_happy(s - 1, i), s - 2) +
                                 cpp_rational(mu_happy(s - 2, i) * mu(s, i - 1), pow2(bigint(s - 3))) +
                                 cpp_rational(mu_happy(s - 2, i), 2 * bigint(s - 2) * (s - 2));
                expect(cpp_rational(mu(s, i)) >= k, failures, tag("K-rec-even", s, i));
            } else {
                bigint rhs = 2 * mu_happy(s - 1, i) + mu_happy(s - 2, i) * nu(s, i - 1) +
                             mu_happy(s - 3, i) * mu(s, i - 1);
                expect(mu(s, i) >= rhs, failures, tag("M-rec-odd", s, i));
                cpp_rational k =
                    cpp_rational(2 * mu_happy(s - 1, i), s - 2) +
                    cpp_rational(mu_happy(s - 2, i) * nu(s, i - 1), pow2(bigint(s - 3))) +
                    cpp_rational(mu_happy(s - 2, i), 2 * bigint(s - 2) * (s - 2)) +
                    cpp_rational(mu_happy(s - 3, i) * mu(s, i - 1), pow2(bigint(s - 3))) +
                    cpp_rational(mu_happy(s - 3, i), 4 * bigint(s - 2) * (s - 2) * (s - 2));
                expect(cpp_rational(mu(s, i)) >= k, failures, tag("K-rec-odd", s, i));
                expect(nu(s, i) >= nu(s, i - 1) + 2 * mu_happy(s - 1, i), failures, tag("N-rec", s, i));
            }
        }
    }

    // order-4 step holds with equality: 2(3i) + 2 mu_{4,i-1} = mu_{4,i}
    for (unsigned i = 2; i <= i_max; ++i)
        expect(2 * mu_happy(3, i) + mu_happy(2, i) * mu(4, i - 1) == mu(4, i), failures,
               tag("mu4-equality", 4, i));

    return failures;
}

std::vector<std::string> check_feather_ineqs(unsigned i_max) {
    if (i_max < 2) throw std::invalid_argument("check_feather_ineqs: i_max >= 2");
    std::vector<std::string> failures;
    expect(nu5p(1) == 6, failures, "nu5p base: nu'_1 == 6");
    expect(nu5pp(1) == 14, failures, "nu5pp base: nu''_1 == 14");
    for (unsigned i = 2; i <= i_max; ++i) {
        bigint mu3 = bigint(3) * i + 1;
        expect(nu5p(i) >= nu5p(i - 1) + mu3 - 1, failures, tag("nu5p-rec", 5, i));
        expect(nu5pp(i) >= nu5pp(i - 1) + 2 * nu5p(i) + 2, failures, tag("nu5pp-rec", 5, i));
        bigint bracket = 2 * mu(4, i) + mu3 * nu5pp(i - 1);
        expect(bracket < pow2(bigint(i) + 7), failures, tag("bracket-lt-2^(i+7)", 5, i));
        expect(mu5_sharp(i) >= 2 * mu5_sharp(i - 1) + bracket, failures, tag("mu5-sharp-rec", 5, i));
        expect(bigint(i) * pow2(bigint(i) + 7) >=
                   2 * bigint(i - 1) * pow2(bigint(i) + 6) + pow2(bigint(i) + 7),
               failures, tag("mu5-chain", 5, i));
    }
    return failures;
}

bigint gamma_cap(unsigned s, const bigint& n) {
    if (n < 1) return 1;
    bigint v = best_upper_bound(s, n, 2 * n - 1).value;
    return (v + n - 1) / n;
}

}  // namespace dslab::bounds
