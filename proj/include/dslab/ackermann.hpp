#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "dslab/common.hpp"

namespace dslab {

using bigint = boost::multiprecision::cpp_int;

/// Value of a_{i,j}: exact below a threshold T, a saturation marker otherwise.
/// Saturation is absorptive under * and ^.
class AckValue {
public:
    static AckValue exact(bigint v) { return AckValue(false, std::move(v)); }
    static AckValue saturated() { return AckValue(true, 0); }

    bool is_saturated() const { return saturated_; }
    const bigint& value() const {
        if (saturated_) throw std::logic_error("AckValue: saturated value has no exact form");
        return value_;
    }
    /// v >= m, valid whenever m < T.
    bool at_least(const bigint& m) const { return saturated_ || value_ >= m; }

private:
    AckValue(bool sat, bigint v) : saturated_(sat), value_(std::move(v)) {}
    bool saturated_;
    bigint value_;
};

/// Memoized evaluator of the Ackermann hierarchy
///   a_{1,j} = 2^j,  a_{i,1} = 2,  a_{i,j} = w * a_{i-1,w}  (w = a_{i,j-1})
/// saturating at threshold T. Exact values are powers of two.
class AckermannTable {
public:
    explicit AckermannTable(bigint threshold);

    AckValue value(unsigned i, const bigint& j);
    AckValue value(unsigned i, std::uint64_t j);

    /// a_{i,j}^c, saturating.
    AckValue power(unsigned i, std::uint64_t j, unsigned c);

    const bigint& threshold() const { return threshold_; }

private:
    AckValue row_step(unsigned i, const AckValue& w);

    bigint threshold_;
    std::uint64_t bits_threshold_;  // smallest b with 2^b >= T
    std::map<unsigned, std::vector<AckValue>> rows_;  // rows_[i][j-1] = a_{i,j}, i >= 2
};

/// alpha(n,m) = min{ i : a_{i,j} >= m }, j = max(ceil(n/m), 3),
/// evaluated with saturation threshold m+1.
unsigned alpha2(const bigint& n, const bigint& m);

/// Reference evaluation with exact big integers (2^64 overflow sentinel,
/// sound for all m < 2^64). Used to cross-check the saturating path.
unsigned alpha2_reference(const bigint& n, const bigint& m);

unsigned alpha(const bigint& n);

/// CSV table of a_{i,j} for 1<=i<=imax, 1<=j<=jmax, entries ">=T" once saturated.
std::string ackermann_table_csv(unsigned imax, unsigned jmax, const bigint& threshold);

}  // namespace dslab
