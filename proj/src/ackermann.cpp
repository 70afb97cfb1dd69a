#include "dslab/ackermann.hpp"

#include <sstream>
#include <vector>

namespace dslab {

namespace {

std::uint64_t bits_for(const bigint& t) {
    // smallest b with 2^b >= t
    if (t <= 1) return 0;
    bigint x = t - 1;
    std::uint64_t b = 0;
    while (x > 0) {
        x >>= 1;
        ++b;
    }
    return b;
}

bool power_of_two(const bigint& v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

AckermannTable::AckermannTable(bigint threshold) : threshold_(std::move(threshold)) {
    if (threshold_ < 2) throw std::invalid_argument("AckermannTable: threshold must be >= 2");
    bits_threshold_ = bits_for(threshold_);
}

AckValue AckermannTable::value(unsigned i, const bigint& j) {
    if (i < 1 || j < 1) throw std::invalid_argument("ackermann: i and j must be >= 1");
    // a_{i,j} >= 2^j for j >= 2, and a_{i,1} = 2
    if (j >= bigint(bits_threshold_) && j > 1) return AckValue::saturated();
    return value(i, static_cast<std::uint64_t>(j));
}

AckValue AckermannTable::value(unsigned i, std::uint64_t j) {
    if (i < 1 || j < 1) throw std::invalid_argument("ackermann: i and j must be >= 1");
    if (i == 1) {
        if (j >= bits_threshold_) return AckValue::saturated();
        return AckValue::exact(bigint(1) << j);  // 2^j < 2^{bits(T)} is exact by minimality
    }
    auto& row = rows_[i];
    if (row.empty())
        row.push_back(bigint(2) >= threshold_ ? AckValue::saturated() : AckValue::exact(2));
    // a_{i,j} is nondecreasing in j, so a saturated column ends the row.
    while (row.size() < j && !row.back().is_saturated()) {
        AckValue v = row_step(i, row.back());
        if (!v.is_saturated() && !power_of_two(v.value()))
            throw std::logic_error("ackermann: exact value is not a power of two");
        row.push_back(v);
    }
    return row.size() >= j ? row[j - 1] : AckValue::saturated();
}

AckValue AckermannTable::row_step(unsigned i, const AckValue& w) {
    if (w.is_saturated()) return AckValue::saturated();  // a_{i,j} >= w >= T
    if (w.value() >= bits_threshold_ && w.value() > 1) return AckValue::saturated();  // a_{i-1,w} >= 2^w
    std::uint64_t wi = static_cast<std::uint64_t>(w.value());
    AckValue inner = value(i - 1, wi);
    if (inner.is_saturated()) return AckValue::saturated();
    bigint v = w.value() * inner.value();
    return v >= threshold_ ? AckValue::saturated() : AckValue::exact(v);
}

AckValue AckermannTable::power(unsigned i, std::uint64_t j, unsigned c) {
    if (c == 0) throw std::invalid_argument("ackermann power: c must be >= 1");
    AckValue base = value(i, j);
    if (base.is_saturated()) return AckValue::saturated();
    bigint acc = 1;
    for (unsigned k = 0; k < c; ++k) {
        acc *= base.value();
        if (acc >= threshold_) return AckValue::saturated();
    }
    return AckValue::exact(acc);
}

namespace {

bigint ceil_div(const bigint& a, const bigint& b) { return (a + b - 1) / b; }

template <class Eval>
unsigned alpha2_generic(const bigint& n, const bigint& m, Eval&& ack_at_least_m) {
    if (n < 1 || m < 1) throw std::invalid_argument("alpha: n and m must be >= 1");
    bigint j = ceil_div(n, m);
    if (j < 3) j = 3;
    for (unsigned i = 1; i <= 64; ++i)
        if (ack_at_least_m(i, j)) return i;
    throw std::logic_error("alpha: did not converge");
}

}  // namespace

unsigned alpha2(const bigint& n, const bigint& m) {
    AckermannTable table(m + 1);
    return alpha2_generic(n, m,
                          [&](unsigned i, const bigint& j) { return table.value(i, j).at_least(m); });
}

unsigned alpha2_reference(const bigint& n, const bigint& m) {
    if (m >= (bigint(1) << 64)) throw std::invalid_argument("alpha2_reference: m too large");
    // exact big integers with a 2^64 sentinel; the sentinel only appears for
    // values already far beyond any admissible m
    AckermannTable table(bigint(1) << 64);
    return alpha2_generic(n, m,
                          [&](unsigned i, const bigint& j) { return table.value(i, j).at_least(m); });
}

unsigned alpha(const bigint& n) { return alpha2(n, n); }

std::string ackermann_table_csv(unsigned imax, unsigned jmax, const bigint& threshold) {
    AckermannTable table(threshold);
    std::ostringstream out;
    out << "i\\j";
    for (unsigned j = 1; j <= jmax; ++j) out << "," << j;
    out << "\n";
    for (unsigned i = 1; i <= imax; ++i) {
        out << i;
        for (unsigned j = 1; j <= jmax; ++j) {
            AckValue v = table.value(i, std::uint64_t(j));
            out << ",";
            if (v.is_saturated())
                out << ">=" << threshold;
            else
                out << v.value();
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace dslab
