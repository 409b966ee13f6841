#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace gssp {

using BigInt = boost::multiprecision::cpp_int;

/// Absolute value without mutating the argument.
inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// log2 of a positive BigInt, accurate enough for gap/growth estimates
/// even when the value does not fit in a double.
inline double big_log2(const BigInt& x) {
    if (x <= 0) throw std::domain_error("big_log2: argument must be positive");
    const std::size_t bits = boost::multiprecision::msb(x);
    if (bits < 512) return std::log2(x.convert_to<double>());
    // keep the top 64 bits as mantissa
    const BigInt top = x >> (bits - 63);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 63);
}

inline bool fits_int64(const BigInt& x) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    return x >= lo && x <= hi;
}

}  // namespace gssp
