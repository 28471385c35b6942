#pragma once

#include <cstdint>

#include "csemi/errors.hpp"

namespace csemi {

// Exact 64-bit arithmetic. Silent wraparound is forbidden everywhere in this
// library; these helpers throw OverflowError instead.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Narrow a 128-bit intermediate back to 64 bits.
inline std::int64_t narrow_i128(__int128 v) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw OverflowError("value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t abs_i64(std::int64_t v) {
    if (v == INT64_MIN) throw OverflowError("abs(INT64_MIN)");
    return v < 0 ? -v : v;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    a = abs_i64(a);
    b = abs_i64(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace csemi
