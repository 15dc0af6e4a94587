#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "symfix/errors.hpp"

namespace symfix {

/// Exact binomial coefficient; throws CapError if the value leaves 64 bits.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (__builtin_mul_overflow(r, num, &r)) throw CapError("binomial coefficient exceeds 64 bits");
        r /= static_cast<std::uint64_t>(i);
    }
    return r;
}

/// Compares two vertex sets (bitmasks) as sorted sequences, lexicographically.
inline bool set_lex_less(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        const int x = __builtin_ctzll(a);
        const int y = __builtin_ctzll(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

/// FNV-1a 64-bit digest as 16 lowercase hex characters; used to stamp inputs
/// into reports.
inline std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace symfix
