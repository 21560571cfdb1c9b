#pragma once

#include <bit>
#include <cstdint>

namespace forestlab {

// ceil(log2(n)); 0 for n <= 1. All label-size formulas use this rounding.
constexpr unsigned ceil_log2(std::uint64_t n) {
    if (n <= 1) return 0;
    return 64 - static_cast<unsigned>(std::countl_zero(n - 1));
}

// floor(log2(n)); n must be >= 1.
constexpr unsigned floor_log2(std::uint64_t n) {
    return 63 - static_cast<unsigned>(std::countl_zero(n));
}

// ceil(log2(max(2, ceil_log2(n)))): the "loglog" of label-size bounds.
// Always >= 1.
constexpr unsigned loglog(std::uint64_t n) {
    std::uint64_t k = ceil_log2(n);
    return ceil_log2(k < 2 ? 2 : k);
}

// Smallest field width that can hold `value` (at least 1 bit).
constexpr unsigned width_for(std::uint64_t value) {
    return value == 0 ? 1 : floor_log2(value) + 1;
}

}  // namespace forestlab
