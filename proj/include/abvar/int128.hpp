#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "abvar/errors.hpp"

namespace abvar {

// Exact unsigned 128-bit integers back the dimension formulas; g is capped
// elsewhere so that every binomial fits.
using uint128 = unsigned __int128;
using int128 = __int128;

inline std::string to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline bool fits_u64(uint128 v) {
    return v <= static_cast<uint128>(std::numeric_limits<std::uint64_t>::max());
}

// Narrow a 128-bit product back to int64, throwing instead of wrapping.
inline std::int64_t checked_i64(int128 v, const char* what) {
    if (v > static_cast<int128>(std::numeric_limits<std::int64_t>::max()) ||
        v < static_cast<int128>(std::numeric_limits<std::int64_t>::min())) {
        throw OverflowError(std::string(what) + ": value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace abvar
