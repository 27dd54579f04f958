#pragma once

#include <cstdint>
#include <stdexcept>

namespace blowup7 {

// Lattice coefficients are tiny in practice, but enumeration bounds are
// user-configurable, so every arithmetic step is overflow-checked and a
// wraparound raises instead of corrupting counts.
inline std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("lattice arithmetic overflow (add)");
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("lattice arithmetic overflow (sub)");
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("lattice arithmetic overflow (mul)");
    return r;
}

}  // namespace blowup7
