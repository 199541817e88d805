#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace he3 {

/// Exact half-integer angular momentum value, stored as 2j.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice_value) : twice(twice_value) {}

    static constexpr HalfInt from_int(int j) { return HalfInt{2 * j}; }
    static constexpr HalfInt half() { return HalfInt{1}; }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr double value() const { return 0.5 * twice; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

inline HalfInt abs(HalfInt a) { return HalfInt{a.twice < 0 ? -a.twice : a.twice}; }

/// |a-b| <= c <= a+b with integer perimeter.
inline bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    if ((a.twice + b.twice + c.twice) % 2 != 0) return false;
    return c.twice >= std::abs(a.twice - b.twice) && c.twice <= a.twice + b.twice;
}

inline std::string to_string(HalfInt a) {
    if (a.is_integer()) return std::to_string(a.twice / 2);
    return std::to_string(a.twice) + "/2";
}

} // namespace he3
