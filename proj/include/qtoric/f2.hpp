#pragma once

#include <cstdint>
#include <ostream>

#include "qtoric/ints.hpp"

namespace qtoric {

// The field with two elements. Small value type so polynomial and matrix
// code can be written once and instantiated for ZInt or F2.
class F2 {
public:
    constexpr F2() = default;
    constexpr F2(int v) : v_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}
    explicit F2(const ZInt& v) : v_(static_cast<std::uint8_t>(v & 1)) {}

    constexpr int value() const { return v_; }

    friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.v_ ^ b.v_); }
    friend constexpr F2 operator-(F2 a, F2 b) { return F2(a.v_ ^ b.v_); }
    friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.v_ & b.v_); }
    constexpr F2 operator-() const { return *this; }

    F2& operator+=(F2 b) { v_ ^= b.v_; return *this; }
    F2& operator-=(F2 b) { v_ ^= b.v_; return *this; }
    F2& operator*=(F2 b) { v_ &= b.v_; return *this; }

    friend constexpr bool operator==(F2 a, F2 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(F2 a, F2 b) { return a.v_ != b.v_; }

    friend std::ostream& operator<<(std::ostream& os, F2 a) { return os << int(a.v_); }

private:
    constexpr F2(std::uint8_t v, int) : v_(v) {}
    std::uint8_t v_{0};
};

// Coefficient helpers shared by the generic polynomial/matrix code.
template <class C>
inline bool is_zero(const C& c) { return c == C(0); }

template <class C>
inline bool is_unit(const C& c);

template <>
inline bool is_unit<ZInt>(const ZInt& c) { return c == 1 || c == -1; }

template <>
inline bool is_unit<F2>(const F2& c) { return c == F2(1); }

}  // namespace qtoric
