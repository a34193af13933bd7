#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace tf {

/// Thrown when checked 64-bit arithmetic would wrap.  All coefficient and
/// count arithmetic in this library is exact; overflow is a hard error.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a text form (partition, composition, tableau) is malformed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 64-bit integer whose +, -, * throw OverflowError instead of wrapping.
class ZZ {
public:
    constexpr ZZ() = default;
    constexpr ZZ(long long v) : v_(v) {}

    constexpr long long value() const { return v_; }

    ZZ& operator+=(ZZ o)
    {
        if (__builtin_add_overflow(v_, o.v_, &v_))
            throw OverflowError("integer overflow in addition");
        return *this;
    }
    ZZ& operator-=(ZZ o)
    {
        if (__builtin_sub_overflow(v_, o.v_, &v_))
            throw OverflowError("integer overflow in subtraction");
        return *this;
    }
    ZZ& operator*=(ZZ o)
    {
        if (__builtin_mul_overflow(v_, o.v_, &v_))
            throw OverflowError("integer overflow in multiplication");
        return *this;
    }

    friend ZZ operator+(ZZ a, ZZ b) { return a += b; }
    friend ZZ operator-(ZZ a, ZZ b) { return a -= b; }
    friend ZZ operator*(ZZ a, ZZ b) { return a *= b; }
    friend ZZ operator-(ZZ a) { return ZZ(0) - a; }

    friend constexpr auto operator<=>(ZZ, ZZ) = default;

    std::string str() const { return std::to_string(v_); }

private:
    long long v_ = 0;
};

}  // namespace tf
