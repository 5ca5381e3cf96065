#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mbfix {

/// Exact nonnegative count. Every count in the library is carried in this
/// type; there is no fixed-width fast path.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Parses a decimal string. Digit-group spaces ("7 581") are accepted.
BigCount parse_decimal(const std::string& text);

BigCount factorial(unsigned n);

inline BigCount from_u128(unsigned __int128 value) {
    BigCount hi = static_cast<std::uint64_t>(value >> 64);
    return (hi << 64) | BigCount(static_cast<std::uint64_t>(value));
}

}  // namespace mbfix
