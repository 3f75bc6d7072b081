#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace binomsum {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Raised when a modular inverse is requested for a non-unit.
struct NonInvertibleError : std::domain_error {
    explicit NonInvertibleError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an operation requires a prime modulus and got a composite one.
struct NotPrimeError : std::domain_error {
    explicit NotPrimeError(const std::string& what) : std::domain_error(what) {}
};

// Raised when a parameter violates a documented range precondition.
struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// Raised when an exact integer computation would exceed the native budget.
// Counts are reported as errors, never silently wrapped.
struct OverflowError : std::overflow_error {
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace binomsum
