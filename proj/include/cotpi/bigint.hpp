#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace cotpi {

// Arbitrary-precision signed integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

// 10^n for n >= 0. Memoized; returns a copy so callers may hold the value
// across further calls.
Int pow10(int n);

// ceil(a / b) for a >= 0, b > 0.
Int ceil_div_nonneg(const Int& a, const Int& b);

// floor(a / b) for b > 0, a of either sign.
Int floor_div(const Int& a, const Int& b);

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

// ceil(sqrt(n)) for n >= 0.
Int isqrt_ceil(const Int& n);

// Count of decimal digits of |n|; 1 for n == 0.
int dec_digit_count(const Int& n);

// Guard digits sized for a computation that accumulates at most max_terms
// rounded operations: 10 + ceil(log10(max_terms)).
int guard_digits(std::uint64_t max_terms);

}  // namespace cotpi
