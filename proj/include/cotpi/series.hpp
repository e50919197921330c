#pragma once

#include <cstdint>
#include <string>

#include "cotpi/fixed.hpp"

namespace cotpi {

// The family under study: S_k = sum_{n>=1} 1/((k n)^2 - 1) for integer
// k >= 2. Closed form: S_k = (1 - (pi/k) cot(pi/k)) / 2.

enum class SkMethod { direct, zeta_series, closed_form };

const char* sk_method_name(SkMethod m);

struct SeriesResult {
  // value.err_ulps covers the arithmetic done on the computed terms, so
  // value's own interval contains the truncated partial sum. total_error
  // is the complete bound against S_k itself (arithmetic plus tail); use
  // widened() for containment claims about S_k.
  Fixed value;
  Fixed total_error;
  std::uint64_t terms_used = 0;
  SkMethod method = SkMethod::direct;

  Rational total_error_rational() const { return total_error.value_rational(); }
  // value with its bound replaced by total_error: an interval around S_k.
  Fixed widened() const {
    return fx_widen(Fixed(value.mantissa(), value.frac_digits(), Int(0)),
                    total_error_rational());
  }
};

inline constexpr std::uint64_t kDefaultTermCap = 400000000;

// Term-by-term summation of 1/((kn)^2 - 1) for n = 1..N, where N is the
// least count whose tail bound (4/3)/(k^2 N) is <= target_error. Exact
// scaled-integer accumulation: one truncation ulp per term, so the result
// is independent of any evaluation order or chunking.
SeriesResult sk_direct(long k, int p, const Fixed& target_error,
                       std::uint64_t term_cap = kDefaultTermCap);

// Convenience: target half an output ulp.
SeriesResult sk_direct(long k, int p);

// Even-zeta expansion S_k = sum_{m>=1} Q(m) (pi/k)^(2m), truncated once the
// geometric tail bound 2 (1/k^2)^(M+1) / (1 - 1/k^2) clears half an output
// ulp. pi_approx supplies pi; its error bound propagates into the result.
SeriesResult sk_zeta_series(long k, int p, const Fixed& pi_approx,
                            std::uint64_t m_cap = 100000);

// Closed form (1 - x cot x)/2 at x = pi/k, cotangent via its Laurent
// series. terms_used counts cotangent terms.
SeriesResult sk_closed_form(long k, int p, const Fixed& pi_approx);

// |pi cot(pi x) - (1/x + 2x sum_{n=1..N} 1/(x^2 - n^2))| for rational
// x in (0,1), x != an integer reciprocal boundary case handled by the
// cotangent domain itself. The partial-fraction tail obeys
// residual <= 2x/(N - x); callers check against that bound.
Fixed cot_partial_fraction_residual(const Rational& x, std::uint64_t N, int p,
                                    const Fixed& pi_approx);

namespace detail {
// Sum of floor(10^P / ((k n)^2 - 1)) over n in [n_begin, n_end). Exposed so
// tests can confirm chunked evaluation reproduces the single-pass sum.
Int sk_direct_scaled_sum(long k, int P, std::uint64_t n_begin, std::uint64_t n_end);
}  // namespace detail

}  // namespace cotpi
