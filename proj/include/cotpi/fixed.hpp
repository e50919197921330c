#pragma once

#include <string>

#include "cotpi/bigint.hpp"
#include "cotpi/rational.hpp"

namespace cotpi {

// Decimal fixed-point number with a machine-checked error bound.
//
// A Fixed holds (mantissa, frac_digits, err_ulps) and represents the value
// mantissa * 10^(-frac_digits) together with the guarantee that the true
// quantity it approximates lies in
//   [ (mantissa - err_ulps) * 10^(-frac_digits),
//     (mantissa + err_ulps) * 10^(-frac_digits) ].
// Every operation keeps that containment sound; bounds may be conservative
// but are never optimistic. frac_digits >= 1 always.
class Fixed {
 public:
  Fixed() : mantissa_(0), frac_digits_(1), err_ulps_(0) {}
  Fixed(Int mantissa, int frac_digits, Int err_ulps = Int(0));

  // Exact integer v at precision p.
  static Fixed from_int(long long v, int p);

  const Int& mantissa() const { return mantissa_; }
  int frac_digits() const { return frac_digits_; }
  const Int& err_ulps() const { return err_ulps_; }

  bool exact() const { return err_ulps_ == 0; }

  Rational value_rational() const;  // mantissa * 10^-p
  Rational error_rational() const;  // err_ulps * 10^-p
  Rational lo_rational() const;
  Rational hi_rational() const;

  // Plain decimal rendering of the mantissa, e.g. "-3.1415". Prints the
  // stored value; it does not consult err_ulps.
  std::string str() const;

  // Lossy, for logs and quick comparisons only.
  double to_double() const;

 private:
  Int mantissa_;
  int frac_digits_;
  Int err_ulps_;
};

// Change precision. Scaling up is exact; scaling down truncates the
// mantissa toward zero and inflates the bound by at most one output ulp.
Fixed fx_rescale(const Fixed& a, int p);

// Arithmetic. Mixed precisions align to the finer operand first.
Fixed fx_add(const Fixed& a, const Fixed& b);
Fixed fx_sub(const Fixed& a, const Fixed& b);
Fixed fx_mul(const Fixed& a, const Fixed& b);
// Divisor interval must exclude zero, otherwise std::domain_error.
Fixed fx_div(const Fixed& a, const Fixed& b);
Fixed fx_neg(const Fixed& a);
Fixed fx_abs(const Fixed& a);

// Divide by an exact nonzero integer. Cheaper than fx_div and adds at most
// one ulp.
Fixed fx_div_int(const Fixed& a, const Int& c);

// Round a rational to p fractional digits, truncating toward zero; the
// one-ulp truncation slack lands in err_ulps.
Fixed fx_from_rational(const Rational& r, int p);

// Smallest p-digit value >= |r|, returned exact (err_ulps == 0). Intended
// for representing upper error bounds, hence the magnitude rounds up.
Fixed fx_bound_from_rational(const Rational& r, int p);

// Square root at p fractional digits. The input interval must not lie
// entirely below zero; negative values inside the interval are clamped to
// zero before the root is taken.
Fixed fx_sqrt(const Fixed& a, int p);

// Widen a's bound so the result also covers a +/- extra. extra must be a
// nonnegative rational.
Fixed fx_widen(const Fixed& a, const Rational& extra);

bool fx_contains(const Fixed& a, const Rational& x);
// Every point of inner's interval lies inside outer's.
bool fx_contains_interval(const Fixed& outer, const Fixed& inner);
bool fx_overlap(const Fixed& a, const Fixed& b);

// Order by stored value (ignores error bounds): -1, 0, +1.
int fx_compare_value(const Fixed& a, const Fixed& b);

// Decimal digits of `value` that are pinned down once the interval is
// widened by total_error on both sides. digits is the largest d such that
// every point of the widened interval truncates to the same d fractional
// digits; text is that common truncation ("3.14159..."). digits == -1 when
// even the integer part is undetermined. max_digits >= 0 caps the scan, for
// callers that computed guard digits beyond what they intend to print.
struct CertifiedDecimal {
  int digits = -1;
  std::string text;
};
CertifiedDecimal certified_decimal(const Fixed& value, const Rational& total_error,
                                   int max_digits = -1);

// Two-significant-digit scientific rendering of a nonnegative bound,
// rounded up so the printed figure is itself a valid bound. "0" for zero.
std::string bound_sci_str(const Rational& bound);

inline Fixed operator+(const Fixed& a, const Fixed& b) { return fx_add(a, b); }
inline Fixed operator-(const Fixed& a, const Fixed& b) { return fx_sub(a, b); }
inline Fixed operator*(const Fixed& a, const Fixed& b) { return fx_mul(a, b); }
inline Fixed operator/(const Fixed& a, const Fixed& b) { return fx_div(a, b); }
inline Fixed operator-(const Fixed& a) { return fx_neg(a); }

}  // namespace cotpi
