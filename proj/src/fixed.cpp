#include "cotpi/fixed.hpp"

#include <stdexcept>
#include <utility>

namespace cotpi {

namespace {

// Truncate m toward zero by d decimal digits; remainder_nonzero reports
// whether anything was discarded.
Int shift_down(const Int& m, int d, bool* remainder_nonzero) {
  Int scale = pow10(d);
  Int q = m / scale;
  *remainder_nonzero = (q * scale != m);
  return q;
}

// Both operands at the common (finer) precision.
std::pair<Fixed, Fixed> align(const Fixed& a, const Fixed& b) {
  int p = a.frac_digits() >= b.frac_digits() ? a.frac_digits() : b.frac_digits();
  return {fx_rescale(a, p), fx_rescale(b, p)};
}

}  // namespace

Fixed::Fixed(Int mantissa, int frac_digits, Int err_ulps)
    : mantissa_(std::move(mantissa)), frac_digits_(frac_digits), err_ulps_(std::move(err_ulps)) {
  if (frac_digits_ < 1) throw std::domain_error("Fixed: frac_digits must be >= 1");
  if (err_ulps_ < 0) throw std::domain_error("Fixed: negative error bound");
}

Fixed Fixed::from_int(long long v, int p) {
  return Fixed(Int(v) * pow10(p), p, Int(0));
}

Rational Fixed::value_rational() const { return Rational(mantissa_, pow10(frac_digits_)); }

Rational Fixed::error_rational() const { return Rational(err_ulps_, pow10(frac_digits_)); }

Rational Fixed::lo_rational() const {
  return Rational(mantissa_ - err_ulps_, pow10(frac_digits_));
}

Rational Fixed::hi_rational() const {
  return Rational(mantissa_ + err_ulps_, pow10(frac_digits_));
}

std::string Fixed::str() const {
  Int a = abs(mantissa_);
  Int scale = pow10(frac_digits_);
  std::string frac = Int(a % scale).str();
  frac.insert(frac.begin(), static_cast<std::size_t>(frac_digits_) - frac.size(), '0');
  std::string s = mantissa_ < 0 ? "-" : "";
  s += Int(a / scale).str();
  s += ".";
  s += frac;
  return s;
}

double Fixed::to_double() const {
  return mantissa_.convert_to<double>() / pow10(frac_digits_).convert_to<double>();
}

Fixed fx_rescale(const Fixed& a, int p) {
  if (p == a.frac_digits()) return a;
  if (p > a.frac_digits()) {
    Int scale = pow10(p - a.frac_digits());
    return Fixed(a.mantissa() * scale, p, a.err_ulps() * scale);
  }
  int d = a.frac_digits() - p;
  bool rem = false;
  Int m = shift_down(a.mantissa(), d, &rem);
  // |true - m 10^-p| <= err 10^-(p+d) + |discard| 10^-p with |discard| < 1,
  // so ceil(err / 10^d) plus one ulp when anything was discarded.
  Int e = ceil_div_nonneg(a.err_ulps(), pow10(d));
  if (rem) ++e;
  return Fixed(m, p, e);
}

Fixed fx_add(const Fixed& a, const Fixed& b) {
  auto [x, y] = align(a, b);
  return Fixed(x.mantissa() + y.mantissa(), x.frac_digits(), x.err_ulps() + y.err_ulps());
}

Fixed fx_sub(const Fixed& a, const Fixed& b) { return fx_add(a, fx_neg(b)); }

Fixed fx_neg(const Fixed& a) { return Fixed(-a.mantissa(), a.frac_digits(), a.err_ulps()); }

Fixed fx_abs(const Fixed& a) { return Fixed(abs(a.mantissa()), a.frac_digits(), a.err_ulps()); }

Fixed fx_mul(const Fixed& a, const Fixed& b) {
  auto [x, y] = align(a, b);
  int p = x.frac_digits();
  Int prod = x.mantissa() * y.mantissa();
  // (ma +/- ea)(mb +/- eb): cross terms bound the propagated error at scale
  // 10^-2p; dividing by 10^p brings it to output ulps.
  Int prop = abs(x.mantissa()) * y.err_ulps() + abs(y.mantissa()) * x.err_ulps() +
             x.err_ulps() * y.err_ulps();
  bool rem = false;
  Int m = shift_down(prod, p, &rem);
  Int e = ceil_div_nonneg(prop, pow10(p));
  if (rem) ++e;
  return Fixed(m, p, e);
}

Fixed fx_div(const Fixed& a, const Fixed& b) {
  auto [x, y] = align(a, b);
  int p = x.frac_digits();
  Int mb_abs = abs(y.mantissa());
  if (mb_abs <= y.err_ulps()) throw std::domain_error("fx_div: divisor interval contains zero");
  Int num = x.mantissa() * pow10(p);
  Int q = num / y.mantissa();  // truncates toward zero for either sign
  bool rem = (q * y.mantissa() != num);
  // |a/b - ma/mb| <= (ea |mb| + |ma| eb) / ((|mb| - eb) |mb|), scaled by
  // 10^p into output ulps.
  Int prop_num = (x.err_ulps() * mb_abs + abs(x.mantissa()) * y.err_ulps()) * pow10(p);
  Int prop_den = (mb_abs - y.err_ulps()) * mb_abs;
  Int e = ceil_div_nonneg(prop_num, prop_den);
  if (rem) ++e;
  return Fixed(q, p, e);
}

Fixed fx_div_int(const Fixed& a, const Int& c) {
  if (c == 0) throw std::domain_error("fx_div_int: division by zero");
  Int ca = abs(c);
  Int q = a.mantissa() / c;
  bool rem = (q * c != a.mantissa());
  Int e = ceil_div_nonneg(a.err_ulps(), ca);
  if (rem) ++e;
  return Fixed(q, a.frac_digits(), e);
}

Fixed fx_from_rational(const Rational& r, int p) {
  if (p < 1) throw std::domain_error("fx_from_rational: p must be >= 1");
  Int num = r.num() * pow10(p);
  Int m = num / r.den();
  bool rem = (m * r.den() != num);
  return Fixed(m, p, Int(rem ? 1 : 0));
}

Fixed fx_bound_from_rational(const Rational& r, int p) {
  if (p < 1) throw std::domain_error("fx_bound_from_rational: p must be >= 1");
  Int m = ceil_div_nonneg(abs(r.num()) * pow10(p), r.den());
  return Fixed(m, p, Int(0));
}

Fixed fx_sqrt(const Fixed& a, int p) {
  if (p < 1) throw std::domain_error("fx_sqrt: p must be >= 1");
  Int hi = a.mantissa() + a.err_ulps();
  if (hi < 0) throw std::domain_error("fx_sqrt: interval entirely negative");
  Int lo = a.mantissa() - a.err_ulps();
  if (lo < 0) lo = 0;
  Int mid = a.mantissa() < 0 ? Int(0) : a.mantissa();

  // Scale the endpoints to 2p digits so the integer root lands at p digits.
  // Outward rounding here keeps [s_lo, s_hi] around the true scaled value.
  int t = 2 * p - a.frac_digits();
  Int s_lo, s_mid, s_hi;
  if (t >= 0) {
    Int scale = pow10(t);
    s_lo = lo * scale;
    s_mid = mid * scale;
    s_hi = hi * scale;
  } else {
    Int scale = pow10(-t);
    s_lo = lo / scale;
    s_mid = mid / scale;
    s_hi = ceil_div_nonneg(hi, scale);
  }
  Int r_lo = isqrt_floor(s_lo);
  Int r_hi = isqrt_ceil(s_hi);
  Int m = isqrt_floor(s_mid);
  Int e = r_hi - m;
  if (m - r_lo > e) e = m - r_lo;
  return Fixed(m, p, e);
}

Fixed fx_widen(const Fixed& a, const Rational& extra) {
  if (extra.sign() < 0) throw std::domain_error("fx_widen: negative widening");
  if (extra.is_zero()) return a;
  Int add = ceil_div_nonneg(extra.num() * pow10(a.frac_digits()), extra.den());
  return Fixed(a.mantissa(), a.frac_digits(), a.err_ulps() + add);
}

bool fx_contains(const Fixed& a, const Rational& x) {
  return a.lo_rational() <= x && x <= a.hi_rational();
}

bool fx_contains_interval(const Fixed& outer, const Fixed& inner) {
  return outer.lo_rational() <= inner.lo_rational() && inner.hi_rational() <= outer.hi_rational();
}

bool fx_overlap(const Fixed& a, const Fixed& b) {
  return a.lo_rational() <= b.hi_rational() && b.lo_rational() <= a.hi_rational();
}

int fx_compare_value(const Fixed& a, const Fixed& b) {
  return rat_cmp(a.value_rational(), b.value_rational());
}

namespace {

// floor(r * 10^d) as an integer.
Int floor_scaled(const Rational& r, int d) { return floor_div(r.num() * pow10(d), r.den()); }

// Decimal rendering of a truncation F = floor(v * 10^d) with d fractional
// digits. For negative F this prints the truncation toward minus infinity,
// which is the floor the certification computed.
std::string render_floor(const Int& F, int d) {
  Int a = abs(F);
  Int scale = pow10(d);
  std::string s = F < 0 ? "-" : "";
  s += Int(a / scale).str();
  if (d > 0) {
    std::string frac = Int(a % scale).str();
    frac.insert(frac.begin(), static_cast<std::size_t>(d) - frac.size(), '0');
    s += "." + frac;
  }
  return s;
}

}  // namespace

CertifiedDecimal certified_decimal(const Fixed& value, const Rational& total_error,
                                   int max_digits) {
  if (total_error.sign() < 0) throw std::domain_error("certified_decimal: negative bound");
  Rational lo = value.lo_rational() - total_error;
  Rational hi = value.hi_rational() + total_error;
  CertifiedDecimal out;
  // A digit position is certified when both endpoints truncate to the same
  // prefix there; scan down from full precision to the integer part. Floor
  // agreement at a fine scale implies agreement at every coarser scale, so a
  // max_digits cap only shortens the printed text, never changes soundness.
  int start = value.frac_digits();
  if (max_digits >= 0 && max_digits < start) start = max_digits;
  for (int d = start; d >= 0; --d) {
    Int fl = floor_scaled(lo, d);
    Int fh = floor_scaled(hi, d);
    if (fl == fh) {
      out.digits = d;
      out.text = render_floor(fl, d);
      return out;
    }
  }
  out.digits = -1;
  out.text = "";
  return out;
}

std::string bound_sci_str(const Rational& bound) {
  if (bound.sign() < 0) throw std::domain_error("bound_sci_str: negative bound");
  if (bound.is_zero()) return "0";
  // Find e with 10^e <= bound < 10^(e+1) by digit counts, then round the
  // two-digit mantissa upward so the printed number still bounds.
  int e = dec_digit_count(bound.num()) - dec_digit_count(bound.den());
  Rational probe = Rational(pow10(std::abs(e)), 1);
  Rational scaled = e >= 0 ? bound / probe : bound * probe;
  if (scaled >= Rational(10)) ++e;
  if (scaled < Rational(1)) --e;
  // mantissa2 = ceil(bound / 10^(e-1)) in [10, 100]
  Int mantissa2;
  if (e >= 1) {
    mantissa2 = ceil_div_nonneg(bound.num(), bound.den() * pow10(e - 1));
  } else {
    mantissa2 = ceil_div_nonneg(bound.num() * pow10(1 - e), bound.den());
  }
  if (mantissa2 > 99) {
    mantissa2 = 10;
    ++e;
  }
  std::string digits = mantissa2.str();
  std::string s;
  s += digits[0];
  s += '.';
  s += digits[1];
  s += 'e';
  if (e >= 0) s += '+';
  s += std::to_string(e);
  return s;
}

}  // namespace cotpi
