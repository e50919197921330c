#include <stdexcept>
#include <string>

#include "cotpi/errors.hpp"
#include "cotpi/trig.hpp"

namespace cotpi {

namespace {

// Shared driver for sine and cosine. Terms are generated by multiplying
// with -x^2 / (c (c+1)) for ascending c, so each is exact up to tracked
// ulps; an omitted first term bounds the alternating tail because term
// magnitudes decrease once |x| <= 2.
Fixed sincos_taylor(const Fixed& x, int p, bool want_sin) {
  if (p < 1) throw std::domain_error("sincos: p must be >= 1");
  Int abs_hi = abs(x.mantissa()) + x.err_ulps();
  if (abs_hi > 2 * pow10(x.frac_digits())) {
    throw std::domain_error("sincos: |x| must be <= 2");
  }
  int P = p + guard_digits(64);
  Fixed X = fx_rescale(x, P);
  Fixed X2 = fx_mul(X, X);
  Fixed term = want_sin ? X : Fixed::from_int(1, P);
  Fixed sum = term;
  long c = want_sin ? 2 : 1;
  bool subtract = true;
  for (;;) {
    term = fx_mul(term, X2);
    term = fx_div_int(term, Int(c) * (c + 1));
    c += 2;
    Int omitted = abs(term.mantissa()) + term.err_ulps();
    if (omitted <= 4 || term.mantissa() == 0) {
      // The term has shrunk to the rounding floor (err_ulps never drops
      // below the per-step truncation, so waiting for <= 1 would spin).
      // True terms decrease in magnitude throughout, so the whole
      // alternating tail is covered by this first omitted term's bound.
      if (omitted != 0) sum = Fixed(sum.mantissa(), P, sum.err_ulps() + omitted);
      break;
    }
    sum = subtract ? fx_sub(sum, term) : fx_add(sum, term);
    subtract = !subtract;
  }
  return fx_rescale(sum, p);
}

}  // namespace

Fixed sin_taylor(const Fixed& x, int p) { return sincos_taylor(x, p, true); }

Fixed cos_taylor(const Fixed& x, int p) { return sincos_taylor(x, p, false); }

namespace detail {

CotResult cot_laurent_impl(const Fixed& x, int P, std::uint64_t m_max) {
  Rational lo = x.lo_rational();
  Rational hi = x.hi_rational();
  if (lo.sign() <= 0 || hi >= Rational(355, 113)) {
    throw std::domain_error("cot_laurent: x must lie in (0, pi)");
  }
  // Q(m+1) x^2 / Q(m) <= (x/3)^2 (the coefficient ratio tends to 1/pi^2
  // from below and stays under 1/9), so the tail after term m is at most
  // t_m r / (1 - r) with r = (hi/3)^2.
  Rational r = rat_pow(hi / Rational(3), 2);
  if (r >= Rational(1)) {
    throw resource_error("cot_laurent: no tail bound for x >= 3");
  }
  Rational ulp(Int(1), pow10(P));
  Fixed one = Fixed::from_int(1, P);
  Fixed X = fx_rescale(x, P);
  Fixed X2 = fx_mul(X, X);
  Fixed sum = fx_div(one, X);
  // Terms advance by the exact coefficient ratio, term_{m+1} =
  // term_m * x^2 * Q(m+1)/Q(m), so every loop quantity stays below 1 and
  // the tracked error contracts instead of compounding through x^(2m-1).
  Rational q_prev = Rational(2) * zeta_coeff(1);
  Fixed term = fx_mul(fx_from_rational(q_prev, P), X);  // 2 Q(1) x = x/3
  std::uint64_t m = 1;
  for (;;) {
    sum = fx_sub(sum, term);
    Rational term_hi = fx_abs(term).hi_rational();
    Rational tail = term_hi * r / (Rational(1) - r);
    if (tail <= ulp || term.mantissa() == 0) {
      // Either the tail cleared one ulp, or the term mantissa underflowed
      // and only the rounding-floor error is left; in both cases the
      // remaining true tail is covered by ceil(tail) ulps.
      Int fold = ceil_div_nonneg(tail.num() * pow10(P), tail.den());
      if (fold < 1) fold = 1;
      sum = Fixed(sum.mantissa(), P, sum.err_ulps() + fold);
      break;
    }
    if (m >= m_max) {
      throw resource_error("cot_laurent: tail bound not reached within " +
                           std::to_string(m_max) + " terms");
    }
    ++m;
    Rational q = Rational(2) * zeta_coeff(static_cast<int>(m));
    term = fx_mul(term, X2);
    term = fx_mul(term, fx_from_rational(q / q_prev, P));
    q_prev = q;
  }
  return CotResult{sum, m};
}

}  // namespace detail

Fixed cot_laurent(const Fixed& x, int p, std::uint64_t m_max) {
  if (p < 1) throw std::domain_error("cot_laurent: p must be >= 1");
  // Term count scales with p / -log10((x/3)^2); the guard covers the worst
  // usable x comfortably.
  int P = p + guard_digits(100000);
  return fx_rescale(detail::cot_laurent_impl(x, P, m_max).value, p);
}

}  // namespace cotpi
