#include <stdexcept>
#include <string>

#include "cotpi/errors.hpp"
#include "cotpi/series.hpp"
#include "cotpi/trig.hpp"

namespace cotpi {

namespace {

void check_sk_args(long k, int p) {
  if (k < 2) throw std::domain_error("sk: k must be >= 2");
  if (p < 1) throw std::domain_error("sk: p must be >= 1");
}

void check_pi_approx(const Fixed& pi_approx) {
  // Loose plausibility gate; the interval itself carries the real bound.
  if (pi_approx.lo_rational() <= Rational(3) || pi_approx.hi_rational() >= Rational(4)) {
    throw std::domain_error("sk: pi_approx must lie in (3, 4)");
  }
}

}  // namespace

SeriesResult sk_zeta_series(long k, int p, const Fixed& pi_approx, std::uint64_t m_cap) {
  check_sk_args(k, p);
  check_pi_approx(pi_approx);

  // S_k = sum_{m>=1} zeta(2m)/k^(2m) and zeta(2m) < 2, so the tail after M
  // terms is under 2 r^(M+1)/(1-r) with r = 1/k^2. Stop at half an output
  // ulp.
  Rational r(Int(1), Int(k) * k);
  Rational one_minus_r = Rational(1) - r;
  Rational eps(Int(1), 2 * pow10(p));
  std::uint64_t M = 1;
  Rational rpow = r * r;  // r^(M+1)
  while (Rational(2) * rpow / one_minus_r > eps) {
    ++M;
    rpow = rpow * r;
    if (M > m_cap) {
      throw resource_error("sk_zeta_series: term cap " + std::to_string(m_cap) + " reached");
    }
  }

  int P = p + guard_digits(M);
  Fixed x = fx_div_int(fx_rescale(pi_approx, P), Int(k));  // pi/k
  Fixed x2 = fx_mul(x, x);
  Fixed sum = Fixed(Int(0), P);
  // Advance by the coefficient ratio so each term is formed from bounded
  // factors; building (pi/k)^(2m) separately lets its rounding error grow
  // with the power for k = 2, 3 where pi/k > 1.
  Rational q_prev = zeta_coeff(1);
  Fixed term = fx_mul(fx_from_rational(q_prev, P), x2);  // Q(1) (pi/k)^2
  for (std::uint64_t m = 1; m <= M; ++m) {
    sum = fx_add(sum, term);
    if (m < M) {
      Rational q = zeta_coeff(static_cast<int>(m + 1));
      term = fx_mul(term, x2);
      term = fx_mul(term, fx_from_rational(q / q_prev, P));
      q_prev = q;
    }
  }

  Fixed value = fx_rescale(sum, p);
  Rational tail = Rational(2) * rpow / one_minus_r;
  Rational total = value.error_rational() + tail;
  return SeriesResult{value, fx_bound_from_rational(total, P), M, SkMethod::zeta_series};
}

SeriesResult sk_closed_form(long k, int p, const Fixed& pi_approx) {
  check_sk_args(k, p);
  check_pi_approx(pi_approx);

  int P = p + guard_digits(1000);
  Fixed x = fx_div_int(fx_rescale(pi_approx, P), Int(k));  // pi/k in (0, pi/2]
  detail::CotResult cot = detail::cot_laurent_impl(x, P, 100000);
  // S_k = (1 - x cot x)/2; the cotangent tail is already inside cot.err.
  Fixed s = fx_div_int(fx_sub(Fixed::from_int(1, P), fx_mul(x, cot.value)), Int(2));
  Fixed value = fx_rescale(s, p);
  return SeriesResult{value, fx_bound_from_rational(value.error_rational(), P), cot.terms_used,
                      SkMethod::closed_form};
}

Fixed cot_partial_fraction_residual(const Rational& x, std::uint64_t N, int p,
                                    const Fixed& pi_approx) {
  if (p < 1) throw std::domain_error("cot_partial_fraction_residual: p must be >= 1");
  if (x.sign() <= 0 || x >= Rational(1)) {
    throw std::domain_error("cot_partial_fraction_residual: x must lie in (0, 1)");
  }
  if (N < 1) throw std::domain_error("cot_partial_fraction_residual: N must be >= 1");
  check_pi_approx(pi_approx);

  int P = p + guard_digits(N);
  // LHS: pi cot(pi x).
  Fixed pi_P = fx_rescale(pi_approx, P);
  Fixed pix = fx_mul(pi_P, fx_from_rational(x, P));
  Fixed lhs = fx_mul(pi_P, cot_laurent(pix, P));

  // RHS: 1/x + 2x sum_{n=1..N} 1/(x^2 - n^2). Each term is a small exact
  // rational, truncated once into the shared scale: one ulp per term.
  Int acc = 0;
  Int scale = pow10(P);
  Rational x2 = x * x;
  for (std::uint64_t n = 1; n <= N; ++n) {
    Int nn = Int(static_cast<long long>(n));
    Rational t = Rational(Int(1)) / (x2 - Rational(nn * nn));
    acc += t.num() * scale / t.den();
  }
  Fixed sum(acc, P, Int(N));
  Fixed rhs = fx_add(fx_from_rational(Rational(1) / x, P),
                     fx_mul(fx_from_rational(Rational(2) * x, P), sum));

  return fx_rescale(fx_abs(fx_sub(lhs, rhs)), p);
}

}  // namespace cotpi
