#include <stdexcept>

#include "cotpi/errors.hpp"
#include "cotpi/pi_engine.hpp"

namespace cotpi {

PiResult pi_iterative_refine(int j, int p, int max_rounds) {
  if (j < 0) throw std::domain_error("pi_iterative_refine: j must be >= 0");
  if (j > 40) throw std::domain_error("pi_iterative_refine: j too large");
  if (p < 1) throw std::domain_error("pi_iterative_refine: p must be >= 1");
  if (max_rounds < 0) throw std::domain_error("pi_iterative_refine: max_rounds must be >= 0");
  long k = 6L << j;

  PiResult seed = pi_from_sk(j, 8);
  if (max_rounds == 0) {
    Fixed v = fx_rescale(seed.value, p);
    PiResult out{v, fx_bound_from_rational(v.error_rational(), p + 4), seed.route};
    out.route.refinement_rounds = 0;
    return out;
  }

  int P = p + 12;
  LadderRung rung = tan_ladder(j, P);
  Fixed k_tan = fx_mul(Fixed::from_int(k, P), rung.tan_val);
  Fixed one = Fixed::from_int(1, P);
  Fixed two = Fixed::from_int(2, P);

  Fixed pi_t = fx_widen(fx_rescale(seed.value, P), seed.total_error_rational());
  int rounds = 0;
  std::uint64_t terms = 0;
  for (int t = 1; t <= max_rounds; ++t) {
    SeriesResult s = sk_zeta_series(k, P, pi_t);
    terms = s.terms_used;
    Fixed sk = fx_rescale(s.widened(), P);
    Fixed next = fx_mul(k_tan, fx_sub(one, fx_mul(two, sk)));
    ++rounds;
    Int dm = abs(next.mantissa() - pi_t.mantissa());
    Int de = abs(next.err_ulps() - pi_t.err_ulps());
    if (t > 1 && dm <= 1 && de <= 1) {
      pi_t = next;
      break;
    }
    // The map contracts by ~2 pi^2/(3 k^2) per round; a bound that grows
    // instead means the arithmetic floor has been hit in a bad state.
    if (t > 1 && next.err_ulps() > pi_t.err_ulps() + 2) {
      throw numerical_error("pi_iterative_refine: error bound stopped contracting");
    }
    pi_t = next;
  }

  Fixed value = fx_rescale(pi_t, p);
  return PiResult{value, fx_bound_from_rational(value.error_rational(), P),
                  PiRoute{j, k, SkMethod::zeta_series, rounds, terms}};
}

Fixed pi_identity_general_k(long k, int p, const Fixed& pi_approx) {
  if (k < 2) throw std::domain_error("pi_identity_general_k: k must be >= 2");
  if (p < 1) throw std::domain_error("pi_identity_general_k: p must be >= 1");
  int P = p + 12;
  Fixed x = fx_div_int(fx_rescale(pi_approx, P), Int(k));  // pi/k <= pi/2 < 2
  Fixed tan_x = fx_div(sin_taylor(x, P), cos_taylor(x, P));
  SeriesResult s = sk_zeta_series(k, P, pi_approx);
  Fixed sk = fx_rescale(s.widened(), P);
  Fixed one = Fixed::from_int(1, P);
  Fixed two = Fixed::from_int(2, P);
  Fixed v = fx_mul(Fixed::from_int(k, P), fx_mul(tan_x, fx_sub(one, fx_mul(two, sk))));
  return fx_rescale(v, p);
}

}  // namespace cotpi
