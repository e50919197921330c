#include <stdexcept>
#include <string>

#include "cotpi/errors.hpp"
#include "cotpi/pi_engine.hpp"

namespace cotpi {

PiResult pi_from_sk(int j, int p) {
  if (j < 0) throw std::domain_error("pi_from_sk: j must be >= 0");
  if (j > 40) throw std::domain_error("pi_from_sk: j too large");
  if (p < 1) throw std::domain_error("pi_from_sk: p must be >= 1");
  long k = 6L << j;

  int P = p + 12;
  LadderRung rung = tan_ladder(j, P);

  // pi = k tan(pi/k) (1 - 2 S_k). With k tan(pi/k) < 22/7, an S_k error of
  // eps contributes under 2 * (22/7) * eps to pi; a target of 10^-p / 26
  // for S_k keeps that contribution well under half an output ulp, leaving
  // room for the ladder and product ulps.
  Fixed target = fx_from_rational(Rational(Int(1), Int(26) * pow10(p)), P);
  SeriesResult s;
  try {
    s = sk_direct(k, p + 6, target);
  } catch (const resource_error& e) {
    throw resource_error(std::string(e.what()) +
                         " (try a larger j, or pi_iterative_refine for high precision)");
  }
  Fixed sk = fx_rescale(s.widened(), P);

  Fixed one = Fixed::from_int(1, P);
  Fixed two = Fixed::from_int(2, P);
  Fixed pi_v = fx_mul(Fixed::from_int(k, P), fx_mul(rung.tan_val, fx_sub(one, fx_mul(two, sk))));
  Fixed value = fx_rescale(pi_v, p);
  return PiResult{value, fx_bound_from_rational(value.error_rational(), P),
                  PiRoute{j, k, SkMethod::direct, 0, s.terms_used}};
}

}  // namespace cotpi
