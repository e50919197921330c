#include <stdexcept>

#include "cotpi/trig.hpp"

namespace cotpi {

LadderRung tan_ladder(int j, int p) {
  if (j < 0) throw std::domain_error("tan_ladder: j must be >= 0");
  if (j > 60) throw std::domain_error("tan_ladder: j too large");
  if (p < 1) throw std::domain_error("tan_ladder: p must be >= 1");

  // Each halving can lose a digit to the 1 - cos cancellation and the sine
  // shrinks by half per rung, so the internal precision grows with j.
  int P = p + 14 + j;
  Fixed two = Fixed::from_int(2, P);
  Fixed cos_v = fx_div_int(fx_sqrt(Fixed::from_int(3, P), P), Int(2));
  Fixed sin_v = Fixed(pow10(P) / 2, P, Int(0));  // exactly 1/2
  for (int i = 0; i < j; ++i) {
    Fixed one_minus = fx_sub(Fixed::from_int(1, P), cos_v);
    Fixed one_plus = fx_add(Fixed::from_int(1, P), cos_v);
    sin_v = fx_sqrt(fx_div(one_minus, two), P);
    cos_v = fx_sqrt(fx_div(one_plus, two), P);
  }
  Fixed tan_v = fx_div(sin_v, cos_v);
  return LadderRung{j, fx_rescale(cos_v, p), fx_rescale(sin_v, p), fx_rescale(tan_v, p)};
}

Fixed eval_radical_tan_expr(int j, int p) {
  if (p < 1) throw std::domain_error("eval_radical_tan_expr: p must be >= 1");
  if (j < 1 || j > 3) {
    throw std::domain_error("eval_radical_tan_expr: only j in {1, 2, 3} has a stored form");
  }
  int P = p + 16;
  Fixed sqrt2 = fx_sqrt(Fixed::from_int(2, P), P);
  Fixed sqrt3 = fx_sqrt(Fixed::from_int(3, P), P);
  Fixed a = fx_mul(Fixed::from_int(2, P), sqrt2);       // 2 sqrt 2
  Fixed b = fx_add(Fixed::from_int(1, P), sqrt3);       // 1 + sqrt 3
  Fixed result;
  switch (j) {
    case 1:
      result = fx_div(Fixed::from_int(1, P), fx_add(Fixed::from_int(2, P), sqrt3));
      break;
    case 2:
      result = fx_div(fx_sub(a, b), fx_sub(b, Fixed::from_int(2, P)));
      break;
    default: {
      Fixed a_minus_b = fx_sub(a, b);
      Fixed first = fx_sqrt(fx_div(fx_mul(Fixed::from_int(2, P), a), a_minus_b), P);
      Fixed second = fx_div(fx_sub(b, Fixed::from_int(2, P)), a_minus_b);
      result = fx_sub(first, second);
      break;
    }
  }
  return fx_rescale(result, p);
}

}  // namespace cotpi
