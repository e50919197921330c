#pragma once

#include <cstdint>

#include "cotpi/fixed.hpp"

namespace cotpi {

// Maclaurin sine for |x| <= 2. Alternating-series truncation: stops when
// the next term is below one internal ulp and folds it into the bound.
Fixed sin_taylor(const Fixed& x, int p);

// Maclaurin cosine for |x| <= 2, same truncation rule.
Fixed cos_taylor(const Fixed& x, int p);

// Cotangent on (0, pi) via the Laurent series
//   cot x = 1/x - 2 sum_{m>=1} Q(m) x^(2m-1).
// Term ratios are <= (x/3)^2, which yields the geometric tail bound used
// for truncation; x with upper bound >= 3 is therefore a resource error
// even though the series converges up to pi.
Fixed cot_laurent(const Fixed& x, int p, std::uint64_t m_max = 100000);

namespace detail {
// cot at full internal precision plus the term count, for callers that
// need to report work done.
struct CotResult {
  Fixed value;
  std::uint64_t terms_used = 0;
};
CotResult cot_laurent_impl(const Fixed& x, int P, std::uint64_t m_max);
}  // namespace detail

// One rung of the half-angle ladder: theta_j = pi / (6 * 2^j), with
// cos(theta_0) = sqrt(3)/2 and sin(theta_0) = 1/2 as the pi-free anchor.
// Each descent takes the positive square roots
//   sin(theta/2) = sqrt((1 - cos theta)/2),
//   cos(theta/2) = sqrt((1 + cos theta)/2),
// carrying cosine and sine side by side; tangent is their quotient.
struct LadderRung {
  int j = 0;
  Fixed cos_val;
  Fixed sin_val;
  Fixed tan_val;
};
LadderRung tan_ladder(int j, int p);

// tan(pi / (6 * 2^j)) for j in {1, 2, 3} through the nested-radical forms
//   j=1: 1/(2 + sqrt 3)
//   j=2: (a - b)/(b - 2),               a = 2 sqrt 2, b = 1 + sqrt 3
//   j=3: sqrt(2a/(a - b)) - (b - 2)/(a - b)
// Kept separate from tan_ladder so the two derivations can be compared.
Fixed eval_radical_tan_expr(int j, int p);

}  // namespace cotpi
