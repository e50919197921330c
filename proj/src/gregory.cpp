#include <stdexcept>

#include "cotpi/errors.hpp"
#include "cotpi/gregory.hpp"
#include "cotpi/pi_engine.hpp"
#include "cotpi/series.hpp"

namespace cotpi {

namespace {

// lcm of all odd integers <= n: product of p^floor(log_p n) over odd
// primes p <= n. Shared denominator for the partial-sum scans, so the
// per-step work is integer division instead of gcd normalization.
Int odd_lcm_through(std::uint64_t n) {
  if (n > 10000000) throw resource_error("odd_lcm_through: bound above sieve budget");
  if (n < 3) return Int(1);
  std::vector<bool> composite(n + 1, false);
  Int d = 1;
  for (std::uint64_t p = 3; p <= n; p += 2) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= n; q += 2 * p) composite[q] = true;
    Int pk = p;
    while (pk * p <= n) pk *= p;
    d *= pk;
  }
  return d;
}

// Alternating-series numerator over denominator D, terms 0..N.
Int leibniz_numerator(const Int& D, std::uint64_t N) {
  Int num = D;
  for (std::uint64_t m = 1; m <= N; ++m) {
    Int term = D / (2 * Int(static_cast<long long>(m)) + 1);
    num += (m & 1) ? -term : term;
  }
  return num;
}

}  // namespace

Rational leibniz_partial(std::uint64_t N) {
  Int D = odd_lcm_through(2 * N + 1);
  return Rational(leibniz_numerator(D, N), D);
}

Rational paired_partial(std::uint64_t N) {
  Int D = odd_lcm_through(4 * N + 1);
  Int num = D;
  for (std::uint64_t n = 1; n <= N; ++n) {
    Int fourn = 4 * Int(static_cast<long long>(n));
    num -= 2 * (D / (fourn * fourn - 1));
  }
  return Rational(num, D);
}

RearrangementReport telescoping_check(std::uint64_t N) {
  RearrangementReport r;
  r.cut_index = N;
  r.lhs = paired_partial(N);
  r.rhs = leibniz_partial(2 * N);
  r.equal = (r.lhs == r.rhs);
  return r;
}

SweepResult telescoping_sweep(std::uint64_t N_max, std::uint64_t perturb_at) {
  // One shared denominator covers every cut, so each step extends two
  // integer numerators and equality is an integer comparison:
  //   paired(N) - paired(N-1)   = -2 D/((4N)^2 - 1)
  //   leibniz(2N) - leibniz(2N-2) = -D/(4N-1) + D/(4N+1)
  Int D = odd_lcm_through(4 * N_max + 1);
  Int num_paired = D;
  Int num_leibniz = D;
  SweepResult out;
  out.all_equal = true;
  for (std::uint64_t N = 0; N <= N_max; ++N) {
    if (N > 0) {
      Int fourn = 4 * Int(static_cast<long long>(N));
      num_paired -= 2 * (D / (fourn * fourn - 1));
      num_leibniz += -(D / (fourn - 1)) + D / (fourn + 1);
    }
    Int probe = (perturb_at != 0 && N == perturb_at) ? num_paired + 1 : num_paired;
    ++out.checked;
    if (probe != num_leibniz) {
      out.all_equal = false;
      out.first_unequal = N;
      break;
    }
  }
  return out;
}

std::uint64_t twinform_gl_index(std::uint64_t cut) {
  if (cut == 0) throw std::domain_error("twinform_gl_index: cut must be >= 1");
  if (cut == 1) return 0;
  if (cut % 2 == 0) return 3 * (cut / 2) - 2;  // ends on a lone term
  return 3 * ((cut - 1) / 2);                  // ends on a pair term
}

Rational twinform_partial(std::uint64_t cut) {
  if (cut == 0) throw std::domain_error("twinform_partial: cut must be >= 1");
  // Printed order: 1, lone_1, pair_1, lone_2, pair_2, ...
  //   lone_j = (-1)^j / (3 (2j - 1)),  pair_n = (-1)^(n+1) 2/((6n)^2 - 1).
  Int D = odd_lcm_through(3 * cut + 1);
  Int num = D;
  for (std::uint64_t t = 2; t <= cut; ++t) {
    std::uint64_t idx = t - 2;
    if (idx % 2 == 0) {
      std::uint64_t j = idx / 2 + 1;
      Int term = D / (3 * (2 * Int(static_cast<long long>(j)) - 1));
      num += (j & 1) ? -term : term;
    } else {
      std::uint64_t n = (idx - 1) / 2 + 1;
      Int sixn = 6 * Int(static_cast<long long>(n));
      Int term = 2 * (D / (sixn * sixn - 1));
      num += (n & 1) ? term : -term;
    }
  }
  return Rational(num, D);
}

TwinformIdentityReport twinform_identity_check(int p) {
  if (p < 1) throw std::domain_error("twinform_identity_check: p must be >= 1");
  if (p > 950) throw std::domain_error("twinform_identity_check: p too large for reference digits");
  int P = p + 12;
  Fixed pi_ref = pi_reference_digits(p + 30);
  Fixed quarter = fx_div_int(fx_rescale(pi_ref, P), Int(4));

  TwinformIdentityReport rep;

  // Pair-regrouped limit: 1 - 2 S_4 should be pi/4.
  SeriesResult s4 = sk_zeta_series(4, P, pi_ref);
  Fixed one = Fixed::from_int(1, P);
  Fixed two = Fixed::from_int(2, P);
  rep.series_limit_value = fx_sub(one, fx_mul(two, fx_rescale(s4.widened(), P)));
  rep.series_limit_ok = fx_overlap(rep.series_limit_value, quarter);

  // Mod-3 regrouped limit: (sqrt3/2)(1 - 2 S_6) should be pi/4.
  SeriesResult s6 = sk_zeta_series(6, P, pi_ref);
  Fixed half_sqrt3 = fx_div_int(fx_sqrt(Fixed::from_int(3, P), P), Int(2));
  rep.closed_form_value =
      fx_mul(half_sqrt3, fx_sub(one, fx_mul(two, fx_rescale(s6.widened(), P))));
  rep.closed_form_ok = fx_overlap(rep.closed_form_value, quarter);

  // Exact alternating partials bracket the limit: even cuts above, odd
  // cuts below.
  std::uint64_t N = 500;
  Rational above = leibniz_partial(2 * N);
  Rational below = leibniz_partial(2 * N + 1);
  rep.bracket_ok = (below < quarter.lo_rational()) && (quarter.hi_rational() < above);

  rep.pi_quarter = fx_rescale(quarter, p);
  rep.series_limit_value = fx_rescale(rep.series_limit_value, p);
  rep.closed_form_value = fx_rescale(rep.closed_form_value, p);
  rep.ok = rep.series_limit_ok && rep.closed_form_ok && rep.bracket_ok;
  return rep;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_prime_pairs(std::uint64_t limit) {
  if (limit > 100000000) throw resource_error("twin_prime_pairs: limit above sieve budget");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (limit < 7) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  // Every pair except (3,5) is (6n-1, 6n+1); 3 is never 6n-1, so scanning
  // n covers exactly the pairs whose product is 36n^2 - 1.
  for (std::uint64_t n = 1; 6 * n + 1 <= limit; ++n) {
    std::uint64_t a = 6 * n - 1, b = 6 * n + 1;
    if (!composite[a] && !composite[b]) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace cotpi
