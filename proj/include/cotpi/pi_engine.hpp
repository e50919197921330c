#pragma once

#include <cstdint>

#include "cotpi/series.hpp"
#include "cotpi/trig.hpp"

namespace cotpi {

// pi from the identity pi = k tan(pi/k) (1 - 2 S_k), specialized to
// k = 6 * 2^j where tan(pi/k) comes from the half-angle ladder and S_k from
// direct summation. No input of the pipeline depends on pi.

struct PiRoute {
  int j = 0;
  long k = 0;
  SkMethod sk_method = SkMethod::direct;
  int refinement_rounds = 0;
  std::uint64_t sk_terms = 0;
};

struct PiResult {
  Fixed value;        // err_ulps is the complete certified bound
  Fixed total_error;  // same bound as a plain number, for reporting
  PiRoute route;

  Rational total_error_rational() const { return total_error.value_rational(); }
};

// Single-shot route: ladder tangent times (1 - 2 sk_direct(k)). Work grows
// as 10^p / k^2, so large p wants a larger j or the refined route below.
PiResult pi_from_sk(int j, int p);

// Fixed-point refinement pi_{t+1} = k tan(pi/k) (1 - 2 S_k^{zeta}(pi_t)),
// seeded with an 8-digit pi_from_sk value. Each round contracts the error
// by about 2 pi^2 / (3 k^2); iteration stops early once successive
// iterates agree to within one internal ulp. max_rounds == 0 returns the
// seed.
PiResult pi_iterative_refine(int j, int p, int max_rounds);

// First p fractional digits of pi, embedded as verification data. Oracle
// only: no computation path consumes it. p <= 1000.
Fixed pi_reference_digits(int p);

// Consistency check of pi = k tan(pi/k)(1 - 2 S_k) for general k >= 2,
// with tan from the Maclaurin sine and cosine. Circular by design (the
// right side is evaluated at a supplied pi_approx); it exercises the
// identity, it does not establish pi.
Fixed pi_identity_general_k(long k, int p, const Fixed& pi_approx);

}  // namespace cotpi
