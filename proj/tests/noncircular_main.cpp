#include <iostream>

#include "cotpi/pi_engine.hpp"

// Linking this binary against the core library alone demonstrates that the
// single-shot route reaches pi without any component that consumes pi: the
// ladder tangent anchors on sqrt(3)/2 and 1/2, the series is summed term by
// term, and nothing else is available at link time. The checks below then
// confirm the route actually lands on pi.

int main() {
  using cotpi::Int;

  cotpi::PiResult quick = cotpi::pi_from_sk(0, 4);
  if (quick.value.lo_rational() > cotpi::Rational(Int(31416), Int(10000)) ||
      quick.value.hi_rational() < cotpi::Rational(Int(31415), Int(10000))) {
    std::cout << "FAIL: pi_from_sk(0, 4) = " << quick.value.str() << "\n";
    return 1;
  }

  cotpi::PiResult r = cotpi::pi_from_sk(2, 8);
  // The certified interval must meet [3.14159265, 3.14159266] and be at
  // most a few ulps wide, written out as mantissa brackets so no
  // reference-digit table is consulted.
  Int m = r.value.mantissa();
  Int e = r.value.err_ulps();
  if (e > Int(3) || m + e < Int("314159265") || m - e > Int("314159266")) {
    std::cout << "FAIL: pi_from_sk(2, 8) = " << r.value.str() << " +- " << e.str() << " ulp\n";
    return 1;
  }

  std::cout << "ok: pi_from_sk(2, 8) = " << r.value.str() << ", " << r.route.sk_terms
            << " series terms, ladder depth " << r.route.j << "\n";
  return 0;
}
