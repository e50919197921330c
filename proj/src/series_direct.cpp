#include <stdexcept>
#include <string>

#include "cotpi/errors.hpp"
#include "cotpi/series.hpp"

namespace cotpi {

const char* sk_method_name(SkMethod m) {
  switch (m) {
    case SkMethod::direct:
      return "direct";
    case SkMethod::zeta_series:
      return "zeta_series";
    case SkMethod::closed_form:
      return "closed_form";
  }
  return "?";
}

namespace detail {

Int sk_direct_scaled_sum(long k, int P, std::uint64_t n_begin, std::uint64_t n_end) {
  Int scale = pow10(P);
  Int acc = 0;
  Int kn = Int(k) * static_cast<long long>(n_begin);
  Int step = k;
  for (std::uint64_t n = n_begin; n < n_end; ++n) {
    acc += scale / (kn * kn - 1);
    kn += step;
  }
  return acc;
}

}  // namespace detail

namespace {

void check_sk_args(long k, int p) {
  if (k < 2) throw std::domain_error("sk: k must be >= 2");
  if (p < 1) throw std::domain_error("sk: p must be >= 1");
}

}  // namespace

SeriesResult sk_direct(long k, int p, const Fixed& target_error, std::uint64_t term_cap) {
  check_sk_args(k, p);
  Rational eps = target_error.value_rational();
  if (eps.sign() <= 0) throw std::domain_error("sk_direct: target_error must be positive");

  // Tail after N terms: sum_{n>N} 1/((kn)^2 - 1) <= (4/3) sum_{n>N} 1/(kn)^2
  //   <= (4/3) / (k^2 N),
  // using (kn)^2 - 1 >= (3/4)(kn)^2 for kn >= 2 and the integral bound.
  // N is the least count that pushes this under target_error.
  Int k2 = Int(k) * k;
  Int n_needed = ceil_div_nonneg(Int(4) * eps.den(), Int(3) * k2 * eps.num());
  if (n_needed < 1) n_needed = 1;
  if (n_needed > Int(term_cap)) {
    throw resource_error("sk_direct: " + n_needed.str() + " terms needed, cap is " +
                         std::to_string(term_cap));
  }
  std::uint64_t N = n_needed.convert_to<std::uint64_t>();

  int P = p + guard_digits(N);
  Int acc = detail::sk_direct_scaled_sum(k, P, 1, N + 1);
  // Each term truncated toward zero: at most one ulp lost per term at
  // scale 10^-P.
  Fixed sum_p(acc, P, Int(N));
  Fixed value = fx_rescale(sum_p, p);

  Rational tail(Int(4), Int(3) * k2 * Int(N));
  Rational total = value.error_rational() + tail;
  return SeriesResult{value, fx_bound_from_rational(total, P), N, SkMethod::direct};
}

SeriesResult sk_direct(long k, int p) {
  check_sk_args(k, p);
  // Half an output ulp, so the certified digits normally reach p.
  Fixed half_ulp(Int(5), p + 1, Int(0));
  return sk_direct(k, p, half_ulp);
}

}  // namespace cotpi
