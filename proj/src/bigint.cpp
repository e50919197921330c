#include "cotpi/bigint.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace cotpi {

Int pow10(int n) {
  if (n < 0) throw std::domain_error("pow10: negative exponent");
  static std::mutex mu;
  static std::vector<Int> memo{Int(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n) memo.push_back(memo.back() * 10);
  return memo[static_cast<std::size_t>(n)];
}

Int ceil_div_nonneg(const Int& a, const Int& b) {
  if (a < 0 || b <= 0) throw std::domain_error("ceil_div_nonneg: bad operands");
  return (a + b - 1) / b;
}

Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
  Int q = a / b;  // truncates toward zero
  if (a < 0 && q * b != a) --q;
  return q;
}

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative input");
  if (n == 0) return 0;
  // Newton from above converges monotonically to floor(sqrt(n)).
  unsigned bits = boost::multiprecision::msb(n) + 1;
  Int x = Int(1) << ((bits + 1) / 2);
  for (;;) {
    Int y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

Int isqrt_ceil(const Int& n) {
  Int r = isqrt_floor(n);
  return (r * r == n) ? r : r + 1;
}

int dec_digit_count(const Int& n) {
  Int a = abs(n);
  if (a == 0) return 1;
  // msb gives a two-candidate window; settle it exactly.
  int approx = static_cast<int>((boost::multiprecision::msb(a) + 1) * 301L / 1000L);
  int d = approx < 1 ? 1 : approx;
  while (pow10(d) <= a) ++d;
  while (d > 1 && pow10(d - 1) > a) --d;
  return d;
}

int guard_digits(std::uint64_t max_terms) {
  int g = 10;
  std::uint64_t t = 1;
  while (t < max_terms) {
    t = (t > max_terms / 10) ? max_terms : t * 10;
    ++g;
  }
  return g;
}

}  // namespace cotpi
