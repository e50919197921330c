#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "cotpi/bigint.hpp"

namespace cotpi {

// Exact rational number. Always normalized: gcd(num, den) == 1, den > 0,
// zero is 0/1. Normalization happens on construction, so every value a
// caller can observe is canonical.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int num, Int den);  // throws std::domain_error if den == 0

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
  bool is_integer() const { return den_ == 1; }

  std::string str() const;  // "n" or "n/d"

 private:
  Int num_;
  Int den_;
};

Rational operator-(const Rational& a);
Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

// Comparisons are exact (cross multiplication).
int rat_cmp(const Rational& a, const Rational& b);
inline bool operator==(const Rational& a, const Rational& b) { return rat_cmp(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return rat_cmp(a, b) != 0; }
inline bool operator<(const Rational& a, const Rational& b) { return rat_cmp(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return rat_cmp(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return rat_cmp(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return rat_cmp(a, b) >= 0; }

Rational rat_abs(const Rational& a);
Rational rat_pow(const Rational& a, unsigned e);

// Shared table of Bernoulli numbers, factorials and binomials. Safe for
// concurrent readers; growth is serialized internally.
class BernoulliTable {
 public:
  // B_n for any n >= 0, B_1 = -1/2 convention.
  Rational bernoulli_any(int n);

  Int factorial(int n);
  Int binomial(int n, int k);

 private:
  void grow_locked(int n);

  std::mutex mu_;
  std::vector<Rational> bern_;
  std::vector<Int> fact_;
};

BernoulliTable& shared_bernoulli_table();

// B_{two_m} for even two_m >= 0; odd or negative index is a domain error.
Rational bernoulli(int two_m);

// Coefficient Q(m) in zeta(2m) = Q(m) * pi^(2m), m >= 1:
//   Q(m) = 2^(2m-1) * |B_{2m}| / (2m)!
Rational zeta_coeff(int m);

}  // namespace cotpi
