#include "cotpi/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace cotpi {

namespace {

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

}  // namespace

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd_int(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational operator-(const Rational& a) { return Rational(-a.num(), a.den()); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num() * b.num(), a.den() * b.den());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num() * b.den(), a.den() * b.num());
}

int rat_cmp(const Rational& a, const Rational& b) {
  Int d = a.num() * b.den() - b.num() * a.den();
  return d == 0 ? 0 : (d < 0 ? -1 : 1);
}

Rational rat_abs(const Rational& a) { return a.num() < 0 ? -a : a; }

Rational rat_pow(const Rational& a, unsigned e) {
  Rational r(1);
  Rational base = a;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

// ---- Bernoulli machinery ----

void BernoulliTable::grow_locked(int n) {
  if (fact_.empty()) fact_.push_back(Int(1));
  while (static_cast<int>(fact_.size()) <= n + 1) {
    fact_.push_back(fact_.back() * static_cast<int>(fact_.size()));
  }
  if (bern_.empty()) bern_.push_back(Rational(1));
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, solved for B_n.
  while (static_cast<int>(bern_.size()) <= n) {
    int m = static_cast<int>(bern_.size());
    Rational acc(0);
    for (int j = 0; j < m; ++j) {
      if (j > 1 && (j & 1)) continue;  // odd B_j vanish past B_1
      Int c = fact_[m + 1] / (fact_[j] * fact_[m + 1 - j]);
      acc = acc + Rational(c) * bern_[j];
    }
    bern_.push_back(acc / Rational(-(m + 1)));
  }
}

Rational BernoulliTable::bernoulli_any(int n) {
  if (n < 0) throw std::domain_error("bernoulli: negative index");
  std::lock_guard<std::mutex> lock(mu_);
  grow_locked(n);
  return bern_[static_cast<std::size_t>(n)];
}

Int BernoulliTable::factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative index");
  std::lock_guard<std::mutex> lock(mu_);
  grow_locked(n);
  return fact_[static_cast<std::size_t>(n)];
}

Int BernoulliTable::binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("binomial: bad arguments");
  std::lock_guard<std::mutex> lock(mu_);
  grow_locked(n);
  return fact_[static_cast<std::size_t>(n)] /
         (fact_[static_cast<std::size_t>(k)] * fact_[static_cast<std::size_t>(n - k)]);
}

BernoulliTable& shared_bernoulli_table() {
  static BernoulliTable table;
  return table;
}

Rational bernoulli(int two_m) {
  if (two_m < 0 || (two_m & 1)) {
    throw std::domain_error("bernoulli: index must be even and nonnegative");
  }
  return shared_bernoulli_table().bernoulli_any(two_m);
}

Rational zeta_coeff(int m) {
  if (m < 1) throw std::domain_error("zeta_coeff: m must be >= 1");
  BernoulliTable& t = shared_bernoulli_table();
  Rational b = t.bernoulli_any(2 * m);
  Int num = (Int(1) << (2 * m - 1)) * abs(b.num());
  Int den = t.factorial(2 * m) * b.den();
  return Rational(num, den);
}

}  // namespace cotpi
