#include <stdexcept>

#include <doctest.h>

#include "cotpi/errors.hpp"
#include "cotpi/pi_engine.hpp"
#include "cotpi/trig.hpp"

using cotpi::Fixed;
using cotpi::Int;
using cotpi::Rational;

namespace {

// v's interval must meet the width-10^(-d) cell that the true value is
// known to occupy. Sound whenever v contains the true value, and pins the
// first d digits.
bool meets_cell(const Fixed& v, const Rational& cell_lo, const Rational& cell_hi) {
  return v.lo_rational() <= cell_hi && cell_lo <= v.hi_rational();
}

// r contains sqrt(s) for positive intervals.
bool contains_sqrt(const Fixed& r, long long s) {
  return r.lo_rational() * r.lo_rational() <= Rational(s) &&
         r.hi_rational() * r.hi_rational() >= Rational(s);
}

Fixed fx_of(const char* mantissa, int p) { return Fixed(Int(mantissa), p); }

}  // namespace

TEST_CASE("sin and cos at zero are exact") {
  Fixed zero = Fixed::from_int(0, 10);
  Fixed s = cotpi::sin_taylor(zero, 10);
  CHECK(s.mantissa() == 0);
  CHECK(s.exact());
  Fixed c = cotpi::cos_taylor(zero, 10);
  CHECK(c.value_rational() == Rational(1));
  CHECK(c.exact());
}

TEST_CASE("taylor values against frozen digits") {
  struct Case {
    bool is_sin;
    const char* x;
    int xp;
    const char* lo10;  // 10-digit truncation of the true value
  };
  const Case cases[] = {
      {true, "5", 1, "4794255386"},    // sin(0.5) = 0.4794255386...
      {false, "5", 1, "8775825618"},   // cos(0.5) = 0.8775825618...
      {true, "10", 1, "8414709848"},   // sin(1)   = 0.8414709848...
      {false, "10", 1, "5403023058"},  // cos(1)   = 0.5403023058...
      {true, "20", 1, "9092974268"},   // sin(2)   = 0.9092974268...
  };
  for (const auto& c : cases) {
    Fixed x = cotpi::fx_rescale(fx_of(c.x, 1), 20);
    Fixed v = c.is_sin ? cotpi::sin_taylor(x, 20) : cotpi::cos_taylor(x, 20);
    Rational cell_lo(Int(c.lo10), cotpi::pow10(10));
    Rational cell_hi = cell_lo + Rational(1, cotpi::pow10(10));
    CHECK(meets_cell(v, cell_lo, cell_hi));
    CHECK(v.err_ulps() <= 100);
  }

  // cos(2) = -0.4161468365..., the one negative case
  Fixed v = cotpi::cos_taylor(cotpi::fx_rescale(fx_of("20", 1), 20), 20);
  CHECK(meets_cell(v, Rational(Int("-4161468366"), cotpi::pow10(10)),
                   Rational(Int("-4161468365"), cotpi::pow10(10))));
}

TEST_CASE("taylor argument domain") {
  CHECK_THROWS_AS(cotpi::sin_taylor(fx_of("25", 1), 10), std::domain_error);
  CHECK_THROWS_AS(cotpi::cos_taylor(fx_of("-25", 1), 10), std::domain_error);
  // |x| = 2 exactly is allowed
  CHECK_NOTHROW(cotpi::sin_taylor(fx_of("20", 1), 8));
  // interval poking above 2 is not
  CHECK_THROWS_AS(cotpi::sin_taylor(Fixed(Int(20), 1, Int(1)), 8), std::domain_error);
}

TEST_CASE("sin^2 + cos^2 contains 1") {
  for (const char* x10 : {"3", "10", "17"}) {
    Fixed x = cotpi::fx_rescale(fx_of(x10, 1), 18);
    Fixed s = cotpi::sin_taylor(x, 18);
    Fixed c = cotpi::cos_taylor(x, 18);
    Fixed sq = cotpi::fx_add(cotpi::fx_mul(s, s), cotpi::fx_mul(c, c));
    CHECK(cotpi::fx_contains(sq, Rational(1)));
  }
}

TEST_CASE("cot at the standard angles") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);

  SUBCASE("cot(pi/4) = 1") {
    Fixed x = cotpi::fx_div_int(cotpi::fx_rescale(pi_ref, 25), Int(4));
    Fixed r = cotpi::cot_laurent(x, 20);
    CHECK(cotpi::fx_contains(r, Rational(1)));
  }

  SUBCASE("cot(pi/6) = sqrt(3)") {
    Fixed x = cotpi::fx_div_int(cotpi::fx_rescale(pi_ref, 25), Int(6));
    CHECK(contains_sqrt(cotpi::cot_laurent(x, 20), 3));
  }

  SUBCASE("cot(pi/3) = 1/sqrt(3)") {
    Fixed x = cotpi::fx_div_int(cotpi::fx_rescale(pi_ref, 25), Int(3));
    Fixed r = cotpi::cot_laurent(x, 20);
    CHECK(r.lo_rational() * r.lo_rational() <= Rational(1, 3));
    CHECK(r.hi_rational() * r.hi_rational() >= Rational(1, 3));
  }
}

TEST_CASE("cot times sin meets cos") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);
  for (const char* x10 : {"7", "13"}) {
    Fixed x = cotpi::fx_rescale(fx_of(x10, 1), 20);
    Fixed prod = cotpi::fx_mul(cotpi::cot_laurent(x, 15), cotpi::sin_taylor(x, 15));
    CHECK(cotpi::fx_overlap(prod, cotpi::cos_taylor(x, 15)));
  }
  (void)pi_ref;
}

TEST_CASE("cot domain and convergence limits") {
  CHECK_THROWS_AS(cotpi::cot_laurent(fx_of("-5", 1), 10), std::domain_error);
  CHECK_THROWS_AS(cotpi::cot_laurent(Fixed(Int(0), 1), 10), std::domain_error);
  CHECK_THROWS_AS(cotpi::cot_laurent(fx_of("32", 1), 10), std::domain_error);
  // inside (0, pi) but beyond the geometric tail's reach
  CHECK_THROWS_AS(cotpi::cot_laurent(fx_of("305", 2), 10), cotpi::resource_error);
}

TEST_CASE("ladder anchor rung") {
  cotpi::LadderRung r = cotpi::tan_ladder(0, 20);
  CHECK(r.j == 0);
  // sin(pi/6) = 1/2 exactly
  CHECK(cotpi::fx_contains(r.sin_val, Rational(1, 2)));
  CHECK(r.sin_val.err_ulps() == 0);
  // cos(pi/6) = sqrt(3)/2
  Fixed twice_cos = cotpi::fx_mul(Fixed::from_int(2, 20), r.cos_val);
  CHECK(contains_sqrt(twice_cos, 3));
  // tan(pi/6) = 1/sqrt(3)
  CHECK(r.tan_val.lo_rational() * r.tan_val.lo_rational() <= Rational(1, 3));
  CHECK(r.tan_val.hi_rational() * r.tan_val.hi_rational() >= Rational(1, 3));
}

TEST_CASE("ladder rung 1 hits tan(pi/12) = 2 - sqrt(3)") {
  cotpi::LadderRung r = cotpi::tan_ladder(1, 20);
  // t = 2 - sqrt(3)  <=>  (2 - t)^2 = 3, decreasing in t
  Rational lo = Rational(2) - r.tan_val.hi_rational();
  Rational hi = Rational(2) - r.tan_val.lo_rational();
  CHECK(lo * lo <= Rational(3));
  CHECK(hi * hi >= Rational(3));
}

TEST_CASE("ladder invariants through j = 10") {
  for (int j = 0; j <= 10; ++j) {
    cotpi::LadderRung r = cotpi::tan_ladder(j, 20);
    CHECK(r.j == j);
    // pythagoras
    Fixed sq = cotpi::fx_add(cotpi::fx_mul(r.cos_val, r.cos_val),
                             cotpi::fx_mul(r.sin_val, r.sin_val));
    CHECK(cotpi::fx_contains(sq, Rational(1)));
    // 0 < tan < 1 and tan = sin/cos within bounds
    CHECK(r.tan_val.value_rational() > Rational(0));
    CHECK(r.tan_val.value_rational() < Rational(1));
    CHECK(cotpi::fx_overlap(r.tan_val, cotpi::fx_div(r.sin_val, r.cos_val)));
  }
}

TEST_CASE("double angle recovers the previous rung") {
  for (int j = 1; j <= 10; ++j) {
    Fixed t = cotpi::tan_ladder(j, 25).tan_val;
    Fixed doubled = cotpi::fx_div(
        cotpi::fx_mul(Fixed::from_int(2, 25), t),
        cotpi::fx_sub(Fixed::from_int(1, 25), cotpi::fx_mul(t, t)));
    CHECK(cotpi::fx_overlap(doubled, cotpi::tan_ladder(j - 1, 25).tan_val));
  }
}

TEST_CASE("radical forms agree with the ladder") {
  for (int j = 1; j <= 3; ++j) {
    Fixed radical = cotpi::eval_radical_tan_expr(j, 30);
    CHECK(cotpi::fx_overlap(radical, cotpi::tan_ladder(j, 30).tan_val));
  }
}

TEST_CASE("radical forms against frozen digits") {
  // tan(pi/12) = 0.2679491924..., tan(pi/24) = 0.1316524975...,
  // tan(pi/48) = 0.0655434628...
  struct Case { int j; const char* lo10; } cases[] = {
      {1, "2679491924"},
      {2, "1316524975"},
      {3, "655434628"},  // leading zero dropped; cell width 1e-10 still
  };
  for (const auto& c : cases) {
    Fixed v = cotpi::eval_radical_tan_expr(c.j, 30);
    Rational cell_lo(Int(c.lo10), cotpi::pow10(10));
    Rational cell_hi = cell_lo + Rational(1, cotpi::pow10(10));
    CHECK(meets_cell(v, cell_lo, cell_hi));
  }

  // j=1 printed form equals 2 - sqrt(3) exactly
  Fixed r1 = cotpi::eval_radical_tan_expr(1, 25);
  Rational lo = Rational(2) - r1.hi_rational();
  Rational hi = Rational(2) - r1.lo_rational();
  CHECK(lo * lo <= Rational(3));
  CHECK(hi * hi >= Rational(3));
}

TEST_CASE("ladder and radical argument validation") {
  CHECK_THROWS_AS(cotpi::tan_ladder(-1, 10), std::domain_error);
  CHECK_THROWS_AS(cotpi::tan_ladder(61, 10), std::domain_error);
  CHECK_THROWS_AS(cotpi::tan_ladder(2, 0), std::domain_error);
  CHECK_THROWS_AS(cotpi::eval_radical_tan_expr(0, 10), std::domain_error);
  CHECK_THROWS_AS(cotpi::eval_radical_tan_expr(4, 10), std::domain_error);
}
