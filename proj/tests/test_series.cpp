#include <string>

#include <doctest.h>

#include "cotpi/errors.hpp"
#include "cotpi/pi_engine.hpp"
#include "cotpi/series.hpp"

using cotpi::Fixed;
using cotpi::Int;
using cotpi::Rational;
using cotpi::SeriesResult;
using cotpi::SkMethod;

namespace {

// 30-digit truncations of S_k, written without their leading zeros; with
// interval widths >= 1e-20 everywhere in these tests the 1e-30 truncation
// slack never matters.
Rational frozen_sk(long k) {
  auto r = [](const char* numerator) {
    return Rational(Int(numerator), cotpi::pow10(30));
  };
  switch (k) {
    case 2: return Rational(1, 2);
    case 3: return r("197700105960963691567653623726");
    case 4: return r("107300918301275845192169577090");
    case 5: return r("67596867011395016384408967070");
    case 6: return r("46550158941445537351480435589");
    case 12: return r("11475691671573332137186602521");
    case 24: return r("2859055853921023979424569008");
    case 48: return r("714151049012813495081230442");
    default: return Rational(0);
  }
}

}  // namespace

TEST_CASE("sk_direct at k=2 telescopes to N/(2N+1)") {
  SeriesResult r = cotpi::sk_direct(2, 10, Fixed(Int(1), 4));
  Int N(static_cast<long long>(r.terms_used));
  // value's own interval covers the truncated partial sum
  CHECK(cotpi::fx_contains(r.value, Rational(N, 2 * N + 1)));
  // widened() covers the limit 1/2
  CHECK(cotpi::fx_contains(r.widened(), Rational(1, 2)));
  CHECK(r.method == SkMethod::direct);
}

TEST_CASE("sk_direct 8-digit run against frozen digits") {
  SeriesResult r = cotpi::sk_direct(12, 8);
  CHECK(cotpi::fx_contains(r.widened(), frozen_sk(12)));
  cotpi::CertifiedDecimal cd = cotpi::certified_decimal(r.widened(), Rational(0));
  // tail target is half an output ulp but the final rescale costs 2 more,
  // so certification can stop one digit short of p
  CHECK(cd.digits >= 6);
  CHECK(cd.text == std::string("0.0114756916715733321371866025214").substr(0, cd.text.size()));
  CHECK(r.total_error_rational() <= Rational(3, cotpi::pow10(8)));
}

TEST_CASE("sk_direct pins 8 printed digits under a tighter target") {
  // 0.25e-8 total stays below S_24's 0.58e-8 clearance above its 8-digit
  // truncation boundary, so the stored value truncates to the printed
  // prefix
  SeriesResult r = cotpi::sk_direct(24, 14, Fixed(Int(25), 10));
  CHECK(r.value.str().substr(0, 10) == "0.00285905");
  CHECK(r.total_error_rational() <= Rational(26, cotpi::pow10(10)));
  CHECK(cotpi::fx_contains(r.widened(), frozen_sk(24)));
}

TEST_CASE("sk_direct term count follows the tail bound") {
  // N = ceil((4/3) / (k^2 eps)) with k=7, eps=1e-6
  SeriesResult r = cotpi::sk_direct(7, 8, Fixed(Int(1), 6));
  CHECK(r.terms_used == 27211);
  CHECK(r.total_error_rational() >= Rational(4, Int(3) * 49 * 27211));

  // larger target, tiny N: ceil((4/3) / (100 * 1e-3)) = 14
  SeriesResult small = cotpi::sk_direct(10, 6, Fixed(Int(1), 3));
  CHECK(small.terms_used == 14);
}

TEST_CASE("direct summation is chunk-invariant") {
  int P = 20;
  Int whole = cotpi::detail::sk_direct_scaled_sum(5, P, 1, 1001);
  Int parts = cotpi::detail::sk_direct_scaled_sum(5, P, 1, 301) +
              cotpi::detail::sk_direct_scaled_sum(5, P, 301, 701) +
              cotpi::detail::sk_direct_scaled_sum(5, P, 701, 1001);
  CHECK(whole == parts);
}

TEST_CASE("sk_direct argument validation") {
  CHECK_THROWS_AS(cotpi::sk_direct(1, 8), std::domain_error);
  CHECK_THROWS_AS(cotpi::sk_direct(0, 8), std::domain_error);
  CHECK_THROWS_AS(cotpi::sk_direct(4, 0), std::domain_error);
  CHECK_THROWS_AS(cotpi::sk_direct(4, 8, Fixed(Int(0), 4)), std::domain_error);
  CHECK_THROWS_AS(cotpi::sk_direct(4, 8, Fixed(Int(-1), 4)), std::domain_error);
}

TEST_CASE("sk_direct resource cap names the cap") {
  try {
    cotpi::sk_direct(2, 12, Fixed(Int(1), 12), 1000);
    FAIL("expected resource_error");
  } catch (const cotpi::resource_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("cap is 1000") != std::string::npos);
  }
}

TEST_CASE("sk_zeta_series reproduces the 18-digit constants") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);

  SeriesResult r12 = cotpi::sk_zeta_series(12, 20, pi_ref);
  cotpi::CertifiedDecimal cd12 = cotpi::certified_decimal(r12.widened(), Rational(0), 18);
  CHECK(cd12.digits == 18);
  CHECK(cd12.text == "0.011475691671573332");

  SeriesResult r48 = cotpi::sk_zeta_series(48, 20, pi_ref);
  cotpi::CertifiedDecimal cd48 = cotpi::certified_decimal(r48.widened(), Rational(0), 18);
  CHECK(cd48.digits == 18);
  CHECK(cd48.text == "0.000714151049012813");
  CHECK(r48.terms_used < r12.terms_used);  // faster geometric decay at larger k
  CHECK(r48.method == SkMethod::zeta_series);
}

TEST_CASE("sk_zeta_series containment and pi preconditions") {
  Fixed pi_ref = cotpi::pi_reference_digits(40);
  SeriesResult r = cotpi::sk_zeta_series(5, 30, pi_ref);
  CHECK(cotpi::fx_contains(r.widened(), frozen_sk(5)));

  CHECK_THROWS_AS(cotpi::sk_zeta_series(5, 30, Fixed(Int(30), 1, Int(20))), std::domain_error);
  CHECK_THROWS_AS(cotpi::sk_zeta_series(5, 30, Fixed(Int(45), 1)), std::domain_error);
  CHECK_THROWS_AS(cotpi::sk_zeta_series(1, 30, pi_ref), std::domain_error);
}

TEST_CASE("sk_closed_form reproduces the 18-digit constants") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);
  const struct { long k; const char* text; } cases[] = {
      {4, "0.107300918301275845"},
      {6, "0.046550158941445537"},
      {24, "0.002859055853921023"},
  };
  for (const auto& c : cases) {
    SeriesResult r = cotpi::sk_closed_form(c.k, 20, pi_ref);
    cotpi::CertifiedDecimal cd = cotpi::certified_decimal(r.widened(), Rational(0), 18);
    CHECK(cd.digits == 18);
    CHECK(cd.text == c.text);
    CHECK(r.method == SkMethod::closed_form);
  }
}

TEST_CASE("sk_closed_form carries 30+ digits when asked") {
  Fixed pi_ref = cotpi::pi_reference_digits(50);
  SeriesResult r = cotpi::sk_closed_form(3, 40, pi_ref);
  cotpi::CertifiedDecimal cd = cotpi::certified_decimal(r.widened(), Rational(0), 30);
  CHECK(cd.digits == 30);
  CHECK(cd.text == "0.197700105960963691567653623726");
}

TEST_CASE("three routes agree pairwise") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);
  for (long k : {2L, 3L, 5L}) {
    // 1e-6 target keeps the direct term count small at these k
    SeriesResult direct = cotpi::sk_direct(k, 8, Fixed(Int(1), 6));
    SeriesResult zeta = cotpi::sk_zeta_series(k, 16, pi_ref);
    SeriesResult closed = cotpi::sk_closed_form(k, 16, pi_ref);
    Fixed wd = direct.widened(), wz = zeta.widened(), wc = closed.widened();
    CHECK(cotpi::fx_overlap(wz, wc));
    // the tighter intervals must land inside the looser one
    CHECK(cotpi::fx_contains_interval(wd, wz));
    CHECK(cotpi::fx_contains_interval(wd, wc));
  }
}

TEST_CASE("total_error never under-reports the value's own bound") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);
  SeriesResult a = cotpi::sk_direct(6, 8);
  SeriesResult b = cotpi::sk_zeta_series(6, 18, pi_ref);
  SeriesResult c = cotpi::sk_closed_form(6, 18, pi_ref);
  for (const SeriesResult* r : {&a, &b, &c}) {
    CHECK(r->total_error_rational() >= r->value.error_rational());
    CHECK(r->terms_used >= 1);
  }
}

TEST_CASE("cot partial-fraction residual stays under its tail bound") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);
  Rational x(1, 3);
  std::uint64_t N = 1000;
  Fixed res = cotpi::cot_partial_fraction_residual(x, N, 12, pi_ref);
  Rational bound = Rational(2) * x / (Rational(Int(static_cast<long long>(N))) - x);
  CHECK(res.hi_rational() <= bound);
  CHECK(res.hi_rational() >= Rational(0));
}

TEST_CASE("cot partial-fraction residual rejects bad arguments") {
  Fixed pi_ref = cotpi::pi_reference_digits(30);
  CHECK_THROWS_AS(cotpi::cot_partial_fraction_residual(Rational(1), 100, 10, pi_ref),
                  std::domain_error);
  CHECK_THROWS_AS(cotpi::cot_partial_fraction_residual(Rational(7, 6), 100, 10, pi_ref),
                  std::domain_error);
  CHECK_THROWS_AS(cotpi::cot_partial_fraction_residual(Rational(-1, 3), 100, 10, pi_ref),
                  std::domain_error);
  CHECK_THROWS_AS(cotpi::cot_partial_fraction_residual(Rational(1, 3), 0, 10, pi_ref),
                  std::domain_error);
}
