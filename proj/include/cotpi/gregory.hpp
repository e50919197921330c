#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cotpi/fixed.hpp"
#include "cotpi/rational.hpp"

namespace cotpi {

// Exact-rational study of the alternating series
//   pi/4 = 1 - 1/3 + 1/5 - 1/7 + ...
// and of two rearrangements: pairing consecutive terms after the first,
//   pi/4 = 1 - 2 sum_{n>=1} 1/((4n)^2 - 1),
// and regrouping by residue mod 3, which isolates the lone terms
// (-1)^j / (3 (2j-1)) and the pairs (-1)^(n+1) * 2/((6n)^2 - 1).

// Partial sum of the alternating series through term index N (so N+1
// terms, indices 0..N).
Rational leibniz_partial(std::uint64_t N);

// 1 - 2 sum_{n=1..N} 1/((4n)^2 - 1); pairing of leibniz_partial(2N).
Rational paired_partial(std::uint64_t N);

struct RearrangementReport {
  std::uint64_t cut_index = 0;
  Rational lhs;  // paired_partial(N)
  Rational rhs;  // leibniz_partial(2N)
  bool equal = false;
};

// Exact equality of the pairing at one cut.
RearrangementReport telescoping_check(std::uint64_t N);

struct SweepResult {
  std::uint64_t checked = 0;
  bool all_equal = false;
  std::uint64_t first_unequal = 0;  // meaningful only when !all_equal
};

// telescoping_check for every N in [0, N_max], over one shared denominator
// so the scan stays integer-only. perturb_at != 0 injects an off-by-one
// into the paired numerator at that N (test hook; the sweep must flag it).
SweepResult telescoping_sweep(std::uint64_t N_max, std::uint64_t perturb_at = 0);

// Partial sum of the mod-3 regrouped series through `cut` printed terms
// (leading 1, then lone and pair terms alternating).
Rational twinform_partial(std::uint64_t cut);

// Index of the last alternating-series term covered after `cut` printed
// terms of the regrouped series; twinform_partial(cut) ==
// leibniz_partial(twinform_gl_index(cut)) whenever the regrouped prefix
// closes a whole alternating prefix (it does at every cut).
std::uint64_t twinform_gl_index(std::uint64_t cut);

struct TwinformIdentityReport {
  bool ok = false;
  bool closed_form_ok = false;  // (sqrt3/2)(1 - 2 S_6) meets pi/4
  bool series_limit_ok = false;  // 1 - 2 S_4 meets pi/4
  bool bracket_ok = false;       // alternating partials bracket pi/4
  Fixed closed_form_value;
  Fixed series_limit_value;
  Fixed pi_quarter;
};

// Value-level check that both rearranged limits and the alternating
// bracket agree with pi/4 at p digits.
TwinformIdentityReport twinform_identity_check(int p);

// All twin prime pairs (q, q+2) with q + 2 <= limit, ascending. Every pair
// except (3, 5) has the form (6n - 1, 6n + 1), so their products are the
// 36 n^2 - 1 denominators of the pair terms above; (3, 5) never appears
// because 3 is not 6n - 1 for any n >= 1.
std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_prime_pairs(std::uint64_t limit);

}  // namespace cotpi
