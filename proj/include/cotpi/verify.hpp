#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cotpi {

struct VerifyOptions {
  std::string only;            // run items whose suite matches this prefix
  std::uint64_t n = 0;         // override the default size where one applies
  std::string perturb_item;    // test hook: corrupt this item's expectation
};

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The self-check battery: reference constants, cross-method agreement,
// exact rearrangement sweeps, ladder identities, partial-fraction tail,
// twin primes, pi routes. Items run in a fixed order.
std::vector<VerifyItem> run_verify_battery(const VerifyOptions& opt);

}  // namespace cotpi
