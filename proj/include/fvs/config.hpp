#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fvs {

enum class Profile { paper, desk };

std::string_view to_string(Profile p);
// Throws std::invalid_argument for anything but "paper" / "desk".
Profile parse_profile(std::string_view s);

// Numeric constants of the two divide-and-conquer algorithms.
//
// paper: base case n <= 30a, 28a pivot trials, |L| = ceil(n / 6a),
//        terminal base case s <= 30, guessed subsets |Q| <= 30.
// desk:  same trial count and |L| rule, base case n <= 10, s <= 8, |Q| <= 2.
//
// The pivot rejection rule d < n/(18a) + 1/(4a) - 1/2 is fixed and evaluated
// in integers (see below_pivot_threshold).
struct AlgoConfig {
  Profile profile = Profile::desk;
  int base_case_n = 10;
  int repetitions = 28;
  int light_fraction_den = 6;
  int sfvs_base_s = 8;
  int sfvs_subset_cap = 2;
  std::uint64_t rng_seed = 0;

  static AlgoConfig paper(int alpha, std::uint64_t seed = 0);
  static AlgoConfig desk(int alpha, std::uint64_t seed = 0);
  static AlgoConfig for_profile(Profile p, int alpha, std::uint64_t seed = 0);

  // Throws std::invalid_argument unless every count is >= 1 (the subset cap
  // may be 0).
  void validate() const;
};

}  // namespace fvs
