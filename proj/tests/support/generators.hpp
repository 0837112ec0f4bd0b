#ifndef DOODLE_TESTS_GENERATORS_HPP
#define DOODLE_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doodle/gauss_code.hpp"
#include "doodle/normal_forms.hpp"

namespace support {

inline doodle::GaussCode code_of(const std::vector<int>& numbers) { return doodle::GaussCode(numbers); }

inline std::vector<doodle::GaussCode> codes_of(const std::vector<std::vector<int>>& tuples) {
  std::vector<doodle::GaussCode> out;
  for (const auto& t : tuples) out.emplace_back(t);
  return out;
}

/// Uniform over all (2n)! Gauss codes on n letters.
inline doodle::GaussCode random_code(std::mt19937& rng, int n) {
  std::vector<int> seq(2 * n);
  std::iota(seq.begin(), seq.end(), 1);
  std::shuffle(seq.begin(), seq.end(), rng);
  return doodle::GaussCode(seq);
}

inline doodle::GaussCode random_lp(std::mt19937& rng, int n) { return doodle::proj_lp(random_code(rng, n)); }

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline int random_n(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Every Gauss code on n letters, in ascending order.
inline std::vector<doodle::GaussCode> all_codes(int n) {
  std::vector<int> seq(2 * n);
  std::iota(seq.begin(), seq.end(), 1);
  std::vector<doodle::GaussCode> out;
  do {
    out.emplace_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

/// Left preferred codes found by filtering every Gauss code.
inline std::vector<doodle::GaussCode> all_lp_by_filter(int n) {
  std::vector<doodle::GaussCode> out;
  for (auto& w : all_codes(n)) {
    if (doodle::is_left_preferred(w)) out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace support

#endif  // DOODLE_TESTS_GENERATORS_HPP
