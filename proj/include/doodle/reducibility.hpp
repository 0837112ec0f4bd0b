#ifndef DOODLE_REDUCIBILITY_HPP
#define DOODLE_REDUCIBILITY_HPP

#include <memory>
#include <set>
#include <utility>

#include "doodle/gauss_code.hpp"

namespace doodle {

using SymbolPair = std::pair<int, int>;

/// Numeric adjacency patterns certifying 1- and 2-reducibility on n letters.
///
/// a1 holds the kink pairs (2j-1, 2j) and (2j, 2j-1). a2 holds pairs of
/// adjacent pairs built from every ordered (a, b), a != b, in 1..n:
///   ((2a-1, 2b), (2a, 2b-1)),
///   ((2a-1, 2b), (2b-1, 2a)),
///   ((2a, 2b-1), (2b, 2a-1)).
/// |a1| = 2n and |a2| = 3n(n-1).
struct PatternSets {
  int n = 0;
  std::set<SymbolPair> a1;
  std::set<std::pair<SymbolPair, SymbolPair>> a2;
};

PatternSets make_pattern_sets(int n);

/// Memoized make_pattern_sets; safe to call concurrently.
std::shared_ptr<const PatternSets> pattern_sets(int n);

/// Some cyclically adjacent pair (x_i, x_{i+1}) is ((j,L),(j,R)) or ((j,R),(j,L)).
bool is_1_reducible(const GaussCode& code);

/// Two cyclically adjacent pairs of the code form an element of a2.
bool is_2_reducible(const GaussCode& code);
bool is_2_reducible(const GaussCode& code, const PatternSets& sets);

/// 1-irreducible and 2-irreducible.
bool is_minimal(const GaussCode& code);
bool is_minimal(const GaussCode& code, const PatternSets& sets);

}  // namespace doodle

#endif  // DOODLE_REDUCIBILITY_HPP
