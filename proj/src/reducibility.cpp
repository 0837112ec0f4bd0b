#include "doodle/reducibility.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace doodle {

PatternSets make_pattern_sets(int n) {
  PatternSets sets;
  sets.n = n;
  for (int j = 1; j <= n; ++j) {
    sets.a1.insert({2 * j - 1, 2 * j});
    sets.a1.insert({2 * j, 2 * j - 1});
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      sets.a2.insert({{2 * a - 1, 2 * b}, {2 * a, 2 * b - 1}});
      sets.a2.insert({{2 * a - 1, 2 * b}, {2 * b - 1, 2 * a}});
      sets.a2.insert({{2 * a, 2 * b - 1}, {2 * b, 2 * a - 1}});
    }
  }
  return sets;
}

std::shared_ptr<const PatternSets> pattern_sets(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PatternSets>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const PatternSets>(make_pattern_sets(n));
  return slot;
}

bool is_1_reducible(const GaussCode& code) {
  const std::size_t len = code.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int a = code[i];
    const int b = code[(i + 1) % len];
    if ((a + 1) / 2 == (b + 1) / 2) return true;
  }
  return false;
}

bool is_2_reducible(const GaussCode& code) { return is_2_reducible(code, *pattern_sets(code.n())); }

bool is_2_reducible(const GaussCode& code, const PatternSets& sets) {
  if (sets.n != code.n()) {
    throw CodeError(CodeErrorKind::SizeMismatch, "pattern sets for n=" + std::to_string(sets.n) +
                                                     " applied to a code on " + std::to_string(code.n()) + " letters");
  }
  const std::size_t len = code.size();
  // adjacent[a * (len + 1) + b] marks the adjacent pair (a, b)
  std::vector<char> adjacent((len + 1) * (len + 1), 0);
  for (std::size_t i = 0; i < len; ++i) {
    adjacent[code[i] * (len + 1) + code[(i + 1) % len]] = 1;
  }
  auto present = [&](const SymbolPair& p) { return adjacent[p.first * (len + 1) + p.second] != 0; };
  for (const auto& [first, second] : sets.a2) {
    if (present(first) && present(second)) return true;
  }
  return false;
}

bool is_minimal(const GaussCode& code) { return !is_1_reducible(code) && !is_2_reducible(code); }

bool is_minimal(const GaussCode& code, const PatternSets& sets) {
  return !is_1_reducible(code) && !is_2_reducible(code, sets);
}

}  // namespace doodle
