#include "doodle/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "doodle/reducibility.hpp"

namespace doodle {

namespace {

void check_size(int n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  if (n > options.max_n) throw SizeLimitExceeded(n, options.max_n);
  (void)lp_count(n);  // throws std::overflow_error for sizes that cannot be counted
}

/// Partial left preferred code: positions [0, pos) are filled, the next
/// L-symbol to place is `next_l`, and used_r marks placed R-symbols.
struct Prefix {
  std::vector<int> seq;
  std::vector<char> used_r;
  int pos = 1;
  int next_l = 3;

  explicit Prefix(int n) : seq(2 * n, 0), used_r(n + 1, 0) { seq[0] = 1; }
};

bool same_crossing(int a, int b) { return (a + 1) / 2 == (b + 1) / 2; }

/// Depth-first extension in ascending symbol order, so leaves come out in
/// lexicographic order. With `skip_kinks`, branches that already contain a
/// 1-reducible adjacent pair are cut.
template <typename Leaf>
void extend(Prefix& p, int stop_pos, bool skip_kinks, Leaf&& leaf) {
  const int two_n = static_cast<int>(p.seq.size());
  if (p.pos == stop_pos) {
    if (skip_kinks && p.pos == two_n && same_crossing(p.seq.back(), p.seq.front())) return;
    leaf(p);
    return;
  }
  for (int v = 2; v <= two_n; ++v) {
    const bool odd = v % 2 == 1;
    if (odd ? v != p.next_l : p.used_r[v / 2] != 0) continue;
    if (skip_kinks && same_crossing(p.seq[p.pos - 1], v)) continue;
    p.seq[p.pos++] = v;
    if (odd) {
      p.next_l += 2;
    } else {
      p.used_r[v / 2] = 1;
    }
    extend(p, stop_pos, skip_kinks, leaf);
    if (odd) {
      p.next_l -= 2;
    } else {
      p.used_r[v / 2] = 0;
    }
    --p.pos;
  }
}

}  // namespace

std::uint64_t lp_count(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive, got " + std::to_string(n));
  // C(2n-1, n-1) * n! = (2n-1)! / (n-1)! = n (n+1) ... (2n-1)
  std::uint64_t total = 1;
  for (int k = n + 1; k <= 2 * n - 1; ++k) {
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(k), &total)) {
      throw std::overflow_error("lp_count overflows for n = " + std::to_string(n));
    }
  }
  if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(n), &total)) {
    throw std::overflow_error("lp_count overflows for n = " + std::to_string(n));
  }
  return total;
}

void for_each_lp(int n, const std::function<void(const GaussCode&)>& visit, const EnumerationOptions& options) {
  check_size(n, options);
  Prefix root(n);
  extend(root, 2 * n, false, [&](const Prefix& p) { visit(GaussCode::unchecked(p.seq)); });
}

std::vector<GaussCode> enumerate_lp(int n, const EnumerationOptions& options) {
  std::vector<GaussCode> out;
  for_each_lp(n, [&](const GaussCode& w) { out.push_back(w); }, options);
  return out;
}

std::vector<GaussCode> enumerate_minimal(int n, const EnumerationOptions& options) {
  check_size(n, options);
  const int two_n = 2 * n;
  const auto sets = pattern_sets(n);

  // Split the search tree at a shallow depth; every subtree is filtered
  // independently and results are concatenated in prefix order.
  std::vector<Prefix> prefixes;
  {
    Prefix root(n);
    extend(root, std::min(3, two_n), true, [&](const Prefix& p) { prefixes.push_back(p); });
  }

  std::vector<std::vector<GaussCode>> found(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      Prefix p = prefixes[i];
      extend(p, two_n, true, [&](const Prefix& leaf) {
        GaussCode w = GaussCode::unchecked(leaf.seq);
        if (!is_2_reducible(w, *sets)) found[i].push_back(std::move(w));
      });
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, prefixes.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<GaussCode> out;
  for (auto& chunk : found) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

std::string class_name(int n, int k, ClassSign sign) {
  std::string name = "d" + std::to_string(n) + "." + std::to_string(k);
  if (sign == ClassSign::Plus) name += '+';
  if (sign == ClassSign::Minus) name += '-';
  return name;
}

std::optional<std::string> ClassificationTable::oriented_name_of(const GaussCode& lp) const {
  for (const auto& named : oriented_classes) {
    if (named.cls.contains(lp)) return named.name;
  }
  return std::nullopt;
}

ClassificationTable classify_minimal(int n, std::uint64_t lp_total, std::vector<GaussCode> minimal_codes) {
  ClassificationTable table;
  table.n = n;
  table.lp_count = lp_total;
  std::sort(minimal_codes.begin(), minimal_codes.end());
  table.minimal_codes = std::move(minimal_codes);

  // Peel orbits off the smallest remaining code.
  std::set<GaussCode> remaining(table.minimal_codes.begin(), table.minimal_codes.end());
  std::vector<OrientedClassLP> oriented;
  while (!remaining.empty()) {
    OrientedClassLP cls = oriented_class(*remaining.begin());
    for (const auto& member : cls.members) {
      if (remaining.erase(member) == 0) {
        throw std::logic_error("orbit of " + format(cls.canonical) + " leaves the minimal set at " + format(member));
      }
    }
    oriented.push_back(std::move(cls));
  }

  std::map<GaussCode, std::size_t> index_of;
  for (std::size_t i = 0; i < oriented.size(); ++i) index_of.emplace(oriented[i].canonical, i);

  // Pair every oriented class with its reverse.
  struct Pairing {
    GaussCode canonical;
    std::size_t forward;
    std::size_t backward;
  };
  std::vector<Pairing> pairings;
  std::vector<bool> paired(oriented.size(), false);
  for (std::size_t i = 0; i < oriented.size(); ++i) {
    if (paired[i]) continue;
    const GaussCode reverse_canonical = proj_lc(rev_lp(oriented[i].canonical));
    const auto it = index_of.find(reverse_canonical);
    if (it == index_of.end()) {
      throw std::logic_error("reverse of " + format(oriented[i].canonical) + " is not among the minimal classes");
    }
    const std::size_t j = it->second;
    paired[i] = paired[j] = true;
    // i is the smaller canonical since classes are visited in ascending order
    pairings.push_back({oriented[i].canonical, i, j});
  }
  std::sort(pairings.begin(), pairings.end(),
            [](const Pairing& a, const Pairing& b) { return a.canonical < b.canonical; });

  std::vector<std::string> names(oriented.size());
  std::vector<std::size_t> unori_of(oriented.size());
  for (std::size_t k = 0; k < pairings.size(); ++k) {
    const auto& p = pairings[k];
    const int number = static_cast<int>(k + 1);
    names[p.forward] = class_name(n, number, ClassSign::Plus);
    unori_of[p.forward] = k;
    std::optional<std::string> backward_name;
    if (p.backward != p.forward) {
      names[p.backward] = class_name(n, number, ClassSign::Minus);
      unori_of[p.backward] = k;
      backward_name = names[p.backward];
    }
    table.unoriented_classes.push_back(
        NamedUnorientedClass{class_name(n, number, ClassSign::None),
                             UnorientedClassLP{oriented[p.forward], oriented[p.backward], p.canonical},
                             names[p.forward], std::move(backward_name)});
  }

  for (std::size_t i = 0; i < oriented.size(); ++i) {
    table.oriented_classes.push_back(NamedOrientedClass{names[i], std::move(oriented[i]), unori_of[i]});
  }
  return table;
}

ClassificationTable classify(int n, const EnumerationOptions& options) {
  auto minimal = enumerate_minimal(n, options);
  return classify_minimal(n, lp_count(n), std::move(minimal));
}

std::string to_string(const Counts& c) {
  std::ostringstream out;
  out << '(' << c.lp << ", " << c.minimal << ", " << c.oriented << ", " << c.unoriented << ')';
  return out.str();
}

Counts counts(int n, const EnumerationOptions& options) {
  const auto minimal = enumerate_minimal(n, options);
  std::set<GaussCode> oriented;
  std::set<GaussCode> unoriented;
  for (const auto& w : minimal) {
    GaussCode forward = proj_lc(w);
    GaussCode backward = proj_lc(reverse(w));
    unoriented.insert(std::min(forward, backward));
    oriented.insert(std::move(forward));
  }
  return Counts{lp_count(n), minimal.size(), oriented.size(), unoriented.size()};
}

Counts counts_of(const ClassificationTable& table) {
  return Counts{table.lp_count, table.minimal_codes.size(), table.oriented_classes.size(),
                table.unoriented_classes.size()};
}

}  // namespace doodle
