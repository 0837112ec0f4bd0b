#ifndef DOODLE_ENUMERATION_HPP
#define DOODLE_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doodle/gauss_code.hpp"
#include "doodle/normal_forms.hpp"

namespace doodle {

class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(int n, int max_n)
      : std::runtime_error("n = " + std::to_string(n) + " exceeds the size guard " + std::to_string(max_n)),
        n_(n),
        max_n_(max_n) {}
  int n() const { return n_; }
  int max_n() const { return max_n_; }

 private:
  int n_;
  int max_n_;
};

struct EnumerationOptions {
  int max_n = 8;
  /// Worker threads for minimality filtering; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Number of left preferred codes on n letters: C(2n-1, n-1) * n!.
std::uint64_t lp_count(int n);

/// Calls `visit` on every left preferred code on n letters in ascending
/// lexicographic order.
void for_each_lp(int n, const std::function<void(const GaussCode&)>& visit, const EnumerationOptions& options = {});

std::vector<GaussCode> enumerate_lp(int n, const EnumerationOptions& options = {});

/// Minimal left preferred codes, sorted ascending. The output does not
/// depend on the thread count.
std::vector<GaussCode> enumerate_minimal(int n, const EnumerationOptions& options = {});

enum class ClassSign { Plus, Minus, None };

/// `d{n}.{k}+`, `d{n}.{k}-` or `d{n}.{k}`.
std::string class_name(int n, int k, ClassSign sign);

struct NamedOrientedClass {
  std::string name;
  OrientedClassLP cls;
  /// Index into ClassificationTable::unoriented_classes.
  std::size_t unoriented_index = 0;
};

struct NamedUnorientedClass {
  std::string name;
  UnorientedClassLP cls;
  std::string forward_name;
  std::optional<std::string> backward_name;
};

/// Minimal left preferred codes on n letters and their oriented and
/// unoriented classes.
///
/// Oriented classes are ordered by canonical representative, as produced
/// by repeatedly peeling off the orbit of the smallest remaining code.
/// Unoriented classes are numbered k = 1, 2, ... by ascending canonical
/// representative; the oriented class holding that representative is
/// named d{n}.{k}+ and its reverse, when distinct, d{n}.{k}-.
struct ClassificationTable {
  int n = 0;
  std::uint64_t lp_count = 0;
  std::vector<GaussCode> minimal_codes;
  std::vector<NamedOrientedClass> oriented_classes;
  std::vector<NamedUnorientedClass> unoriented_classes;

  /// Name of the oriented class containing a minimal left preferred code.
  std::optional<std::string> oriented_name_of(const GaussCode& lp) const;
};

ClassificationTable classify(int n, const EnumerationOptions& options = {});

/// Classifies an already-filtered set of minimal left preferred codes.
ClassificationTable classify_minimal(int n, std::uint64_t lp_total, std::vector<GaussCode> minimal_codes);

struct Counts {
  std::uint64_t lp = 0;
  std::uint64_t minimal = 0;
  std::uint64_t oriented = 0;
  std::uint64_t unoriented = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

std::string to_string(const Counts& c);

/// Tallies without materializing class members.
Counts counts(int n, const EnumerationOptions& options = {});

Counts counts_of(const ClassificationTable& table);

}  // namespace doodle

#endif  // DOODLE_ENUMERATION_HPP
