#ifndef DOODLE_GAUSS_CODE_HPP
#define DOODLE_GAUSS_CODE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace doodle {

enum class Side { L, R };

/// One branch symbol (j, L) or (j, R). Numbered 2j-1 / 2j, which is also
/// the order used for lexicographic comparison of codes.
struct JLabel {
  int crossing = 1;
  Side side = Side::L;

  constexpr int number() const { return side == Side::L ? 2 * crossing - 1 : 2 * crossing; }

  static constexpr JLabel from_number(int m) {
    return JLabel{(m + 1) / 2, (m % 2 == 1) ? Side::L : Side::R};
  }

  friend constexpr bool operator==(JLabel, JLabel) = default;
  friend constexpr auto operator<=>(JLabel a, JLabel b) { return a.number() <=> b.number(); }
};

std::string to_string(JLabel label);

enum class CodeErrorKind {
  OddLength,
  DuplicateLabel,
  MissingLabel,
  BadToken,
  ValueOutOfRange,
  NotAPermutation,
  ShiftOutOfRange,
  SizeMismatch,
  NotLeftPreferred,
  NotLeftCanonical,
};

class CodeError : public std::runtime_error {
 public:
  CodeError(CodeErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  CodeErrorKind kind() const { return kind_; }

 private:
  CodeErrorKind kind_;
};

/// A Gauss code on n letters: a sequence of length 2n in which every
/// symbol (j, L), (j, R) for 1 <= j <= n occurs exactly once.
///
/// Stored in the numeric encoding 1..2n. Positions are 0-indexed; the
/// successor of position 2n-1 is position 0.
class GaussCode {
 public:
  /// Validates `numbers` and throws CodeError on failure.
  explicit GaussCode(std::vector<int> numbers);
  GaussCode(std::initializer_list<int> numbers) : GaussCode(std::vector<int>(numbers)) {}

  /// Skips validation. The caller guarantees the exactly-once invariant.
  static GaussCode unchecked(std::vector<int> numbers) { return GaussCode(std::move(numbers), Unchecked{}); }

  static GaussCode from_labels(std::span<const JLabel> labels);

  int n() const { return static_cast<int>(seq_.size() / 2); }
  std::size_t size() const { return seq_.size(); }
  int operator[](std::size_t i) const { return seq_[i]; }
  JLabel label(std::size_t i) const { return JLabel::from_number(seq_[i]); }
  std::span<const int> numbers() const { return seq_; }
  std::vector<JLabel> labels() const;

  auto begin() const { return seq_.begin(); }
  auto end() const { return seq_.end(); }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
  friend auto operator<=>(const GaussCode& a, const GaussCode& b) { return a.seq_ <=> b.seq_; }

 private:
  struct Unchecked {};
  GaussCode(std::vector<int> numbers, Unchecked) : seq_(std::move(numbers)) {}

  std::vector<int> seq_;
};

enum class CodeStyle { Letter, Numeric };

/// Accepts letter form (`1L 2R ...`, case-insensitive) or numeric form
/// (`1, 4, 3, 6, 2, 5`, optionally wrapped in parentheses). Tokens may be
/// separated by whitespace and/or commas.
GaussCode parse(std::string_view text);

/// Numeric style renders `(1, 4, 3, 6, 2, 5)`; letter style `1L 2R 2L ...`.
std::string format(const GaussCode& code, CodeStyle style = CodeStyle::Numeric);

/// Lexicographic comparison under the order (1,L) < (1,R) < (2,L) < ...
/// Throws SizeMismatch when the codes have different n.
std::strong_ordering compare(const GaussCode& a, const GaussCode& b);

/// pi_*: replaces every (j, s) by (perm(j), s). `perm[j - 1]` is the image of j.
GaussCode relabel(const GaussCode& code, std::span<const int> perm);

/// shift[m]: x_{m+1} ... x_{2n} x_1 ... x_m, for 0 <= m < 2n.
GaussCode shift(const GaussCode& code, int m);

/// rev: x_{2n} ... x_1, labels unchanged.
GaussCode reverse(const GaussCode& code);

}  // namespace doodle

#endif  // DOODLE_GAUSS_CODE_HPP
