#include "doodle/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace doodle {

namespace {

void validate(std::span<const int> seq) {
  if (seq.empty()) throw CodeError(CodeErrorKind::OddLength, "empty code: need at least one crossing");
  if (seq.size() % 2 != 0) {
    throw CodeError(CodeErrorKind::OddLength,
                    "code has odd length " + std::to_string(seq.size()));
  }
  const int two_n = static_cast<int>(seq.size());
  std::vector<int> seen(two_n + 1, 0);
  for (int m : seq) {
    if (m < 1 || m > two_n) {
      throw CodeError(CodeErrorKind::ValueOutOfRange,
                      "symbol " + std::to_string(m) + " outside 1.." + std::to_string(two_n));
    }
    ++seen[m];
  }
  for (int m = 1; m <= two_n; ++m) {
    if (seen[m] > 1) {
      throw CodeError(CodeErrorKind::DuplicateLabel,
                      "duplicate label " + to_string(JLabel::from_number(m)));
    }
  }
  for (int m = 1; m <= two_n; ++m) {
    if (seen[m] == 0) {
      throw CodeError(CodeErrorKind::MissingLabel, "missing label " + to_string(JLabel::from_number(m)));
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<int> parse_int(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

[[noreturn]] void bad_token(std::size_t index, std::string_view token) {
  throw CodeError(CodeErrorKind::BadToken,
                  "bad token '" + std::string(token) + "' at position " + std::to_string(index + 1));
}

}  // namespace

std::string to_string(JLabel label) {
  return "(" + std::to_string(label.crossing) + ", " + (label.side == Side::L ? "L" : "R") + ")";
}

GaussCode::GaussCode(std::vector<int> numbers) : seq_(std::move(numbers)) { validate(seq_); }

GaussCode GaussCode::from_labels(std::span<const JLabel> labels) {
  std::vector<int> numbers;
  numbers.reserve(labels.size());
  const int n = static_cast<int>(labels.size() / 2);
  for (JLabel l : labels) {
    if (l.crossing < 1 || l.crossing > n) {
      throw CodeError(CodeErrorKind::ValueOutOfRange,
                      "crossing " + std::to_string(l.crossing) + " outside 1.." + std::to_string(n));
    }
    numbers.push_back(l.number());
  }
  return GaussCode(std::move(numbers));
}

std::vector<JLabel> GaussCode::labels() const {
  std::vector<JLabel> out;
  out.reserve(seq_.size());
  for (int m : seq_) out.push_back(JLabel::from_number(m));
  return out;
}

GaussCode parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw CodeError(CodeErrorKind::OddLength, "empty code: need at least one crossing");

  auto side_of = [](char c) -> std::optional<Side> {
    switch (c) {
      case 'L': case 'l': return Side::L;
      case 'R': case 'r': return Side::R;
      default: return std::nullopt;
    }
  };
  const bool letter_form = side_of(tokens.front().back()).has_value();

  if (!letter_form) {
    std::vector<int> numbers;
    numbers.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      auto value = parse_int(tokens[i]);
      if (!value) bad_token(i, tokens[i]);
      numbers.push_back(*value);
    }
    return GaussCode(std::move(numbers));
  }

  if (tokens.size() % 2 != 0) {
    throw CodeError(CodeErrorKind::OddLength, "code has odd length " + std::to_string(tokens.size()));
  }
  std::vector<JLabel> labels;
  labels.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto tok = tokens[i];
    const auto side = side_of(tok.back());
    const auto crossing = parse_int(tok.substr(0, tok.size() - 1));
    if (!side || !crossing) bad_token(i, tok);
    labels.push_back(JLabel{*crossing, *side});
  }
  return GaussCode::from_labels(labels);
}

std::string format(const GaussCode& code, CodeStyle style) {
  std::ostringstream out;
  if (style == CodeStyle::Numeric) {
    out << '(';
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i) out << ", ";
      out << code[i];
    }
    out << ')';
  } else {
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i) out << ' ';
      const JLabel l = code.label(i);
      out << l.crossing << (l.side == Side::L ? 'L' : 'R');
    }
  }
  return out.str();
}

std::strong_ordering compare(const GaussCode& a, const GaussCode& b) {
  if (a.n() != b.n()) {
    throw CodeError(CodeErrorKind::SizeMismatch, "cannot compare codes on " + std::to_string(a.n()) +
                                                     " and " + std::to_string(b.n()) + " letters");
  }
  return a <=> b;
}

GaussCode relabel(const GaussCode& code, std::span<const int> perm) {
  const int n = code.n();
  if (static_cast<int>(perm.size()) != n) {
    throw CodeError(CodeErrorKind::NotAPermutation,
                    "permutation has " + std::to_string(perm.size()) + " entries, expected " + std::to_string(n));
  }
  std::vector<bool> hit(n + 1, false);
  for (int image : perm) {
    if (image < 1 || image > n || hit[image]) {
      throw CodeError(CodeErrorKind::NotAPermutation, "not a permutation of 1.." + std::to_string(n));
    }
    hit[image] = true;
  }
  std::vector<int> out;
  out.reserve(code.size());
  for (JLabel l : code.labels()) {
    out.push_back(JLabel{perm[l.crossing - 1], l.side}.number());
  }
  return GaussCode::unchecked(std::move(out));
}

GaussCode shift(const GaussCode& code, int m) {
  const int len = static_cast<int>(code.size());
  if (m < 0 || m >= len) {
    throw CodeError(CodeErrorKind::ShiftOutOfRange,
                    "shift " + std::to_string(m) + " outside 0.." + std::to_string(len - 1));
  }
  std::vector<int> out(code.begin(), code.end());
  std::rotate(out.begin(), out.begin() + m, out.end());
  return GaussCode::unchecked(std::move(out));
}

GaussCode reverse(const GaussCode& code) {
  return GaussCode::unchecked(std::vector<int>(code.numbers().rbegin(), code.numbers().rend()));
}

}  // namespace doodle
