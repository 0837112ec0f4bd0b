#include <gtest/gtest.h>

#include <random>

#include "doodle/gauss_code.hpp"
#include "generators.hpp"

using namespace doodle;

namespace {

CodeErrorKind error_kind(const std::vector<int>& numbers) {
  try {
    GaussCode w(numbers);
  } catch (const CodeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a CodeError";
  return CodeErrorKind::BadToken;
}

CodeErrorKind parse_error_kind(std::string_view text) {
  try {
    (void)parse(text);
  } catch (const CodeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a CodeError for '" << text << "'";
  return CodeErrorKind::OddLength;
}

}  // namespace

TEST(JLabel, NumericEncoding) {
  EXPECT_EQ((JLabel{1, Side::L}.number()), 1);
  EXPECT_EQ((JLabel{1, Side::R}.number()), 2);
  EXPECT_EQ((JLabel{3, Side::L}.number()), 5);
  EXPECT_EQ((JLabel{3, Side::R}.number()), 6);
  for (int m = 1; m <= 20; ++m) EXPECT_EQ(JLabel::from_number(m).number(), m);
  EXPECT_EQ(to_string(JLabel{2, Side::R}), "(2, R)");
}

TEST(JLabel, OrderInterleavesSides) {
  EXPECT_LT((JLabel{1, Side::L}), (JLabel{1, Side::R}));
  EXPECT_LT((JLabel{1, Side::R}), (JLabel{2, Side::L}));
  EXPECT_LT((JLabel{2, Side::L}), (JLabel{2, Side::R}));
}

TEST(GaussCode, AcceptsValidCodes) {
  const GaussCode w{1, 4, 3, 5, 2, 6};
  EXPECT_EQ(w.n(), 3);
  EXPECT_EQ(w.size(), 6u);
  EXPECT_EQ(w[1], 4);
  EXPECT_EQ(w.label(1), (JLabel{2, Side::R}));
}

TEST(GaussCode, RejectsInvalidCodes) {
  EXPECT_EQ(error_kind({}), CodeErrorKind::OddLength);
  EXPECT_EQ(error_kind({1, 2, 3}), CodeErrorKind::OddLength);
  EXPECT_EQ(error_kind({1, 1}), CodeErrorKind::DuplicateLabel);
  EXPECT_EQ(error_kind({1, 5}), CodeErrorKind::ValueOutOfRange);
  EXPECT_EQ(error_kind({0, 1}), CodeErrorKind::ValueOutOfRange);
  EXPECT_EQ(error_kind({1, 2, 2, 3}), CodeErrorKind::DuplicateLabel);
}

TEST(GaussCode, FromLabels) {
  const std::vector<JLabel> labels{{1, Side::L}, {2, Side::R}, {2, Side::L}, {1, Side::R}};
  EXPECT_EQ(GaussCode::from_labels(labels), (GaussCode{1, 4, 3, 2}));
  const std::vector<JLabel> bad{{1, Side::L}, {3, Side::R}};
  EXPECT_THROW(GaussCode::from_labels(bad), CodeError);
}

TEST(Parse, LetterAndNumericForms) {
  const GaussCode expected{1, 4, 3, 5, 2, 6};
  EXPECT_EQ(parse("1L 2R 2L 3L 1R 3R"), expected);
  EXPECT_EQ(parse("1l,2r,2l,3l,1r,3r"), expected);
  EXPECT_EQ(parse("(1, 4, 3, 5, 2, 6)"), expected);
  EXPECT_EQ(parse("1 4 3 5 2 6"), expected);
  EXPECT_EQ(parse("  (1,4,3,5,2,6)  "), expected);
  EXPECT_EQ(parse("1,2"), (GaussCode{1, 2}));
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error_kind(""), CodeErrorKind::OddLength);
  EXPECT_EQ(parse_error_kind("()"), CodeErrorKind::OddLength);
  EXPECT_EQ(parse_error_kind("1 2 3"), CodeErrorKind::OddLength);
  EXPECT_EQ(parse_error_kind("1L 2R 3L"), CodeErrorKind::OddLength);
  EXPECT_EQ(parse_error_kind("1 x"), CodeErrorKind::BadToken);
  EXPECT_EQ(parse_error_kind("1L 1X"), CodeErrorKind::BadToken);
  EXPECT_EQ(parse_error_kind("1L 1L"), CodeErrorKind::DuplicateLabel);
  EXPECT_EQ(parse_error_kind("1L 3R"), CodeErrorKind::ValueOutOfRange);
}

TEST(Parse, BadTokenMessageNamesTheToken) {
  try {
    (void)parse("1, 4, zz, 5, 2, 6");
    FAIL();
  } catch (const CodeError& e) {
    EXPECT_NE(std::string(e.what()).find("'zz'"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos) << e.what();
  }
}

TEST(Format, BothStyles) {
  const GaussCode w{1, 4, 3, 5, 2, 6};
  EXPECT_EQ(format(w), "(1, 4, 3, 5, 2, 6)");
  EXPECT_EQ(format(w, CodeStyle::Letter), "1L 2R 2L 3L 1R 3R");
}

TEST(Format, RoundTripOverAllCodesUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : support::all_codes(n)) {
      ASSERT_EQ(parse(format(w)), w);
      ASSERT_EQ(parse(format(w, CodeStyle::Letter)), w);
    }
  }
}

TEST(Compare, Lexicographic) {
  EXPECT_EQ(compare(GaussCode{1, 3, 2, 6, 4, 5}, GaussCode{1, 3, 5, 2, 6, 4}), std::strong_ordering::less);
  EXPECT_EQ(compare(GaussCode{1, 2}, GaussCode{1, 2}), std::strong_ordering::equal);
  EXPECT_EQ(compare(GaussCode{2, 1}, GaussCode{1, 2}), std::strong_ordering::greater);
  EXPECT_THROW((void)compare(GaussCode{1, 2}, GaussCode{1, 2, 3, 4}), CodeError);
}

TEST(Actions, Relabel) {
  const GaussCode w{1, 4, 3, 5, 2, 6};
  const std::vector<int> swap12{2, 1, 3};
  EXPECT_EQ(relabel(w, swap12), (GaussCode{3, 2, 1, 5, 4, 6}));
  const std::vector<int> identity{1, 2, 3};
  EXPECT_EQ(relabel(w, identity), w);
  const std::vector<int> not_perm{1, 1, 3};
  EXPECT_THROW(relabel(w, not_perm), CodeError);
  const std::vector<int> wrong_size{1, 2};
  EXPECT_THROW(relabel(w, wrong_size), CodeError);
}

TEST(Actions, ShiftAndReverse) {
  const GaussCode w{1, 4, 3, 5, 2, 6};
  EXPECT_EQ(shift(w, 0), w);
  EXPECT_EQ(shift(w, 1), (GaussCode{4, 3, 5, 2, 6, 1}));
  EXPECT_EQ(shift(w, 5), (GaussCode{6, 1, 4, 3, 5, 2}));
  EXPECT_THROW(shift(w, 6), CodeError);
  EXPECT_THROW(shift(w, -1), CodeError);
  EXPECT_EQ(reverse(w), (GaussCode{6, 2, 5, 3, 4, 1}));
}

TEST(Actions, GroupLaws) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = support::random_n(rng, 1, 6);
    const GaussCode w = support::random_code(rng, n);
    const int len = 2 * n;
    const int a = support::random_n(rng, 0, len - 1);
    const int b = support::random_n(rng, 0, len - 1);
    ASSERT_EQ(shift(shift(w, a), b), shift(w, (a + b) % len));
    ASSERT_EQ(reverse(reverse(w)), w);
    const auto p = support::random_permutation(rng, n);
    const auto q = support::random_permutation(rng, n);
    std::vector<int> qp(n);
    for (int j = 0; j < n; ++j) qp[j] = q[p[j] - 1];
    ASSERT_EQ(relabel(relabel(w, p), q), relabel(w, qp));
    ASSERT_EQ(relabel(shift(w, a), p), shift(relabel(w, p), a));
  }
}
