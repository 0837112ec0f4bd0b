#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "doodle/arrow_diagram.hpp"
#include "doodle/enumeration.hpp"
#include "doodle/normal_forms.hpp"
#include "doodle/reducibility.hpp"
#include "generators.hpp"

using namespace doodle;

namespace {

std::set<ArrowDiagram> orbit(const ArrowDiagram& a, SymmetryMode mode) {
  std::set<ArrowDiagram> out;
  const int len = static_cast<int>(a.points());
  for (int m = 0; m < len; ++m) {
    out.insert(rotate(a, m));
    if (mode == SymmetryMode::RotationAndReflection) out.insert(rotate(reflect(a), m));
  }
  return out;
}

}  // namespace

TEST(ArrowDiagram, FromCodeExample) {
  const ArrowDiagram a = from_code(GaussCode{1, 3, 2, 6, 4, 5});
  EXPECT_EQ(a.n(), 3);
  const std::vector<Role> roles{Role::Head, Role::Head, Role::Tail, Role::Tail, Role::Tail, Role::Head};
  EXPECT_EQ(a.roles(), roles);
  const std::vector<int> partners{2, 4, 0, 5, 1, 3};
  EXPECT_EQ(a.partners(), partners);
  EXPECT_EQ(encode(a), "roles=HHTTTH partners=(0:2 1:4 3:5)");
}

TEST(ArrowDiagram, SingleArrow) {
  EXPECT_EQ(encode(from_code(GaussCode{1, 2})), "roles=HT partners=(0:1)");
  EXPECT_EQ(encode(from_code(GaussCode{2, 1})), "roles=TH partners=(0:1)");
}

TEST(ArrowDiagram, ValidatesInput) {
  EXPECT_THROW(ArrowDiagram({Role::Head}, {0}), std::invalid_argument);
  EXPECT_THROW(ArrowDiagram({Role::Head, Role::Head}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(ArrowDiagram({Role::Head, Role::Tail}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(ArrowDiagram({Role::Head, Role::Tail}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(ArrowDiagram({Role::Head, Role::Tail}, {1}), std::invalid_argument);
  EXPECT_NO_THROW(ArrowDiagram({Role::Head, Role::Tail}, {1, 0}));
}

TEST(ArrowDiagram, RotateAndReflectMatchCodeActions) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = support::random_n(rng, 1, 7);
    const GaussCode w = support::random_code(rng, n);
    const ArrowDiagram a = from_code(w);
    const int m = support::random_n(rng, 0, 2 * n - 1);
    ASSERT_EQ(rotate(a, m), from_code(shift(w, m)));
    ASSERT_EQ(rotate(a, 2 * n), a);
    ASSERT_EQ(reflect(reflect(a)), a);
    ASSERT_EQ(from_code(relabel(w, support::random_permutation(rng, n))), a);
  }
}

TEST(ArrowDiagram, ConstantExactlyOnRelabelFibers) {
  for (int n = 1; n <= 3; ++n) {
    std::map<ArrowDiagram, std::set<GaussCode>> fibers;
    for (const auto& w : support::all_codes(n)) fibers[from_code(w)].insert(w);
    for (const auto& [diagram, fiber] : fibers) {
      std::set<GaussCode> relabelings;
      const GaussCode& first = *fiber.begin();
      for (const auto& p : support::all_permutations(n)) relabelings.insert(relabel(first, p));
      ASSERT_EQ(fiber, relabelings) << encode(diagram);
    }
  }
}

TEST(ArrowDiagram, ReducibilityMatchesGaussCodes) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& w : support::all_codes(n)) {
      const ArrowDiagram a = from_code(w);
      ASSERT_EQ(arrow_1_reducible(a), is_1_reducible(w)) << format(w);
      ASSERT_EQ(arrow_minimal(a), is_minimal(w)) << format(w);
    }
  }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const GaussCode w = support::random_code(rng, support::random_n(rng, 2, 7));
    ASSERT_EQ(arrow_minimal(from_code(w)), is_minimal(w)) << format(w);
  }
}

TEST(ArrowDiagram, ReducibilityExamples) {
  EXPECT_TRUE(arrow_1_reducible(from_code(GaussCode{1, 2})));
  EXPECT_TRUE(arrow_2_reducible(from_code(GaussCode{1, 3, 2, 4})));
  EXPECT_TRUE(arrow_minimal(from_code(GaussCode{1, 3, 2, 6, 4, 5})));
}

TEST(DihedralCanonical, IsOrbitMinimum) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = support::random_n(rng, 1, 6);
    const ArrowDiagram a = from_code(support::random_code(rng, n));
    for (auto mode : {SymmetryMode::RotationOnly, SymmetryMode::RotationAndReflection}) {
      const auto orb = orbit(a, mode);
      const ArrowDiagram c = dihedral_canonical(a, mode);
      ASSERT_EQ(c, *orb.begin());
      ASSERT_EQ(dihedral_canonical(rotate(a, support::random_n(rng, 0, 2 * n - 1)), mode), c);
      const std::size_t group = mode == SymmetryMode::RotationOnly ? 2 * n : 4 * n;
      ASSERT_EQ(group % orb.size(), 0u);
    }
    ASSERT_EQ(dihedral_canonical(reflect(a), SymmetryMode::RotationAndReflection),
              dihedral_canonical(a, SymmetryMode::RotationAndReflection));
  }
}

TEST(DihedralCanonical, UnorientedlyEquivalentCodesAgree) {
  const auto mode = SymmetryMode::RotationAndReflection;
  EXPECT_EQ(dihedral_canonical(from_code(GaussCode{1, 3, 2, 6, 4, 5}), mode),
            dihedral_canonical(from_code(GaussCode{1, 4, 2, 6, 3, 5}), mode));
  EXPECT_NE(dihedral_canonical(from_code(GaussCode{1, 3, 2, 6, 4, 5}), SymmetryMode::RotationOnly),
            dihedral_canonical(from_code(GaussCode{1, 4, 2, 6, 3, 5}), SymmetryMode::RotationOnly));
}

TEST(ClassifyByArrows, AgreesWithGaussCodeClassification) {
  for (int n = 2; n <= 5; ++n) {
    const auto table = classify(n);
    const auto arrows = classify_by_arrows(n);
    EXPECT_EQ(arrows.rotation, oriented_partition(table)) << n;
    EXPECT_EQ(arrows.dihedral, unoriented_partition(table)) << n;
  }
}

TEST(ClassifyByArrows, BlockCounts) {
  EXPECT_TRUE(classify_by_arrows(2).rotation.empty());
  EXPECT_TRUE(classify_by_arrows(2).dihedral.empty());
  const auto three = classify_by_arrows(3);
  EXPECT_EQ(three.rotation.size(), 2u);
  EXPECT_EQ(three.dihedral.size(), 1u);
  EXPECT_EQ(three.dihedral.front().size(), 6u);
  const auto four = classify_by_arrows(4);
  EXPECT_EQ(four.rotation.size(), 32u);
  EXPECT_EQ(four.dihedral.size(), 19u);
}

TEST(ClassifyByArrows, InvariantsFactorThroughCanonicalForms) {
  for (int n = 3; n <= 4; ++n) {
    const auto minimal = enumerate_minimal(n);
    for (const auto& w : minimal) {
      for (const auto& v : minimal) {
        const ArrowDiagram a = from_code(w), b = from_code(v);
        ASSERT_EQ(proj_lc(w) == proj_lc(v), dihedral_canonical(a, SymmetryMode::RotationOnly) ==
                                                dihedral_canonical(b, SymmetryMode::RotationOnly));
        ASSERT_EQ(g_unori(w) == g_unori(v), dihedral_canonical(a, SymmetryMode::RotationAndReflection) ==
                                                dihedral_canonical(b, SymmetryMode::RotationAndReflection));
      }
    }
  }
}

TEST(ClassifyByArrows, ThreadCountDoesNotChangeOutput) {
  const auto codes = enumerate_minimal(5);
  const auto single = classify_by_arrows(codes, 1);
  const auto many = classify_by_arrows(codes, 4);
  EXPECT_EQ(single.rotation, many.rotation);
  EXPECT_EQ(single.dihedral, many.dihedral);
}
