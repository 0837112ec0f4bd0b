#ifndef DOODLE_ARROW_DIAGRAM_HPP
#define DOODLE_ARROW_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "doodle/enumeration.hpp"
#include "doodle/gauss_code.hpp"

namespace doodle {

enum class Role : unsigned char { Head, Tail };

/// n unlabeled arrows on 2n points of the circle. Position p stands for
/// the point at angle (p+1)pi/n + pi/2n. Every arrow runs from the point
/// carrying (j, R) (tail) to the point carrying (j, L) (head).
class ArrowDiagram {
 public:
  /// Validates: partner is a fixed-point-free involution joining one head
  /// and one tail. Throws std::invalid_argument.
  ArrowDiagram(std::vector<Role> roles, std::vector<int> partner);

  int n() const { return static_cast<int>(roles_.size() / 2); }
  std::size_t points() const { return roles_.size(); }
  Role role(std::size_t p) const { return roles_[p]; }
  int partner(std::size_t p) const { return partner_[p]; }
  const std::vector<Role>& roles() const { return roles_; }
  const std::vector<int>& partners() const { return partner_; }

  /// Ordered by the role array, then the partner array.
  friend bool operator==(const ArrowDiagram&, const ArrowDiagram&) = default;
  friend std::strong_ordering operator<=>(const ArrowDiagram& a, const ArrowDiagram& b);

 private:
  std::vector<Role> roles_;
  std::vector<int> partner_;
};

/// Forgets the crossing labels of a Gauss code.
ArrowDiagram from_code(const GaussCode& code);

/// Moves position p to p - m (mod 2n); matches shift(code, m).
ArrowDiagram rotate(const ArrowDiagram& a, int m);

/// Reflection in the x-axis, p -> 2n-1-p; matches reverse(code).
ArrowDiagram reflect(const ArrowDiagram& a);

bool arrow_1_reducible(const ArrowDiagram& a);
bool arrow_2_reducible(const ArrowDiagram& a);
inline bool arrow_minimal(const ArrowDiagram& a) { return !arrow_1_reducible(a) && !arrow_2_reducible(a); }

enum class SymmetryMode { RotationOnly, RotationAndReflection };

/// Least element of the orbit under the 2n rotations, or under all 4n
/// elements of the dihedral group.
ArrowDiagram dihedral_canonical(const ArrowDiagram& a, SymmetryMode mode);

/// `roles=HTH... partners=(p:q ...)` with p < q, pairs sorted.
std::string encode(const ArrowDiagram& a);

/// A partition of codes into blocks. Members within a block are sorted
/// and blocks are ordered by their smallest member.
using Partition = std::vector<std::vector<GaussCode>>;

struct ArrowClassification {
  Partition rotation;
  Partition dihedral;
};

/// Groups the minimal left preferred codes on n letters by the canonical
/// forms of their arrow diagrams.
ArrowClassification classify_by_arrows(int n, const EnumerationOptions& options = {});

/// Same, for an explicit list of codes.
ArrowClassification classify_by_arrows(const std::vector<GaussCode>& codes, unsigned threads = 0);

/// The oriented and unoriented partitions of a classification table, in
/// the same normalized shape.
Partition oriented_partition(const ClassificationTable& table);
Partition unoriented_partition(const ClassificationTable& table);

}  // namespace doodle

#endif  // DOODLE_ARROW_DIAGRAM_HPP
