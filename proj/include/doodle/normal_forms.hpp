#ifndef DOODLE_NORMAL_FORMS_HPP
#define DOODLE_NORMAL_FORMS_HPP

#include <cstddef>
#include <vector>

#include "doodle/gauss_code.hpp"

namespace doodle {

enum class LeftPreference { No, Weak, Full };

/// Weak: the L-symbols occur in the order (1,L), (2,L), ..., (n,L).
/// Full: weak and the code starts with (1,L).
LeftPreference left_preference(const GaussCode& code);

inline bool is_left_preferred(const GaussCode& code) { return left_preference(code) == LeftPreference::Full; }

/// Relabels crossings in order of first L-occurrence, then rotates (1,L)
/// to the front. The result is orientedly equivalent to `code`.
GaussCode proj_lp(const GaussCode& code);

/// proj_lp(shift(lp, 1)). Generates the cyclic group of order n acting on
/// left preferred codes. Throws NotLeftPreferred.
GaussCode shift_lp(const GaussCode& lp);

/// Orientation reversal transported to left preferred codes. Applies the
/// index map k -> 2n-k (odd k), 2n+2-k (even k) to the reversed sequence
/// and rotates 1 to the front; agrees with proj_lp(reverse(lp)).
/// Throws NotLeftPreferred.
GaussCode rev_lp(const GaussCode& lp);

/// Smallest element of the shift_lp orbit of proj_lp(code). This is the
/// oriented invariant G_ori.
GaussCode proj_lc(const GaussCode& code);

inline bool is_left_canonical(const GaussCode& code) {
  return is_left_preferred(code) && proj_lc(code) == code;
}

/// proj_lc(reverse(lc)). Throws NotLeftCanonical unless `lc` is a fixed
/// point of proj_lc.
GaussCode rev_lc(const GaussCode& lc);

/// min(proj_lc(code), proj_lc(reverse(code))): the unoriented invariant.
GaussCode g_unori(const GaussCode& code);

/// The shift_lp orbit of a left preferred code, de-duplicated and sorted.
/// When the code has rotational symmetry the orbit has a proper divisor
/// of n elements.
struct OrientedClassLP {
  std::vector<GaussCode> members;
  GaussCode canonical;

  std::size_t orbit_size() const { return members.size(); }
  bool contains(const GaussCode& code) const;
};

/// forward is the orbit of the given code, backward the orbit of its rev_lp.
/// They coincide for reversible classes.
struct UnorientedClassLP {
  OrientedClassLP forward;
  OrientedClassLP backward;
  GaussCode canonical;

  bool reversible() const { return forward.canonical == backward.canonical; }
};

OrientedClassLP oriented_class(const GaussCode& lp);
UnorientedClassLP unoriented_class(const GaussCode& lp);

enum class Orientation { Forward, Reversed, Both };

/// Compares G_ori of the code with G_ori of its reverse. Both means the
/// two orientations share one left canonical code.
Orientation canonical_orientation(const GaussCode& code);

const char* to_string(Orientation o);

}  // namespace doodle

#endif  // DOODLE_NORMAL_FORMS_HPP
