#include "doodle/normal_forms.hpp"

#include <algorithm>

namespace doodle {

namespace {

void require_lp(const GaussCode& code, const char* op) {
  if (!is_left_preferred(code)) {
    throw CodeError(CodeErrorKind::NotLeftPreferred,
                    std::string(op) + ": " + format(code) + " is not left preferred");
  }
}

void rotate_to_one(std::vector<int>& seq) {
  std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), 1), seq.end());
}

}  // namespace

LeftPreference left_preference(const GaussCode& code) {
  int next_l = 1;
  for (int m : code) {
    if (m % 2 == 0) continue;
    if (m != next_l) return LeftPreference::No;
    next_l += 2;
  }
  return code[0] == 1 ? LeftPreference::Full : LeftPreference::Weak;
}

GaussCode proj_lp(const GaussCode& code) {
  const int n = code.n();
  // rank[j] = position of (j, L) among the L-symbols, 1-based
  std::vector<int> rank(n + 1, 0);
  int k = 0;
  for (int m : code) {
    if (m % 2 == 1) rank[(m + 1) / 2] = ++k;
  }
  std::vector<int> out;
  out.reserve(code.size());
  for (JLabel l : code.labels()) out.push_back(JLabel{rank[l.crossing], l.side}.number());
  rotate_to_one(out);
  return GaussCode::unchecked(std::move(out));
}

GaussCode shift_lp(const GaussCode& lp) {
  require_lp(lp, "shift_lp");
  return proj_lp(shift(lp, 1));
}

GaussCode rev_lp(const GaussCode& lp) {
  require_lp(lp, "rev_lp");
  const int two_n = static_cast<int>(lp.size());
  std::vector<int> out;
  out.reserve(lp.size());
  for (auto it = lp.numbers().rbegin(); it != lp.numbers().rend(); ++it) {
    const int k = *it;
    out.push_back(k % 2 == 1 ? two_n - k : two_n + 2 - k);
  }
  rotate_to_one(out);
  return GaussCode::unchecked(std::move(out));
}

bool OrientedClassLP::contains(const GaussCode& code) const {
  return std::binary_search(members.begin(), members.end(), code);
}

OrientedClassLP oriented_class(const GaussCode& lp) {
  require_lp(lp, "oriented_class");
  std::vector<GaussCode> members;
  members.reserve(lp.n());
  GaussCode w = lp;
  for (int k = 0; k < lp.n(); ++k) {
    members.push_back(w);
    w = proj_lp(shift(w, 1));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  GaussCode canonical = members.front();
  return OrientedClassLP{std::move(members), std::move(canonical)};
}

UnorientedClassLP unoriented_class(const GaussCode& lp) {
  OrientedClassLP forward = oriented_class(lp);
  OrientedClassLP backward = oriented_class(rev_lp(lp));
  GaussCode canonical = std::min(forward.canonical, backward.canonical);
  return UnorientedClassLP{std::move(forward), std::move(backward), std::move(canonical)};
}

GaussCode proj_lc(const GaussCode& code) {
  GaussCode w = proj_lp(code);
  GaussCode best = w;
  for (int k = 1; k < code.n(); ++k) {
    w = proj_lp(shift(w, 1));
    if (w < best) best = w;
  }
  return best;
}

GaussCode rev_lc(const GaussCode& lc) {
  if (!is_left_canonical(lc)) {
    throw CodeError(CodeErrorKind::NotLeftCanonical, "rev_lc: " + format(lc) + " is not left canonical");
  }
  return proj_lc(reverse(lc));
}

GaussCode g_unori(const GaussCode& code) {
  return std::min(proj_lc(code), proj_lc(reverse(code)));
}

Orientation canonical_orientation(const GaussCode& code) {
  const auto order = proj_lc(code) <=> proj_lc(reverse(code));
  if (order < 0) return Orientation::Forward;
  if (order > 0) return Orientation::Reversed;
  return Orientation::Both;
}

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Forward: return "forward";
    case Orientation::Reversed: return "reversed";
    case Orientation::Both: return "both";
  }
  return "";
}

}  // namespace doodle
