#include "doodle/arrow_diagram.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace doodle {

ArrowDiagram::ArrowDiagram(std::vector<Role> roles, std::vector<int> partner)
    : roles_(std::move(roles)), partner_(std::move(partner)) {
  const int size = static_cast<int>(roles_.size());
  if (size == 0 || size % 2 != 0 || partner_.size() != roles_.size()) {
    throw std::invalid_argument("arrow diagram needs 2n points with one partner each");
  }
  for (int p = 0; p < size; ++p) {
    const int q = partner_[p];
    if (q < 0 || q >= size || q == p || partner_[q] != p) {
      throw std::invalid_argument("partner map is not a fixed-point-free involution at " + std::to_string(p));
    }
    if (roles_[p] == roles_[q]) {
      throw std::invalid_argument("arrow " + std::to_string(p) + ":" + std::to_string(q) + " needs one head and one tail");
    }
  }
}

std::strong_ordering operator<=>(const ArrowDiagram& a, const ArrowDiagram& b) {
  if (auto c = a.roles_ <=> b.roles_; c != 0) return c;
  return a.partner_ <=> b.partner_;
}

ArrowDiagram from_code(const GaussCode& code) {
  const std::size_t size = code.size();
  std::vector<Role> roles(size);
  std::vector<int> partner(size);
  std::vector<int> where(size + 1);
  for (std::size_t p = 0; p < size; ++p) {
    roles[p] = code.label(p).side == Side::L ? Role::Head : Role::Tail;
    where[code[p]] = static_cast<int>(p);
  }
  for (std::size_t p = 0; p < size; ++p) {
    const int m = code[p];
    partner[p] = where[m % 2 == 1 ? m + 1 : m - 1];
  }
  return ArrowDiagram(std::move(roles), std::move(partner));
}

ArrowDiagram rotate(const ArrowDiagram& a, int m) {
  const int size = static_cast<int>(a.points());
  const int s = ((m % size) + size) % size;
  std::vector<Role> roles(size);
  std::vector<int> partner(size);
  for (int p = 0; p < size; ++p) {
    const int src = (p + s) % size;
    roles[p] = a.role(src);
    partner[p] = (a.partner(src) - s + size) % size;
  }
  return ArrowDiagram(std::move(roles), std::move(partner));
}

ArrowDiagram reflect(const ArrowDiagram& a) {
  const int size = static_cast<int>(a.points());
  std::vector<Role> roles(size);
  std::vector<int> partner(size);
  for (int p = 0; p < size; ++p) {
    const int src = size - 1 - p;
    roles[p] = a.role(src);
    partner[p] = size - 1 - a.partner(src);
  }
  return ArrowDiagram(std::move(roles), std::move(partner));
}

bool arrow_1_reducible(const ArrowDiagram& a) {
  const int size = static_cast<int>(a.points());
  for (int i = 0; i < size; ++i) {
    if (a.partner(i) == (i + 1) % size) return true;
  }
  return false;
}

bool arrow_2_reducible(const ArrowDiagram& a) {
  const int size = static_cast<int>(a.points());
  for (int i = 0; i < size; ++i) {
    const int next = (i + 1) % size;
    if (a.role(i) == a.role(next)) continue;
    const int pi = a.partner(i);
    const int pn = a.partner(next);
    // parallel: P_i ~ P_i', P_{i+1} ~ P_{i'+1}
    if (pn == (pi + 1) % size) return true;
    // crossed: P_i ~ P_{i'+1}, P_{i+1} ~ P_{i'}
    if (pi == (pn + 1) % size) return true;
  }
  return false;
}

ArrowDiagram dihedral_canonical(const ArrowDiagram& a, SymmetryMode mode) {
  const int size = static_cast<int>(a.points());
  ArrowDiagram best = a;
  const std::optional<ArrowDiagram> mirror =
      mode == SymmetryMode::RotationAndReflection ? std::optional(reflect(a)) : std::nullopt;
  for (int m = 0; m < size; ++m) {
    ArrowDiagram r = rotate(a, m);
    if (r < best) best = std::move(r);
    if (mirror) {
      ArrowDiagram s = rotate(*mirror, m);
      if (s < best) best = std::move(s);
    }
  }
  return best;
}

std::string encode(const ArrowDiagram& a) {
  std::ostringstream out;
  out << "roles=";
  for (Role r : a.roles()) out << (r == Role::Head ? 'H' : 'T');
  out << " partners=(";
  bool first = true;
  for (std::size_t p = 0; p < a.points(); ++p) {
    const auto q = static_cast<std::size_t>(a.partner(p));
    if (q < p) continue;
    if (!first) out << ' ';
    out << p << ':' << q;
    first = false;
  }
  out << ')';
  return out.str();
}

namespace {

Partition group_by(const std::vector<GaussCode>& codes, const std::vector<ArrowDiagram>& keys) {
  std::map<ArrowDiagram, std::vector<GaussCode>> blocks;
  for (std::size_t i = 0; i < codes.size(); ++i) blocks[keys[i]].push_back(codes[i]);
  Partition out;
  out.reserve(blocks.size());
  for (auto& [key, block] : blocks) {
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

Partition normalize(Partition p) {
  for (auto& block : p) std::sort(block.begin(), block.end());
  std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return p;
}

}  // namespace

ArrowClassification classify_by_arrows(const std::vector<GaussCode>& codes, unsigned threads) {
  std::vector<std::optional<ArrowDiagram>> rot(codes.size());
  std::vector<std::optional<ArrowDiagram>> dih(codes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < codes.size(); i = next++) {
      const ArrowDiagram a = from_code(codes[i]);
      rot[i] = dihedral_canonical(a, SymmetryMode::RotationOnly);
      dih[i] = dihedral_canonical(a, SymmetryMode::RotationAndReflection);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, codes.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<ArrowDiagram> rot_keys;
  std::vector<ArrowDiagram> dih_keys;
  rot_keys.reserve(codes.size());
  dih_keys.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    rot_keys.push_back(std::move(*rot[i]));
    dih_keys.push_back(std::move(*dih[i]));
  }
  return ArrowClassification{group_by(codes, rot_keys), group_by(codes, dih_keys)};
}

ArrowClassification classify_by_arrows(int n, const EnumerationOptions& options) {
  return classify_by_arrows(enumerate_minimal(n, options), options.threads);
}

Partition oriented_partition(const ClassificationTable& table) {
  Partition p;
  for (const auto& named : table.oriented_classes) p.push_back(named.cls.members);
  return normalize(std::move(p));
}

Partition unoriented_partition(const ClassificationTable& table) {
  Partition p;
  for (const auto& named : table.unoriented_classes) {
    std::vector<GaussCode> block = named.cls.forward.members;
    if (!named.cls.reversible()) {
      block.insert(block.end(), named.cls.backward.members.begin(), named.cls.backward.members.end());
    }
    p.push_back(std::move(block));
  }
  return normalize(std::move(p));
}

}  // namespace doodle
