#pragma once

#include <algorithm>
#include <vector>

#include "ahrc/torus.hpp"
#include "ahrc/tower.hpp"

namespace ahrc::detail {

struct ArrowKey {
  int source;
  int target;
  int kind;
  std::uint64_t eval;
  int family;
  std::uint64_t torus;
  const Integer* first;
  const Integer* last;
};

inline bool operator<(const ArrowKey& a, const ArrowKey& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.eval != b.eval) return a.eval < b.eval;
  if (a.family != b.family) return a.family < b.family;
  if (a.torus != b.torus) return a.torus < b.torus;
  if (const int c = cmp(*a.first, *b.first); c != 0) return c < 0;
  return cmp(*a.last, *b.last) < 0;
}

inline ArrowKey key_of(const Arrow& a) {
  return ArrowKey{static_cast<int>(a.source), static_cast<int>(a.target),
                  static_cast<int>(a.kind),   a.eval_point,
                  static_cast<int>(a.slot.family), a.slot.torus_point,
                  &a.slot.first,              &a.slot.last};
}

/// Slot permutation z -> z + g on torus slots together with the relabelling
/// of evaluated components z -> z + g.
inline ArrowKey image_of(const Arrow& a, const TorusGroup& torus, std::uint64_t shift) {
  ArrowKey k = key_of(a);
  if (a.kind == ArrowKind::PointEvalX) k.eval = torus.add(k.eval, shift);
  if (a.slot.family == SlotFamily::Torus) k.torus = torus.add(k.torus, shift);
  return k;
}

inline std::size_t count_in(const std::vector<ArrowKey>& sorted, const ArrowKey& k) {
  const auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), k);
  return static_cast<std::size_t>(hi - lo);
}

}  // namespace ahrc::detail
