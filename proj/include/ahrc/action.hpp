#pragma once

// The Z^d action as permutations of the slot sets L(n): translation on the
// Z_{2^{n-1}}^d part, identity on the star slot and on projection slots.

#include <cstdint>
#include <vector>

#include "ahrc/check.hpp"
#include "ahrc/torus.hpp"
#include "ahrc/tower.hpp"

namespace ahrc {

/// w_g^n acting on L(n).
struct LevelPermutation {
  unsigned level = 1;
  unsigned d = 1;
  std::uint64_t shift = 0;  // g reduced into Z_{2^{level-1}}^d

  TorusGroup torus() const { return TorusGroup(d, level - 1); }
  SlotSpan apply(const SlotSpan& slot) const;
  /// Image of every torus slot, indexed by packed point.
  std::vector<std::uint64_t> torus_images() const;
  /// (this o other): apply other first.
  LevelPermutation compose(const LevelPermutation& other) const;
  bool is_identity() const { return shift == 0; }
  friend bool operator==(const LevelPermutation&, const LevelPermutation&) = default;
};

LevelPermutation level_permutation(const GroupElement& g, unsigned n);

/// u_g^n as the list of its tensor factors w_g^1, ..., w_g^n.
std::vector<LevelPermutation> tensor_permutation(const GroupElement& g, unsigned n);

/// Checks that permuting the target slots by w_g^{n+1} while translating the
/// evaluated components by g reproduces the arrow multiset of the level-n map.
CheckReport check_equivariance(unsigned n, const GroupElement& g, const ConnectingMap& map);

struct OuternessWitness {
  GroupElement g;
  unsigned n = 0;
  /// The component k = 0 of Z_{2^n}^d supporting the central projection p_n.
  std::vector<std::uint64_t> base_component;
  /// g mod 2^n, the component supporting alpha_g(p_n).
  std::vector<std::uint64_t> translated_component;
};

/// Least n with g not in 2^n Z^d; rejects g = 0.
OuternessWitness outerness_witness(const GroupElement& g);

/// Exact check of a witness: the two components differ (so the projections
/// are orthogonal) and g does lie in 2^{n-1} Z^d (minimality).
CheckReport check_outerness_witness(const OuternessWitness& w);

}  // namespace ahrc
