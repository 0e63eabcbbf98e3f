#pragma once

// Finite stages A_n = C_n (+) B_n and the connecting maps between them,
// recorded as slot-labelled arrows. Only the diagonal matrix units of
// B(l^2(L(n+1))) are represented: an arrow says which slot receives which
// kind of map.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ahrc/check.hpp"
#include "ahrc/numeric.hpp"
#include "ahrc/sequences.hpp"
#include "ahrc/torus.hpp"

namespace ahrc {

enum class Block { C, B };

enum class ArrowKind { CoordProjection, PointEvalX, PointEvalY, StarEval };

enum class SlotFamily { Torus, Star, Projection };

std::string to_string(Block block);
std::string to_string(ArrowKind kind);
std::string to_string(SlotFamily family);
Block parse_block(const std::string& text);
ArrowKind parse_arrow_kind(const std::string& text);
SlotFamily parse_slot_family(const std::string& text);

/// A run of consecutive slots of L(n+1) within one family. Torus slots are
/// single points of Z_{2^n}^d; projection runs cover [first, last] of
/// {1, ..., d(n+1)}.
struct SlotSpan {
  SlotFamily family = SlotFamily::Star;
  std::uint64_t torus_point = 0;
  Integer first = 0;
  Integer last = 0;

  static SlotSpan torus(std::uint64_t point);
  static SlotSpan star();
  static SlotSpan projections(Integer first, Integer last);

  Integer size() const;
  friend bool operator==(const SlotSpan&, const SlotSpan&) = default;
};

/// One summand (or run of identical summands) of a connecting map. For
/// CoordProjection the projection index j is the slot index. For PointEvalX
/// the evaluated component z of Z_{2^n}^d is eval_point.
struct Arrow {
  Block source = Block::C;
  Block target = Block::C;
  ArrowKind kind = ArrowKind::StarEval;
  std::uint64_t eval_point = 0;
  SlotSpan slot;

  Integer count() const { return slot.size(); }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Block multiplicities, entry [target][source]. Row sums are per-target
/// slot totals.
struct Multiplicity {
  std::array<std::array<Integer, 2>, 2> entry{};

  static Multiplicity identity();
  const Integer& at(Block target, Block source) const;
  Integer& at(Block target, Block source);
  Integer row_sum(Block target) const;
  /// this * rhs, i.e. rhs applied first.
  Multiplicity after(const Multiplicity& rhs) const;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

struct BlockShape {
  Integer components;
  Integer base_dimension;  // real dimension of X_n or Y_n
  Integer matrix_size;
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

struct StageSpec {
  unsigned n = 0;
  BlockShape c_block;
  BlockShape b_block;
  friend bool operator==(const StageSpec&, const StageSpec&) = default;
};

struct ConnectingMap {
  unsigned level = 0;  // source level n; target is n + 1
  unsigned d = 1;
  std::vector<Arrow> arrows;

  /// Multiplicities tallied from the arrow list.
  Multiplicity multiplicity() const;
  friend bool operator==(const ConnectingMap&, const ConnectingMap&) = default;
};

StageSpec build_stage(unsigned n, const GrowthTables& tables);

/// Multiplicities of the level-n map computed directly from the sequences.
Multiplicity stage_multiplicity(unsigned n, const GrowthTables& tables);

ConnectingMap build_connecting_map(unsigned n, const GrowthTables& tables);

/// r(n) l(n+1) = r(n+1) and both per-target totals equal l(n+1).
CheckReport check_unital(const ConnectingMap& map, const GrowthTables& tables);

/// Each slot of L(n+1) is used exactly once among arrows into each target,
/// and the arrow-kind census matches the defining formula.
CheckReport check_slot_coverage(const ConnectingMap& map, const GrowthTables& tables);

/// Multiplicities of Gamma_{n,m}; identity when m = n.
Multiplicity compose_multiplicities(unsigned m, unsigned n, const GrowthTables& tables);

}  // namespace ahrc
