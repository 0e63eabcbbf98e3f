#include "ahrc/tower.hpp"

#include <algorithm>

#include "ahrc/kernels.hpp"

namespace ahrc {

std::string to_string(Block block) { return block == Block::C ? "C" : "B"; }

std::string to_string(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::CoordProjection: return "coordProjection";
    case ArrowKind::PointEvalX: return "pointEvalX";
    case ArrowKind::PointEvalY: return "pointEvalY";
    case ArrowKind::StarEval: return "starEval";
  }
  return "?";
}

std::string to_string(SlotFamily family) {
  switch (family) {
    case SlotFamily::Torus: return "torus";
    case SlotFamily::Star: return "star";
    case SlotFamily::Projection: return "projection";
  }
  return "?";
}

Block parse_block(const std::string& text) {
  if (text == "C") return Block::C;
  if (text == "B") return Block::B;
  throw PreconditionError("unknown block '" + text + "'");
}

ArrowKind parse_arrow_kind(const std::string& text) {
  for (auto k : {ArrowKind::CoordProjection, ArrowKind::PointEvalX, ArrowKind::PointEvalY,
                 ArrowKind::StarEval})
    if (to_string(k) == text) return k;
  throw PreconditionError("unknown arrow kind '" + text + "'");
}

SlotFamily parse_slot_family(const std::string& text) {
  for (auto f : {SlotFamily::Torus, SlotFamily::Star, SlotFamily::Projection})
    if (to_string(f) == text) return f;
  throw PreconditionError("unknown slot family '" + text + "'");
}

SlotSpan SlotSpan::torus(std::uint64_t point) {
  SlotSpan s;
  s.family = SlotFamily::Torus;
  s.torus_point = point;
  return s;
}

SlotSpan SlotSpan::star() { return SlotSpan{}; }

SlotSpan SlotSpan::projections(Integer first, Integer last) {
  SlotSpan s;
  s.family = SlotFamily::Projection;
  s.first = std::move(first);
  s.last = std::move(last);
  return s;
}

Integer SlotSpan::size() const {
  if (family != SlotFamily::Projection) return 1;
  return last >= first ? Integer(last - first + 1) : Integer(0);
}

Multiplicity Multiplicity::identity() {
  Multiplicity m;
  m.entry = {{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}};
  return m;
}

const Integer& Multiplicity::at(Block target, Block source) const {
  return entry[target == Block::C ? 0 : 1][source == Block::C ? 0 : 1];
}

Integer& Multiplicity::at(Block target, Block source) {
  return entry[target == Block::C ? 0 : 1][source == Block::C ? 0 : 1];
}

Integer Multiplicity::row_sum(Block target) const {
  return at(target, Block::C) + at(target, Block::B);
}

Multiplicity Multiplicity::after(const Multiplicity& rhs) const {
  Multiplicity out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.entry[i][j] = entry[i][0] * rhs.entry[0][j] + entry[i][1] * rhs.entry[1][j];
  return out;
}

Multiplicity ConnectingMap::multiplicity() const {
  Multiplicity m;
  for (auto& row : m.entry)
    for (auto& v : row) v = 0;
  for (const Arrow& a : arrows) m.at(a.target, a.source) += a.count();
  return m;
}

StageSpec build_stage(unsigned n, const GrowthTables& t) {
  t.require_depth(n);
  StageSpec s;
  s.n = n;
  s.c_block.components = pow2(static_cast<unsigned long>(n) * t.params.d);
  s.c_block.base_dimension = Integer(2) * Integer(t.h[n]) * t.s[n];
  s.c_block.matrix_size = t.r_prod[n];
  s.b_block.components = 1;
  s.b_block.base_dimension = Integer(2) * Integer(t.h_prime[n]) * t.s_prime[n];
  s.b_block.matrix_size = t.r_prod[n];
  return s;
}

Multiplicity stage_multiplicity(unsigned n, const GrowthTables& t) {
  t.require_depth(n + 1);
  const Integer torus = pow2(static_cast<unsigned long>(n) * t.params.d);
  const Integer& dn = t.d_seq[n + 1];
  Multiplicity m;
  m.at(Block::C, Block::C) = torus + dn;
  m.at(Block::C, Block::B) = 1;
  m.at(Block::B, Block::C) = torus;
  m.at(Block::B, Block::B) = dn + 1;
  return m;
}

ConnectingMap build_connecting_map(unsigned n, const GrowthTables& t) {
  t.require_depth(n + 1);
  const TorusGroup torus(t.params.d, n);
  const Integer& dn = t.d_seq[n + 1];
  const Integer& dpn = t.d_prime_seq[n + 1];

  ConnectingMap map;
  map.level = n;
  map.d = t.params.d;
  map.arrows.reserve(2 * torus.size() + 5);

  for (Block target : {Block::C, Block::B}) {
    for (std::uint64_t z = 0; z < torus.size(); ++z)
      map.arrows.push_back(
          Arrow{Block::C, target, ArrowKind::PointEvalX, z, SlotSpan::torus(z)});
    map.arrows.push_back(Arrow{Block::B, target, ArrowKind::StarEval, 0, SlotSpan::star()});
    if (target == Block::C) {
      map.arrows.push_back(Arrow{Block::C, target, ArrowKind::CoordProjection, 0,
                                 SlotSpan::projections(1, dn)});
    } else {
      if (dpn < dn)
        map.arrows.push_back(Arrow{Block::B, target, ArrowKind::PointEvalY, 0,
                                   SlotSpan::projections(dpn + 1, dn)});
      map.arrows.push_back(Arrow{Block::B, target, ArrowKind::CoordProjection, 0,
                                 SlotSpan::projections(1, dpn)});
    }
  }
  return map;
}

namespace {

std::string signed_offset(const Integer& delta) {
  if (delta == 0) return "";
  return (delta > 0 ? "+" : "") + to_string(delta);
}

}  // namespace

CheckReport check_unital(const ConnectingMap& map, const GrowthTables& t) {
  CheckReport rep;
  const unsigned n = map.level;
  t.require_depth(n + 1);
  const Integer& l_next = t.l[n + 1];
  rep.record(t.r_prod[n] * l_next == t.r_prod[n + 1],
             "r(" + std::to_string(n) + ") l(" + std::to_string(n + 1) + ") = " +
                 to_string(t.r_prod[n]) + " * " + to_string(l_next) + " = r(" +
                 std::to_string(n + 1) + ") = " + to_string(t.r_prod[n + 1]));
  const Multiplicity m = map.multiplicity();
  for (Block target : {Block::C, Block::B}) {
    const Integer total = m.row_sum(target);
    if (total == l_next) {
      rep.record(true, to_string(target) + "-target total l(n+1) = " + to_string(l_next));
    } else {
      rep.record(false, to_string(target) + "-target total " + to_string(total) + " (l(n+1)" +
                            signed_offset(total - l_next) + "), expected l(n+1) = " +
                            to_string(l_next));
    }
  }
  return rep;
}

CheckReport check_slot_coverage(const ConnectingMap& map, const GrowthTables& t) {
  CheckReport rep;
  const unsigned n = map.level;
  t.require_depth(n + 1);
  const TorusGroup torus(t.params.d, n);
  const Integer& dn = t.d_seq[n + 1];
  const Integer& dpn = t.d_prime_seq[n + 1];

  for (Block target : {Block::C, Block::B}) {
    const std::string tag = to_string(target) + "-target ";
    std::vector<std::uint64_t> torus_points;
    std::vector<const Arrow*> runs;
    std::size_t stars = 0;
    Integer proj_c = 0, proj_b = 0, eval_y = 0, eval_x = 0, star_eval = 0;
    bool labels_ok = true;
    for (const Arrow& a : map.arrows) {
      if (a.target != target) continue;
      switch (a.slot.family) {
        case SlotFamily::Torus: torus_points.push_back(a.slot.torus_point); break;
        case SlotFamily::Star: ++stars; break;
        case SlotFamily::Projection: runs.push_back(&a); break;
      }
      switch (a.kind) {
        case ArrowKind::CoordProjection:
          (a.source == Block::C ? proj_c : proj_b) += a.count();
          labels_ok = labels_ok && a.slot.family == SlotFamily::Projection &&
                      a.source == target;
          break;
        case ArrowKind::PointEvalY:
          eval_y += a.count();
          labels_ok = labels_ok && a.source == Block::B && target == Block::B &&
                      a.slot.family == SlotFamily::Projection;
          break;
        case ArrowKind::PointEvalX:
          eval_x += a.count();
          labels_ok = labels_ok && a.source == Block::C && a.slot.family == SlotFamily::Torus &&
                      a.eval_point == a.slot.torus_point;
          break;
        case ArrowKind::StarEval:
          star_eval += a.count();
          labels_ok = labels_ok && a.source == Block::B && a.slot.family == SlotFamily::Star;
          break;
      }
    }

    const auto hist = kernels::parallel::torus_histogram(torus_points, torus.size());
    const bool torus_once =
        std::all_of(hist.begin(), hist.end(), [](std::uint32_t c) { return c == 1; }) &&
        torus_points.size() == torus.size();
    rep.record(torus_once, tag + "torus slots Z_{2^n}^d each used once");
    rep.record(stars == 1, tag + "star slot used once");

    std::sort(runs.begin(), runs.end(),
              [](const Arrow* a, const Arrow* b) { return a->slot.first < b->slot.first; });
    Integer next = 1;
    bool contiguous = true;
    for (const Arrow* a : runs) {
      if (a->slot.first != next || a->slot.last < a->slot.first) contiguous = false;
      next = a->slot.last + 1;
    }
    rep.record(contiguous && next == dn + 1,
               tag + "projection slots {1..d(n+1)} partitioned exactly");

    rep.record(labels_ok, tag + "arrow kinds carry consistent sources and slots");
    rep.record(eval_x == torus.size(), tag + "pointEvalX count 2^{nd}");
    rep.record(star_eval == 1, tag + "starEval count 1");
    if (target == Block::C) {
      rep.record(proj_c == dn && proj_b == 0 && eval_y == 0,
                 tag + "coordProjection count d(n+1) = " + to_string(dn));
    } else {
      rep.record(proj_b == dpn && proj_c == 0, tag + "coordProjection count d'(n+1) = " +
                                                   to_string(dpn));
      rep.record(eval_y == dn - dpn, tag + "pointEvalY count d(n+1) - d'(n+1) = " +
                                         to_string(Integer(dn - dpn)));
    }
  }
  return rep;
}

Multiplicity compose_multiplicities(unsigned m, unsigned n, const GrowthTables& t) {
  if (m > n) throw PreconditionError("compose_multiplicities requires m <= n");
  t.require_depth(n);
  Multiplicity out = Multiplicity::identity();
  for (unsigned k = m; k < n; ++k) out = stage_multiplicity(k, t).after(out);
  return out;
}

}  // namespace ahrc
