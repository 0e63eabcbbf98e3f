#include "ahrc/action.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ahrc/kernels.hpp"

namespace ahrc {

SlotSpan LevelPermutation::apply(const SlotSpan& slot) const {
  if (slot.family != SlotFamily::Torus) return slot;
  return SlotSpan::torus(torus().add(slot.torus_point, shift));
}

std::vector<std::uint64_t> LevelPermutation::torus_images() const {
  const TorusGroup group = torus();
  std::vector<std::uint64_t> out(group.size());
  for (std::uint64_t z = 0; z < group.size(); ++z) out[z] = group.add(z, shift);
  return out;
}

LevelPermutation LevelPermutation::compose(const LevelPermutation& other) const {
  if (other.level != level || other.d != d)
    throw PreconditionError("composing permutations of different levels");
  LevelPermutation out = *this;
  out.shift = torus().add(shift, other.shift);
  return out;
}

LevelPermutation level_permutation(const GroupElement& g, unsigned n) {
  if (n == 0) throw PreconditionError("slot permutations are defined for n >= 1");
  if (g.empty()) throw PreconditionError("group element must have d >= 1 coordinates");
  LevelPermutation p;
  p.level = n;
  p.d = static_cast<unsigned>(g.size());
  p.shift = p.torus().reduce(g);
  return p;
}

std::vector<LevelPermutation> tensor_permutation(const GroupElement& g, unsigned n) {
  std::vector<LevelPermutation> out;
  for (unsigned k = 1; k <= n; ++k) out.push_back(level_permutation(g, k));
  return out;
}

namespace {

std::string describe(const Arrow& a) {
  std::ostringstream os;
  os << to_string(a.kind) << " " << to_string(a.source) << "->" << to_string(a.target)
     << " slot " << to_string(a.slot.family);
  if (a.slot.family == SlotFamily::Torus) os << "#" << a.slot.torus_point;
  if (a.slot.family == SlotFamily::Projection)
    os << "[" << to_string(a.slot.first) << ".." << to_string(a.slot.last) << "]";
  if (a.kind == ArrowKind::PointEvalX) os << " eval z#" << a.eval_point;
  return os.str();
}

std::string describe(const GroupElement& g) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  os << ")";
  return os.str();
}

}  // namespace

CheckReport check_equivariance(unsigned n, const GroupElement& g, const ConnectingMap& map) {
  if (map.level != n) throw PreconditionError("map is not the level-n connecting map");
  if (g.size() != map.d) throw PreconditionError("group element has wrong dimension");
  CheckReport rep;
  const LevelPermutation w = level_permutation(g, n + 1);
  const TorusGroup torus = w.torus();
  const auto bad = kernels::parallel::first_unmatched_image(map.arrows, torus, w.shift);
  const std::string tag = "alpha_g Gamma = Gamma alpha_g at n=" + std::to_string(n) +
                          ", g=" + describe(g);
  if (bad) {
    rep.record(false, tag + ": image of arrow " + std::to_string(*bad) + " (" +
                          describe(map.arrows[*bad]) + ") absent");
  } else {
    rep.record(true, tag);
  }
  return rep;
}

namespace {

/// 2-adic valuation; zero has infinite valuation (returned as 64).
unsigned valuation2(std::int64_t v) {
  if (v == 0) return 64;
  return static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(v)));
}

}  // namespace

OuternessWitness outerness_witness(const GroupElement& g) {
  if (g.empty()) throw PreconditionError("group element must have d >= 1 coordinates");
  if (std::all_of(g.begin(), g.end(), [](std::int64_t v) { return v == 0; }))
    throw PreconditionError("outerness witness requires g != 0");
  unsigned min_val = 64;
  for (std::int64_t v : g) min_val = std::min(min_val, valuation2(v));
  OuternessWitness w;
  w.g = g;
  w.n = min_val + 1;
  const TorusGroup group(static_cast<unsigned>(g.size()), w.n);
  w.base_component.assign(g.size(), 0);
  w.translated_component = group.unpack(group.reduce(g));
  return w;
}

CheckReport check_outerness_witness(const OuternessWitness& w) {
  CheckReport rep;
  const auto d = static_cast<unsigned>(w.g.size());
  const TorusGroup at_n(d, w.n);
  rep.record(w.base_component == std::vector<std::uint64_t>(d, 0),
             "p_n supported on component 0");
  rep.record(w.translated_component == at_n.unpack(at_n.reduce(w.g)),
             "alpha_g(p_n) supported on component g mod 2^n");
  rep.record(w.translated_component != w.base_component,
             "components differ, so alpha_g(p_n) is orthogonal to p_n");
  const TorusGroup below(d, w.n - 1);
  rep.record(below.reduce(w.g) == 0, "g lies in 2^{n-1} Z^d (n minimal)");
  return rep;
}

}  // namespace ahrc
