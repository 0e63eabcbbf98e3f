#include "ahrc/torus.hpp"

namespace ahrc {

TorusGroup::TorusGroup(unsigned d, unsigned bits)
    : d_(d), bits_(bits), coord_mask_(bits == 0 ? 0 : (std::uint64_t{1} << bits) - 1) {
  if (d == 0) throw PreconditionError("torus dimension must be positive");
  if (static_cast<unsigned long>(d) * bits > 62)
    throw PreconditionError("Z_{2^n}^d too large to enumerate (n*d > 62)");
}

std::uint64_t TorusGroup::pack(const std::vector<std::uint64_t>& coords) const {
  if (coords.size() != d_) throw PreconditionError("coordinate count differs from d");
  std::uint64_t out = 0;
  for (unsigned i = 0; i < d_; ++i) out |= (coords[i] & coord_mask_) << (bits_ * i);
  return out;
}

std::vector<std::uint64_t> TorusGroup::unpack(std::uint64_t point) const {
  std::vector<std::uint64_t> out(d_);
  for (unsigned i = 0; i < d_; ++i) out[i] = (point >> (bits_ * i)) & coord_mask_;
  return out;
}

std::uint64_t TorusGroup::reduce(const GroupElement& g) const {
  if (g.size() != d_) throw PreconditionError("group element has wrong dimension");
  std::uint64_t out = 0;
  for (unsigned i = 0; i < d_; ++i) {
    // two's complement reduction is exact modulo a power of two
    const auto c = static_cast<std::uint64_t>(g[i]) & coord_mask_;
    out |= c << (bits_ * i);
  }
  return out;
}

std::uint64_t TorusGroup::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < d_; ++i) {
    const unsigned shift = bits_ * i;
    const std::uint64_t c = (((a >> shift) & coord_mask_) + ((b >> shift) & coord_mask_)) & coord_mask_;
    out |= c << shift;
  }
  return out;
}

std::uint64_t TorusGroup::project_from(const TorusGroup& finer, std::uint64_t point) const {
  if (finer.d_ != d_ || finer.bits_ < bits_)
    throw PreconditionError("projection requires a finer torus of the same dimension");
  std::uint64_t out = 0;
  for (unsigned i = 0; i < d_; ++i) {
    const std::uint64_t c = (point >> (finer.bits_ * i)) & coord_mask_;
    out |= c << (bits_ * i);
  }
  return out;
}

}  // namespace ahrc
