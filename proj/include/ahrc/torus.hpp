#pragma once

#include <cstdint>
#include <vector>

#include "ahrc/numeric.hpp"

namespace ahrc {

/// Element of Z^d.
using GroupElement = std::vector<std::int64_t>;

/// The finite group Z_{2^bits}^d with elements packed into one word:
/// coordinate i occupies bits [bits*i, bits*(i+1)).
class TorusGroup {
 public:
  TorusGroup(unsigned d, unsigned bits);

  unsigned dimension() const { return d_; }
  unsigned bits() const { return bits_; }
  std::uint64_t size() const { return std::uint64_t{1} << (d_ * bits_); }

  std::uint64_t pack(const std::vector<std::uint64_t>& coords) const;
  std::vector<std::uint64_t> unpack(std::uint64_t point) const;

  /// Coordinatewise reduction of g modulo 2^bits.
  std::uint64_t reduce(const GroupElement& g) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  /// Image of a point of Z_{2^{bits+1}}^d under coordinatewise reduction.
  std::uint64_t project_from(const TorusGroup& finer, std::uint64_t point) const;

 private:
  unsigned d_;
  unsigned bits_;
  std::uint64_t coord_mask_;
};

}  // namespace ahrc
