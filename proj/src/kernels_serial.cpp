#include <algorithm>

#include "ahrc/kernels.hpp"
#include "arrow_key.hpp"

namespace ahrc::kernels::serial {

std::vector<std::uint32_t> torus_histogram(std::span<const std::uint64_t> points,
                                           std::uint64_t size) {
  std::vector<std::uint32_t> hist(size, 0);
  for (std::uint64_t p : points)
    if (p < size) ++hist[p];
  return hist;
}

std::optional<std::size_t> first_unmatched_image(const std::vector<Arrow>& arrows,
                                                 const TorusGroup& torus, std::uint64_t shift) {
  std::vector<detail::ArrowKey> originals, images;
  originals.reserve(arrows.size());
  images.reserve(arrows.size());
  for (const Arrow& a : arrows) {
    originals.push_back(detail::key_of(a));
    images.push_back(detail::image_of(a, torus, shift));
  }
  std::vector<detail::ArrowKey> sorted_images = images;
  std::sort(originals.begin(), originals.end());
  std::sort(sorted_images.begin(), sorted_images.end());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (detail::count_in(originals, images[i]) != detail::count_in(sorted_images, images[i]))
      return i;
  }
  return std::nullopt;
}

DenseSquareZero square_zero_product(const DenseSquareZero& a, const DenseSquareZero& b) {
  const std::size_t size = a.size();
  DenseSquareZero c(size, 0);
  for (std::size_t s = 0; s < size; ++s) {
    // enumerate submasks t of s, including 0
    std::size_t t = s;
    while (true) {
      c[s] += a[t] * b[s ^ t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
  }
  return c;
}

}  // namespace ahrc::kernels::serial
