#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ahrc/kernels.hpp"
#include "arrow_key.hpp"

namespace ahrc::kernels {

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

std::vector<std::uint32_t> torus_histogram(std::span<const std::uint64_t> points,
                                           std::uint64_t size) {
  std::vector<std::uint32_t> hist(size, 0);
  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> local(size, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const std::uint64_t p = points[static_cast<std::size_t>(i)];
      if (p < size) ++local[p];
    }
#pragma omp critical
    for (std::uint64_t k = 0; k < size; ++k) hist[k] += local[k];
  }
  return hist;
}

std::optional<std::size_t> first_unmatched_image(const std::vector<Arrow>& arrows,
                                                 const TorusGroup& torus, std::uint64_t shift) {
  const auto count = static_cast<std::int64_t>(arrows.size());
  std::vector<detail::ArrowKey> originals(arrows.size()), images(arrows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    originals[i] = detail::key_of(arrows[i]);
    images[i] = detail::image_of(arrows[i], torus, shift);
  }
  std::vector<detail::ArrowKey> sorted_images = images;
  std::sort(originals.begin(), originals.end());
  std::sort(sorted_images.begin(), sorted_images.end());

  std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i < first && detail::count_in(originals, images[i]) !=
                         detail::count_in(sorted_images, images[i]))
      first = i;
  }
  if (first == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return static_cast<std::size_t>(first);
}

DenseSquareZero square_zero_product(const DenseSquareZero& a, const DenseSquareZero& b) {
  const auto size = static_cast<std::int64_t>(a.size());
  DenseSquareZero c(a.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < size; ++s) {
    std::int64_t acc = 0;
    std::int64_t t = s;
    while (true) {
      acc += a[t] * b[s ^ t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
    c[s] = acc;
  }
  return c;
}

}  // namespace parallel
}  // namespace ahrc::kernels
