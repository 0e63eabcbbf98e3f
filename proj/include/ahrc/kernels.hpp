#pragma once

// Data-parallel inner loops. Each kernel exists twice: a plain serial
// reference kept for testing, and an OpenMP version used by the library.
// Both return identical results; failure indices are always the smallest
// failing index regardless of scheduling.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ahrc/torus.hpp"
#include "ahrc/tower.hpp"

namespace ahrc::kernels {

/// Dense coefficients of an element of Z[x_1..x_k]/(x_i^2), indexed by the
/// bitmask of the monomial.
using DenseSquareZero = std::vector<std::int64_t>;

namespace serial {

/// Occurrences of each point of a torus with `size` elements.
std::vector<std::uint32_t> torus_histogram(std::span<const std::uint64_t> points,
                                           std::uint64_t size);

/// Index of the first arrow whose image under the slot shift by `shift`
/// (and the matching relabelling of evaluation points) breaks equality of
/// the arrow multiset.
std::optional<std::size_t> first_unmatched_image(const std::vector<Arrow>& arrows,
                                                 const TorusGroup& torus, std::uint64_t shift);

/// Product in the square-zero ring: c[S] = sum over T subset of S of a[T] b[S\T].
DenseSquareZero square_zero_product(const DenseSquareZero& a, const DenseSquareZero& b);

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> torus_histogram(std::span<const std::uint64_t> points,
                                           std::uint64_t size);

std::optional<std::size_t> first_unmatched_image(const std::vector<Arrow>& arrows,
                                                 const TorusGroup& torus, std::uint64_t shift);

DenseSquareZero square_zero_product(const DenseSquareZero& a, const DenseSquareZero& b);

}  // namespace parallel

/// Number of OpenMP threads available (1 without OpenMP).
int thread_count();

}  // namespace ahrc::kernels
