#pragma once

// Whole-workbench invariant suite over one set of growth tables.

#include "ahrc/check.hpp"
#include "ahrc/sequences.hpp"

namespace ahrc {

/// Levels whose torus Z_{2^n}^d has more than 2^kArrowLevelBits points are
/// skipped by the arrow-level checks (the multiplicity checks still run).
inline constexpr unsigned kArrowLevelBits = 20;

/// Runs, in order: table invariants, tower unitality and slot coverage,
/// composed multiplicities, equivariance under the standard generators and
/// (1,...,1), outerness witnesses, the Chern identity, rc upper bounds, and
/// the crossed-product size identities and bounds. Stops after the table
/// checks if those fail, since later suites assume consistent tables.
CheckReport verify_all(const GrowthTables& tables);

}  // namespace ahrc
