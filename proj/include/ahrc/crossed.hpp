#pragma once

// Stage shapes of the crossed product by Z^d:
//   M_{r(n)}(C(X_n)) (x) M_{2^{nd}} (x) C(T^d)  (+)  M_{r(n)}(C(Y_n)) (x) C(T^d)
// with connecting maps that repeat the tower's slot census tensored with
// identities on M_{2^{nd+d}} and C(T^d).

#include <vector>

#include "ahrc/check.hpp"
#include "ahrc/comparison.hpp"
#include "ahrc/sequences.hpp"
#include "ahrc/tower.hpp"

namespace ahrc {

struct CrossedBlockShape {
  Integer matrix_size;
  Integer base_dimension;
  unsigned torus_factor = 0;
  friend bool operator==(const CrossedBlockShape&, const CrossedBlockShape&) = default;
};

struct CrossedStageSpec {
  unsigned n = 0;
  CrossedBlockShape c_tilde;
  CrossedBlockShape b_tilde;
};

CrossedStageSpec build_crossed_stage(unsigned n, const GrowthTables& tables);

struct CrossedConnectingMap {
  ConnectingMap map;            // same slot census as the tower map
  CheckReport size_identities;  // r(n+1) 2^{(n+1)d} = r(n) 2^{nd} l(n+1) 2^d, etc.
};

CrossedConnectingMap crossed_connecting_map(unsigned n, const GrowthTables& tables);

struct CrossedBound {
  Rational c_part;  // h s(n)/(2^{nd} r(n)) + d/(2^{nd+1} r(n))
  Rational b_part;  // h' s'(n)/r(n) + d/(2 r(n))
  Rational value;   // max of the two
};

CrossedBound crossed_rc_upper(unsigned n, const GrowthTables& tables);

/// Rank data of the crossed distinguished pair (p~_{m,n}, q~_{m,n}).
struct CrossedProjectionSymbol {
  unsigned m = 0, n = 0;
  Integer c_tilde_trivial_rank;    // h'(n)s'(n) r(m) 2^{dm}
  Integer b_nontrivial_rank;       // h'(n)s'(m) on L^{x h'(n)s'(m)}
  Integer b_trivial_rank;          // h'(n)s'(n) r(m) - h'(n)s'(m)
  Rational c_tilde_trace;
  Rational b_tilde_trace;
};

CrossedProjectionSymbol crossed_projection_symbol(unsigned m, unsigned n,
                                                  const GrowthTables& tables);

struct TraceSample {
  Rational lambda;
  Rational value;
};

struct CrossedTraceResult {
  Rational expected;  // M / r(n)
  Rational tr1;       // normalized trace of e~1 on M_{2^{dm} r(m)}
  Rational tr2;       // normalized trace of e~2 on M_{r(m)}
  std::vector<TraceSample> samples;
  CheckReport report;
};

/// Trace of Gamma~_{m,n}(e) for the standard pair (e1 trivial of rank
/// 2^{nd} M, e2 trivial of rank M) at each sampled lambda in [0,1].
CrossedTraceResult crossed_trace_check(unsigned n, unsigned m, const Integer& M,
                                       const std::vector<Rational>& lambdas,
                                       const GrowthTables& tables);

/// Canonical witness for the crossed product. Finite r' requires rho < r'.
WitnessReport crossed_find_witness(const Rational& rho, const GrowthTables& tables);

}  // namespace ahrc
