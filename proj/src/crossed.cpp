#include "ahrc/crossed.hpp"

namespace ahrc {

namespace {

Integer torus_size(unsigned d, unsigned n) { return pow2(static_cast<unsigned long>(d) * n); }

}  // namespace

CrossedStageSpec build_crossed_stage(unsigned n, const GrowthTables& t) {
  t.require_depth(n);
  const unsigned d = t.params.d;
  CrossedStageSpec s;
  s.n = n;
  s.c_tilde.matrix_size = t.r_prod[n] * torus_size(d, n);
  s.c_tilde.base_dimension = Integer(2) * Integer(t.h[n]) * t.s[n];
  s.c_tilde.torus_factor = d;
  s.b_tilde.matrix_size = t.r_prod[n];
  s.b_tilde.base_dimension = Integer(2) * Integer(t.h_prime[n]) * t.s_prime[n];
  s.b_tilde.torus_factor = d;
  return s;
}

CrossedConnectingMap crossed_connecting_map(unsigned n, const GrowthTables& t) {
  t.require_depth(n + 1);
  CrossedConnectingMap out;
  out.map = build_connecting_map(n, t);
  const unsigned d = t.params.d;
  const CrossedStageSpec from = build_crossed_stage(n, t);
  const CrossedStageSpec to = build_crossed_stage(n + 1, t);
  const Integer two_d = pow2(d);
  out.size_identities.record(
      to.c_tilde.matrix_size == from.c_tilde.matrix_size * t.l[n + 1] * two_d,
      "r(n+1) 2^{(n+1)d} = r(n) 2^{nd} l(n+1) 2^d: " + to_string(to.c_tilde.matrix_size) +
          " = " + to_string(from.c_tilde.matrix_size) + " * " + to_string(t.l[n + 1]) + " * " +
          to_string(two_d));
  out.size_identities.record(to.b_tilde.matrix_size == from.b_tilde.matrix_size * t.l[n + 1],
                             "r(n+1) = r(n) l(n+1) on the B~ block");
  out.size_identities.record(out.map.multiplicity() == stage_multiplicity(n, t),
                             "multiplicities equal the tower map's");
  out.size_identities.record(from.c_tilde.torus_factor == to.c_tilde.torus_factor &&
                                 from.b_tilde.torus_factor == to.b_tilde.torus_factor,
                             "C(T^d) factor carried identically");
  return out;
}

CrossedBound crossed_rc_upper(unsigned n, const GrowthTables& t) {
  t.require_depth(n);
  const Integer d(t.params.d);
  const Integer torus = torus_size(t.params.d, n);
  const Integer& r = t.r_prod[n];
  CrossedBound b;
  b.c_part = make_rational(Integer(t.h[n]) * t.s[n], torus * r) +
             make_rational(d, Integer(2) * torus * r);
  b.b_part = make_rational(Integer(t.h_prime[n]) * t.s_prime[n], r) +
             make_rational(d, Integer(2) * r);
  b.value = b.c_part >= b.b_part ? b.c_part : b.b_part;
  return b;
}

CrossedProjectionSymbol crossed_projection_symbol(unsigned m, unsigned n, const GrowthTables& t) {
  if (m < n) throw PreconditionError("projection symbol requires m >= n");
  t.require_depth(m);
  const Integer hp(t.h_prime[n]);
  CrossedProjectionSymbol p;
  p.m = m;
  p.n = n;
  const Integer torus_m = torus_size(t.params.d, m);
  p.c_tilde_trivial_rank = hp * t.s_prime[n] * t.r_prod[m] * torus_m;
  p.b_nontrivial_rank = hp * t.s_prime[m];
  p.b_trivial_rank = hp * t.s_prime[n] * t.r_prod[m] - hp * t.s_prime[m];
  p.c_tilde_trace = make_rational(p.c_tilde_trivial_rank, torus_m * t.r_prod[m]);
  p.b_tilde_trace = make_rational(p.b_nontrivial_rank + p.b_trivial_rank, t.r_prod[m]);
  return p;
}

CrossedTraceResult crossed_trace_check(unsigned n, unsigned m, const Integer& M,
                                       const std::vector<Rational>& lambdas,
                                       const GrowthTables& t) {
  if (m < n) throw PreconditionError("trace check requires m >= n");
  t.require_depth(m);
  const unsigned d = t.params.d;
  const Integer ratio = t.r_prod[m] / t.r_prod[n];
  // e1 has rank 2^{nd} M inside M_{2^{nd} r(n)}; each step multiplies by l 2^d
  const Integer e1_rank = M * torus_size(d, m) * ratio;
  const Integer e2_rank = M * ratio;
  CrossedTraceResult out;
  out.expected = make_rational(M, t.r_prod[n]);
  out.tr1 = make_rational(e1_rank, torus_size(d, m) * t.r_prod[m]);
  out.tr2 = make_rational(e2_rank, t.r_prod[m]);
  out.report.record(out.tr1 == out.tr2, "tr1(e~1) = tr2(e~2), so the trace is lambda-independent");
  for (const Rational& lambda : lambdas) {
    if (lambda < 0 || lambda > 1) throw PreconditionError("lambda must lie in [0,1]");
    const Rational value = lambda * out.tr1 + (Rational(1) - lambda) * out.tr2;
    out.samples.push_back({lambda, value});
    out.report.record(value == out.expected, "lambda=" + to_string(lambda) + ": trace " +
                                                 to_string(value) + " = M/r(n) = " +
                                                 to_string(out.expected));
  }
  return out;
}

WitnessReport crossed_find_witness(const Rational& rho, const GrowthTables& t) {
  return detail::find_witness_for(detail::crossed_side(t), rho, t);
}

}  // namespace ahrc
