#include "ahrc/verify.hpp"

#include <algorithm>

#include "ahrc/action.hpp"
#include "ahrc/comparison.hpp"
#include "ahrc/crossed.hpp"
#include "ahrc/tower.hpp"

namespace ahrc {

namespace {

std::vector<GroupElement> standard_elements(unsigned d) {
  std::vector<GroupElement> out;
  for (unsigned i = 0; i < d; ++i) {
    GroupElement e(d, 0);
    e[i] = 1;
    out.push_back(e);
  }
  if (d > 1) out.push_back(GroupElement(d, 1));
  return out;
}

void tower_suite(const GrowthTables& t, CheckReport& out) {
  const unsigned d = t.params.d;
  for (unsigned n = 0; n < t.depth; ++n) {
    const std::string at = " [level " + std::to_string(n) + "]";
    if (static_cast<unsigned long>(d) * n > kArrowLevelBits) {
      out.record(true, "arrow-level checks skipped: torus too large" + at);
      continue;
    }
    const ConnectingMap map = build_connecting_map(n, t);
    out.merge(check_unital(map, t));
    out.merge(check_slot_coverage(map, t));
    out.record(map.multiplicity() == stage_multiplicity(n, t),
               "arrow tally equals the sequence multiplicities" + at);
    for (const GroupElement& g : standard_elements(d)) out.merge(check_equivariance(n, g, map));
  }
  for (unsigned n = 0; n <= t.depth; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      const Multiplicity gamma = compose_multiplicities(m, n, t);
      const Integer expected = t.r_prod[n] / t.r_prod[m];
      out.record(gamma.row_sum(Block::C) == expected && gamma.row_sum(Block::B) == expected &&
                     expected * t.r_prod[m] == t.r_prod[n],
                 "Gamma_{" + std::to_string(n) + "," + std::to_string(m) + "} row sums = " +
                     to_string(expected));
    }
  }
}

void action_suite(const GrowthTables& t, CheckReport& out) {
  const unsigned d = t.params.d;
  for (const GroupElement& g : standard_elements(d)) {
    const OuternessWitness w = outerness_witness(g);
    out.merge(check_outerness_witness(w));
    out.record(w.n == 1, "generator outerness level is 1");
  }
  for (const GroupElement& g : standard_elements(d)) {
    for (const GroupElement& h : standard_elements(d)) {
      GroupElement sum(d);
      for (unsigned i = 0; i < d; ++i) sum[i] = g[i] + h[i];
      for (unsigned n = 1; n <= std::min(t.depth + 1, 8u); ++n) {
        if (static_cast<unsigned long>(d) * (n - 1) > kArrowLevelBits) break;
        out.record(level_permutation(sum, n) ==
                       level_permutation(g, n).compose(level_permutation(h, n)),
                   "action law at level " + std::to_string(n));
      }
    }
  }
}

void comparison_suite(const GrowthTables& t, CheckReport& out) {
  for (unsigned k = 1; k <= 10; ++k) {
    const ChernCertificate c = chern_certificate(k);
    out.record(c.product_is_one && c.min_embedding_rank == 2 * k,
               "c(L^{x" + std::to_string(k) + "}) inverse has degree " +
                   std::to_string(c.inverse_degree) + ", minimal rank " +
                   std::to_string(c.min_embedding_rank));
  }
  for (unsigned n = 0; n <= t.depth; ++n) {
    for (unsigned m = n; m <= t.depth; ++m) {
      const ProjectionSymbol p = projection_symbol(m, n, t);
      out.record(p.trace_value() == Rational(Integer(t.h[n]) * t.s[n]),
                 "trace of p_{" + std::to_string(m) + "," + std::to_string(n) + "} = h(n)s(n)");
    }
  }
  if (t.regime() != Regime::FF) return;
  const Rational h(Integer(t.h[0]));
  for (unsigned n = 0; n <= t.depth; ++n) {
    const Rational upper = stage_rc_upper(n, t);
    out.record(upper == h * t.r_partial[n], "rc upper bound = h r_n at level " + std::to_string(n));
    if (n > 0)
      out.record(upper <= stage_rc_upper(n - 1, t),
                 "rc upper bound nonincreasing at level " + std::to_string(n));
  }
  if (t.depth >= 1 && t.d_seq[t.depth] >= 2) {
    const Rational gap = stage_rc_upper(t.depth, t) - t.params.r.value();
    const Rational bound = h * t.kappa() / Rational(t.d_seq[t.depth] - 1);
    out.record(gap <= bound, "rc upper bound minus r = " + to_string(gap) + " <= " + to_string(bound));
  }
}

void crossed_suite(const GrowthTables& t, CheckReport& out) {
  for (unsigned n = 0; n < t.depth; ++n) {
    if (static_cast<unsigned long>(t.params.d) * n > kArrowLevelBits) break;
    out.merge(crossed_connecting_map(n, t).size_identities);
  }
  for (unsigned n = 1; n <= t.depth; ++n) {
    const CrossedBound now = crossed_rc_upper(n, t);
    const CrossedBound before = crossed_rc_upper(n - 1, t);
    if (t.regime() != Regime::II || t.h_rule == "n+1")
      out.record(now.c_part < before.c_part,
                 "crossed C~-part strictly decreasing at level " + std::to_string(n));
  }
  if (t.params.r_prime.is_infinite() || t.depth == 0) return;
  const unsigned N = t.depth;
  const Rational hp(Integer(t.h_prime[N]));
  const CrossedBound b = crossed_rc_upper(N, t);
  const Rational excess = b.b_part - t.params.r_prime.value();
  const Rational bound =
      hp * (t.gamma[N] - t.kappa_prime()) + make_rational(Integer(t.params.d), 2 * t.r_prod[N]);
  out.record(excess >= 0 && excess <= bound,
             "crossed B~-part minus r' = " + to_string(excess) + " in [0, " + to_string(bound) + "]");
}

}  // namespace

CheckReport verify_all(const GrowthTables& t) {
  CheckReport out = check_tables(t);
  if (!out.ok) return out;
  tower_suite(t, out);
  action_suite(t, out);
  comparison_suite(t, out);
  crossed_suite(t, out);
  return out;
}

}  // namespace ahrc
