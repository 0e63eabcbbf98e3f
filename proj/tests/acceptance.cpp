// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ahrc/action.hpp"
#include "ahrc/comparison.hpp"
#include "ahrc/crossed.hpp"
#include "ahrc/io.hpp"
#include "ahrc/verify.hpp"
#include "oracle.hpp"

using namespace ahrc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

TargetParams targets(const std::string& r, const std::string& rp, unsigned d = 1) {
  TargetParams p;
  p.r = ExtendedRational::parse(r);
  p.r_prime = ExtendedRational::parse(rp);
  p.d = d;
  return p;
}

std::vector<GroupElement> generators(unsigned d) {
  std::vector<GroupElement> out;
  for (unsigned i = 0; i < d; ++i) {
    GroupElement e(d, 0);
    e[i] = 1;
    out.push_back(e);
  }
  out.push_back(GroupElement(d, 1));
  return out;
}

Outcome sequence_oracle() {
  Outcome o;
  const std::vector<std::pair<Rational, unsigned>> cases{
      {make_rational(1, 2), 1}, {make_rational(3, 4), 1}, {make_rational(1, 2), 2}, {make_rational(9, 10), 3}};
  for (const auto& [kappa, d] : cases) {
    const DSequence s = generate_d(kappa, d, 6);
    const oracle::Sequences scan = oracle::scan_sequences(kappa, kappa, d, 6);
    o.require(s.d_seq == scan.d, "d differs from scan for kappa=" + to_string(kappa));
    o.require(s.r_partial == scan.r_partial, "r_n differs from scan for kappa=" + to_string(kappa));
  }
  const DSequence half = generate_d(make_rational(1, 2), 1, 6);
  o.require(half.d_seq[1] == 3 && half.d_seq[2] == 16 && half.d_seq[3] == 476, "d(1..3) != 3,16,476");
  o.require(half.r_partial[2] == make_rational(48, 95), "r_2 != 48/95");
  return o;
}

Outcome sequence_invariants() {
  Outcome o;
  for (const auto& [r, rp] : std::vector<std::pair<const char*, const char*>>{
           {"1/2", "1/3"}, {"3/4", "1/4"}, {"9/10", "9/10"}}) {
    const GrowthTables t = build_tables(targets(r, rp), 8);
    const CheckReport rep = check_tables(t);
    o.require(rep.ok, rep.first_failure);
    for (unsigned n = 1; n <= 8; ++n) {
      o.require(t.r_partial[n] < t.r_partial[n - 1] && t.r_partial[n] > t.kappa(), "r_n ordering");
      if (n >= 2) o.require(t.d_seq[n] >= t.d_seq[n - 1], "d nondecreasing");
      o.require(t.d_prime_seq[n] >= 1 && t.d_prime_seq[n] <= t.d_seq[n], "1 <= d' <= d");
      const Rational gap = t.gamma[n] * t.rho[n] - t.kappa_prime();
      o.require(gap >= 0 && gap < make_rational(Integer(1), t.l[n]), "gamma rho gap");
    }
    o.require(t.r_partial[8] - t.kappa() <= t.kappa() / Rational(t.d_seq[8] - 1), "r_N - kappa bound");
  }
  return o;
}

Outcome tower_soundness() {
  Outcome o;
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 8);
  for (unsigned n = 0; n < 8; ++n) {
    const ConnectingMap m = build_connecting_map(n, t);
    const CheckReport u = check_unital(m, t);
    o.require(u.ok, u.first_failure);
    const CheckReport c = check_slot_coverage(m, t);
    o.require(c.ok, c.first_failure);
  }
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned m = 0; m <= n; ++m) {
      const Multiplicity g = compose_multiplicities(m, n, t);
      const Integer ratio = t.r_prod[n] / t.r_prod[m];
      o.require(g.row_sum(Block::C) == ratio && g.row_sum(Block::B) == ratio,
                "row sums of Gamma_{" + std::to_string(n) + "," + std::to_string(m) + "}");
    }
  return o;
}

Outcome equivariance() {
  Outcome o;
  for (unsigned d : {1u, 2u}) {
    const GrowthTables t = build_tables(targets("1/2", "1/3", d), 7);
    for (unsigned n = 0; n <= 6; ++n) {
      const ConnectingMap m = build_connecting_map(n, t);
      for (const GroupElement& g : generators(d)) {
        const CheckReport rep = check_equivariance(n, g, m);
        o.require(rep.ok, rep.first_failure);
      }
    }
    ConnectingMap bad = build_connecting_map(2, t);
    std::swap(bad.arrows[0].slot, bad.arrows[1].slot);
    o.require(!check_equivariance(2, generators(d).back(), bad).ok, "mutated map passed");
  }
  return o;
}

Outcome outerness() {
  Outcome o;
  for (unsigned d : {1u, 2u}) {
    GroupElement g(d, -4);
    while (true) {
      bool zero = true;
      unsigned v = 64;
      for (auto x : g) {
        zero = zero && x == 0;
        if (x != 0) v = std::min<unsigned>(v, std::countr_zero(static_cast<std::uint64_t>(x)));
      }
      if (!zero) {
        const OuternessWitness w = outerness_witness(g);
        o.require(w.n == v + 1 && check_outerness_witness(w).ok, "outerness level");
      }
      unsigned i = 0;
      while (i < d && g[i] == 4) g[i++] = -4;
      if (i == d) break;
      ++g[i];
    }
  }
  return o;
}

Outcome chern() {
  Outcome o;
  for (unsigned k = 1; k <= 10; ++k) {
    const ChernCertificate c = chern_certificate(k);
    o.require(c.product_is_one, "ring identity for k=" + std::to_string(k));
    o.require(chern_min_embedding_rank(k) == 2 * k, "rank != 2k for k=" + std::to_string(k));
  }
  return o;
}

const LedgerEntry* entry_named(const WitnessReport& w, const std::string& name) {
  for (const LedgerEntry& e : w.ledger)
    if (e.name == name) return &e;
  return nullptr;
}

Outcome tower_witness() {
  Outcome o;
  const GrowthTables t = build_tables(targets("1/2", "1/2"), 3);
  const WitnessReport w = find_witness(make_rational(1, 4), t);
  o.require(w.n == 1 && w.M == 7, "witness is not (1, 7)");
  o.require(w.valid(), "ledger does not hold");
  const LedgerEntry* rank2 = entry_named(w, "rank < h s(origin) r(m) + h s(m)[m=2]");
  const LedgerEntry* trace2 = entry_named(w, "trace gap: rank/r(m) > tau(pair) + rho[m=2]");
  const LedgerEntry* rank3 = entry_named(w, "rank < h s(origin) r(m) + h s(m)[m=3]");
  o.require(rank2 && rank2->lhs == 133 && rank2->rhs == 143, "m=2 rank 133 < 143");
  o.require(trace2 && trace2->lhs == make_rational(7, 5) && trace2->rhs == make_rational(5, 4),
            "m=2 trace 7/5 > 5/4");
  o.require(rank3 && rank3->lhs == 63973 && rank3->rhs == 68543, "m=3 rank 63973 < 68543");

  const io::Json cert = io::witness_to_json(w);
  o.require(verify_witness(io::witness_from_json(cert)).ok, "emitted certificate rejected");
  // every scalar leaf of the certificate, changed alone, must be rejected
  const io::Json flat = cert.flatten();
  std::size_t mutants = 0;
  for (auto it = flat.begin(); it != flat.end(); ++it) {
    if (it.key() == "/formatVersion" || it.key() == "/kind") continue;
    io::Json mutated = flat;
    io::Json& leaf = mutated[it.key()];
    if (leaf.is_boolean()) {
      leaf = !leaf.get<bool>();
    } else if (leaf.is_number_unsigned()) {
      leaf = leaf.get<std::uint64_t>() + 1;
    } else if (leaf.is_string()) {
      const std::string s = leaf.get<std::string>();
      if (it.key().ends_with("/den") || it.key().ends_with("/num") || it.key() == "/M")
        leaf = to_string(Integer(Integer(s, 10) + 1));
      else
        leaf = s + "'";
    } else {
      continue;
    }
    ++mutants;
    bool rejected = false;
    try {
      rejected = !verify_witness(io::witness_from_json(mutated.unflatten())).ok;
    } catch (const VerificationError&) {
      rejected = true;
    } catch (const PreconditionError&) {
      rejected = true;
    }
    o.require(rejected, "mutation of " + it.key() + " accepted");
  }
  o.require(mutants > 50, "too few mutants generated");
  return o;
}

Outcome crossed_convergence() {
  Outcome o;
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 8);
  const Rational r_prime = make_rational(1, 3);
  for (unsigned n = 1; n <= 8; ++n)
    o.require(crossed_rc_upper(n, t).c_part < crossed_rc_upper(n - 1, t).c_part,
              "C~-part not strictly decreasing at n=" + std::to_string(n));
  const CrossedBound b = crossed_rc_upper(8, t);
  const Rational excess = b.b_part - r_prime;
  const Rational bound = Rational(Integer(t.h_prime[8])) * (t.gamma[8] - t.kappa_prime()) +
                         make_rational(Integer(t.params.d), 2 * t.r_prod[8]);
  o.require(excess >= 0, "B~-part below r'");
  o.require(excess <= bound, "B~-part exceeds r' + h' gamma-gap + d/(2r(N))");
  // C~-part <= (h r_N + d/2) / 2^{Nd}, a bound that tends to 0
  const Rational vanishing = (Rational(Integer(t.h[8])) * t.r_partial[8] + make_rational(Integer(t.params.d), 2)) /
                             Rational(pow2(8ul * t.params.d));
  o.require(b.c_part <= vanishing, "C~-part above (h r_N + d/2)/2^{Nd}");
  return o;
}

Outcome crossed_witness() {
  Outcome o;
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 4);
  const WitnessReport w = crossed_find_witness(make_rational(1, 4), t);
  o.require(w.n == 2 && w.M == 119, "crossed witness is not (2, 119)");
  o.require(w.valid() && verify_witness(w).ok, "crossed ledger does not replay");
  const std::vector<Rational> lambdas{0, make_rational(1, 4), make_rational(1, 2), 1};
  for (unsigned m = w.n; m <= t.depth; ++m) {
    const CrossedTraceResult r = crossed_trace_check(w.n, m, w.M, lambdas, t);
    o.require(r.report.ok, r.report.first_failure);
  }
  return o;
}

Outcome infinite_regimes() {
  Outcome o;
  for (const auto& [r, rp] : std::vector<std::pair<const char*, const char*>>{{"inf", "5/2"}, {"inf", "inf"}}) {
    const GrowthTables t = build_tables(targets(r, rp), 6);
    o.require(t.h[0] == 1, "h(0) != 1");
    for (unsigned n = 1; n <= 6; ++n)
      o.require(make_rational(Integer(t.h[n]), pow2(n)) <= make_rational(Integer(t.h[n - 1]), pow2(n - 1)),
                "h(n)/2^{nd} increased");
    o.require(make_rational(Integer(t.h[6]), pow2(6)) < make_rational(1, 4), "h(6)/2^6 >= 1/4");
    for (unsigned n = 0; n < 6; ++n) {
      const CheckReport u = check_unital(build_connecting_map(n, t), t);
      o.require(u.ok, u.first_failure);
    }
    for (int rho : {1, 2}) {
      const WitnessReport w = find_witness(Rational(rho), t);
      o.require(w.valid() && verify_witness(w).ok, std::string("tower witness for ") + r + "," + rp);
      const WitnessReport c = crossed_find_witness(Rational(rho), t);
      o.require(c.valid() && verify_witness(c).ok, std::string("crossed witness for ") + r + "," + rp);
    }
  }
  return o;
}

Outcome export_round_trip() {
  Outcome o;
  for (unsigned d : {1u, 2u}) {
    const GrowthTables t = build_tables(targets("1/2", "1/3", d), 4);
    const io::Diagram dg = io::build_diagram(t, 0, 4);
    const io::Diagram back = io::diagram_from_json(io::Json::parse(io::export_diagram(t, 0, 4, "json")));
    o.require(back == dg, "JSON round trip differs");
    o.require(io::diagram_to_dot(back) == io::export_diagram(t, 0, 4, "dot"), "DOT regeneration differs");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 = no limit
  };
  const std::vector<Criterion> criteria{
      {"AC1", "sequence oracle equivalence", sequence_oracle, 5},
      {"AC2", "sequence invariants at depth 8", sequence_invariants, 10},
      {"AC3", "tower soundness to depth 8", tower_soundness, 0},
      {"AC4", "equivariance and negative control", equivariance, 0},
      {"AC5", "outerness witness levels", outerness, 0},
      {"AC6", "Chern obstruction k=1..10", chern, 1},
      {"AC7", "tower witness certificate", tower_witness, 0},
      {"AC8", "crossed rc convergence", crossed_convergence, 0},
      {"AC9", "crossed witness and trace", crossed_witness, 0},
      {"AC10", "infinite regimes", infinite_regimes, 0},
      {"AC11", "export round trip", export_round_trip, 0},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      std::ostringstream os;
      os << "took " << secs << " s, limit " << c.limit_seconds << " s";
      o.detail = os.str();
    }
    std::printf("[%s] %-5s %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
