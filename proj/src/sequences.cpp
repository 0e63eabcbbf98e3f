#include "ahrc/sequences.hpp"

#include <sstream>

namespace ahrc {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::FF: return "FF";
    case Regime::FI: return "FI";
    case Regime::II: return "II";
  }
  return "?";
}

void TargetParams::validate() const {
  if (d == 0) throw PreconditionError("d must be a positive integer");
  if (r_prime.is_finite() && r_prime.value() == 0)
    throw PreconditionError("r' must be positive");
  if (r_prime > r) throw PreconditionError("r' must not exceed r");
  if (r.is_infinite() && r_prime.is_infinite()) {
    if (c_infinite <= 0 || c_infinite >= 1)
      throw PreconditionError("c must lie strictly between 0 and 1");
  }
  if (h_override && r.is_finite())
    throw PreconditionError("an h-sequence override only applies when r = inf");
}

Regime TargetParams::regime() const {
  if (r.is_finite()) return Regime::FF;
  if (r_prime.is_finite()) return Regime::FI;
  return Regime::II;
}

std::uint64_t least_integer_above(const Rational& value) {
  const Integer h = floor_of(value) + 1;
  if (!h.fits_ulong_p()) throw PreconditionError("target too large");
  return h.get_ui();
}

KappaChoice derive_kappa(const TargetParams& params) {
  params.validate();
  KappaChoice out;
  out.regime = params.regime();
  switch (out.regime) {
    case Regime::FF:
      out.h = out.h_prime = least_integer_above(params.r.value());
      out.kappa = params.r.value() / Rational(Integer(out.h));
      out.kappa_prime = params.r_prime.value() / Rational(Integer(out.h));
      break;
    case Regime::FI:
      out.h_prime = least_integer_above(params.r_prime.value());
      out.h_rule = HRule::Growing;
      out.kappa = out.kappa_prime = params.r_prime.value() / Rational(Integer(out.h_prime));
      break;
    case Regime::II:
      out.h_rule = out.h_prime_rule = HRule::Growing;
      out.kappa = out.kappa_prime = params.c_infinite;
      break;
  }
  return out;
}

Integer torus_slot_count(unsigned d, unsigned n) {
  return pow2(static_cast<unsigned long>(d) * (n - 1));
}

Integer least_k_above(const Rational& q, const Integer& t) {
  if (q <= 0 || q >= 1) throw PreconditionError("threshold must lie in (0,1)");
  // k/(k+t) > q  <=>  k > q t / (1 - q)
  const Rational bound = q * Rational(t) / (Rational(1) - q);
  return floor_of(bound) + 1;
}

DSequence generate_d(const Rational& kappa, unsigned d, unsigned depth) {
  if (kappa <= 0 || kappa >= 1) throw PreconditionError("kappa must lie in (0,1)");
  if (d == 0) throw PreconditionError("d must be positive");
  DSequence out;
  out.d_seq.assign(depth + 1, Integer(0));
  out.l.assign(depth + 1, Integer(1));
  out.r_prod.assign(depth + 1, Integer(1));
  out.r_partial.assign(depth + 1, Rational(1));
  for (unsigned n = 1; n <= depth; ++n) {
    const Integer t = torus_slot_count(d, n) + 1;
    const Integer k = least_k_above(kappa / out.r_partial[n - 1], t);
    out.d_seq[n] = k;
    out.l[n] = k + t;
    out.r_prod[n] = out.r_prod[n - 1] * out.l[n];
    out.r_partial[n] = out.r_partial[n - 1] * make_rational(k, out.l[n]);
  }
  return out;
}

DPrimeSequence generate_d_prime(const Rational& kappa, const Rational& kappa_prime,
                                const DSequence& dseq) {
  if (kappa_prime <= 0 || kappa_prime > kappa)
    throw PreconditionError("kappa' must lie in (0, kappa]");
  const std::size_t depth = dseq.d_seq.size() - 1;
  DPrimeSequence out;
  out.d_prime_seq.assign(depth + 1, Integer(0));
  out.gamma.assign(depth + 1, Rational(1));
  out.rho.assign(depth + 1, kappa);
  for (std::size_t n = 1; n <= depth; ++n) {
    out.rho[n] = kappa / dseq.r_partial[n];
    Integer m;
    if (kappa_prime == kappa) {
      m = dseq.d_seq[n];
    } else {
      // least m with m * gamma_{n-1} * rho_n / l(n) >= kappa'
      m = ceil_of(kappa_prime * Rational(dseq.l[n]) / (out.gamma[n - 1] * out.rho[n]));
      if (m < 1) m = 1;
    }
    out.d_prime_seq[n] = m;
    out.gamma[n] = out.gamma[n - 1] * make_rational(m, dseq.l[n]);
  }
  return out;
}

HSequences choose_h(const TargetParams& params, unsigned depth) {
  const KappaChoice choice = derive_kappa(params);
  HSequences out;
  std::vector<std::uint64_t> growing(depth + 1);
  if (params.h_override) {
    const auto& h = *params.h_override;
    if (h.size() < depth + 1)
      throw PreconditionError("h-sequence override shorter than depth + 1");
    if (h[0] != 1) throw PreconditionError("h-sequence override must start at 1");
    for (std::size_t n = 1; n < h.size(); ++n)
      if (h[n] < h[n - 1]) throw PreconditionError("h-sequence override must be nondecreasing");
    growing.assign(h.begin(), h.begin() + depth + 1);
    out.rule = "custom";
  } else {
    for (unsigned n = 0; n <= depth; ++n) growing[n] = n + 1;
    out.rule = "n+1";
  }
  switch (choice.regime) {
    case Regime::FF:
      out.h.assign(depth + 1, choice.h);
      out.h_prime.assign(depth + 1, choice.h_prime);
      out.rule = "constant";
      break;
    case Regime::FI:
      out.h = growing;
      out.h_prime.assign(depth + 1, choice.h_prime);
      break;
    case Regime::II:
      out.h = growing;
      out.h_prime = growing;
      break;
  }
  return out;
}

void GrowthTables::require_depth(unsigned n) const {
  if (n > depth)
    throw PreconditionError("level " + std::to_string(n) + " exceeds table depth " +
                            std::to_string(depth));
}

GrowthTables build_tables(const TargetParams& params, unsigned depth) {
  GrowthTables t;
  t.params = params;
  t.choice = derive_kappa(params);
  t.depth = depth;
  HSequences hs = choose_h(params, depth);
  t.h = std::move(hs.h);
  t.h_prime = std::move(hs.h_prime);
  t.h_rule = hs.rule;

  DSequence ds = generate_d(t.choice.kappa, params.d, depth);
  DPrimeSequence dp = generate_d_prime(t.choice.kappa, t.choice.kappa_prime, ds);
  t.d_seq = std::move(ds.d_seq);
  t.l = std::move(ds.l);
  t.r_prod = std::move(ds.r_prod);
  t.r_partial = std::move(ds.r_partial);
  t.d_prime_seq = std::move(dp.d_prime_seq);
  t.gamma = std::move(dp.gamma);
  t.rho = std::move(dp.rho);

  t.s.assign(depth + 1, Integer(1));
  t.s_prime.assign(depth + 1, Integer(1));
  for (unsigned n = 1; n <= depth; ++n) {
    t.s[n] = t.s[n - 1] * t.d_seq[n];
    t.s_prime[n] = t.s_prime[n - 1] * t.d_prime_seq[n];
  }
  return t;
}

namespace {

std::string at(const std::string& name, unsigned n) {
  return name + "[" + std::to_string(n) + "]";
}

bool sizes_consistent(const GrowthTables& t) {
  const std::size_t want = t.depth + 1;
  return t.h.size() == want && t.h_prime.size() == want && t.d_seq.size() == want &&
         t.d_prime_seq.size() == want && t.l.size() == want && t.r_prod.size() == want &&
         t.s.size() == want && t.s_prime.size() == want && t.r_partial.size() == want &&
         t.gamma.size() == want && t.rho.size() == want;
}

}  // namespace

CheckReport check_tables(const GrowthTables& t) {
  CheckReport rep;
  rep.record(sizes_consistent(t), "table lengths equal depth + 1");
  if (!rep.ok) return rep;

  const KappaChoice expect = derive_kappa(t.params);
  rep.record(expect.kappa == t.kappa() && expect.kappa_prime == t.kappa_prime(),
             "kappa, kappa' match the targets");
  rep.record(t.kappa() > 0 && t.kappa() < 1, "0 < kappa < 1");
  rep.record(t.kappa_prime() > 0 && t.kappa_prime() <= t.kappa(), "0 < kappa' <= kappa");
  if (!rep.ok) return rep;

  const Rational& kappa = t.kappa();
  const Rational& kappa_prime = t.kappa_prime();

  rep.record(t.l[0] == 1 && t.r_prod[0] == 1 && t.s[0] == 1 && t.s_prime[0] == 1 &&
                 t.r_partial[0] == 1 && t.gamma[0] == 1,
             "level-0 conventions l(0)=r(0)=s(0)=s'(0)=1");

  const bool growing_h = t.choice.h_rule == HRule::Growing;
  const bool growing_hp = t.choice.h_prime_rule == HRule::Growing;
  for (unsigned n = 0; n <= t.depth; ++n) {
    if (growing_h) {
      rep.record(n > 0 ? t.h[n] >= t.h[n - 1] : t.h[0] == 1, at("h nondecreasing from 1", n));
    } else {
      rep.record(t.h[n] == expect.h, at("h constant", n));
    }
    if (growing_hp) {
      rep.record(n > 0 ? t.h_prime[n] >= t.h_prime[n - 1] : t.h_prime[0] == 1,
                 at("h' nondecreasing from 1", n));
    } else {
      rep.record(t.h_prime[n] == expect.h_prime, at("h' constant", n));
    }
  }
  if (t.regime() == Regime::II) rep.record(t.h == t.h_prime, "h = h' (II regime)");

  for (unsigned n = 1; n <= t.depth; ++n) {
    const Integer torus = torus_slot_count(t.params.d, n);
    const Integer tee = torus + 1;
    const Integer& dn = t.d_seq[n];
    const Integer& dpn = t.d_prime_seq[n];
    rep.record(t.l[n] == dn + tee, at("l(n) = d(n) + 1 + 2^{dn-d}", n));
    rep.record(t.r_prod[n] == t.r_prod[n - 1] * t.l[n], at("r(n) = r(n-1) l(n)", n));
    rep.record(t.s[n] == t.s[n - 1] * dn, at("s(n) = s(n-1) d(n)", n));
    rep.record(t.s_prime[n] == t.s_prime[n - 1] * dpn, at("s'(n) = s'(n-1) d'(n)", n));
    if (n >= 2) rep.record(dn >= t.d_seq[n - 1], at("d nondecreasing", n));
    rep.record(dpn >= 1 && dpn <= dn, at("1 <= d'(n) <= d(n)", n));
    if (!rep.ok) return rep;

    // d(n) is the least k with k/(k+T) > kappa / r_{n-1}
    const Rational q = kappa / t.r_partial[n - 1];
    const auto pred = [&](const Integer& k) { return make_rational(k, k + tee) > q; };
    rep.record(dn >= 1 && pred(dn) && (dn == 1 || !pred(dn - 1)), at("d(n) is the minimal k", n));

    const Rational rn = make_rational(t.s[n], t.r_prod[n]);
    rep.record(t.r_partial[n] == rn, at("r_n = s(n)/r(n)", n));
    rep.record(t.r_partial[n] < t.r_partial[n - 1], at("r_n strictly decreasing", n));
    rep.record(t.r_partial[n] > kappa && t.r_partial[n] < 1, at("kappa < r_n < 1", n));
    rep.record(t.rho[n] == kappa / t.r_partial[n], at("rho_n = kappa / r_n", n));
    rep.record(t.gamma[n] == make_rational(t.s_prime[n], t.r_prod[n]),
               at("gamma_n = s'(n)/r(n)", n));

    const Rational gap = t.gamma[n] * t.rho[n] - kappa_prime;
    rep.record(gap >= 0 && gap < make_rational(Integer(1), t.l[n]),
               at("0 <= gamma_n rho_n - kappa' < 1/l(n)", n));

    if (kappa_prime == kappa) {
      rep.record(dpn == dn, at("d'(n) = d(n) when kappa' = kappa", n));
    } else {
      const Rational scale = t.gamma[n - 1] * t.rho[n] / Rational(t.l[n]);
      const auto pred_m = [&](const Integer& m) { return Rational(m) * scale >= kappa_prime; };
      rep.record(pred_m(dpn) && (dpn == 1 || !pred_m(dpn - 1)), at("d'(n) is the minimal m", n));
    }
  }
  if (t.depth >= 1 && t.d_seq[t.depth] >= 2) {
    const Integer& dN = t.d_seq[t.depth];
    rep.record(t.r_partial[t.depth] - kappa <= kappa / Rational(dN - 1),
               "r_N - kappa <= kappa/(d(N)-1)");
  }
  return rep;
}

}  // namespace ahrc
