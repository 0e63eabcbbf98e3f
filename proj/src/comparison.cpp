#include "ahrc/comparison.hpp"

#include <bit>

namespace ahrc {

SquareZeroPoly::SquareZeroPoly(unsigned variable_count) : k_(variable_count) {
  if (variable_count > 30) throw PreconditionError("at most 30 variables supported");
}

SquareZeroPoly SquareZeroPoly::one(unsigned variable_count) {
  SquareZeroPoly p(variable_count);
  p.set(0, 1);
  return p;
}

SquareZeroPoly SquareZeroPoly::linear_factor(unsigned variable_count, unsigned i, int sign) {
  if (i == 0 || i > variable_count) throw PreconditionError("variable index out of range");
  SquareZeroPoly p = one(variable_count);
  p.set(std::uint32_t{1} << (i - 1), sign);
  return p;
}

SquareZeroPoly SquareZeroPoly::from_dense(unsigned variable_count,
                                          const kernels::DenseSquareZero& c) {
  SquareZeroPoly p(variable_count);
  for (std::size_t mask = 0; mask < c.size(); ++mask) p.set(static_cast<std::uint32_t>(mask), c[mask]);
  return p;
}

std::int64_t SquareZeroPoly::coefficient(std::uint32_t monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? 0 : it->second;
}

void SquareZeroPoly::set(std::uint32_t monomial, std::int64_t value) {
  if (k_ < 32 && (monomial >> k_) != 0) throw PreconditionError("monomial outside the ring");
  if (value == 0) {
    terms_.erase(monomial);
  } else {
    terms_[monomial] = value;
  }
}

int SquareZeroPoly::degree() const {
  int out = -1;
  for (const auto& [mask, coeff] : terms_) out = std::max(out, std::popcount(mask));
  return out;
}

kernels::DenseSquareZero SquareZeroPoly::to_dense() const {
  kernels::DenseSquareZero out(std::size_t{1} << k_, 0);
  for (const auto& [mask, coeff] : terms_) out[mask] = coeff;
  return out;
}

SquareZeroPoly SquareZeroPoly::operator*(const SquareZeroPoly& rhs) const {
  if (rhs.k_ != k_) throw PreconditionError("multiplying polynomials over different rings");
  std::map<std::uint32_t, std::int64_t> acc;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_)
      if ((a & b) == 0) acc[a | b] += ca * cb;  // x_i^2 = 0
  SquareZeroPoly out(k_);
  for (const auto& [mask, coeff] : acc) out.set(mask, coeff);
  return out;
}

namespace {

SquareZeroPoly product_of_factors(unsigned k, int sign) {
  if (k == 0) throw PreconditionError("k must be at least 1");
  SquareZeroPoly p = SquareZeroPoly::one(k);
  for (unsigned i = 1; i <= k; ++i) p = p * SquareZeroPoly::linear_factor(k, i, sign);
  return p;
}

}  // namespace

SquareZeroPoly chern_total_class(unsigned k) { return product_of_factors(k, +1); }
SquareZeroPoly chern_inverse_class(unsigned k) { return product_of_factors(k, -1); }

ChernCertificate chern_certificate(unsigned k) {
  if (k == 0) throw PreconditionError("k must be at least 1");
  if (k > 20) throw PreconditionError("k must be at most 20");
  const SquareZeroPoly total = chern_total_class(k);
  const SquareZeroPoly inverse = chern_inverse_class(k);
  const auto product = SquareZeroPoly::from_dense(
      k, kernels::parallel::square_zero_product(total.to_dense(), inverse.to_dense()));

  ChernCertificate cert;
  cert.k = k;
  cert.product_is_one = product == SquareZeroPoly::one(k);
  cert.inverse_degree = inverse.degree();
  cert.inverse_top_coefficient = inverse.coefficient((std::uint32_t{1} << k) - 1);
  // A complement E with L^{xk} + E trivial has c(E) = c(L^{xk})^{-1}, whose
  // top class lives in degree inverse_degree, so rank E >= inverse_degree.
  cert.min_embedding_rank = k + static_cast<unsigned>(std::max(cert.inverse_degree, 0));
  if (!cert.product_is_one)
    throw VerificationError("c(L^{xk}) * prod(1 - x_i) != 1 for k = " + std::to_string(k));
  return cert;
}

unsigned chern_min_embedding_rank(unsigned k) { return chern_certificate(k).min_embedding_rank; }

Rational ProjectionSymbol::trace_value() const {
  return make_rational(c_total_rank(), matrix_size);
}

ProjectionSymbol projection_symbol(unsigned m, unsigned n, const GrowthTables& t) {
  if (m < n) throw PreconditionError("projection symbol requires m >= n");
  t.require_depth(m);
  const Integer h(t.h[n]);
  ProjectionSymbol p;
  p.m = m;
  p.n = n;
  p.c_nontrivial_rank = h * t.s[m];
  p.c_trivial_rank = h * t.s[n] * t.r_prod[m] - h * t.s[m];
  p.b_trivial_rank = h * t.s[n] * t.r_prod[m];
  p.matrix_size = t.r_prod[m];
  return p;
}

Integer rank_obstruction_threshold(unsigned m, unsigned n, const GrowthTables& t) {
  if (m < n) throw PreconditionError("rank obstruction requires m >= n");
  t.require_depth(m);
  const Integer h(t.h[n]);
  return h * t.s[n] * t.r_prod[m] + h * t.s[m];
}

bool rank_obstruction_check(unsigned m, unsigned n, const Integer& trivial_rank,
                            const GrowthTables& t) {
  return trivial_rank >= rank_obstruction_threshold(m, n, t);
}

Rational stage_rc_upper(unsigned n, const GrowthTables& t) {
  t.require_depth(n);
  const Rational c_part = make_rational(Integer(t.h[n]) * t.s[n], t.r_prod[n]);
  const Rational b_part = make_rational(Integer(t.h_prime[n]) * t.s_prime[n], t.r_prod[n]);
  return c_part >= b_part ? c_part : b_part;
}

std::string to_string(Relation rel) {
  switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "==";
  }
  return "?";
}

Relation parse_relation(const std::string& text) {
  for (auto r : {Relation::Less, Relation::LessEq, Relation::Greater, Relation::GreaterEq,
                 Relation::Equal})
    if (to_string(r) == text) return r;
  throw PreconditionError("unknown relation '" + text + "'");
}

bool evaluate(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

bool WitnessReport::valid() const {
  if (ledger.empty()) return false;
  for (const LedgerEntry& e : ledger)
    if (!e.holds || !evaluate(e.lhs, e.relation, e.rhs)) return false;
  return true;
}

namespace detail {

WitnessSide tower_side(const GrowthTables& t) {
  WitnessSide side;
  side.crossed = false;
  side.infinite = t.params.r.is_infinite();
  side.kappa = t.kappa();
  side.h = &t.h;
  side.s = &t.s;
  return side;
}

WitnessSide crossed_side(const GrowthTables& t) {
  WitnessSide side;
  side.crossed = true;
  side.infinite = t.params.r_prime.is_infinite();
  side.kappa = t.kappa_prime();
  side.h = &t.h_prime;
  side.s = &t.s_prime;
  return side;
}

namespace {

LedgerEntry entry(std::string name, Rational lhs, Relation rel, Rational rhs) {
  LedgerEntry e;
  e.name = std::move(name);
  e.holds = evaluate(lhs, rel, rhs);
  e.lhs = std::move(lhs);
  e.relation = rel;
  e.rhs = std::move(rhs);
  return e;
}

std::string at(const std::string& name, unsigned m) {
  return name + "[m=" + std::to_string(m) + "]";
}

Rational q(const Integer& v) { return Rational(v); }
Rational q(std::uint64_t v) { return Rational(Integer(v)); }

/// Stage condition for the search at level n (both regimes).
struct StageTest {
  bool holds;
  LedgerEntry witness_entry;  // the binding inequality at this n
};

}  // namespace

WitnessReport find_witness_for(const WitnessSide& side, const Rational& rho,
                               const GrowthTables& t) {
  const std::vector<std::uint64_t>& h = *side.h;
  const std::vector<Integer>& s = *side.s;
  const char* target_name = side.crossed ? "r'" : "r";

  if (rho <= 0) throw PreconditionError("rho must be > 0");
  if (!side.infinite) {
    const Rational& target = side.crossed ? t.params.r_prime.value() : t.params.r.value();
    if (rho >= target) throw PreconditionError(std::string("rho must be < ") + target_name);
  }

  WitnessReport rep;
  rep.crossed = side.crossed;
  rep.params = t.params;
  rep.depth = t.depth;
  rep.rho = rho;
  rep.kappa = t.kappa();
  rep.kappa_prime = t.kappa_prime();
  auto& L = rep.ledger;

  const Rational& kappa = side.kappa;
  const Rational one(1);
  L.push_back(entry("rho > 0", rho, Relation::Greater, 0));

  // Stage level n >= 1; the witnessing projection's origin is 0 for finite
  // targets and n itself for infinite ones.
  auto stage_ok = [&](unsigned n) -> std::vector<LedgerEntry> {
    std::vector<LedgerEntry> es;
    if (!side.infinite) {
      const Rational h0 = q(h[0]);
      es.push_back(entry("stage: 1/(h0 r(n)) < kappa - rho/h0", one / (h0 * q(t.r_prod[n])),
                         Relation::Less, kappa - rho / h0));
    } else {
      es.push_back(entry("stage: h(n) > rho/c", q(h[n]), Relation::Greater, rho / kappa));
      es.push_back(entry("stage: 1/r(n) < c h(n) - rho", one / q(t.r_prod[n]), Relation::Less,
                         kappa * q(h[n]) - rho));
    }
    return es;
  };
  auto all_hold = [](const std::vector<LedgerEntry>& es) {
    for (const auto& e : es)
      if (!e.holds) return false;
    return true;
  };

  if (!side.infinite) {
    const Rational h0 = q(h[0]);
    L.push_back(entry("rho/h0 < kappa", rho / h0, Relation::Less, kappa));
  } else {
    // c = inf_m s(m)/r(m) is the limit kappa of the strictly decreasing r_m
    for (unsigned m = 0; m <= t.depth; ++m)
      L.push_back(entry(at("c < s(m)/r(m)", m), kappa, Relation::Less,
                        make_rational(s[m], t.r_prod[m])));
  }

  unsigned n = 1;
  std::vector<LedgerEntry> chosen;
  for (; n <= t.depth; ++n) {
    chosen = stage_ok(n);
    if (all_hold(chosen)) break;
  }
  if (n >= t.depth)
    throw PreconditionError("no witness at this depth (regenerate deeper tables)");
  L.insert(L.end(), chosen.begin(), chosen.end());
  if (n > 1) {
    for (LedgerEntry e : stage_ok(n - 1)) {
      if (e.holds) continue;
      // record the failing condition at n-1 in its negated (true) form
      switch (e.relation) {
        case Relation::Less: e.relation = Relation::GreaterEq; break;
        case Relation::Greater: e.relation = Relation::LessEq; break;
        default: break;
      }
      e.name = "minimal n: " + e.name.substr(7) + " fails at n-1";
      e.holds = evaluate(e.lhs, e.relation, e.rhs);
      L.push_back(std::move(e));
      break;
    }
  }
  rep.n = n;

  const Rational rn = q(t.r_prod[n]);
  const Rational hn = q(h[n]);
  const Rational origin_trace = side.infinite ? hn * q(s[n]) : q(h[0]);
  // least M with trace M/r(n) strictly above origin_trace + rho
  rep.M = floor_of((origin_trace + rho) * rn) + 1;
  const Rational M = q(rep.M);
  if (!side.infinite) {
    const Rational h0 = q(h[0]);
    L.push_back(entry("M: rho/h0 + 1 < M/(h0 r(n))", rho / h0 + 1, Relation::Less, M / (h0 * rn)));
    L.push_back(entry("M: M/(h0 r(n)) < kappa + 1", M / (h0 * rn), Relation::Less, kappa + 1));
    L.push_back(entry("minimal M: (M-1)/(h0 r(n)) <= rho/h0 + 1", (M - 1) / (h0 * rn),
                      Relation::LessEq, rho / h0 + 1));
  } else {
    const Rational hs = hn * q(s[n]);
    L.push_back(entry("M: rho + h(n)s(n) < M/r(n)", rho + hs, Relation::Less, M / rn));
    L.push_back(entry("M: M/r(n) < c h(n) + h(n)s(n)", M / rn, Relation::Less, kappa * hn + hs));
    L.push_back(entry("minimal M: (M-1)/r(n) <= rho + h(n)s(n)", (M - 1) / rn, Relation::LessEq,
                      rho + hs));
  }

  const unsigned origin = side.infinite ? n : 0;
  const Integer h_origin(h[origin]);
  const unsigned d = t.params.d;
  for (unsigned m = n + 1; m <= t.depth; ++m) rep.checked_depths.push_back(m);

  std::vector<std::vector<LedgerEntry>> per_m(rep.checked_depths.size());
  const auto count = static_cast<std::int64_t>(per_m.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const unsigned m = rep.checked_depths[static_cast<std::size_t>(i)];
    auto& es = per_m[static_cast<std::size_t>(i)];
    const Integer ratio = t.r_prod[m] / t.r_prod[n];  // exact: r(n) divides r(m)
    const Integer rank = rep.M * ratio;
    const Rational rm = q(t.r_prod[m]);
    es.push_back(entry(at("rank = M r(m)/r(n)", m), q(rank), Relation::Equal, M * rm / rn));
    // trace of the distinguished pair (p_{m,origin}, q_{m,origin}) is h(origin) s(origin)
    const Integer total = h_origin * s[origin] * t.r_prod[m];
    const Rational pair_trace = make_rational(total, t.r_prod[m]);
    if (side.crossed) {
      const Integer e1_rank = rep.M * pow2(static_cast<unsigned long>(d) * m) * ratio;
      const Rational tr1 = make_rational(e1_rank, pow2(static_cast<unsigned long>(d) * m) * t.r_prod[m]);
      const Rational tr2 = make_rational(rank, t.r_prod[m]);
      es.push_back(entry(at("e1 rank = M 2^{dm} r(m)/r(n)", m), q(e1_rank), Relation::Equal,
                         M * q(pow2(static_cast<unsigned long>(d) * m)) * rm / rn));
      for (const Rational& lambda : {Rational(0), make_rational(1, 4), make_rational(1, 2), Rational(1)}) {
        es.push_back(entry(at("trace at lambda=" + to_string(lambda) + " equals M/r(n)", m),
                           lambda * tr1 + (one - lambda) * tr2, Relation::Equal, M / rn));
      }
    }
    es.push_back(entry(at("trace gap: rank/r(m) > tau(pair) + rho", m), q(rank) / rm,
                       Relation::Greater, pair_trace + rho));
    const Integer threshold = h_origin * s[origin] * t.r_prod[m] + h_origin * s[m];
    es.push_back(entry(at("rank < h s(origin) r(m) + h s(m)", m), q(rank), Relation::Less,
                       q(threshold)));
  }
  for (auto& es : per_m) L.insert(L.end(), es.begin(), es.end());
  return rep;
}

}  // namespace detail

WitnessReport find_witness(const Rational& rho, const GrowthTables& t) {
  return detail::find_witness_for(detail::tower_side(t), rho, t);
}

CheckReport verify_witness(const WitnessReport& report) {
  CheckReport rep;
  rep.record(report.valid(), "every stored ledger comparison holds");
  GrowthTables tables;
  try {
    tables = build_tables(report.params, report.depth);
  } catch (const PreconditionError& e) {
    rep.record(false, std::string("parameters rebuild: ") + e.what());
    return rep;
  }
  WitnessReport expect;
  try {
    const auto side = report.crossed ? detail::crossed_side(tables) : detail::tower_side(tables);
    expect = detail::find_witness_for(side, report.rho, tables);
  } catch (const PreconditionError& e) {
    rep.record(false, std::string("witness recomputation: ") + e.what());
    return rep;
  }
  rep.record(report.kappa == expect.kappa && report.kappa_prime == expect.kappa_prime,
             "kappa, kappa' agree with the rebuilt tables");
  rep.record(report.n == expect.n, "n is the canonical stage " + std::to_string(expect.n));
  rep.record(report.M == expect.M, "M is the canonical multiplicity " + to_string(expect.M));
  rep.record(report.checked_depths == expect.checked_depths, "checked depths n+1..depth");
  rep.record(report.ledger.size() == expect.ledger.size(), "ledger length");
  const std::size_t common = std::min(report.ledger.size(), expect.ledger.size());
  for (std::size_t i = 0; i < common; ++i) {
    const LedgerEntry& got = report.ledger[i];
    const LedgerEntry& want = expect.ledger[i];
    rep.record(got == want, "ledger entry " + std::to_string(i) + " '" + want.name + "' replays");
  }
  return rep;
}

}  // namespace ahrc
