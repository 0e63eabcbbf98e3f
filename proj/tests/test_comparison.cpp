#include <gtest/gtest.h>

#include "ahrc/comparison.hpp"
#include "oracle.hpp"

using namespace ahrc;

namespace {

GrowthTables tables(const std::string& r, const std::string& rp, unsigned depth, unsigned d = 1) {
  TargetParams p;
  p.r = ExtendedRational::parse(r);
  p.r_prime = ExtendedRational::parse(rp);
  p.d = d;
  return build_tables(p, depth);
}

const LedgerEntry* find_entry(const WitnessReport& w, const std::string& prefix, unsigned m) {
  const std::string suffix = "[m=" + std::to_string(m) + "]";
  for (const LedgerEntry& e : w.ledger)
    if (e.name.rfind(prefix, 0) == 0 && e.name.size() >= suffix.size() &&
        e.name.compare(e.name.size() - suffix.size(), suffix.size(), suffix) == 0)
      return &e;
  return nullptr;
}

/// Term-by-term expansion of prod (1 + sign x_i) without the ring kernel.
SquareZeroPoly expand(unsigned k, int sign) {
  SquareZeroPoly out(k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int deg = __builtin_popcount(mask);
    out.set(mask, (sign < 0 && deg % 2 == 1) ? -1 : 1);
  }
  return out;
}

}  // namespace

TEST(SquareZero, BasicArithmetic) {
  const auto x1 = SquareZeroPoly::linear_factor(2, 1, 1);
  const auto x2 = SquareZeroPoly::linear_factor(2, 2, -1);
  const SquareZeroPoly p = x1 * x2;  // 1 + x1 - x2 - x1x2
  EXPECT_EQ(p.coefficient(0b00), 1);
  EXPECT_EQ(p.coefficient(0b01), 1);
  EXPECT_EQ(p.coefficient(0b10), -1);
  EXPECT_EQ(p.coefficient(0b11), -1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(SquareZeroPoly(3).degree(), -1);
  SquareZeroPoly q(2);
  q.set(0b01, 0);
  EXPECT_TRUE(q.terms().empty());
  EXPECT_THROW(q.set(0b100, 1), PreconditionError);
  EXPECT_EQ(SquareZeroPoly::from_dense(2, p.to_dense()), p);
}

TEST(Chern, ClassesMatchTermwiseExpansion) {
  for (unsigned k = 1; k <= 8; ++k) {
    EXPECT_EQ(chern_total_class(k), expand(k, 1));
    EXPECT_EQ(chern_inverse_class(k), expand(k, -1));
    EXPECT_EQ(chern_total_class(k) * chern_inverse_class(k), SquareZeroPoly::one(k));
  }
}

TEST(Chern, MinimalRanks) {
  EXPECT_EQ(chern_min_embedding_rank(1), 2u);
  EXPECT_EQ(chern_min_embedding_rank(2), 4u);
  const ChernCertificate c1 = chern_certificate(1);
  EXPECT_EQ(c1.inverse_top_coefficient, -1);
  const ChernCertificate c2 = chern_certificate(2);
  EXPECT_EQ(c2.inverse_top_coefficient, 1);
  for (unsigned k = 1; k <= 12; ++k) {
    const ChernCertificate c = chern_certificate(k);
    EXPECT_TRUE(c.product_is_one);
    EXPECT_EQ(c.inverse_degree, static_cast<int>(k));
    EXPECT_EQ(c.inverse_top_coefficient, k % 2 ? -1 : 1);
    EXPECT_EQ(c.min_embedding_rank, 2 * k);
  }
  EXPECT_THROW(chern_certificate(0), PreconditionError);
  EXPECT_THROW(chern_certificate(21), PreconditionError);
}

TEST(ProjectionSymbol, RanksAndTrace) {
  const GrowthTables t = tables("1/2", "1/2", 4);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = n; m <= 4; ++m) {
      const ProjectionSymbol p = projection_symbol(m, n, t);
      EXPECT_EQ(p.c_total_rank(), Integer(t.h[n]) * t.s[n] * t.r_prod[m]);
      EXPECT_EQ(p.b_trivial_rank, p.c_total_rank());
      EXPECT_EQ(p.trace_value(), Rational(Integer(t.h[n]) * t.s[n]));
    }
  EXPECT_THROW(projection_symbol(1, 2, t), PreconditionError);
}

TEST(RankObstruction, Boundary) {
  const GrowthTables t = tables("1/2", "1/2", 3);
  EXPECT_EQ(rank_obstruction_threshold(2, 0, t), Integer(143));
  EXPECT_TRUE(rank_obstruction_check(2, 0, 143, t));
  EXPECT_FALSE(rank_obstruction_check(2, 0, 142, t));
  EXPECT_EQ(rank_obstruction_threshold(0, 0, t), Integer(2 * t.h[0]));
}

TEST(StageRcUpper, ValuesAndMonotonicity) {
  const GrowthTables t = tables("1/2", "1/3", 8);
  EXPECT_EQ(stage_rc_upper(0, t), Rational(1));
  EXPECT_EQ(stage_rc_upper(2, t), make_rational(48, 95));
  for (unsigned n = 1; n <= 8; ++n) {
    EXPECT_LT(stage_rc_upper(n, t), stage_rc_upper(n - 1, t));
    EXPECT_EQ(stage_rc_upper(n, t), t.r_partial[n]);
  }
  const Rational gap = stage_rc_upper(8, t) - make_rational(1, 2);
  EXPECT_LE(gap, t.kappa() / Rational(t.d_seq[8] - 1));
  const GrowthTables fi = tables("inf", "5/2", 0);
  EXPECT_EQ(stage_rc_upper(0, fi), Rational(3));
}

TEST(Relations, ParseAndEvaluate) {
  for (Relation r : {Relation::Less, Relation::LessEq, Relation::Greater, Relation::GreaterEq,
                     Relation::Equal})
    EXPECT_EQ(parse_relation(to_string(r)), r);
  EXPECT_TRUE(evaluate(1, Relation::LessEq, 1));
  EXPECT_FALSE(evaluate(1, Relation::Less, 1));
  EXPECT_THROW(parse_relation("=<"), PreconditionError);
}

TEST(Witness, TowerCanonicalHalf) {
  const GrowthTables t = tables("1/2", "1/2", 3);
  const WitnessReport w = find_witness(make_rational(1, 4), t);
  EXPECT_EQ(w.n, 1u);
  EXPECT_EQ(w.M, Integer(7));
  EXPECT_EQ(w.checked_depths, (std::vector<unsigned>{2, 3}));
  EXPECT_TRUE(w.valid());
  const LedgerEntry* rank2 = find_entry(w, "rank < ", 2);
  ASSERT_NE(rank2, nullptr);
  EXPECT_EQ(rank2->lhs, Rational(133));
  EXPECT_EQ(rank2->rhs, Rational(143));
  const LedgerEntry* trace2 = find_entry(w, "trace gap", 2);
  ASSERT_NE(trace2, nullptr);
  EXPECT_EQ(trace2->lhs, make_rational(7, 5));
  EXPECT_EQ(trace2->rhs, make_rational(5, 4));
  const LedgerEntry* rank3 = find_entry(w, "rank < ", 3);
  ASSERT_NE(rank3, nullptr);
  EXPECT_EQ(rank3->lhs, Rational(63973));
  EXPECT_EQ(rank3->rhs, Rational(68543));
}

TEST(Witness, Preconditions) {
  const GrowthTables t = tables("1/2", "1/2", 3);
  EXPECT_THROW(find_witness(make_rational(1, 2), t), PreconditionError);
  EXPECT_THROW(find_witness(0, t), PreconditionError);
  EXPECT_THROW(find_witness(make_rational(1, 4), tables("1/2", "1/2", 1)), PreconditionError);
}

TEST(Witness, MinimalityOfNAndM) {
  oracle::Gen gen(0x717);
  for (int trial = 0; trial < 25; ++trial) {
    const Rational r = gen.unit_rational(9);
    const Rational rho = r * gen.unit_rational(9);
    const GrowthTables t = tables(to_string(r), to_string(r), 5);
    WitnessReport w;
    try {
      w = find_witness(rho, t);
    } catch (const PreconditionError&) {
      continue;  // rho too close to r for this depth
    }
    ASSERT_TRUE(w.valid());
    const Rational h0(Integer(t.h[0]));
    const Rational lo = rho / h0 + 1;
    const Rational hi = t.kappa() + 1;
    const auto fits = [&](const Integer& M, unsigned n) {
      const Rational v = make_rational(M, Integer(t.h[0]) * t.r_prod[n]);
      return lo < v && v < hi;
    };
    EXPECT_TRUE(fits(w.M, w.n));
    EXPECT_FALSE(fits(w.M - 1, w.n));
    for (unsigned n = 1; n < w.n; ++n)
      EXPECT_GE(make_rational(Integer(1), Integer(t.h[0]) * t.r_prod[n]), t.kappa() - rho / h0);
  }
}

TEST(Witness, InfiniteRegimes) {
  for (const auto& [r, rp] : std::vector<std::pair<const char*, const char*>>{{"inf", "5/2"},
                                                                            {"inf", "inf"}}) {
    const GrowthTables t = tables(r, rp, 6);
    for (int rho : {1, 2}) {
      const WitnessReport w = find_witness(Rational(rho), t);
      EXPECT_TRUE(w.valid()) << r << " " << rp << " rho=" << rho;
      EXPECT_TRUE(verify_witness(w).ok);
    }
  }
  const WitnessReport w = find_witness(1, tables("inf", "5/2", 3));
  EXPECT_EQ(w.n, 1u);
  EXPECT_EQ(w.M, Integer(300));
}

TEST(VerifyWitness, AcceptsEmittedReport) {
  const WitnessReport w = find_witness(make_rational(1, 4), tables("1/2", "1/2", 4));
  const CheckReport rep = verify_witness(w);
  EXPECT_TRUE(rep.ok) << rep.first_failure;
}

TEST(VerifyWitness, RejectsEverySingleFieldMutation) {
  const WitnessReport good = find_witness(make_rational(1, 4), tables("1/2", "1/2", 3));
  std::vector<WitnessReport> mutants;
  auto add = [&](auto&& mutate) {
    WitnessReport w = good;
    mutate(w);
    mutants.push_back(w);
  };
  add([](WitnessReport& w) { w.crossed = true; });
  add([](WitnessReport& w) { w.params.r = ExtendedRational::parse("3/5"); });
  add([](WitnessReport& w) { w.params.d = 2; });
  add([](WitnessReport& w) { w.depth = 2; });
  add([](WitnessReport& w) { w.rho = make_rational(1, 5); });
  add([](WitnessReport& w) { w.n = 2; });
  add([](WitnessReport& w) { w.M = 8; });
  add([](WitnessReport& w) { w.checked_depths.pop_back(); });
  for (std::size_t i = 0; i < good.ledger.size(); ++i) {
    add([i](WitnessReport& w) { w.ledger[i].lhs += 1; });
    add([i](WitnessReport& w) { w.ledger[i].rhs -= make_rational(1, 7); });
    add([i](WitnessReport& w) { w.ledger[i].holds = !w.ledger[i].holds; });
    add([i](WitnessReport& w) { w.ledger[i].name += "'"; });
    add([i](WitnessReport& w) {
      w.ledger[i].relation = w.ledger[i].relation == Relation::Less ? Relation::LessEq : Relation::Less;
    });
  }
  add([](WitnessReport& w) { w.ledger.pop_back(); });
  for (std::size_t i = 0; i < mutants.size(); ++i)
    EXPECT_FALSE(verify_witness(mutants[i]).ok) << "mutant " << i;
}
