#pragma once

// Rank and trace calculus for non-comparison: Chern classes of products of
// the tautological line bundle, the distinguished projections, stagewise
// upper bounds for rc, and witnesses (rho, n, M) certifying that
// rho-comparison fails.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ahrc/check.hpp"
#include "ahrc/kernels.hpp"
#include "ahrc/numeric.hpp"
#include "ahrc/sequences.hpp"

namespace ahrc {

/// Element of Z[x_1..x_k]/(x_i^2). Monomials are subsets of {1..k} stored as
/// bitmasks (bit i-1 for x_i); zero coefficients are never stored.
class SquareZeroPoly {
 public:
  explicit SquareZeroPoly(unsigned variable_count);

  static SquareZeroPoly one(unsigned variable_count);
  /// 1 + sign * x_i, i in 1..k.
  static SquareZeroPoly linear_factor(unsigned variable_count, unsigned i, int sign);
  static SquareZeroPoly from_dense(unsigned variable_count, const kernels::DenseSquareZero& c);

  unsigned variable_count() const { return k_; }
  const std::map<std::uint32_t, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(std::uint32_t monomial) const;
  void set(std::uint32_t monomial, std::int64_t value);
  /// Largest monomial degree with a nonzero coefficient; -1 for zero.
  int degree() const;
  kernels::DenseSquareZero to_dense() const;

  SquareZeroPoly operator*(const SquareZeroPoly& rhs) const;
  friend bool operator==(const SquareZeroPoly&, const SquareZeroPoly&) = default;

 private:
  unsigned k_;
  std::map<std::uint32_t, std::int64_t> terms_;
};

/// Total Chern class c(L^{xk}) = prod (1 + x_i).
SquareZeroPoly chern_total_class(unsigned k);
/// prod (1 - x_i), the inverse of the total class.
SquareZeroPoly chern_inverse_class(unsigned k);

struct ChernCertificate {
  unsigned k = 0;
  bool product_is_one = false;  // c(L^{xk}) * prod(1 - x_i) = 1 exactly
  int inverse_degree = -1;
  std::int64_t inverse_top_coefficient = 0;
  unsigned min_embedding_rank = 0;  // k + inverse_degree
};

/// Practical range 1 <= k <= 20.
ChernCertificate chern_certificate(unsigned k);
unsigned chern_min_embedding_rank(unsigned k);

/// Rank data of the image of the distinguished pair under Gamma_{m,n}:
/// the C-block carries a rank h(n)s(m) summand onto the sections of
/// L^{x h(n)s(m)} plus a trivial remainder.
struct ProjectionSymbol {
  unsigned m = 0, n = 0;
  Integer c_nontrivial_rank;
  Integer c_trivial_rank;
  Integer b_trivial_rank;
  Integer matrix_size;  // r(m)

  Integer c_total_rank() const { return c_nontrivial_rank + c_trivial_rank; }
  Rational trace_value() const;
};

ProjectionSymbol projection_symbol(unsigned m, unsigned n, const GrowthTables& tables);

/// h(n) s(n) r(m) + h(n) s(m): least rank of a trivial projection that can
/// approximately dominate the distinguished pair at stage m.
Integer rank_obstruction_threshold(unsigned m, unsigned n, const GrowthTables& tables);
bool rank_obstruction_check(unsigned m, unsigned n, const Integer& trivial_rank,
                            const GrowthTables& tables);

/// max(h(n)s(n), h'(n)s'(n)) / r(n).
Rational stage_rc_upper(unsigned n, const GrowthTables& tables);

enum class Relation { Less, LessEq, Greater, GreaterEq, Equal };

std::string to_string(Relation rel);
Relation parse_relation(const std::string& text);
bool evaluate(const Rational& lhs, Relation rel, const Rational& rhs);

struct LedgerEntry {
  std::string name;
  Rational lhs;
  Relation relation = Relation::Equal;
  Rational rhs;
  bool holds = false;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct WitnessReport {
  bool crossed = false;
  TargetParams params;
  unsigned depth = 0;
  Rational rho;
  Rational kappa;        // kappa and kappa' of the tables the search ran on
  Rational kappa_prime;
  unsigned n = 0;
  Integer M;
  std::vector<unsigned> checked_depths;
  std::vector<LedgerEntry> ledger;

  bool valid() const;
};

/// Canonical (least n, then least M) witness that rho-comparison fails for
/// the limit of the stages. Finite targets require 0 < rho < r.
WitnessReport find_witness(const Rational& rho, const GrowthTables& tables);

/// Replays a report: rebuilds tables from its parameters, recomputes the
/// canonical witness and every ledger comparison, and demands exact
/// agreement field by field.
CheckReport verify_witness(const WitnessReport& report);

namespace detail {

/// Inputs shared by the tower and crossed witness searches.
struct WitnessSide {
  bool crossed = false;
  bool infinite = false;
  Rational kappa;                     // kappa or kappa'
  const std::vector<std::uint64_t>* h = nullptr;
  const std::vector<Integer>* s = nullptr;
};

WitnessSide tower_side(const GrowthTables& tables);
WitnessSide crossed_side(const GrowthTables& tables);
WitnessReport find_witness_for(const WitnessSide& side, const Rational& rho,
                               const GrowthTables& tables);

}  // namespace detail

}  // namespace ahrc
