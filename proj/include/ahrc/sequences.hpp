#pragma once

// Integer sequences governing the direct system: the d/d' products whose
// limits pin the target radii, the slot counts l(n), the matrix sizes r(n),
// and the sphere-power multipliers h_n / h'_n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahrc/check.hpp"
#include "ahrc/numeric.hpp"

namespace ahrc {

/// FF: r < inf. FI: r' < inf = r. II: r' = r = inf.
enum class Regime { FF, FI, II };

std::string to_string(Regime regime);

struct TargetParams {
  ExtendedRational r;
  ExtendedRational r_prime;
  unsigned d = 1;
  /// Only consulted when r = r' = inf.
  Rational c_infinite = make_rational(1, 2);
  /// Replaces the default growing h-sequence h(n) = n + 1 (regimes FI/II).
  std::optional<std::vector<std::uint64_t>> h_override;

  /// Throws PreconditionError naming the first violated constraint.
  void validate() const;
  Regime regime() const;
  friend bool operator==(const TargetParams&, const TargetParams&) = default;
};

enum class HRule { Constant, Growing };

struct KappaChoice {
  Regime regime = Regime::FF;
  /// Constant value of h (FF). Zero when h grows.
  std::uint64_t h = 0;
  /// Constant value of h' (FF, FI). Zero when h' grows.
  std::uint64_t h_prime = 0;
  HRule h_rule = HRule::Constant;
  HRule h_prime_rule = HRule::Constant;
  Rational kappa;
  Rational kappa_prime;
};

/// Least integer strictly greater than a nonnegative rational.
std::uint64_t least_integer_above(const Rational& value);

KappaChoice derive_kappa(const TargetParams& params);

/// Output of generate_d. Vectors are indexed 0..N; index 0 carries the
/// conventions l(0) = r(0) = 1 and r_0 = 1, and d_seq[0] is unused (0).
struct DSequence {
  std::vector<Integer> d_seq;
  std::vector<Integer> l;
  std::vector<Integer> r_prod;
  std::vector<Rational> r_partial;
};

/// Number of torus slots 2^{d(n-1)} in L(n), n >= 1.
Integer torus_slot_count(unsigned d, unsigned n);

/// The least k >= 1 with k / (k + t) > q, for 0 < q < 1 and t >= 1.
Integer least_k_above(const Rational& q, const Integer& t);

DSequence generate_d(const Rational& kappa, unsigned d, unsigned depth);

struct DPrimeSequence {
  std::vector<Integer> d_prime_seq;  // index 0 unused
  std::vector<Rational> gamma;       // gamma_0 = 1
  std::vector<Rational> rho;         // rho_0 = kappa
};

DPrimeSequence generate_d_prime(const Rational& kappa, const Rational& kappa_prime,
                                const DSequence& dseq);

struct HSequences {
  std::vector<std::uint64_t> h;
  std::vector<std::uint64_t> h_prime;
  std::string rule;  // recorded in output metadata
};

HSequences choose_h(const TargetParams& params, unsigned depth);

/// All sequences to depth N. Immutable after construction.
struct GrowthTables {
  TargetParams params;
  KappaChoice choice;
  unsigned depth = 0;
  std::string h_rule;
  std::vector<std::uint64_t> h, h_prime;           // 0..N
  std::vector<Integer> d_seq, d_prime_seq;          // 1..N (index 0 = 0)
  std::vector<Integer> l, r_prod, s, s_prime;       // 0..N
  std::vector<Rational> r_partial, gamma, rho;      // 0..N

  const Rational& kappa() const { return choice.kappa; }
  const Rational& kappa_prime() const { return choice.kappa_prime; }
  Regime regime() const { return choice.regime; }

  /// Throws PreconditionError if n exceeds the table depth.
  void require_depth(unsigned n) const;
};

GrowthTables build_tables(const TargetParams& params, unsigned depth);

/// Exact check of every GrowthTables invariant, including recomputation of
/// each d(n) and d'(n) minimum from the raw threshold predicates.
CheckReport check_tables(const GrowthTables& tables);

}  // namespace ahrc
