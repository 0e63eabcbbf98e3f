#pragma once

// Versioned JSON documents (growth tables, diagrams, witness certificates)
// and Graphviz DOT rendering of the merged diagram. Big integers are decimal
// strings; rationals are {"num": "...", "den": "..."}; infinity is "inf".

#include <string>
#include <vector>

#include <json.hpp>

#include "ahrc/action.hpp"
#include "ahrc/comparison.hpp"
#include "ahrc/sequences.hpp"
#include "ahrc/tower.hpp"

namespace ahrc::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const ExtendedRational& v);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
ExtendedRational extended_from_json(const Json& j);

Json params_to_json(const TargetParams& params);
TargetParams params_from_json(const Json& j);

Json tables_to_json(const GrowthTables& tables);
/// Loads tables verbatim (no recomputation) so that check_tables can judge
/// them. Throws VerificationError on schema problems.
GrowthTables tables_from_json(const Json& j);

struct Diagram {
  TargetParams params;
  unsigned first_level = 0;
  unsigned last_level = 0;
  std::vector<StageSpec> stages;
  std::vector<ConnectingMap> maps;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram build_diagram(const GrowthTables& tables, unsigned first_level, unsigned last_level);

Json diagram_to_json(const Diagram& diagram);
Diagram diagram_from_json(const Json& j);
/// Node ids "C_n_k" (k the packed component of Z_{2^n}^d) and "B_n"; one
/// cluster per block per level. Coordinate projections are drawn as double
/// edges, point evaluations dotted.
std::string diagram_to_dot(const Diagram& diagram);

/// format is "json" or "dot"; anything else is a PreconditionError.
std::string export_diagram(const GrowthTables& tables, unsigned first_level, unsigned last_level,
                           const std::string& format);

Json witness_to_json(const WitnessReport& report);
WitnessReport witness_from_json(const Json& j);

Json outerness_to_json(const OuternessWitness& w);
Json chern_to_json(const ChernCertificate& c);

}  // namespace ahrc::io
