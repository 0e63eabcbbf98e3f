#include "ahrc/io.hpp"

#include <sstream>

namespace ahrc::io {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw VerificationError("malformed document: " + what);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T, class F>
Json array_of(const std::vector<T>& v, std::size_t from, F&& convert) {
  Json out = Json::array();
  for (std::size_t i = from; i < v.size(); ++i) out.push_back(convert(v[i]));
  return out;
}

std::vector<Integer> integers_from(const Json& j) {
  require(j.is_array(), "expected an array of integers");
  std::vector<Integer> out;
  for (const Json& e : j) out.push_back(integer_from_json(e));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  require(j.is_array(), "expected an array of rationals");
  std::vector<Rational> out;
  for (const Json& e : j) out.push_back(rational_from_json(e));
  return out;
}

std::vector<std::uint64_t> u64s_from(const Json& j) {
  require(j.is_array(), "expected an array of integers");
  std::vector<std::uint64_t> out;
  for (const Json& e : j) {
    require(e.is_number_unsigned(), "expected a nonnegative integer");
    out.push_back(e.get<std::uint64_t>());
  }
  return out;
}

}  // namespace

Json to_json(const Integer& v) { return to_string(v); }

Json to_json(const Rational& v) {
  return Json{{"num", v.get_num().get_str(10)}, {"den", v.get_den().get_str(10)}};
}

Json to_json(const ExtendedRational& v) {
  if (v.is_infinite()) return "inf";
  return to_json(v.value());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
  require(j.is_string(), "expected a decimal-string integer");
  try {
    return parse_integer(j.get<std::string>());
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("malformed document: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  const Integer num = integer_from_json(field(j, "num"));
  const Integer den = integer_from_json(field(j, "den"));
  require(den > 0, "rational denominator must be positive");
  const Rational q = make_rational(num, den);
  require(q.get_num() == num && q.get_den() == den, "rational not in lowest terms");
  return q;
}

ExtendedRational extended_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtendedRational::infinity();
  const Rational q = rational_from_json(j);
  require(q >= 0, "extended rational must be nonnegative");
  return ExtendedRational(q);
}

Json params_to_json(const TargetParams& p) {
  Json j;
  j["r"] = to_json(p.r);
  j["rPrime"] = to_json(p.r_prime);
  j["d"] = p.d;
  // c only enters when both targets are infinite
  if (p.regime() == Regime::II) j["c"] = to_json(p.c_infinite);
  if (p.h_override) {
    j["hSequence"] = *p.h_override;
  } else {
    j["hSequence"] = nullptr;
  }
  return j;
}

TargetParams params_from_json(const Json& j) {
  TargetParams p;
  p.r = extended_from_json(field(j, "r"));
  p.r_prime = extended_from_json(field(j, "rPrime"));
  const Json& d = field(j, "d");
  require(d.is_number_unsigned() && d.get<unsigned>() >= 1, "d must be a positive integer");
  p.d = d.get<unsigned>();
  if (j.contains("c")) p.c_infinite = rational_from_json(j.at("c"));
  if (j.contains("hSequence") && !j.at("hSequence").is_null())
    p.h_override = u64s_from(j.at("hSequence"));
  return p;
}

Json tables_to_json(const GrowthTables& t) {
  const auto ints = [](const Integer& v) { return to_json(v); };
  const auto rats = [](const Rational& v) { return to_json(v); };
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "growth-tables";
  j["params"] = params_to_json(t.params);
  j["regime"] = to_string(t.regime());
  j["depth"] = t.depth;
  j["kappa"] = to_json(t.kappa());
  j["kappaPrime"] = to_json(t.kappa_prime());
  j["hRule"] = t.h_rule;
  j["h"] = t.h;
  j["hPrime"] = t.h_prime;
  j["d"] = array_of(t.d_seq, 1, ints);
  j["dPrime"] = array_of(t.d_prime_seq, 1, ints);
  j["l"] = array_of(t.l, 0, ints);
  j["r"] = array_of(t.r_prod, 0, ints);
  j["s"] = array_of(t.s, 0, ints);
  j["sPrime"] = array_of(t.s_prime, 0, ints);
  j["rPartial"] = array_of(t.r_partial, 0, rats);
  j["gamma"] = array_of(t.gamma, 0, rats);
  j["rho"] = array_of(t.rho, 0, rats);
  Json bits;
  bits["d"] = array_of(t.d_seq, 1, [](const Integer& v) {
    return static_cast<std::uint64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
  });
  bits["r"] = array_of(t.r_prod, 0, [](const Integer& v) {
    return static_cast<std::uint64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
  });
  j["bitLengths"] = bits;
  return j;
}

GrowthTables tables_from_json(const Json& j) {
  require(field(j, "formatVersion") == kFormatVersion, "unsupported formatVersion");
  require(field(j, "kind") == "growth-tables", "kind must be growth-tables");
  GrowthTables t;
  t.params = params_from_json(field(j, "params"));
  try {
    t.choice = derive_kappa(t.params);
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("invalid parameters: ") + e.what());
  }
  const Json& depth = field(j, "depth");
  require(depth.is_number_unsigned(), "depth must be a nonnegative integer");
  t.depth = depth.get<unsigned>();
  t.choice.kappa = rational_from_json(field(j, "kappa"));
  t.choice.kappa_prime = rational_from_json(field(j, "kappaPrime"));
  t.h_rule = field(j, "hRule").get<std::string>();
  t.h = u64s_from(field(j, "h"));
  t.h_prime = u64s_from(field(j, "hPrime"));
  t.d_seq = integers_from(field(j, "d"));
  t.d_seq.insert(t.d_seq.begin(), Integer(0));
  t.d_prime_seq = integers_from(field(j, "dPrime"));
  t.d_prime_seq.insert(t.d_prime_seq.begin(), Integer(0));
  t.l = integers_from(field(j, "l"));
  t.r_prod = integers_from(field(j, "r"));
  t.s = integers_from(field(j, "s"));
  t.s_prime = integers_from(field(j, "sPrime"));
  t.r_partial = rationals_from(field(j, "rPartial"));
  t.gamma = rationals_from(field(j, "gamma"));
  t.rho = rationals_from(field(j, "rho"));
  return t;
}

Diagram build_diagram(const GrowthTables& t, unsigned first_level, unsigned last_level) {
  if (first_level > last_level) throw PreconditionError("empty depth range");
  t.require_depth(last_level);
  Diagram dg;
  dg.params = t.params;
  dg.first_level = first_level;
  dg.last_level = last_level;
  for (unsigned n = first_level; n <= last_level; ++n) dg.stages.push_back(build_stage(n, t));
  for (unsigned n = first_level; n < last_level; ++n)
    dg.maps.push_back(build_connecting_map(n, t));
  return dg;
}

namespace {

Json shape_to_json(const BlockShape& s) {
  return Json{{"components", to_json(s.components)},
              {"baseDimension", to_json(s.base_dimension)},
              {"matrixSize", to_json(s.matrix_size)}};
}

BlockShape shape_from_json(const Json& j) {
  return BlockShape{integer_from_json(field(j, "components")),
                    integer_from_json(field(j, "baseDimension")),
                    integer_from_json(field(j, "matrixSize"))};
}

Json point_to_json(const TorusGroup& g, std::uint64_t p) { return g.unpack(p); }

std::uint64_t point_from_json(const TorusGroup& g, const Json& j) {
  const auto coords = u64s_from(j);
  require(coords.size() == g.dimension(), "torus point has wrong dimension");
  for (auto c : coords) require(c < (std::uint64_t{1} << g.bits()), "torus coordinate out of range");
  return g.pack(coords);
}

Json arrow_to_json(const Arrow& a, const TorusGroup& g) {
  Json j;
  j["source"] = to_string(a.source);
  j["target"] = to_string(a.target);
  j["kind"] = to_string(a.kind);
  if (a.kind == ArrowKind::PointEvalX) j["eval"] = point_to_json(g, a.eval_point);
  Json slot;
  slot["family"] = to_string(a.slot.family);
  if (a.slot.family == SlotFamily::Torus) slot["point"] = point_to_json(g, a.slot.torus_point);
  if (a.slot.family == SlotFamily::Projection) {
    slot["first"] = to_json(a.slot.first);
    slot["last"] = to_json(a.slot.last);
  }
  j["slot"] = slot;
  return j;
}

Arrow arrow_from_json(const Json& j, const TorusGroup& g) {
  Arrow a;
  try {
    a.source = parse_block(field(j, "source").get<std::string>());
    a.target = parse_block(field(j, "target").get<std::string>());
    a.kind = parse_arrow_kind(field(j, "kind").get<std::string>());
    const Json& slot = field(j, "slot");
    a.slot.family = parse_slot_family(field(slot, "family").get<std::string>());
  } catch (const PreconditionError& e) {
    throw VerificationError(std::string("malformed document: ") + e.what());
  }
  if (a.kind == ArrowKind::PointEvalX) a.eval_point = point_from_json(g, field(j, "eval"));
  const Json& slot = j.at("slot");
  if (a.slot.family == SlotFamily::Torus) a.slot.torus_point = point_from_json(g, field(slot, "point"));
  if (a.slot.family == SlotFamily::Projection) {
    a.slot.first = integer_from_json(field(slot, "first"));
    a.slot.last = integer_from_json(field(slot, "last"));
  }
  return a;
}

Json multiplicity_to_json(const Multiplicity& m) {
  return Json{{"CfromC", to_json(m.at(Block::C, Block::C))},
              {"CfromB", to_json(m.at(Block::C, Block::B))},
              {"BfromC", to_json(m.at(Block::B, Block::C))},
              {"BfromB", to_json(m.at(Block::B, Block::B))}};
}

}  // namespace

Json diagram_to_json(const Diagram& dg) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "diagram";
  j["params"] = params_to_json(dg.params);
  j["levels"] = Json{{"first", dg.first_level}, {"last", dg.last_level}};
  Json stages = Json::array();
  for (const StageSpec& s : dg.stages)
    stages.push_back(Json{{"n", s.n}, {"C", shape_to_json(s.c_block)}, {"B", shape_to_json(s.b_block)}});
  j["stages"] = stages;
  Json maps = Json::array();
  for (const ConnectingMap& m : dg.maps) {
    const TorusGroup g(m.d, m.level);
    Json arrows = Json::array();
    for (const Arrow& a : m.arrows) arrows.push_back(arrow_to_json(a, g));
    maps.push_back(Json{{"from", m.level},
                        {"to", m.level + 1},
                        {"multiplicity", multiplicity_to_json(m.multiplicity())},
                        {"arrows", arrows}});
  }
  j["maps"] = maps;
  return j;
}

Diagram diagram_from_json(const Json& j) {
  require(field(j, "formatVersion") == kFormatVersion, "unsupported formatVersion");
  require(field(j, "kind") == "diagram", "kind must be diagram");
  Diagram dg;
  dg.params = params_from_json(field(j, "params"));
  const Json& levels = field(j, "levels");
  dg.first_level = field(levels, "first").get<unsigned>();
  dg.last_level = field(levels, "last").get<unsigned>();
  for (const Json& s : field(j, "stages"))
    dg.stages.push_back(StageSpec{field(s, "n").get<unsigned>(), shape_from_json(field(s, "C")),
                                  shape_from_json(field(s, "B"))});
  for (const Json& mj : field(j, "maps")) {
    ConnectingMap m;
    m.level = field(mj, "from").get<unsigned>();
    m.d = dg.params.d;
    require(field(mj, "to").get<unsigned>() == m.level + 1, "map must join consecutive levels");
    const TorusGroup g(m.d, m.level);
    for (const Json& a : field(mj, "arrows")) m.arrows.push_back(arrow_from_json(a, g));
    require(multiplicity_to_json(m.multiplicity()) == field(mj, "multiplicity"),
            "stored multiplicity disagrees with arrows");
    dg.maps.push_back(std::move(m));
  }
  require(dg.stages.size() == dg.last_level - dg.first_level + 1, "stage count");
  require(dg.maps.size() == dg.last_level - dg.first_level, "map count");
  return dg;
}

std::string diagram_to_dot(const Diagram& dg) {
  const unsigned d = dg.params.d;
  for (const ConnectingMap& m : dg.maps) {
    const unsigned long exponent = static_cast<unsigned long>(d) * (2 * m.level + 1);
    if (exponent > 22) throw PreconditionError("diagram too large to render as DOT");
  }
  std::ostringstream os;
  const auto cnode = [](unsigned n, std::uint64_t k) {
    return "C_" + std::to_string(n) + "_" + std::to_string(k);
  };
  const auto bnode = [](unsigned n) { return "B_" + std::to_string(n); };

  os << "digraph ahrc {\n";
  os << "  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (const StageSpec& s : dg.stages) {
    const TorusGroup g(d, s.n);
    os << "  subgraph cluster_C_" << s.n << " {\n";
    os << "    label=\"C_" << s.n << ": M_" << to_string(s.c_block.matrix_size) << ", dim "
       << to_string(s.c_block.base_dimension) << "\";\n";
    for (std::uint64_t k = 0; k < g.size(); ++k) os << "    " << cnode(s.n, k) << ";\n";
    os << "  }\n";
    os << "  subgraph cluster_B_" << s.n << " {\n";
    os << "    label=\"B_" << s.n << ": M_" << to_string(s.b_block.matrix_size) << ", dim "
       << to_string(s.b_block.base_dimension) << "\";\n";
    os << "    " << bnode(s.n) << ";\n";
    os << "  }\n";
  }

  constexpr const char* dotted = "style=dotted";
  constexpr const char* doubled = "color=\"black:black\"";
  for (const ConnectingMap& m : dg.maps) {
    const unsigned n = m.level;
    const TorusGroup src(d, n), dst(d, n + 1);
    for (const Arrow& a : m.arrows) {
      const std::string count = to_string(a.count());
      if (a.target == Block::B) {
        const std::string from = a.source == Block::C ? cnode(n, a.eval_point) : bnode(n);
        const char* style = a.kind == ArrowKind::CoordProjection ? doubled : dotted;
        os << "  " << from << " -> " << bnode(n + 1) << " [" << style << ", label=\""
           << to_string(a.kind);
        if (a.slot.family == SlotFamily::Projection) os << " x" << count;
        os << "\"];\n";
        continue;
      }
      for (std::uint64_t k = 0; k < dst.size(); ++k) {
        std::string from;
        const char* style = dotted;
        switch (a.kind) {
          case ArrowKind::PointEvalX: from = cnode(n, a.eval_point); break;
          case ArrowKind::StarEval: from = bnode(n); break;
          case ArrowKind::CoordProjection:
            from = cnode(n, src.project_from(dst, k));
            style = doubled;
            break;
          case ArrowKind::PointEvalY: from = bnode(n); break;
        }
        os << "  " << from << " -> " << cnode(n + 1, k) << " [" << style << ", label=\""
           << to_string(a.kind);
        if (a.slot.family == SlotFamily::Projection) os << " x" << count;
        os << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_diagram(const GrowthTables& t, unsigned first_level, unsigned last_level,
                           const std::string& format) {
  if (format != "json" && format != "dot")
    throw PreconditionError("unknown format '" + format + "' (expected json or dot)");
  const Diagram dg = build_diagram(t, first_level, last_level);
  if (format == "json") return diagram_to_json(dg).dump(2) + "\n";
  return diagram_to_dot(dg);
}

namespace {

Json ledger_to_json(const LedgerEntry& e) {
  return Json{{"name", e.name},
              {"lhs", to_json(e.lhs)},
              {"relation", to_string(e.relation)},
              {"rhs", to_json(e.rhs)},
              {"holds", e.holds}};
}

}  // namespace

Json witness_to_json(const WitnessReport& r) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = "witness";
  j["crossed"] = r.crossed;
  j["params"] = params_to_json(r.params);
  j["regime"] = to_string(r.params.regime());
  j["depth"] = r.depth;
  j["rho"] = to_json(r.rho);
  j["kappa"] = to_json(r.kappa);
  j["kappaPrime"] = to_json(r.kappa_prime);
  j["n"] = r.n;
  j["M"] = to_json(r.M);
  j["checkedDepths"] = r.checked_depths;
  Json ledger = Json::array();
  for (const LedgerEntry& e : r.ledger) ledger.push_back(ledger_to_json(e));
  j["ledger"] = ledger;
  return j;
}

WitnessReport witness_from_json(const Json& j) {
  require(field(j, "formatVersion") == kFormatVersion, "unsupported formatVersion");
  require(field(j, "kind") == "witness", "kind must be witness");
  WitnessReport r;
  const Json& crossed = field(j, "crossed");
  require(crossed.is_boolean(), "crossed must be boolean");
  r.crossed = crossed.get<bool>();
  r.params = params_from_json(field(j, "params"));
  require(field(j, "regime") == to_string(r.params.regime()), "regime disagrees with params");
  const Json& depth = field(j, "depth");
  require(depth.is_number_unsigned(), "depth must be a nonnegative integer");
  r.depth = depth.get<unsigned>();
  r.rho = rational_from_json(field(j, "rho"));
  r.kappa = rational_from_json(field(j, "kappa"));
  r.kappa_prime = rational_from_json(field(j, "kappaPrime"));
  const Json& n = field(j, "n");
  require(n.is_number_unsigned(), "n must be a nonnegative integer");
  r.n = n.get<unsigned>();
  r.M = integer_from_json(field(j, "M"));
  for (const Json& m : field(j, "checkedDepths")) {
    require(m.is_number_unsigned(), "checked depth must be a nonnegative integer");
    r.checked_depths.push_back(m.get<unsigned>());
  }
  for (const Json& e : field(j, "ledger")) {
    LedgerEntry le;
    le.name = field(e, "name").get<std::string>();
    le.lhs = rational_from_json(field(e, "lhs"));
    try {
      le.relation = parse_relation(field(e, "relation").get<std::string>());
    } catch (const PreconditionError& ex) {
      throw VerificationError(std::string("malformed document: ") + ex.what());
    }
    le.rhs = rational_from_json(field(e, "rhs"));
    const Json& holds = field(e, "holds");
    require(holds.is_boolean(), "holds must be boolean");
    le.holds = holds.get<bool>();
    r.ledger.push_back(std::move(le));
  }
  return r;
}

Json outerness_to_json(const OuternessWitness& w) {
  return Json{{"formatVersion", kFormatVersion},
              {"kind", "outerness"},
              {"g", w.g},
              {"n", w.n},
              {"baseComponent", w.base_component},
              {"translatedComponent", w.translated_component}};
}

Json chern_to_json(const ChernCertificate& c) {
  return Json{{"k", c.k},
              {"productIsOne", c.product_is_one},
              {"inverseDegree", c.inverse_degree},
              {"inverseTopCoefficient", c.inverse_top_coefficient},
              {"minEmbeddingRank", c.min_embedding_rank}};
}

}  // namespace ahrc::io
