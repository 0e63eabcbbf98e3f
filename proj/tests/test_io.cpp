#include <gtest/gtest.h>

#include <regex>

#include "ahrc/crossed.hpp"
#include "ahrc/io.hpp"
#include "ahrc/verify.hpp"

using namespace ahrc;

namespace {

TargetParams targets(const std::string& r, const std::string& rp, unsigned d = 1) {
  TargetParams p;
  p.r = ExtendedRational::parse(r);
  p.r_prime = ExtendedRational::parse(rp);
  p.d = d;
  return p;
}

}  // namespace

TEST(Json, RationalsAndInfinity) {
  EXPECT_EQ(io::to_json(make_rational(2, 4)).dump(), R"({"num":"1","den":"2"})");
  EXPECT_EQ(io::to_json(ExtendedRational::infinity()).dump(), R"("inf")");
  EXPECT_EQ(io::rational_from_json(io::to_json(make_rational(-7, 3))), make_rational(-7, 3));
  EXPECT_THROW(io::rational_from_json(io::Json::parse(R"({"num":"2","den":"4"})")),
               VerificationError);
  EXPECT_THROW(io::rational_from_json(io::Json::parse(R"({"num":"1"})")), VerificationError);
}

TEST(Json, ParamsRoundTrip) {
  TargetParams p = targets("inf", "inf", 2);
  p.c_infinite = make_rational(2, 3);
  p.h_override = std::vector<std::uint64_t>{1, 1, 2};
  const TargetParams back = io::params_from_json(io::params_to_json(p));
  EXPECT_EQ(back.r, p.r);
  EXPECT_EQ(back.c_infinite, p.c_infinite);
  EXPECT_EQ(back.h_override, p.h_override);
  EXPECT_EQ(back.d, 2u);
}

TEST(Json, TablesRoundTripAndVerify) {
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 4);
  const io::Json j = io::tables_to_json(t);
  EXPECT_EQ(j["d"][0], "3");
  EXPECT_EQ(j["d"][1], "16");
  EXPECT_EQ(j["d"][2], "476");
  EXPECT_EQ(j["regime"], "FF");
  const GrowthTables back = io::tables_from_json(io::Json::parse(j.dump()));
  EXPECT_EQ(back.d_seq, t.d_seq);
  EXPECT_EQ(back.gamma, t.gamma);
  EXPECT_EQ(io::tables_to_json(back), j);
  EXPECT_TRUE(verify_all(back).ok);
}

TEST(Json, CorruptedTablesFailVerification) {
  io::Json j = io::tables_to_json(build_tables(targets("1/2", "1/3"), 5));
  j["s"][3] = "1";
  const CheckReport rep = verify_all(io::tables_from_json(j));
  EXPECT_FALSE(rep.ok);
  EXPECT_NE(rep.first_failure.find("s(n)"), std::string::npos) << rep.first_failure;
  io::Json k = io::tables_to_json(build_tables(targets("1/2", "1/3"), 5));
  k.erase("gamma");
  EXPECT_THROW(io::tables_from_json(k), VerificationError);
}

TEST(Diagram, JsonStructureAtDepthOne) {
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 1);
  const io::Json j = io::diagram_to_json(io::build_diagram(t, 0, 1));
  EXPECT_EQ(j["stages"].size(), 2u);
  EXPECT_EQ(j["maps"].size(), 1u);
  EXPECT_EQ(j["maps"][0]["arrows"].size(), 7u);  // 2 pointEvalX, 2 starEval, 3 projection runs
}

TEST(Diagram, JsonRoundTrip) {
  for (unsigned d : {1u, 2u}) {
    const GrowthTables t = build_tables(targets("3/4", "1/4", d), 4);
    const io::Diagram dg = io::build_diagram(t, 0, 4);
    const std::string text = io::export_diagram(t, 0, 4, "json");
    const io::Diagram back = io::diagram_from_json(io::Json::parse(text));
    EXPECT_EQ(back, dg);
    EXPECT_EQ(io::diagram_to_dot(back), io::export_diagram(t, 0, 4, "dot"));
  }
}

TEST(Diagram, TamperedMultiplicityRejected) {
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 2);
  io::Json j = io::diagram_to_json(io::build_diagram(t, 0, 2));
  j["maps"][1]["multiplicity"]["CfromC"] = "1";
  EXPECT_THROW(io::diagram_from_json(j), VerificationError);
}

TEST(Dot, ClustersAndEdgeStyles) {
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 2);
  const std::string dot = io::export_diagram(t, 0, 2, "dot");
  for (unsigned n = 0; n <= 2; ++n) {
    const std::string c = "subgraph cluster_C_" + std::to_string(n) + " ";
    const std::string b = "subgraph cluster_B_" + std::to_string(n) + " ";
    EXPECT_NE(dot.find(c), std::string::npos);
    EXPECT_NE(dot.find(b), std::string::npos);
  }
  const std::regex cluster("subgraph cluster_");
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), cluster), std::sregex_iterator()), 6);
  EXPECT_NE(dot.find("C_1_0 -> C_2_2 [color=\"black:black\", label=\"coordProjection x16\"]"),
            std::string::npos);
  EXPECT_NE(dot.find("C_1_1 -> B_2 [style=dotted, label=\"pointEvalX\"]"), std::string::npos);
  EXPECT_THROW(io::export_diagram(t, 0, 2, "svg"), PreconditionError);
}

TEST(Witness, CertificateRoundTrip) {
  const GrowthTables t = build_tables(targets("1/2", "1/3"), 4);
  for (const WitnessReport& w :
       {find_witness(make_rational(1, 4), t), crossed_find_witness(make_rational(1, 4), t)}) {
    const io::Json j = io::witness_to_json(w);
    EXPECT_EQ(j["crossed"], w.crossed);
    const WitnessReport back = io::witness_from_json(io::Json::parse(j.dump()));
    EXPECT_EQ(back.M, w.M);
    EXPECT_EQ(back.ledger, w.ledger);
    EXPECT_TRUE(verify_witness(back).ok);
    io::Json bad = j;
    bad["M"] = to_string(Integer(w.M + 1));
    EXPECT_FALSE(verify_witness(io::witness_from_json(bad)).ok);
    bad = j;
    bad["ledger"][0]["relation"] = "~";
    EXPECT_THROW(io::witness_from_json(bad), VerificationError);
  }
}

TEST(Outerness, Json) {
  const io::Json j = io::outerness_to_json(outerness_witness({2, 6}));
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["translatedComponent"], io::Json::parse("[2, 2]"));
}
