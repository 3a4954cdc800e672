#include <gtest/gtest.h>

#include "regcycle/cli.hpp"

using namespace regcycle;
using namespace regcycle::cli;

namespace {

Json decide_json(const std::string& group, const std::string& element, const std::string& action) {
  const CommandResult r = run_guarded([&] { return cmd_decide(group, element, action); });
  EXPECT_EQ(r.exit_code, kExitPass) << r.err;
  return Json::parse(r.out);
}

int exit_code_of(const std::function<CommandResult()>& fn) { return run_guarded(fn).exit_code; }

}  // namespace

TEST(Parse, TextHelpers) {
  EXPECT_EQ(text::parse_range("6..17"), (std::pair<u64, u64>{6, 17}));
  EXPECT_EQ(text::parse_range("10"), (std::pair<u64, u64>{10, 10}));
  EXPECT_THROW(text::parse_range("9..3"), ParseError);
  EXPECT_THROW(text::parse_uint("x1", "k"), ParseError);
}

TEST(Parse, GroupSpecs) {
  EXPECT_EQ(parse_group("sym:6").kind, GroupKind::permutation);
  EXPECT_EQ(parse_group("gl:2,3").kind, GroupKind::linear);
  EXPECT_EQ(parse_group("agl:2,3").kind, GroupKind::affine);
  EXPECT_EQ(parse_group("wreath:sym:4^3").r, 3u);
  EXPECT_EQ(parse_group("diag:alt5,2").ell, 2u);
  EXPECT_EQ(PermGroupSpec::parse("m10").group().order(), 720u);
  EXPECT_EQ(PermGroupSpec::parse("gens:(1 2 3);(1 2)@3").group().order(), 6u);
  EXPECT_THROW(parse_group("foo:3"), ParseError);
  EXPECT_THROW(parse_group("gl:2,6"), ParseError);
}

TEST(Parse, Elements) {
  EXPECT_EQ(CycleType::of(parse_permutation("type:5,3,2", 12)).to_string(), "[5,3,2,1,1]");
  EXPECT_THROW(parse_permutation("type:5,3,2", 9), ParseError);
  const Field& f = Field::get(3);
  EXPECT_EQ(parse_matrix(f, 2, "1 1; 0 1"), Matrix(f, 2, 2, {1, 1, 0, 1}));
  EXPECT_THROW(parse_matrix(f, 2, "1 3; 0 1"), ParseError);
  const AffineMap a = parse_affine(f, 2, "1 1; 0 1 | 1 0");
  EXPECT_EQ(a.translation, (Vec{1, 0}));
  const auto w = parse_wreath(4, 2, "(1 2) | (3 4) @ (1 2)");
  EXPECT_EQ(w.coords.size(), 2u);
  EXPECT_FALSE(w.sigma.is_identity());
}

TEST(Decide, IntroExample) {
  const Json j = decide_json("sym:10", "(1 2)(3 4 5)(6 7 8 9 10)", "ksets:2");
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["order"], 30);
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["certified"], true);
  EXPECT_EQ(j["induced_cycle_type"], Json::parse("[1,3,5,5,6,10,15]"));
}

TEST(Decide, Sym6OnCosetsOfPgl25) {
  const Json j = decide_json("sym:6", "(1 2 3 4 5 6)", "cosets:pgl2:5");
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["order"], 6);
  EXPECT_EQ(j["induced_cycle_type"], Json::parse("[1,2,3]"));
}

TEST(Decide, AffineWitness) {
  const Json j = decide_json("agl:2,3", "1 1; 0 1 | 1 0", "affine");
  EXPECT_EQ(j["verdict"], true);
  EXPECT_TRUE(j["witness"].is_string());
  EXPECT_EQ(j["certified"], true);
}

TEST(Decide, TypeNotationUsesCombinatorialMethod) {
  const Json j = decide_json("sym:17", "type:7,5,3,2", "ksets:3");
  EXPECT_EQ(j["method"], "kset_combinatorial");
  EXPECT_EQ(j["verdict"], false);
  const Json k = decide_json("sym:17", "type:7,5,3,2", "ksets:14");  // complement of 3-sets
  EXPECT_EQ(k["verdict"], false);
  const Json ok = decide_json("sym:16", "type:7,5,3,1", "ksets:3");
  EXPECT_EQ(ok["verdict"], true);
}

TEST(Decide, ConstructiveMethodsBeyondTheCap) {
  const Json p = decide_json("sym:40", "type:7,5,3,3,2", "partitions:5x8");
  EXPECT_EQ(p["method"], "constructive_proof");
  EXPECT_EQ(p["verdict"], true);
  EXPECT_TRUE(p["induced_order"].is_null());
  const Json k = decide_json("sym:60", "type:11,7,5,3,2", "ksets:20");
  EXPECT_EQ(k["method"], "kset_combinatorial");
}

TEST(Decide, OtherGroupKinds) {
  EXPECT_EQ(decide_json("gl:3,2", "0 1 0; 0 0 1; 1 1 0", "")["verdict"], true);
  EXPECT_EQ(decide_json("wreath:sym:4^2", "(1 2 3) | (1 2) @ (1 2)", "")["verdict"], true);
  EXPECT_EQ(decide_json("diag:alt5,1", "(1 2) | (1 2) | (1 2 3)", "")["verdict"], true);
}

TEST(Decide, TsvIsHeaderPlusOneRow) {
  RunConfig cfg;
  cfg.output = "tsv";
  const auto r = cmd_decide("sym:6", "(1 2 3 4 5 6)", "cosets:pgl2:5", cfg);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  EXPECT_EQ(r.out.rfind("schema\tgroup\telement", 0), 0u);
}

TEST(ExitCodes, ParseUsageAndCap) {
  EXPECT_EQ(exit_code_of([] { return cmd_decide("sym:6", "(1 2", "natural"); }), kExitUsage);
  EXPECT_EQ(exit_code_of([] { return cmd_decide("alt:6", "(1 2)", "natural"); }), kExitUsage);
  EXPECT_EQ(exit_code_of([] { return cmd_decide("gl:2,3", "1 0; 0 1", "ksets:2"); }), kExitUsage);
  RunConfig small;
  small.domain_cap = 5;
  EXPECT_EQ(exit_code_of([&] { return cmd_decide("sym:8", "(1 2)", "natural", small); }), kExitCap);
  // k-sets past the cap fall back to the constructive proof
  EXPECT_EQ(exit_code_of([&] { return cmd_decide("sym:8", "(1 2)", "ksets:3", small); }), kExitPass);
  EXPECT_EQ(exit_code_of([] { return cmd_scan("ksets:2", "10..70"); }), kExitCap);
}

TEST(Scan, SpecExamples) {
  const auto k3 = cmd_scan("ksets:3", "6..17");
  EXPECT_EQ(k3.out, "m\tk\tcycle_type\tmin_cover\n17\t3\t[7,5,3,2]\t4\n");
  const auto k2 = cmd_scan("ksets:2", "10");
  EXPECT_EQ(k2.out, "m\tk\tcycle_type\tmin_cover\n10\t2\t[5,3,2]\t3\n");
  const auto p = cmd_scan("partitions:2x3", "6");
  EXPECT_EQ(p.out, "m\ta\tb\tcycle_type\tmax_orbit\n");
}

TEST(Scan, ReverseLexOrderAndThreadIndependence) {
  RunConfig one, four;
  four.threads = 4;
  const auto a = cmd_scan("ksets:2", "10..30", one);
  const auto b = cmd_scan("ksets:2", "10..30", four);
  EXPECT_EQ(a.out, b.out);
  const auto c = cmd_scan("partitions:2x2", "", one);
  EXPECT_EQ(c.out, "m\ta\tb\tcycle_type\tmax_orbit\n4\t2\t2\t[4]\t2\n4\t2\t2\t[2,2]\t1\n");
}

TEST(Bounds, TableAndVerdicts) {
  const auto r = cmd_bounds("47..50");
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_NE(r.out.find("47\t5057815230\t"), std::string::npos);
  EXPECT_EQ(exit_code_of([] { return cmd_bounds("40..50"); }), kExitUsage);
}

TEST(Verify, SuitesReportAndExit) {
  const auto s6 = cmd_verify("s6-exception", "");
  EXPECT_EQ(s6.exit_code, kExitPass);
  EXPECT_NE(s6.out.find("s6-exception\tpass\t"), std::string::npos);
  RunConfig js;
  js.output = "json";
  const Json j = Json::parse(cmd_verify("ksets", "4..9", js).out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j["assertions"].empty());
  EXPECT_EQ(exit_code_of([] { return cmd_verify("nope", ""); }), kExitUsage);
}
