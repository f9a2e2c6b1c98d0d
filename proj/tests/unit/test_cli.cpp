#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = superprim::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(SUPERPRIM_GOLDEN_DIR) + "/" + name, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, Goldens) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"check", "gl", "2", "1", "--weight", "3,1|-2"}, "check_gl_2_1.json"},
      {{"order", "gl", "2", "0", "--nu", "-1,2", "--lambda", "1,0"}, "order_gl_2_0.json"},
      {{"hasse", "gl", "3", "0", "--weight", "2,0,-2", "--format", "dot"}, "hasse_gl_3_0.dot"},
  };
  for (const auto& [args, file] : cases) {
    const Result first = invoke(args);
    const Result second = invoke(args);
    EXPECT_EQ(first.code, 0) << file;
    EXPECT_EQ(first.out, second.out) << file;
    EXPECT_EQ(first.out, slurp(file)) << file;
  }
}

TEST(Cli, GoldenContent) {
  const json check = json::parse(slurp("check_gl_2_1.json"));
  EXPECT_TRUE(check["strongly_typical"].get<bool>());
  const json order = json::parse(slurp("order_gl_2_0.json"));
  EXPECT_EQ(order["verdict"], "included");
  const std::string dot = slurp("hasse_gl_3_0.dot");
  std::size_t nodes = 0;
  for (std::size_t pos = dot.find("[label="); pos != std::string::npos; pos = dot.find("[label=", pos + 1)) ++nodes;
  EXPECT_EQ(nodes, 4U);
}

TEST(Cli, NegativeValuesAfterFlags) {
  const Result r = invoke({"order", "gl", "2", "0", "--lambda", "-1,2", "--nu", "1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["verdict"], "not_included");
  const Result shortflag = invoke({"check", "gl", "2", "0", "-w", "-1,2"});
  ASSERT_EQ(shortflag.code, 0) << shortflag.err;
  EXPECT_EQ(json::parse(shortflag.out)["weight"], "-1,2");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate", "gl", "2", "0"}).code, 1);
  EXPECT_EQ(invoke({"check", "gl", "2", "0"}).code, 1);
  EXPECT_EQ(invoke({"check", "gl", "2", "0", "--weight", "1,0", "--format", "dot"}).code, 1);
  const Result malformed = invoke({"check", "gl", "2", "1", "--weight", "1,2"});
  EXPECT_EQ(malformed.code, 1);
  const json e = json::parse(malformed.err)["error"];
  EXPECT_EQ(e["kind"], "MalformedWeightLiteral");
  EXPECT_TRUE(e["position"].is_number());
  EXPECT_EQ(invoke({"roots", "sp", "2", "0"}).code, 1);
}

TEST(Cli, DomainErrorsCarryWitnesses) {
  const Result r = invoke({"orbit", "gl", "2", "1", "--weight", "1,1|-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  const json e = json::parse(r.err)["error"];
  EXPECT_EQ(e["kind"], "NonGenericWeight");
  ASSERT_FALSE(e["witnesses"].empty());
  EXPECT_TRUE(e["witnesses"][0].contains("root"));
  EXPECT_TRUE(e["witnesses"][0].contains("pairing"));
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"kl", "--help"}).code, 0);
}

TEST(Cli, Subcommands) {
  const json roots = json::parse(invoke({"roots", "osp", "3", "1"}).out);
  EXPECT_EQ(roots["weyl_group_order"], 4);
  EXPECT_EQ(roots["positive_odd"].size(), 3U);  // e1-d1, e1+d1, d1

  const json orbit = json::parse(invoke({"orbit", "gl", "2", "1", "--weight", "3,1|-2"}).out);
  EXPECT_EQ(orbit["size"], 2);
  EXPECT_TRUE(orbit["free"].get<bool>());
  const Result text = invoke({"orbit", "gl", "2", "1", "--weight", "3,1|-2", "--format", "text"});
  EXPECT_EQ(text.out.substr(0, text.out.find('\n')), "e → 3,1|-2  |S|=2");

  const json restricted = json::parse(invoke({"restrict", "gl", "1", "1", "--weight", "1|0", "--margin", "0"}).out);
  ASSERT_EQ(restricted["count"], 2);
  EXPECT_EQ(restricted["summands"][0]["weight"], "1|0");
  EXPECT_EQ(restricted["summands"][1]["weight"], "0|1");

  const json kl = json::parse(invoke({"kl", "gl", "3", "0"}).out);
  EXPECT_EQ(kl["group_order"], 6);
  EXPECT_EQ(kl["table"].size(), 19U);  // Bruhat-comparable pairs in S_3

  const json cells = json::parse(invoke({"cells", "gl", "4", "0"}).out);
  EXPECT_EQ(cells["count"], 10);

  const json hasse = json::parse(invoke({"hasse", "gl", "3", "0", "--weight", "2,0,-2"}).out);
  EXPECT_EQ(hasse["nodes"].size(), 4U);
  EXPECT_EQ(hasse["edges"].size(), 4U);

  const json shift = json::parse(invoke({"shift", "gl", "1", "1", "--weight", "0|0"}).out);
  EXPECT_TRUE(shift.contains("kappa"));
}

TEST(Cli, GroupLimit) {
  const Result r = invoke({"kl", "gl", "5", "0", "--max-group-order", "100"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "GroupTooLarge");
}

}  // namespace
