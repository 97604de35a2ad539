#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "toroidal");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = toroidal::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, VerifyExitCodes) {
  auto r = run({"verify", "--type", "B", "--rank", "3", "--mode", "strict", "--no-sweep", "--jacobi", "0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0 fail"), std::string::npos);
  r = run({"verify", "--type", "D", "--rank", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("configuration error"), std::string::npos);
  r = run({"verify", "--type", "C", "--rank", "2", "--no-sweep", "--jacobi", "0"});
  EXPECT_EQ(r.code, 1);
  r = run({"verify", "--type", "Q"});
  EXPECT_EQ(r.code, 2);
  r = run({"verify", "--mode", "lazy"});
  EXPECT_EQ(r.code, 2);
  r = run({"verify", "-E", "1/3"});
  EXPECT_EQ(r.code, 2);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, VerifyJsonReport) {
  auto r = run({"verify", "--type", "C", "--rank", "2", "--mode", "full", "--output", "json", "-K", "1", "-E",
                "1", "--jacobi", "2", "--seed", "9"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["header"]["type"], "C");
  EXPECT_EQ(j["header"]["mode"], "full");
  EXPECT_EQ(j["header"]["K"], 1);
  EXPECT_EQ(j["header"]["E"], "1");
  EXPECT_EQ(j["header"]["seed"], 9);
  EXPECT_EQ(j["header"]["marks"], (std::vector<int>{1, 2, 1}));
  EXPECT_GT(j["summary"]["pass_mod_null"].get<int>(), 0);
  EXPECT_EQ(j["body"].size(), j["summary"]["total"].get<std::size_t>());
  EXPECT_EQ(j["millis"].size(), j["body"].size());
  for (const auto &e : j["body"]) {
    EXPECT_TRUE(e.contains("id"));
    EXPECT_TRUE(e.contains("params"));
    EXPECT_FALSE(e.contains("millis"));
    EXPECT_EQ(e["status"] == "pass", e["residue"] == "");
  }
}

TEST(Cli, DeterministicJson) {
  const std::vector<std::string> args = {"verify", "--type", "A", "--rank", "2", "--output", "json",
                                         "-K",     "1",      "-E", "3/2",   "--seed", "5"};
  auto a = nlohmann::json::parse(run(args).out);
  auto b = nlohmann::json::parse(run(args).out);
  a.erase("millis");
  b.erase("millis");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, Ope) {
  auto r = run({"ope", "--type", "A", "--rank", "3", ":eps(1) eps*(2):", ":eps*(1) eps(2):"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "delta: -:eps(1) eps*(1): + :eps(2) eps*(2):, d_delta: -1\n");
  r = run({"ope", "--type", "B", "--rank", "3", ":e e:", ":eps(1) eps*(2):"});
  EXPECT_EQ(r.out, "0\n");
  r = run({"ope", "--type", "B", "--rank", "3", "--mode", "full", ":beta* eps*(2):", ":eps*(1) eps(2):"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(":cbar* eps*(1):"), std::string::npos);
  EXPECT_NE(r.out.find("[NULL]"), std::string::npos);
  r = run({"ope", "--type", "B", "--rank", "3", ":beta* eps*(2):", ":eps*(1) eps(2):"});
  EXPECT_EQ(r.out, "0\n");
  r = run({"ope", "--type", "B", "--rank", "3", ":epsbar(1) eps(1):", ":eps(1) e:"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position"), std::string::npos);
  r = run({"ope", "--type", "A", "--rank", "3", "--output", "json", ":eps(1) eps*(2):", ":eps*(1) eps(2):"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["d_delta"], "-1");
}

TEST(Cli, Table) {
  auto r = run({"table", "--type", "C", "--rank", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d vector: (1, 1/2, 1/2, 1)"), std::string::npos);
  r = run({"table", "--type", "B", "--rank", "2", "--output", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["marks"], (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(j["generators"][2]["x+"], "sqrt2*:eps(2) e:");
}

TEST(Cli, States) {
  auto r = run({"states", "--type", "A", "--rank", "2", "-E", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total: 22"), std::string::npos);
  r = run({"states", "--type", "B", "--rank", "3", "-E", "0.5", "--output", "json", "--list"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 10);
  EXPECT_EQ(j["states"][0], "|0>");
}

TEST(Cli, ConfigFileAndOutPath) {
  const std::string cfg = ::testing::TempDir() + "toroidal_cli_test.cfg";
  const std::string outp = ::testing::TempDir() + "toroidal_cli_test.out";
  {
    std::ofstream f(cfg);
    f << "type=B\nrank=2\nenergy=1\n";
  }
  auto r = run({"--config", cfg, "states", "--out", outp});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(outp);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_NE(ss.str().find("B2 states"), std::string::npos);
  std::remove(cfg.c_str());
  std::remove(outp.c_str());
}
