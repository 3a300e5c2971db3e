#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"
#include "jordan_tools/commands.hpp"

using jordan::tools::run_command;
using jordan::tools::RunConfig;
using nlohmann::json;

namespace {

std::string instance(const std::string& name) { return std::string(JORDAN_INSTANCE_DIR) + "/" + name + ".json"; }

RunConfig config(const std::string& command, const std::string& name, const std::string& ring = "q") {
  RunConfig c;
  c.command = command;
  c.ring = ring;
  c.instance = instance(name);
  return c;
}

int exit_status(const std::string& args) {
  const std::string cmd = std::string(JORDAN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const json* find_check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Cli, ValidatePasses) {
  const auto r = run_command(config("validate", "rectangular_1_1", "gf:5"));
  ASSERT_EQ(r.exit_code, 0) << r.json;
  const auto j = json::parse(r.json);
  EXPECT_EQ(j["command"], "validate");
  EXPECT_EQ(j["config"]["ring"], "gf:5");
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("formula"));
    EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
  }
}

TEST(Cli, ChecksAreSortedByName) {
  const auto j = json::parse(run_command(config("validate", "rectangular_1_2")).json);
  std::string prev;
  for (const auto& c : j["checks"]) {
    const auto name = c["name"].get<std::string>();
    EXPECT_LE(prev, name);
    prev = name;
  }
}

TEST(Cli, CorruptedTensorReportsWitness) {
  const auto r = run_command(config("validate", "tensor_corrupted"));
  EXPECT_EQ(r.exit_code, 1);
  const auto j = json::parse(r.json);
  EXPECT_FALSE(j["pass"].get<bool>());
  bool witnessed = false;
  for (const auto& c : j["checks"])
    if (!c["pass"].get<bool>() && c.contains("witnesses") && !c["witnesses"].empty()) witnessed = true;
  EXPECT_TRUE(witnessed);
}

TEST(Cli, DeformMembershipModSeven) {
  const auto r = run_command(config("deform", "rectangular_1_1_a1", "gf:7"));
  ASSERT_EQ(r.exit_code, 0) << r.json;
  const auto j = json::parse(r.json);
  EXPECT_EQ(j["outputs"]["membership"]["members"], 6);
  EXPECT_EQ(j["outputs"]["membership"]["candidates"], 7);
  EXPECT_TRUE(j["outputs"]["membership"]["exhaustive"].get<bool>());
  const auto* s3 = find_check(j, "ua.S3");
  ASSERT_NE(s3, nullptr);
  EXPECT_EQ((*s3)["points"].size(), 6U);
}

TEST(Cli, NonStructuralAlphaFails) {
  const auto r = run_command(config("deform", "rectangular_jts_1_2_nonstructural"));
  EXPECT_EQ(r.exit_code, 1);
  const auto j = json::parse(r.json);
  const auto* st = find_check(j, "alpha.structural");
  ASSERT_NE(st, nullptr);
  EXPECT_FALSE((*st)["pass"].get<bool>());
}

TEST(Cli, UsageErrors) {
  auto c = config("validate", "rectangular_1_1", "gf:3");
  EXPECT_EQ(run_command(c).exit_code, 2);
  c = config("validate", "does_not_exist");
  EXPECT_EQ(run_command(c).exit_code, 2);
  c = config("frobnicate", "rectangular_1_1");
  EXPECT_EQ(run_command(c).exit_code, 2);
  EXPECT_EQ(run_command(config("validate", "x"), "{not json").exit_code, 2);
}

TEST(Cli, SameSeedSameBytes) {
  auto c = config("deform", "rectangular_2_2_e1", "gf:7");
  c.seed = 42;
  c.samples = 30;
  const auto a = run_command(c);
  const auto b = run_command(c);
  EXPECT_EQ(a.json, b.json);
  c.seed = 43;
  EXPECT_EQ(json::parse(run_command(c).json)["config"]["seed"], 43);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(exit_status("validate --ring gf:5 --instance " + instance("rectangular_1_1")), 0);
  EXPECT_EQ(exit_status("validate --instance " + instance("tensor_corrupted")), 1);
  EXPECT_EQ(exit_status("validate --ring gf:3 --instance " + instance("rectangular_1_1")), 2);
  EXPECT_EQ(exit_status("validate"), 2);
  EXPECT_EQ(exit_status("deform --instance " + instance("rectangular_jts_1_2_nonstructural")), 1);
}

TEST(CliBinary, OutWritesReport) {
  const auto path = std::filesystem::temp_directory_path() / "jordan_cli_out.json";
  std::filesystem::remove(path);
  ASSERT_EQ(exit_status("group --ring gf:5 --samples 20 --instance " + instance("group_m2_e1") + " --out " + path.string()),
            0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  auto c = config("group", "group_m2_e1", "gf:5");
  c.samples = 20;
  EXPECT_EQ(ss.str(), run_command(c).json);
  std::filesystem::remove(path);
}
