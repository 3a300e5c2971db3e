#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jordan_tools/commands.hpp"

namespace {

void add_run_options(CLI::App* sub, jordan::tools::RunConfig& cfg) {
  sub->add_option("--ring", cfg.ring, "Scalar ring: q, gf:p (p prime, p >= 5) or f64")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Seed of the sample generator")->capture_default_str();
  sub->add_option("--samples", cfg.samples, "Number of sampled configurations")->capture_default_str();
  sub->add_option("--instance", cfg.instance, "Instance spec (JSON)")->required();
  sub->add_option("--out", cfg.out, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using jordan::tools::RunConfig;
  CLI::App app{"Deformations of Jordan structures and their symmetric spaces"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "Check the pair, triple system and algebra identities of an instance"},
      {"deform", "Deform by an element a or a structural map alpha and check the resulting space"},
      {"group", "Deformed groups x<>y = xay + x + y on M(n)"},
      {"grassmann", "Grassmannian deformations given by a split form beta"},
      {"geometry", "Christoffel tensor, metric and invariant density checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_run_options(sub, cfg);
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : jordan::tools::kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto res = jordan::tools::run_command(cfg);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (res.exit_code == jordan::tools::kExitUsage) {
    std::cerr << res.error << "\n";
    return res.exit_code;
  }
  if (cfg.out.empty()) {
    std::cout << res.json;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return jordan::tools::kExitUsage;
    }
    out << res.json;
  }
  std::cerr << cfg.command << ": " << (res.exit_code == 0 ? "pass" : "FAIL") << " (" << ms.count() << " ms)\n";
  return res.exit_code;
}
