#include "threepv/harness.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace threepv::harness;

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the three-point algebras and their Fock space realizations"};
  std::string suite, kappa0, B0, B1, states, format, config;
  int r = 0, window = 0;
  std::uint64_t seed = 0;

  std::string suites_help = "one of:";
  for (const auto& s : suite_names()) suites_help += " " + s;
  app.add_option("suite", suite, suites_help);
  auto* o_r = app.add_option("--r", r, "normal ordering (0 or 1)");
  auto* o_k = app.add_option("--kappa0", kappa0, "level kappa0 as P/Q");
  auto* o_b0 = app.add_option("--B0", B0, "scalar action of b_0");
  auto* o_b1 = app.add_option("--B1", B1, "matrix of b1_0 on V as 'a,b;c,d'");
  auto* o_w = app.add_option("--window", window, "mode window N");
  auto* o_s = app.add_option("--states", states, "vacuum | random:K:D");
  auto* o_seed = app.add_option("--seed", seed, "seed for random states");
  auto* o_f = app.add_option("--format", format, "text | json");
  app.add_option("--config", config, "key=value file; flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  SuiteConfig cfg;
  try {
    if (!config.empty()) load_config_file(cfg, config);
    if (!suite.empty()) cfg.suite = suite;
    if (cfg.suite.empty()) throw std::invalid_argument("no suite given");
    if (o_r->count()) cfg.r = r;
    if (o_k->count()) apply_setting(cfg, "kappa0", kappa0);
    if (o_b0->count()) apply_setting(cfg, "B0", B0);
    if (o_b1->count()) apply_setting(cfg, "B1", B1);
    if (o_w->count()) cfg.window = window;
    if (o_s->count()) apply_setting(cfg, "states", states);
    if (o_seed->count()) cfg.seed = seed;
    if (o_f->count()) cfg.format = format;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "3pv: " << e.what() << "\n";
    return 2;
  }

  try {
    const CheckReport rep = run_suite(cfg);
    std::cout << emit_report(rep, cfg.format);
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "3pv: " << e.what() << "\n";
    return 3;
  }
}
