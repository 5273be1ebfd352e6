// Command-line driver: run scenarios, compare perturbed runs, check the
// convolution oracle.

#include <CLI11.hpp>

#include <cstdio>

#include "nbl/runner.hpp"

namespace {

// Exit codes: 0 success, 2 config error, 3 blow-up halt, 4 I/O error.
enum { exit_ok = 0, exit_fail = 1, exit_config = 2, exit_blowup = 3, exit_io = 4 };

template <class Fn>
int guarded_run(Fn&& fn) {
  try {
    return fn();
  } catch (const nbl::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return exit_config;
  } catch (const nbl::io_error& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return exit_io;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_fail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nbl - nonlocal balance law solver"};
  app.require_subcommand(1);

  std::string config_path, output_dir, perturb_spec;
  int snapshots = 0;
  bool quiet = false;
  std::vector<int> sizes{64, 128, 256};
  std::uint64_t seed = 20140522;

  auto* run = app.add_subcommand("run", "integrate a scenario from a config file");
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_option("--output-dir", output_dir, "override the output directory");
  run->add_option("--snapshots", snapshots, "override the snapshot count");
  run->add_flag("--quiet", quiet, "suppress the summary");

  auto* cmp = app.add_subcommand("compare", "paired runs from perturbed data");
  cmp->add_option("config", config_path, "scenario config file")->required();
  cmp->add_option("--perturb", perturb_spec,
                  "component=..,shape=bump,center_x=..,center_y=..,radius=..,"
                  "deltas=d1:d2:...")
      ->required();
  cmp->add_option("--output-dir", output_dir, "override the output directory");
  cmp->add_option("--snapshots", snapshots, "override the snapshot count");
  cmp->add_flag("--quiet", quiet, "suppress the ratio table");

  auto* orc = app.add_subcommand("oracle", "fast vs direct convolution check");
  orc->add_option("--sizes", sizes, "grid sizes to test");
  orc->add_option("--seed", seed, "random field seed");
  orc->add_flag("--quiet", quiet, "print only failures");

  CLI11_PARSE(app, argc, argv);

  nbl::RunOptions opt;
  if (!output_dir.empty()) opt.output_dir = output_dir;
  if (snapshots > 0) opt.snapshots = snapshots;
  opt.quiet = quiet;

  if (run->parsed()) {
    return guarded_run([&] {
      auto cfg = nbl::load_config(config_path);
      auto outcome = nbl::run_command(cfg, opt);
      return outcome.record.halt == nbl::halt_reason::blow_up ? exit_blowup : exit_ok;
    });
  }
  if (cmp->parsed()) {
    return guarded_run([&] {
      auto cfg = nbl::load_config(config_path);
      auto pert = nbl::parse_perturbation(perturb_spec);
      nbl::compare_command(cfg, pert, opt);
      return exit_ok;
    });
  }
  return guarded_run([&] {
    auto outcome = nbl::oracle_command(sizes, seed);
    for (std::size_t k = 0; k < outcome.sizes.size(); ++k) {
      bool ok = outcome.max_deviation[k] <= outcome.tolerance &&
                outcome.max_deviation_grad[k] <= outcome.tolerance;
      if (!quiet || !ok)
        std::printf("%4d x %-4d  conv %.3e  grad %.3e  [%s]\n", outcome.sizes[k],
                    outcome.sizes[k], outcome.max_deviation[k],
                    outcome.max_deviation_grad[k], ok ? "ok" : "FAIL");
    }
    return outcome.pass ? exit_ok : exit_fail;
  });
}
