#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "bttb/bccb_transform.hpp"
#include "bttb/config.hpp"
#include "bttb/dense_assembly.hpp"
#include "bttb/error.hpp"
#include "bttb/fast_apply.hpp"
#include "bttb/harness.hpp"
#include "bttb/vector_io.hpp"

namespace {

using namespace bttb;

const std::vector<std::string> kGridKeys{"sx", "sy", "nz", "pxl", "pxr", "pyl", "pyr",
                                         "dx", "dy", "zblocks"};
const std::vector<std::string> kKernelKeys{"kernel", "gamma", "gamma-scale", "D", "I", "F"};

// Flag values land here; only flags actually given override the config file.
struct KeyedOptions {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;

  void add(CLI::App& app, const std::vector<std::string>& keys) {
    for (const std::string& key : keys) options[key] = app.add_option("--" + key, values[key]);
  }

  Config merged() const {
    Config cfg;
    if (!config_path.empty()) cfg = read_config(config_path);
    for (const auto& [key, opt] : options)
      if (opt->count() > 0) cfg[key] = values.at(key);
    return cfg;
  }
};

std::vector<std::int64_t> parse_problems(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    const std::size_t dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoll(item));
      } else {
        const std::int64_t a = std::stoll(item.substr(0, dash));
        const std::int64_t b = std::stoll(item.substr(dash + 1));
        for (std::int64_t k = a; k <= b; ++k) out.push_back(k);
      }
    } catch (const std::logic_error&) {
      throw ValidationError("problems", "cannot parse '" + item + "'");
    }
    pos = end + 1;
  }
  return out;
}

template <typename F>
void with_output(const std::string& path, F&& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  f(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast BTTB forward modelling of gravity and magnetic prism grids"};
  app.require_subcommand(1);

  double padding = 0.0;
  std::string out_path;

  auto* sizes = app.add_subcommand("sizes", "Print the dimensions of the scaled problems");
  sizes->add_option("--padding", padding, "Padding fraction per side");
  sizes->add_option("--out", out_path, "Output CSV (default stdout)");

  auto* bench = app.add_subcommand("bench", "Time dense and transform products");
  std::string problems = "1";
  int trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t guard = kDefaultMemoryGuard;
  KeyedOptions bench_kernel;
  bench->add_option("--problems", problems, "Problem list, e.g. 1-4 or 1,3,5");
  bench->add_option("--padding", padding, "Padding fraction per side");
  bench->add_option("--trials", trials, "Random vectors per product")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--mem-guard-bytes", guard, "Skip dense matrices larger than this");
  bench->add_option("--out", out_path, "Output CSV (default stdout)");
  bench_kernel.add(*bench, kKernelKeys);

  auto* simulate = app.add_subcommand("simulate", "Compute station data for a model");
  KeyedOptions sim_opts;
  std::string model_path, dump_csv;
  std::size_t dump_layer = 0;
  simulate->add_option("--config", sim_opts.config_path, "Key-value config file");
  simulate->add_option("--model", model_path, "Model vector (.bin or text)")->required();
  simulate->add_option("--out", out_path, "Data vector (.bin or text)")->required();
  simulate->add_option("--dump-csv", dump_csv, "Write one dense layer as CSV");
  simulate->add_option("--dump-layer", dump_layer, "Layer written by --dump-csv");
  sim_opts.add(*simulate, kGridKeys);
  sim_opts.add(*simulate, kKernelKeys);

  auto* build = app.add_subcommand("build-stack", "Build and save the transform stack");
  KeyedOptions build_opts;
  build->add_option("--config", build_opts.config_path, "Key-value config file");
  build->add_option("--out", out_path, "Stack file")->required();
  build_opts.add(*build, kGridKeys);
  build_opts.add(*build, kKernelKeys);

  auto* apply_cmd = app.add_subcommand("apply", "Apply a saved stack to a vector");
  std::string stack_path, input_path, mode_name = "forward";
  apply_cmd->add_option("--stack", stack_path, "Stack file")->required();
  apply_cmd->add_option("--input", input_path, "Input vector (.bin or text)")->required();
  apply_cmd->add_option("--mode", mode_name, "forward or transpose")
      ->check(CLI::IsMember({"forward", "transpose"}));
  apply_cmd->add_option("--out", out_path, "Output vector (.bin or text)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sizes) {
      const auto rows = sizes_table(padding);
      with_output(out_path, [&](std::ostream& os) { write_sizes_csv(os, rows); });
    } else if (*bench) {
      BenchOptions opt;
      opt.problems = parse_problems(problems);
      opt.padding = padding;
      opt.trials = trials;
      opt.seed = seed;
      opt.memory_guard = guard;
      opt.params = kernel_from_config(bench_kernel.merged());
      const auto records = run_bench(opt);
      with_output(out_path, [&](std::ostream& os) { write_bench_csv(os, records); });
    } else if (*simulate) {
      const Config cfg = sim_opts.merged();
      const GridSpec grid = grid_from_config(cfg);
      const KernelParams params = kernel_from_config(cfg);
      const auto model = read_vector(model_path);
      write_vector(out_path, bttb::simulate(grid, params, model));
      if (!dump_csv.empty()) {
        const DenseSensitivity g = assemble_dense(grid, params);
        with_output(dump_csv, [&](std::ostream& os) { write_layer_csv(g, dump_layer, os); });
      }
    } else if (*build) {
      const Config cfg = build_opts.merged();
      save_stack(build_transform_stack(grid_from_config(cfg), kernel_from_config(cfg)), out_path);
    } else if (*apply_cmd) {
      const TransformStack stack = load_stack(stack_path);
      const ApplyMode mode = mode_name == "transpose" ? ApplyMode::transpose : ApplyMode::forward;
      write_vector(out_path, bttb::apply(stack, read_vector(input_path), mode));
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
