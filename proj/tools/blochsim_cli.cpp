// Copyright 2026 The blochsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "blochsim/bench.hpp"
#include "blochsim/json_io.hpp"

namespace fs = std::filesystem;
using namespace blochsim;

namespace {

struct CommonOptions {
  std::string input;
  std::string output = ".";
  std::uint64_t seed = 1;
  int threads = 0;
  double tolerance = kDefaultTolerance;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--input", opts.input, "input JSON file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--output", opts.output, "output directory (created if missing)");
  cmd->add_option("--seed", opts.seed, "base random seed");
  cmd->add_option("--threads", opts.threads,
                  "worker threads (0 = BLOCHSIM_THREADS env, else hardware)");
  cmd->add_option("--tolerance", opts.tolerance, "validation tolerance for parsed matrices");
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("BLOCHSIM_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path prepare_output(const std::string& dir) {
  fs::path path(dir);
  fs::create_directories(path);
  return path;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path.string());
  out << content;
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

int cmd_run(const CommonOptions& opts) {
  const io::RunInput input =
      io::run_input_from_json(read_file(opts.input), {opts.tolerance});
  const ForwardRun run = forward(input.circuit, input.initial_state);
  const fs::path outdir = prepare_output(opts.output);
  write_file(outdir / "state.json", io::state_to_json(run.output));
  std::ostringstream csv;
  csv << "observable,value\n";
  for (const auto& named : input.observables)
    csv << named.name << ',' << format_double(expectation(run.output, named.observable))
        << '\n';
  write_file(outdir / "expectations.csv", csv.str());
  return 0;
}

int cmd_grad(const CommonOptions& opts, bool check_fd) {
  const io::GradInput input =
      io::grad_input_from_json(read_file(opts.input), {opts.tolerance});
  const ForwardRun run = forward(input.circuit, input.initial_state);
  const GradientReport report =
      backward(input.circuit, run, cost_expectation_cotangent(input.observable));

  nlohmann::json out;
  out["cost"] = expectation(run.output, input.observable);
  out["gradients"] = nlohmann::json::object();
  for (const auto& [name, value] : report.parameter_gradients) out["gradients"][name] = value;

  if (check_fd) {
    const double h = 1e-5;
    double max_rel = 0.0;
    Circuit perturbed = input.circuit;
    for (const auto& [name, grad] : report.parameter_gradients) {
      perturbed.parameters = input.circuit.parameters;
      perturbed.parameters[name] += h;
      const double plus =
          expectation(forward(perturbed, input.initial_state).output, input.observable);
      perturbed.parameters[name] -= 2.0 * h;
      const double minus =
          expectation(forward(perturbed, input.initial_state).output, input.observable);
      const double fd = (plus - minus) / (2.0 * h);
      max_rel = std::max(max_rel, std::abs(grad - fd) / std::max(std::abs(grad), 1e-8));
    }
    out["fd_check"] = {{"step", h}, {"max_relative_error", max_rel}};
  }
  const fs::path outdir = prepare_output(opts.output);
  write_file(outdir / "gradients.json", out.dump(2) + "\n");
  return 0;
}

int cmd_lindblad(const CommonOptions& opts, const std::string& method_flag, double dt_flag,
                 bool store_states_flag) {
  io::LindbladInput input =
      io::lindblad_input_from_json(read_file(opts.input), {opts.tolerance});
  if (method_flag == "expm") input.method = EvolveMethod::Expm;
  if (method_flag == "rk4") input.method = EvolveMethod::Rk4;
  if (dt_flag > 0.0) input.dt = dt_flag;
  if (store_states_flag) input.store_states = true;

  const LindbladGenerator gen = build_generator(input.hamiltonian, input.jumps);
  const EvolutionResult res =
      evolve(input.initial_state, gen, input.t_final, input.method, input.dt);

  const fs::path outdir = prepare_output(opts.output);
  std::ostringstream csv;
  csv << "time";
  for (const auto& named : input.observables) csv << ',' << named.name;
  csv << '\n';
  for (std::size_t i = 0; i < res.times.size(); ++i) {
    csv << format_double(res.times[i]);
    for (const auto& named : input.observables)
      csv << ',' << format_double(expectation(res.states[i], named.observable));
    csv << '\n';
  }
  write_file(outdir / "trajectory.csv", csv.str());

  if (input.store_states) {
    std::ostringstream states;
    states << "time";
    for (std::size_t j = 0; j < res.states.front().size(); ++j) states << ",r" << j;
    states << '\n';
    for (std::size_t i = 0; i < res.times.size(); ++i) {
      states << format_double(res.times[i]);
      for (double v : res.states[i].data) states << ',' << format_double(v);
      states << '\n';
    }
    write_file(outdir / "states.csv", states.str());
  }
  return 0;
}

int cmd_vqt(const CommonOptions& opts, bool seed_set) {
  VqtExperimentConfig config =
      io::vqt_input_from_json(read_file(opts.input), {opts.tolerance});
  if (seed_set) config.base_seed = opts.seed;
  config.threads = resolve_threads(opts.threads);
  const auto results = run_vqt_experiment(config);

  const fs::path outdir = prepare_output(opts.output);
  std::ostringstream metrics;
  metrics << "beta,seed,final_loss,fidelity,trace_distance,log_z\n";
  for (const auto& r : results)
    metrics << format_double(r.beta) << ',' << r.seed << ',' << format_double(r.final_loss)
            << ',' << format_double(r.fidelity) << ',' << format_double(r.trace_distance)
            << ',' << format_double(r.log_z) << '\n';
  write_file(outdir / "metrics.csv", metrics.str());

  std::ostringstream traces;
  traces << "beta,seed,iteration,loss\n";
  for (const auto& r : results)
    for (std::size_t i = 0; i < r.loss_trace.size(); ++i)
      traces << format_double(r.beta) << ',' << r.seed << ',' << i << ','
             << format_double(r.loss_trace[i]) << '\n';
  write_file(outdir / "traces.csv", traces.str());
  return 0;
}

int cmd_bench(const CommonOptions& opts, int reps_flag) {
  const io::BenchInput input =
      io::bench_input_from_json(read_file(opts.input), {opts.tolerance});
  bench::KernelBenchConfig config;
  config.gates = input.gates;
  config.n_values = input.n_values;
  config.reps = reps_flag > 0 ? reps_flag : input.reps;
  config.warmup = input.warmup;
  config.seed = opts.seed;
  const auto rows = bench::run_kernel_bench(config);
  const fs::path outdir = prepare_output(opts.output);
  write_file(outdir / "bench.csv", bench::bench_rows_to_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bloch-vector density-operator simulator"};
  app.require_subcommand(1);

  CommonOptions run_opts, grad_opts, lindblad_opts, vqt_opts, bench_opts;
  bool check_fd = false;
  std::string method_flag;
  double dt_flag = 0.0;
  bool store_states = false;
  int reps_flag = 0;

  CLI::App* run = app.add_subcommand("run", "apply a circuit and report expectations");
  add_common(run, run_opts);

  CLI::App* grad = app.add_subcommand("grad", "reverse-mode circuit gradients");
  add_common(grad, grad_opts);
  grad->add_flag("--check-fd", check_fd, "cross-check against central finite differences");

  CLI::App* lindblad = app.add_subcommand("lindblad", "integrate a Lindblad problem");
  add_common(lindblad, lindblad_opts);
  lindblad->add_option("--method", method_flag, "integrator override")
      ->check(CLI::IsMember({"expm", "rk4"}));
  lindblad->add_option("--dt", dt_flag, "rk4 step override");
  lindblad->add_flag("--store-states", store_states, "also write the full Bloch trajectory");

  CLI::App* vqt = app.add_subcommand("vqt", "variational thermal-state experiment sweep");
  add_common(vqt, vqt_opts);

  CLI::App* bench = app.add_subcommand("bench", "time Bloch kernels against the dense baseline");
  add_common(bench, bench_opts);
  bench->add_option("--reps", reps_flag, "override the sample count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opts);
    if (grad->parsed()) return cmd_grad(grad_opts, check_fd);
    if (lindblad->parsed())
      return cmd_lindblad(lindblad_opts, method_flag, dt_flag, store_states);
    if (vqt->parsed()) return cmd_vqt(vqt_opts, vqt->count("--seed") > 0);
    if (bench->parsed()) return cmd_bench(bench_opts, reps_flag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
