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

#include "blochsim/json_io.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace blochsim::io {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

Eigen::MatrixXcd complex_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of matrix rows");
  const std::size_t rows = j.size();
  Eigen::MatrixXcd m(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || row.size() != rows)
      fail(where, "matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < rows; ++c) {
      const json& entry = row.at(c);
      if (entry.is_number()) {
        m(r, c) = entry.get<double>();
      } else if (entry.is_array() && entry.size() == 2) {
        m(r, c) = std::complex<double>(entry.at(0).get<double>(), entry.at(1).get<double>());
      } else {
        fail(where, "matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

// A parameter slot: a literal number, a parameter name, or
// {"param": name, "scale": s}.
struct SlotValue {
  double value = 0.0;
  bool bound = false;
  std::string name;
  double scale = 1.0;
};

SlotValue slot_value(const json& j, const std::string& where) {
  SlotValue out;
  if (j.is_number()) {
    out.value = j.get<double>();
  } else if (j.is_string()) {
    out.bound = true;
    out.name = j.get<std::string>();
  } else if (j.is_object() && j.contains("param")) {
    out.bound = true;
    out.name = j.at("param").get<std::string>();
    out.scale = j.value("scale", 1.0);
  } else {
    fail(where, "parameter slots must be numbers, names, or {\"param\",\"scale\"} objects");
  }
  return out;
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of qubit indices");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

// tolerance plumbed from ParseOptions into the matrix validations
struct ParseContext {
  double tolerance = kDefaultTolerance;
};

GateSpec gate_spec(const json& j, const std::string& where,
                   std::vector<ParamBinding>& bindings) {
  GateSpec spec;
  spec.name = j.at("name").get<std::string>();
  spec.targets = int_list(j.value("targets", json::array()), where + ".targets");
  if (spec.name == "Custom") {
    spec.custom_matrix = complex_matrix(j.at("matrix"), where + ".matrix");
    return spec;
  }
  const json params = j.value("params", json::array());
  const int expected = builtin_param_count(spec.name);
  if (static_cast<int>(params.size()) != expected)
    fail(where, "gate '" + spec.name + "' expects " + std::to_string(expected) + " parameter(s)");
  for (int i = 0; i < expected; ++i) {
    const SlotValue sv = slot_value(params.at(i), where + ".params");
    spec.params.push_back(sv.value);
    if (sv.bound) bindings.push_back({i, sv.name, sv.scale});
  }
  return spec;
}

Stage stage_from_json(const json& j, const std::string& where, const ParseContext& ctx) {
  if (!j.is_object()) fail(where, "stage must be an object");
  std::vector<ParamBinding> bindings;
  if (j.contains("channel")) {
    const std::string name = j.at("channel").get<std::string>();
    std::vector<int> targets = int_list(j.at("targets"), where + ".targets");
    if (name == "kraus") {
      std::vector<Eigen::MatrixXcd> ops;
      for (const auto& op : j.at("operators"))
        ops.push_back(complex_matrix(op, where + ".operators"));
      return channel_stage(custom_channel(std::move(ops), std::max(ctx.tolerance, 1e-10)),
                           std::move(targets));
    }
    if (!is_builtin_channel(name)) fail(where, "unknown channel '" + name + "'");
    SlotValue sv;
    if (j.contains("p")) {
      sv = slot_value(j.at("p"), where + ".p");
    } else if (j.contains("gamma")) {
      sv = slot_value(j.at("gamma"), where + ".gamma");
    } else if (j.contains("lambda")) {
      sv = slot_value(j.at("lambda"), where + ".lambda");
    } else {
      fail(where, "channel '" + name + "' needs a parameter (p / gamma / lambda)");
    }
    if (sv.bound) bindings.push_back({0, sv.name, sv.scale});
    // a bound channel still needs a valid placeholder parameter
    return channel_stage(builtin_channel(name, sv.bound ? 0.0 : sv.value), std::move(targets),
                         std::move(bindings));
  }
  if (j.contains("controls")) {
    std::vector<int> controls = int_list(j.at("controls"), where + ".controls");
    GateSpec target = gate_spec(j.at("gate"), where + ".gate", bindings);
    return controlled_stage(std::move(controls), std::move(target), std::move(bindings));
  }
  if (j.contains("name")) {
    GateSpec spec = gate_spec(j, where, bindings);
    return gate_stage(std::move(spec), std::move(bindings));
  }
  fail(where, "stage must contain 'name', 'controls', or 'channel'");
}

PauliObservable observable_terms(const json& j, int n_qubits, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [word, coefficient] pairs");
  std::vector<PauliTerm> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail(where, "terms must be [word, coefficient] pairs");
    if (t.at(0).is_string()) {
      terms.push_back({t.at(1).get<double>(), t.at(0).get<std::string>()});
    } else {
      terms.push_back({t.at(0).get<double>(), t.at(1).get<std::string>()});
    }
  }
  return make_observable(n_qubits, std::move(terms));
}

BlochVector initial_state(const json& parent, int n_qubits, const std::string& where,
                          const ParseContext& ctx) {
  if (!parent.contains("initial_state")) return BlochVector::zero_state(n_qubits);
  const json& j = parent.at("initial_state");
  const std::string kind = j.value("state", "zero");
  if (kind == "zero") return BlochVector::zero_state(n_qubits);
  if (kind == "maximally_mixed") return BlochVector::maximally_mixed(n_qubits);
  if (kind == "plus") {
    std::vector<std::array<double, 4>> factors(n_qubits, {1.0, 1.0, 0.0, 0.0});
    return BlochVector::product_state(factors);
  }
  if (kind == "basis") {
    const std::string bits = j.at("bits").get<std::string>();
    if (static_cast<int>(bits.size()) != n_qubits) fail(where, "bit string has wrong length");
    std::uint64_t value = 0;
    for (int l = 0; l < n_qubits; ++l) {
      const char c = bits[n_qubits - 1 - l];
      if (c != '0' && c != '1') fail(where, "bit strings contain only 0 and 1");
      if (c == '1') value |= std::uint64_t{1} << l;
    }
    return BlochVector::basis_state(n_qubits, value);
  }
  if (kind == "product") {
    std::vector<std::array<double, 4>> factors;
    for (const auto& f : j.at("factors")) {
      if (!f.is_array() || f.size() != 4) fail(where, "product factors must have four entries");
      factors.push_back({f.at(0).get<double>(), f.at(1).get<double>(), f.at(2).get<double>(),
                         f.at(3).get<double>()});
    }
    if (static_cast<int>(factors.size()) != n_qubits)
      fail(where, "product state factor count does not match n_qubits");
    return BlochVector::product_state(factors);
  }
  if (kind == "bloch") {
    BlochVector r;
    r.n_qubits = n_qubits;
    r.data = j.at("data").get<std::vector<double>>();
    if (r.data.size() != dim4(n_qubits)) fail(where, "bloch data has wrong length");
    if (std::abs(r.data[0] - 1.0) > ctx.tolerance)
      fail(where, "bloch state is not unit trace (data[0] != 1)");
    return r;
  }
  fail(where, "unknown initial state kind '" + kind + "'");
}

std::vector<NamedObservable> observables_list(const json& parent, int n_qubits,
                                              const std::string& where) {
  std::vector<NamedObservable> out;
  if (!parent.contains("observables")) return out;
  std::size_t index = 0;
  for (const auto& o : parent.at("observables")) {
    NamedObservable named;
    if (o.is_object()) {
      named.name = o.value("name", "obs" + std::to_string(index));
      named.observable = observable_terms(o.at("terms"), n_qubits, where);
    } else {
      named.name = "obs" + std::to_string(index);
      named.observable = observable_terms(o, n_qubits, where);
    }
    out.push_back(std::move(named));
    ++index;
  }
  return out;
}

Circuit circuit_from(const json& j, const ParseContext& ctx) {
  Circuit circuit;
  circuit.n_qubits = j.at("n_qubits").get<int>();
  if (circuit.n_qubits < 1) fail("circuit", "n_qubits must be positive");
  std::size_t index = 0;
  for (const auto& s : j.value("stages", json::array())) {
    circuit.stages.push_back(stage_from_json(s, "stages[" + std::to_string(index) + "]", ctx));
    ++index;
  }
  if (j.contains("parameters"))
    for (const auto& [name, value] : j.at("parameters").items())
      circuit.parameters[name] = value.get<double>();
  return circuit;
}

}  // namespace

Circuit circuit_from_json(const std::string& text, const ParseOptions& options) {
  return circuit_from(parse(text), {options.tolerance});
}

RunInput run_input_from_json(const std::string& text, const ParseOptions& options) {
  const json j = parse(text);
  const ParseContext ctx{options.tolerance};
  RunInput input;
  input.circuit = circuit_from(j, ctx);
  input.initial_state = initial_state(j, input.circuit.n_qubits, "initial_state", ctx);
  input.observables = observables_list(j, input.circuit.n_qubits, "observables");
  return input;
}

GradInput grad_input_from_json(const std::string& text, const ParseOptions& options) {
  const json j = parse(text);
  const ParseContext ctx{options.tolerance};
  GradInput input;
  input.circuit = circuit_from(j, ctx);
  input.initial_state = initial_state(j, input.circuit.n_qubits, "initial_state", ctx);
  if (!j.contains("observable")) fail("grad input", "missing 'observable'");
  input.observable = observable_terms(j.at("observable"), input.circuit.n_qubits, "observable");
  return input;
}

LindbladInput lindblad_input_from_json(const std::string& text, const ParseOptions& options) {
  const json j = parse(text);
  const ParseContext ctx{options.tolerance};
  LindbladInput input;
  input.n_qubits = j.at("n_qubits").get<int>();
  if (input.n_qubits < 1) fail("lindblad input", "n_qubits must be positive");
  input.hamiltonian = j.contains("hamiltonian")
                          ? observable_terms(j.at("hamiltonian"), input.n_qubits, "hamiltonian")
                          : make_observable(input.n_qubits, {});
  for (const auto& jump : j.value("jumps", json::array())) {
    JumpOperator op;
    op.matrix = complex_matrix(jump.at("matrix"), "jumps.matrix");
    op.targets = int_list(jump.at("targets"), "jumps.targets");
    input.jumps.push_back(std::move(op));
  }
  input.t_final = j.at("t_final").get<double>();
  const std::string method = j.value("method", "rk4");
  if (method == "rk4") {
    input.method = EvolveMethod::Rk4;
  } else if (method == "expm") {
    input.method = EvolveMethod::Expm;
  } else {
    fail("lindblad input", "method must be 'rk4' or 'expm'");
  }
  input.dt = j.value("dt", 0.0);
  input.initial_state = initial_state(j, input.n_qubits, "initial_state", ctx);
  input.observables = observables_list(j, input.n_qubits, "observables");
  input.store_states = j.value("store_states", false);
  return input;
}

VqtExperimentConfig vqt_input_from_json(const std::string& text, const ParseOptions&) {
  const json j = parse(text);
  VqtExperimentConfig config;
  const std::string model = j.value("model", "custom");
  if (model == "heisenberg_1d") {
    config.hamiltonian = heisenberg_1d(j.at("n").get<int>(), j.at("J").get<double>(),
                                       j.value("g", 0.0), j.value("h", 0.0));
  } else if (model == "heisenberg_2d") {
    config.hamiltonian = heisenberg_2d(j.at("rows").get<int>(), j.at("cols").get<int>(),
                                       j.at("J_h").get<double>(), j.at("J_v").get<double>());
  } else if (j.contains("hamiltonian") && j.contains("n_qubits")) {
    config.hamiltonian =
        observable_terms(j.at("hamiltonian"), j.at("n_qubits").get<int>(), "hamiltonian");
  } else {
    fail("vqt input", "specify model=heisenberg_1d/heisenberg_2d or n_qubits + hamiltonian");
  }
  config.layers = j.value("layers", 3);
  if (!j.contains("betas")) fail("vqt input", "missing 'betas'");
  config.betas = j.at("betas").get<std::vector<double>>();
  config.num_seeds = j.value("num_seeds", 10);
  config.base_seed = j.value("base_seed", std::uint64_t{1});
  config.optimizer.learning_rate = j.value("learning_rate", 0.005);
  config.optimizer.iterations = j.value("iterations", 500);
  config.optimizer.beta1 = j.value("beta1", 0.9);
  config.optimizer.beta2 = j.value("beta2", 0.999);
  config.optimizer.epsilon = j.value("epsilon", 1e-8);
  return config;
}

BenchInput bench_input_from_json(const std::string& text, const ParseOptions&) {
  const json j = parse(text);
  BenchInput input;
  input.gates = j.value("gates", std::vector<std::string>{"X", "Y", "Z", "H", "Rx", "Ry", "Rz"});
  input.n_values = j.value("n_values", std::vector<int>{4, 5, 6, 7, 8, 9, 10});
  input.reps = j.value("reps", 25);
  input.warmup = j.value("warmup", 3);
  return input;
}

std::string state_to_json(const BlochVector& r) {
  json j;
  j["n_qubits"] = r.n_qubits;
  j["data"] = r.data;
  if (r.covector) j["covector"] = true;
  return j.dump(2) + "\n";
}

BlochVector state_from_json(const std::string& text) {
  const json j = parse(text);
  BlochVector r;
  r.n_qubits = j.at("n_qubits").get<int>();
  r.data = j.at("data").get<std::vector<double>>();
  r.covector = j.value("covector", false);
  if (r.data.size() != dim4(r.n_qubits))
    throw std::invalid_argument("state_from_json: data length does not match n_qubits");
  return r;
}

}  // namespace blochsim::io
