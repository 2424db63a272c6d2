#include "gmbqc/instance_io.hpp"

#include <fstream>

#include "gmbqc/errors.hpp"

namespace gmbqc {

namespace {

using nlohmann::json;

void require(bool cond, const std::string& what) {
  if (!cond) throw InvariantError("instance schema: " + what);
}

Circuit parse_gates(const json& j) {
  Circuit circ;
  for (const auto& op : j) {
    require(op.is_array() && op.size() == 2, "gate entry must be [name, qubit]");
    circ.push_back({gate_from_name(op[0].get<std::string>()),
                    op[1].get<std::size_t>()});
  }
  return circ;
}

ElementAction parse_action(const json& j, std::size_t n) {
  ElementAction act;
  act.perm = j.at("perm").get<std::vector<std::size_t>>();
  require(act.perm.size() == n, "perm length mismatch");
  auto signs = j.at("signs").get<std::vector<int>>();
  require(signs.size() == n, "signs length mismatch");
  act.signs = BitVector(n);
  for (std::size_t a = 0; a < n; ++a) act.signs.set(a, signs[a] != 0);
  return act;
}

void parse_generators(const json& j, std::size_t n_indices,
                      std::vector<Circuit>& circuits,
                      std::vector<ElementAction>& raw) {
  for (const auto& g : j) {
    if (g.contains("gates")) {
      circuits.push_back(parse_gates(g.at("gates")));
    } else if (g.contains("perm")) {
      raw.push_back(parse_action(g, n_indices));
    } else {
      require(false, "generator needs 'gates' or 'perm'");
    }
  }
}

QuantumState parse_state(const json& j, std::size_t n_qubits) {
  auto type = j.at("type").get<std::string>();
  if (type == "stabilizer") {
    std::vector<PauliObservable> gens;
    for (const auto& s : j.at("generators"))
      gens.push_back(PauliObservable::parse(s.get<std::string>()));
    auto state = QuantumState::from_stabilizers(gens);
    require(state.n_qubits == n_qubits, "state qubit count mismatch");
    return state;
  }
  if (type == "vector") {
    std::vector<std::complex<double>> amps;
    for (const auto& a : j.at("amplitudes")) {
      require(a.is_array() && a.size() == 2, "amplitude must be [re, im]");
      amps.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    return QuantumState::from_amplitudes(n_qubits, std::move(amps));
  }
  require(false, "unknown state type " + type);
  return {};
}

}  // namespace

ActionGroup InstanceSpec::input_group() const {
  std::vector<ElementAction> gens;
  for (const auto& c : fixture.input_generators)
    gens.push_back(action_from_circuit(fixture.set, c));
  for (const auto& a : raw_input_generators) gens.push_back(a);
  auto ag = gens.empty() ? trivial_action_group(fixture.set.size())
                         : generate(gens);
  if (!check_input_group(ag))
    throw InvariantError("instance input group carries sign flips");
  return ag;
}

ActionGroup InstanceSpec::symmetry_group() const {
  std::vector<ElementAction> gens;
  for (const auto& c : fixture.symmetry_generators)
    gens.push_back(action_from_circuit(fixture.set, c));
  for (const auto& a : raw_symmetry_generators) gens.push_back(a);
  return gens.empty() ? trivial_action_group(fixture.set.size())
                      : generate(gens);
}

InstanceSpec parse_instance(const nlohmann::json& j) {
  InstanceSpec spec;
  Fixture& fx = spec.fixture;
  fx.name = j.value("name", std::string("instance"));
  std::size_t n_qubits = j.at("n_qubits").get<std::size_t>();
  require(j.at("observables").is_array(), "'observables' must be an array");
  for (const auto& s : j.at("observables")) {
    auto p = PauliObservable::parse(s.get<std::string>());
    require(p.n_qubits() == n_qubits, "observable qubit count mismatch");
    fx.set.observables.push_back(std::move(p));
  }
  fx.set.measurable = j.at("measurable").get<std::vector<std::size_t>>();
  if (j.contains("outputs"))
    fx.set.outputs = j.at("outputs").get<std::vector<std::size_t>>();
  if (j.contains("contexts")) {
    for (const auto& c : j.at("contexts")) {
      Context ctx;
      ctx.members = c.at("members").get<std::vector<std::size_t>>();
      ctx.target = c.at("target").get<std::size_t>();
      fx.set.contexts.push_back(std::move(ctx));
    }
  }
  validate_observable_set(fx.set);
  for (auto a : fx.set.measurable)
    require(a > 0 && a < fx.set.size(), "measurable index out of range");
  for (auto a : fx.set.outputs)
    require(a > 0 && a < fx.set.size(), "output index out of range");
  if (j.contains("group"))
    parse_generators(j.at("group").at("generators"), fx.set.size(),
                     fx.input_generators, spec.raw_input_generators);
  if (j.contains("symmetry_generators"))
    parse_generators(j.at("symmetry_generators"), fx.set.size(),
                     fx.symmetry_generators, spec.raw_symmetry_generators);
  if (j.contains("reference_context"))
    fx.reference_context =
        j.at("reference_context").get<std::vector<std::size_t>>();
  if (j.contains("b_e")) fx.b_e = j.at("b_e").get<std::size_t>();
  if (j.contains("state")) fx.state = parse_state(j.at("state"), n_qubits);
  if (j.contains("target_outputs"))
    fx.target_outputs = j.at("target_outputs").get<std::vector<uint8_t>>();
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvariantError("cannot open instance file: " + path);
  json j;
  in >> j;
  auto spec = parse_instance(j);
  if (spec.fixture.name == "instance") {
    auto slash = path.find_last_of('/');
    auto stem = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    spec.fixture.name = dot == std::string::npos ? stem : stem.substr(0, dot);
  }
  return spec;
}

nlohmann::ordered_json emit_instance(const Fixture& fx) {
  nlohmann::ordered_json j;
  j["name"] = fx.name;
  j["n_qubits"] = fx.set.n_qubits();
  std::vector<std::string> obs;
  for (const auto& p : fx.set.observables) obs.push_back(p.to_string());
  j["observables"] = obs;
  j["measurable"] = fx.set.measurable;
  j["outputs"] = fx.set.outputs;
  auto contexts = nlohmann::ordered_json::array();
  for (const auto& c : fx.set.contexts)
    contexts.push_back({{"members", c.members}, {"target", c.target}});
  j["contexts"] = contexts;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& circ : fx.input_generators) {
    auto gates = nlohmann::ordered_json::array();
    for (const auto& [g, q] : circ) gates.push_back({gate_name(g), q});
    gens.push_back({{"gates", gates}});
  }
  j["group"] = {{"generators", gens}};
  if (!fx.symmetry_generators.empty()) {
    auto sym = nlohmann::ordered_json::array();
    for (const auto& circ : fx.symmetry_generators) {
      auto gates = nlohmann::ordered_json::array();
      for (const auto& [g, q] : circ) gates.push_back({gate_name(g), q});
      sym.push_back({{"gates", gates}});
    }
    j["symmetry_generators"] = sym;
  }
  if (!fx.reference_context.empty())
    j["reference_context"] = fx.reference_context;
  if (fx.b_e) j["b_e"] = *fx.b_e;
  if (fx.state) {
    auto amps = nlohmann::ordered_json::array();
    for (const auto& a : fx.state->amplitudes)
      amps.push_back({a.real(), a.imag()});
    j["state"] = {{"type", "vector"}, {"amplitudes", amps}};
  }
  if (!fx.target_outputs.empty()) j["target_outputs"] = fx.target_outputs;
  return j;
}

}  // namespace gmbqc
