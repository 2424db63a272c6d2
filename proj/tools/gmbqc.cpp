#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gmbqc/errors.hpp"
#include "gmbqc/ext.hpp"
#include "gmbqc/hvm.hpp"
#include "gmbqc/instance_io.hpp"
#include "gmbqc/proofs.hpp"
#include "gmbqc/quasi.hpp"
#include "gmbqc/report.hpp"

#include <nlohmann/json.hpp>

namespace {

using gmbqc::InstanceSpec;
using nlohmann::ordered_json;

struct Options {
  uint64_t seed = 0;
  std::string format = "json";
  bool canonical = false;
  std::size_t shots = 0;
};

bool is_builtin(const std::string& name) {
  for (const auto& n : gmbqc::fixture_names())
    if (n == name) return true;
  return false;
}

InstanceSpec load(const std::string& name_or_path) {
  if (is_builtin(name_or_path)) {
    InstanceSpec spec;
    spec.fixture = gmbqc::builtin(name_or_path);
    return spec;
  }
  return gmbqc::load_instance(name_or_path);
}

void print_report(const ordered_json& j, const Options& opt) {
  if (opt.format == "text")
    std::cout << gmbqc::render_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

gmbqc::BitVector parse_bits(const std::string& s) {
  gmbqc::BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw gmbqc::InvariantError("certificate bits must be 0/1");
    v.set(i, s[i] == '1');
  }
  return v;
}

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gmbqc::InvariantError("cannot open certificate: " + path);
  nlohmann::json j;
  in >> j;
  InstanceSpec spec;
  if (j.at("instance").is_string())
    spec.fixture = gmbqc::builtin(j.at("instance").get<std::string>());
  else
    spec = gmbqc::parse_instance(j.at("instance"));
  auto cs = build_constraints(spec.fixture.set);
  auto type = j.at("type").get<std::string>();
  bool ok = false;
  if (type == "parity") {
    gmbqc::ParityCertificate cert{parse_bits(j.at("b").get<std::string>())};
    ok = verify_parity(cert, cs);
  } else if (type == "symmetry") {
    gmbqc::SymmetryCertificate cert{parse_bits(j.at("a").get<std::string>()),
                                    j.at("h").get<std::size_t>()};
    ok = verify_symmetry(cert, cs, spec.symmetry_group());
  } else {
    throw gmbqc::InvariantError("unknown certificate type: " + type);
  }
  std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? 0 : 2;
}

std::size_t parse_power(const std::string& s, const std::string& prefix,
                        const std::string& what) {
  if (s == prefix) return 1;
  if (s.rfind(prefix + "^", 0) == 0) {
    auto k = std::stoul(s.substr(prefix.size() + 1));
    return k;
  }
  throw gmbqc::InvariantError("cannot parse " + what + " spec: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contextual G-MBQC analyzer"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "sampling seed");
  app.add_option("--format", opt.format, "json|text|csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_flag("--canonical", opt.canonical,
               "strip environment-dependent fields");
  app.fallthrough();

  std::string target, out_path, group_spec, module_spec;
  bool emit_instance_flag = false;

  auto* example = app.add_subcommand("example", "analyze a builtin fixture");
  example->add_option("name", target, "fixture name")->required();
  example->add_option("--shots", opt.shots, "sampling shots per input");
  example->add_flag("--emit-instance", emit_instance_flag,
                    "print the fixture as an instance file instead");

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze an instance file");
  analyze_cmd->add_option("path", target, "instance JSON path")->required();
  analyze_cmd->add_option("--shots", opt.shots, "sampling shots per input");

  auto* delta_cmd = app.add_subcommand("delta", "Eq.-(15) classical distance");
  delta_cmd->add_option("target", target, "fixture name or path")->required();

  auto* witness_cmd = app.add_subcommand("witness", "contextuality witness");
  witness_cmd->add_option("target", target, "fixture name or path")->required();

  auto* proof_cmd = app.add_subcommand("proof-search",
                                       "parity and symmetry proofs");
  proof_cmd->add_option("target", target, "fixture name or path")->required();

  auto* quasi_cmd = app.add_subcommand("quasiprob", "quasi-probability");
  quasi_cmd->add_option("target", target, "fixture name or path")->required();

  auto* h2_cmd = app.add_subcommand("h2", "second cohomology of an abstract "
                                          "pair (G, N)");
  h2_cmd->add_option("--group", group_spec, "z2^k")->required();
  h2_cmd->add_option("--module", module_spec, "trivial^d")->required();

  auto* verify_cmd = app.add_subcommand("verify-certificate",
                                        "re-verify a serialized certificate");
  verify_cmd->add_option("path", target, "certificate JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (example->parsed() || analyze_cmd->parsed()) {
      auto spec = load(target);
      if (emit_instance_flag) {
        std::cout << gmbqc::emit_instance(spec.fixture).dump(2) << "\n";
        return 0;
      }
      gmbqc::ReportOptions ropt{opt.seed, opt.canonical, opt.shots};
      print_report(gmbqc::analyze(spec, ropt), opt);
      return 0;
    }
    if (delta_cmd->parsed()) {
      auto spec = load(target);
      const auto& fx = spec.fixture;
      if (!fx.b_e) throw gmbqc::InvariantError("fixture has no output index");
      auto cs = build_constraints(fx.set);
      auto ag = spec.input_group();
      auto space = gmbqc::enumerate_assignments(cs);
      ordered_json j;
      j["fixture"] = fx.name;
      if (space.empty()) {
        j["assignment_space"] = "empty";
      } else {
        auto inst = gmbqc::make_instance(fx);
        std::vector<uint8_t> o = fx.target_outputs;
        if (o.empty())
          for (std::size_t g = 0; g < ag.group.order(); ++g)
            o.push_back(gmbqc::ideal_output(inst, g).bit);
        auto d = gmbqc::delta(space, ag, o, *fx.b_e);
        auto red = gmbqc::classical_reduction(o, gmbqc::ValueAssignment{d.argmin},
                                              ag, *fx.b_e);
        j["delta"] = d.delta;
        j["classical_witness_max"] = d.classical_max;
        j["argmin"] = d.argmin.to_string();
        j["g_tilde"] = red.g_tilde;
      }
      print_report(j, opt);
      return 0;
    }
    if (witness_cmd->parsed()) {
      auto spec = load(target);
      auto inst = gmbqc::make_instance(spec.fixture);
      std::vector<uint8_t> o = spec.fixture.target_outputs;
      if (o.empty())
        for (std::size_t g = 0; g < inst.action.group.order(); ++g)
          o.push_back(gmbqc::ideal_output(inst, g).bit);
      ordered_json j;
      j["fixture"] = spec.fixture.name;
      j["o"] = o;
      j["witness"] = gmbqc::witness(inst, o);
      j["witness_quantum_max"] = inst.action.group.order();
      print_report(j, opt);
      return 0;
    }
    if (proof_cmd->parsed()) {
      auto spec = load(target);
      auto cs = build_constraints(spec.fixture.set);
      ordered_json j;
      j["instance"] = spec.fixture.name;
      auto certs = ordered_json::array();
      if (auto parity = gmbqc::find_parity_proof(cs))
        certs.push_back({{"type", "parity"}, {"b", parity->b.to_string()}});
      auto sym = spec.symmetry_group();
      if (sym.group.order() > 1) {
        if (auto cert = gmbqc::find_symmetry_proof(cs, sym)) {
          certs.push_back({{"type", "symmetry"},
                           {"a", cert->a.to_string()},
                           {"h", cert->h},
                           {"h_word", sym.group.words[cert->h]}});
          certs.push_back(
              {{"type", "parity"},
               {"b", gmbqc::relate(*cert, cs, sym).b.to_string()},
               {"related_from", "symmetry"}});
        }
      }
      j["certificates"] = certs;
      print_report(j, opt);
      return 0;
    }
    if (quasi_cmd->parsed()) {
      auto spec = load(target);
      const auto& fx = spec.fixture;
      if (!fx.state)
        throw gmbqc::InvariantError("fixture has no state for quasiprob");
      auto cs = build_constraints(fx.set);
      auto V = compute_V(fx.set, cs);
      auto q = gmbqc::quasiprob(*fx.state, fx.set, V);
      if (opt.format == "csv") {
        std::cout << gmbqc::quasiprob_csv(q, V);
      } else {
        ordered_json j;
        j["fixture"] = fx.name;
        j["dim_v"] = q.dim;
        j["values"] = q.values;
        print_report(j, opt);
      }
      return 0;
    }
    if (h2_cmd->parsed()) {
      auto k = parse_power(group_spec, "z2", "group");
      auto d = parse_power(module_spec, "trivial", "module");
      auto G = gmbqc::FiniteGroup::z2_power(k);
      auto M = gmbqc::GModule::trivial(G.order(), d);
      auto res = gmbqc::h2(G, M);
      ordered_json j;
      j["group"] = group_spec;
      j["module"] = module_spec;
      j["dim_h2"] = res.dim;
      j["cocycle_dim"] = res.cocycle_basis.size();
      j["coboundary_dim"] = res.coboundary_basis.size();
      print_report(j, opt);
      return 0;
    }
    if (verify_cmd->parsed()) return run_verify(target);
  } catch (const gmbqc::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const gmbqc::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
